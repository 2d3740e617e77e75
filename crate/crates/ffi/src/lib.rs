//! C ABI for `morse_pr`.
//!
//! Every fallible function returns an [`MprStatus`]; on failure a message is
//! kept per thread and read with [`mpr_last_error_message`]. Diagrams are
//! opaque handles released with their `_free` function. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`mpr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use morse_pr::catalog::build_catalog;
use morse_pr::chord::{is_river, ColoredChordDiagram};
use morse_pr::prdiag::{
    census, equivalent_with, from_colored_chord, to_colored_chord_with, validate, PrDiagram, PrError, PrJson,
};
use morse_pr::Symmetry;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MprStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidDiagram = 4,
    NotOptimal = 5,
    InvalidArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MprSymmetry {
    RotationOnly = 0,
    Dihedral = 1,
}

impl From<MprSymmetry> for Symmetry {
    fn from(s: MprSymmetry) -> Self {
        match s {
            MprSymmetry::RotationOnly => Symmetry::RotationOnly,
            MprSymmetry::Dihedral => Symmetry::Dihedral,
        }
    }
}

/// Fixed-point counts n1..n6 and the genus of the boundary surface.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MprCensus {
    pub n: [u32; 6],
    pub g_boundary: i64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MprCounts {
    pub bases: usize,
    pub colored: usize,
    pub river_colored: usize,
    pub river_bases: usize,
}

/// A colored chord diagram.
pub struct MprChord(ColoredChordDiagram);

/// A Pr-diagram.
pub struct MprPr(PrDiagram);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("no interior nul")));
}

struct Fail(MprStatus, String);

fn fail(status: MprStatus, msg: impl std::fmt::Display) -> Fail {
    Fail(status, msg.to_string())
}

fn pr_fail(e: PrError) -> Fail {
    let status = match &e {
        PrError::InvalidDiagram(_) => MprStatus::InvalidDiagram,
        PrError::NotOptimal(_) | PrError::InvalidColoring(_) => MprStatus::NotOptimal,
        PrError::Map(_) | PrError::Structure(_) => MprStatus::ParseError,
    };
    fail(status, e)
}

/// Runs `f`, turning errors and panics into a status plus the last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MprStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MprStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MprStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(fail(MprStatus::NullArgument, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(MprStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| fail(MprStatus::NullArgument, format!("{name} is null")))
}

unsafe fn put<T>(out: *mut T, value: T, name: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(MprStatus::NullArgument, format!("{name} is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| fail(MprStatus::InvalidArgument, e))?;
    put(out, c.into_raw(), "out")
}

/// The message of the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn mpr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mpr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn mpr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a colored chord code such as `"2301-grgr"`.
///
/// # Safety
/// `code` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_chord_parse(code: *const c_char, out: *mut *mut MprChord) -> MprStatus {
    guard(|| {
        let c = ColoredChordDiagram::parse_code(str_arg(code, "code")?).map_err(|e| fail(MprStatus::ParseError, e))?;
        put(out, Box::into_raw(Box::new(MprChord(c))), "out")
    })
}

/// # Safety
/// `h` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn mpr_chord_free(h: *mut MprChord) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// The code of the canonical form under `sym`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_chord_code(h: *const MprChord, sym: MprSymmetry, out: *mut *mut c_char) -> MprStatus {
    guard(|| {
        let c = ref_arg(h, "chord")?;
        put_string(out, c.0.canonical(sym.into()).code())
    })
}

/// Whether the diagram satisfies the river criterion.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_chord_is_river(h: *const MprChord, out: *mut bool) -> MprStatus {
    guard(|| put(out, is_river(&ref_arg(h, "chord")?.0), "out"))
}

/// Parses a Pr-diagram from JSON.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_from_json(json: *const c_char, out: *mut *mut MprPr) -> MprStatus {
    guard(|| {
        let j: PrJson = serde_json::from_str(str_arg(json, "json")?).map_err(|e| fail(MprStatus::ParseError, e))?;
        let d = j.to_diagram().map_err(pr_fail)?;
        put(out, Box::into_raw(Box::new(MprPr(d))), "out")
    })
}

/// # Safety
/// `h` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_free(h: *mut MprPr) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_to_json(h: *const MprPr, out: *mut *mut c_char) -> MprStatus {
    guard(|| {
        let d = ref_arg(h, "diagram")?;
        put_string(out, serde_json::to_string(&PrJson::from(&d.0)).expect("serializable"))
    })
}

/// The Pr-diagram of an optimal colored chord diagram.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_from_chord(h: *const MprChord, out: *mut *mut MprPr) -> MprStatus {
    guard(|| {
        let d = from_colored_chord(&ref_arg(h, "chord")?.0).map_err(pr_fail)?;
        put(out, Box::into_raw(Box::new(MprPr(d))), "out")
    })
}

/// The canonical colored chord diagram of an optimal Pr-diagram.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_to_chord(h: *const MprPr, sym: MprSymmetry, out: *mut *mut MprChord) -> MprStatus {
    guard(|| {
        let c = to_colored_chord_with(&ref_arg(h, "diagram")?.0, sym.into()).map_err(pr_fail)?;
        put(out, Box::into_raw(Box::new(MprChord(c))), "out")
    })
}

/// Whether all five properties hold. The report (JSON) is written to
/// `report` when it is not null.
///
/// # Safety
/// `h` must be a live handle; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_validate(h: *const MprPr, valid: *mut bool, report: *mut *mut c_char) -> MprStatus {
    guard(|| {
        let r = validate(&ref_arg(h, "diagram")?.0);
        put(valid, r.valid, "valid")?;
        if !report.is_null() {
            put_string(report, serde_json::to_string(&r).expect("serializable"))?;
        }
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_census(h: *const MprPr, out: *mut MprCensus) -> MprStatus {
    guard(|| {
        let c = census(&ref_arg(h, "diagram")?.0).map_err(pr_fail)?;
        put(out, MprCensus { n: c.counts(), g_boundary: c.g_boundary }, "out")
    })
}

/// Canonical code as lowercase hex.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_code(h: *const MprPr, sym: MprSymmetry, out: *mut *mut c_char) -> MprStatus {
    guard(|| put_string(out, ref_arg(h, "diagram")?.0.code(sym.into()).to_hex()))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_pr_equivalent(
    a: *const MprPr,
    b: *const MprPr,
    sym: MprSymmetry,
    out: *mut bool,
) -> MprStatus {
    guard(|| {
        let eq = equivalent_with(&ref_arg(a, "a")?.0, &ref_arg(b, "b")?.0, sym.into());
        put(out, eq, "out")
    })
}

/// Counts for one genus. `workers == 0` means one worker.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mpr_classify(genus: u32, sym: MprSymmetry, workers: usize, out: *mut MprCounts) -> MprStatus {
    guard(|| {
        let c = build_catalog(genus, sym.into(), workers.max(1)).map_err(|e| fail(MprStatus::InvalidArgument, e))?;
        let r = c.report;
        put(
            out,
            MprCounts {
                bases: r.bases,
                colored: r.colored,
                river_colored: r.river_colored,
                river_bases: r.river_bases,
            },
            "out",
        )
    })
}
