use std::ffi::{CStr, CString};
use std::ptr;

use morse_pr_ffi::*;

fn last_error() -> String {
    let p = mpr_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mpr_string_free(s);
    out
}

unsafe fn chord(code: &str) -> *mut MprChord {
    let c = CString::new(code).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(mpr_chord_parse(c.as_ptr(), &mut h), MprStatus::Ok);
    h
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(mpr_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn chord_round_trip_through_pr() {
    unsafe {
        let c = chord("23016745-grgrgrgr");
        let mut code = ptr::null_mut();
        assert_eq!(mpr_chord_code(c, MprSymmetry::Dihedral, &mut code), MprStatus::Ok);
        assert_eq!(take(code), "23016745-grgrgrgr");

        let mut pr = ptr::null_mut();
        assert_eq!(mpr_pr_from_chord(c, &mut pr), MprStatus::Ok);
        let mut census = MprCensus::default();
        assert_eq!(mpr_pr_census(pr, &mut census), MprStatus::Ok);
        assert_eq!(census.n, [1, 0, 2, 2, 0, 1]);
        assert_eq!(census.g_boundary, 2);

        let mut valid = false;
        let mut report = ptr::null_mut();
        assert_eq!(mpr_pr_validate(pr, &mut valid, &mut report), MprStatus::Ok);
        assert!(valid);
        assert!(take(report).contains("\"valid\":true"));

        let mut back = ptr::null_mut();
        assert_eq!(mpr_pr_to_chord(pr, MprSymmetry::Dihedral, &mut back), MprStatus::Ok);
        let mut code = ptr::null_mut();
        assert_eq!(mpr_chord_code(back, MprSymmetry::Dihedral, &mut code), MprStatus::Ok);
        assert_eq!(take(code), "23016745-grgrgrgr");

        let mut json = ptr::null_mut();
        assert_eq!(mpr_pr_to_json(pr, &mut json), MprStatus::Ok);
        let json = CString::new(take(json)).unwrap();
        let mut again = ptr::null_mut();
        assert_eq!(mpr_pr_from_json(json.as_ptr(), &mut again), MprStatus::Ok);
        let mut eq = false;
        assert_eq!(mpr_pr_equivalent(pr, again, MprSymmetry::Dihedral, &mut eq), MprStatus::Ok);
        assert!(eq);

        let mut h1 = ptr::null_mut();
        let mut h2 = ptr::null_mut();
        assert_eq!(mpr_pr_code(pr, MprSymmetry::Dihedral, &mut h1), MprStatus::Ok);
        assert_eq!(mpr_pr_code(again, MprSymmetry::Dihedral, &mut h2), MprStatus::Ok);
        assert_eq!(take(h1), take(h2));

        let other = chord("23016745-grgrrgrg");
        let mut pr2 = ptr::null_mut();
        assert_eq!(mpr_pr_from_chord(other, &mut pr2), MprStatus::Ok);
        assert_eq!(mpr_pr_equivalent(pr, pr2, MprSymmetry::Dihedral, &mut eq), MprStatus::Ok);
        assert!(!eq);

        for h in [c, back, other] {
            mpr_chord_free(h);
        }
        for h in [pr, again, pr2] {
            mpr_pr_free(h);
        }
    }
}

#[test]
fn classify_counts() {
    let mut counts = MprCounts::default();
    assert_eq!(unsafe { mpr_classify(2, MprSymmetry::Dihedral, 2, &mut counts) }, MprStatus::Ok);
    assert_eq!((counts.bases, counts.colored, counts.river_colored), (4, 5, 2));
    assert_eq!(unsafe { mpr_classify(2, MprSymmetry::RotationOnly, 0, &mut counts) }, MprStatus::Ok);
    assert_eq!((counts.bases, counts.colored), (4, 8));
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(mpr_chord_parse(ptr::null(), &mut h), MprStatus::NullArgument);
        assert!(last_error().contains("code"));

        let bad = CString::new("not a code").unwrap();
        assert_eq!(mpr_chord_parse(bad.as_ptr(), &mut h), MprStatus::ParseError);
        assert!(!last_error().is_empty());

        let bad = CString::new("{").unwrap();
        let mut pr = ptr::null_mut();
        assert_eq!(mpr_pr_from_json(bad.as_ptr(), &mut pr), MprStatus::ParseError);
        assert!(pr.is_null());

        let mut census = MprCensus::default();
        assert_eq!(mpr_pr_census(ptr::null(), &mut census), MprStatus::NullArgument);

        let c = chord("2301-grgr");
        assert_eq!(mpr_chord_code(c, MprSymmetry::Dihedral, ptr::null_mut()), MprStatus::NullArgument);

        // success clears the previous message
        let mut river = false;
        assert_eq!(mpr_chord_is_river(c, &mut river), MprStatus::Ok);
        assert!(mpr_last_error_message().is_null());
        mpr_chord_free(c);

        mpr_chord_free(ptr::null_mut());
        mpr_pr_free(ptr::null_mut());
        mpr_string_free(ptr::null_mut());
    }
}

#[test]
fn last_error_is_per_thread() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(mpr_chord_parse(ptr::null(), &mut h), MprStatus::NullArgument);
    }
    std::thread::spawn(|| assert!(mpr_last_error_message().is_null())).join().unwrap();
    assert!(!mpr_last_error_message().is_null());
}

#[test]
fn non_optimal_colorings_are_rejected() {
    unsafe {
        // all-green coloring has no red component
        let c = CString::new("2301-gggg").unwrap();
        let mut h = ptr::null_mut();
        if mpr_chord_parse(c.as_ptr(), &mut h) == MprStatus::Ok {
            let mut pr = ptr::null_mut();
            let status = mpr_pr_from_chord(h, &mut pr);
            assert_ne!(status, MprStatus::Ok);
            assert!(!last_error().is_empty());
            mpr_chord_free(h);
        } else {
            assert!(!last_error().is_empty());
        }
    }
}
