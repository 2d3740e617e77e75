//! Cutting a map along an embedded curve, and surgery along closed curves.

use super::{CombMap, CurveLabel, Dart, EmbeddedCurve, MapError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Where a dart of a cut map comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// An untouched dart of the original map.
    Kept(Dart),
    /// A dart of one of the two copies of the curve; `of` is the curve dart it
    /// runs parallel to, in the same direction.
    Copy { of: Dart, side: Side },
}

/// A cut map together with the provenance of each of its darts.
#[derive(Clone, Debug)]
pub struct Cut {
    pub map: CombMap,
    pub origin: Vec<Origin>,
}

impl Cut {
    /// Original dart behind `d`, after following copies back to the curve.
    pub fn source_dart(&self, d: Dart) -> Dart {
        match self.origin[d] {
            Origin::Kept(x) => x,
            Origin::Copy { of, .. } => of,
        }
    }

    /// Chains provenance of a cut made on `self.map`, expressing the result
    /// in terms of the darts of the map `self` was cut from.
    pub fn then(&self, next: Cut) -> Cut {
        let origin = next
            .origin
            .iter()
            .map(|o| match *o {
                Origin::Kept(x) => self.origin[x],
                Origin::Copy { of, side } => match self.origin[of] {
                    Origin::Kept(y) => Origin::Copy { of: y, side },
                    // a copy of a copy: keep the first side
                    inner @ Origin::Copy { .. } => inner,
                },
            })
            .collect();
        Cut { map: next.map, origin }
    }

    /// The identity cut of `map`.
    pub fn identity(map: CombMap) -> Cut {
        let origin = (0..map.dart_count()).map(Origin::Kept).collect();
        Cut { map, origin }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slits {
    /// the two slit faces become boundary, copies carry `label`
    Open(CurveLabel),
    /// the slit faces are capped with disks; copies become plain edges
    Capped,
}

impl CombMap {
    /// Orients the edges of `c` into a dart path and checks that it is a
    /// simple path (or cycle, when closed).
    pub fn curve_darts(&self, c: &EmbeddedCurve) -> Result<Vec<Dart>, MapError> {
        let bad = |msg: String| Err(MapError::CurveNotEmbedded(msg));
        if c.edges.is_empty() {
            return bad("empty curve".into());
        }
        if let Some(&e) = c.edges.iter().find(|&&e| e >= self.edge_count()) {
            return bad(format!("edge {e} does not exist"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &e in &c.edges {
            if !seen.insert(e) {
                return bad(format!("edge {e} repeated"));
            }
        }
        let m = c.edges.len();
        let (d0, d0r) = self.edge_darts(c.edges[0]);
        if m == 1 {
            let is_loop = self.vertex_of(d0) == self.head(d0);
            return match (c.closed, is_loop) {
                (true, true) | (false, false) => Ok(vec![d0]),
                (true, false) => bad("closed curve of one edge must be a loop".into()),
                (false, true) => bad("arc endpoints coincide".into()),
            };
        }
        let (n0, n1) = self.edge_darts(c.edges[1]);
        let touches_next = |d: Dart| {
            let h = self.head(d);
            h == self.vertex_of(n0) || h == self.vertex_of(n1)
        };
        let first = if touches_next(d0) {
            d0
        } else if touches_next(d0r) {
            d0r
        } else {
            return bad(format!("edges {} and {} share no vertex", c.edges[0], c.edges[1]));
        };
        let mut path = vec![first];
        for i in 1..m {
            let at = self.head(path[i - 1]);
            let (a, b) = self.edge_darts(c.edges[i]);
            let next = if self.vertex_of(a) == at {
                a
            } else if self.vertex_of(b) == at {
                b
            } else {
                return bad(format!("edges {} and {} are not consecutive", c.edges[i - 1], c.edges[i]));
            };
            path.push(next);
        }
        let mut verts: Vec<usize> = path.iter().map(|&d| self.vertex_of(d)).collect();
        let end = self.head(path[m - 1]);
        if c.closed {
            if end != verts[0] {
                return Err(MapError::CurveNotClosed);
            }
        } else {
            verts.push(end);
        }
        let mut sorted = verts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != verts.len() {
            return bad("curve revisits a vertex".into());
        }
        Ok(path)
    }

    /// Cuts along `c`. Both copies of the curve become boundary labeled `BDY`.
    pub fn cut_along(&self, c: &EmbeddedCurve) -> Result<CombMap, MapError> {
        Ok(self.cut_with_origin(c)?.map)
    }

    pub fn cut_with_origin(&self, c: &EmbeddedCurve) -> Result<Cut, MapError> {
        let path = self.curve_darts(c)?;
        self.cut_path(&path, c.closed, Slits::Open(CurveLabel::BDY))
    }

    /// Cuts along a dart path (as returned by [`CombMap::curve_darts`]).
    pub fn cut_path_open(&self, path: &[Dart], closed: bool) -> Result<Cut, MapError> {
        self.cut_path(path, closed, Slits::Open(CurveLabel::BDY))
    }

    /// Cuts along the closed curve `c` and caps both new boundary circles.
    pub fn surger(&self, c: &EmbeddedCurve) -> Result<CombMap, MapError> {
        if !c.closed {
            return Err(MapError::CurveNotClosed);
        }
        let path = self.curve_darts(c)?;
        Ok(self.cut_path(&path, true, Slits::Capped)?.map)
    }

    fn cut_path(&self, path: &[Dart], closed: bool, slits: Slits) -> Result<Cut, MapError> {
        let n = self.dart_count();
        let m = path.len();
        for &d in path {
            if self.is_hole_dart(d) || self.is_hole_dart(self.alpha(d)) {
                return Err(MapError::CurveNotEmbedded(format!("edge {} lies on the boundary", self.edge_of(d))));
            }
        }
        let lo = |i: usize| n + 4 * i;
        let li = |i: usize| n + 4 * i + 1;
        let ro = |i: usize| n + 4 * i + 2;
        let ri = |i: usize| n + 4 * i + 3;
        let total = n + 4 * m;
        let mut alpha = self.alpha_slice().to_vec();
        let mut sigma = self.sigma_slice().to_vec();
        alpha.resize(total, 0);
        sigma.resize(total, 0);
        for i in 0..m {
            alpha[lo(i)] = li(i);
            alpha[li(i)] = lo(i);
            alpha[ro(i)] = ri(i);
            alpha[ri(i)] = ro(i);
        }
        let mut link = |cycle: &[Dart]| {
            for k in 0..cycle.len() {
                sigma[cycle[k]] = cycle[(k + 1) % cycle.len()];
            }
        };
        let vertex_count = if closed { m } else { m + 1 };
        for i in 0..vertex_count {
            let out = (i < m).then(|| path[i]);
            let inc = if i > 0 {
                Some(self.alpha(path[i - 1]))
            } else if closed {
                Some(self.alpha(path[m - 1]))
            } else {
                None
            };
            let prev = (i + m - 1) % m;
            match (inc, out) {
                (Some(inc), Some(out)) => {
                    if self.is_boundary_vertex(out) {
                        return Err(MapError::CurveNotEmbedded(format!(
                            "curve touches the boundary at vertex {}",
                            self.vertex_of(out)
                        )));
                    }
                    let rot = self.rotation(out);
                    let k = rot.iter().position(|&d| d == inc).expect("in-dart at vertex");
                    let mut left = vec![lo(i)];
                    left.extend_from_slice(&rot[1..k]);
                    left.push(li(prev));
                    let mut right = vec![ri(prev)];
                    right.extend_from_slice(&rot[k + 1..]);
                    right.push(ro(i));
                    link(&left);
                    link(&right);
                }
                (None, Some(out)) => {
                    let rot = self.rotation(out);
                    let j = self.single_hole_corner(&rot)?;
                    let mut left = vec![lo(0)];
                    left.extend_from_slice(&rot[1..j]);
                    let mut right = rot[j..].to_vec();
                    right.push(ro(0));
                    link(&left);
                    link(&right);
                }
                (Some(inc), None) => {
                    let rot = self.rotation(inc);
                    let j = self.single_hole_corner(&rot)?;
                    let mut right = vec![ri(m - 1)];
                    right.extend_from_slice(&rot[1..j]);
                    let mut left = rot[j..].to_vec();
                    left.push(li(m - 1));
                    link(&left);
                    link(&right);
                }
                (None, None) => unreachable!(),
            }
        }

        // compact: kept darts first (in order), then the copies
        let mut removed = vec![false; n];
        for &d in path {
            removed[d] = true;
            removed[self.alpha(d)] = true;
        }
        let mut new_id = vec![usize::MAX; total];
        let mut origin = Vec::with_capacity(total - 2 * m);
        for d in 0..n {
            if !removed[d] {
                new_id[d] = origin.len();
                origin.push(Origin::Kept(d));
            }
        }
        for (i, &fwd) in path.iter().enumerate() {
            let back = self.alpha(fwd);
            for (d, of, side) in [
                (lo(i), fwd, Side::Left),
                (li(i), back, Side::Left),
                (ro(i), fwd, Side::Right),
                (ri(i), back, Side::Right),
            ] {
                new_id[d] = origin.len();
                origin.push(Origin::Copy { of, side });
            }
        }
        let old: Vec<Dart> = (0..total).filter(|&d| new_id[d] != usize::MAX).collect();
        let copy_label = match slits {
            Slits::Open(l) => l,
            Slits::Capped => CurveLabel::PLAIN,
        };
        let new_alpha = old.iter().map(|&d| new_id[alpha[d]]).collect();
        let new_sigma = old.iter().map(|&d| new_id[sigma[d]]).collect();
        let labels = old.iter().map(|&d| if d < n { self.label(d) } else { copy_label }).collect();
        let mut hole_darts: Vec<Dart> =
            (0..n).filter(|&d| !removed[d] && self.is_hole_dart(d)).map(|d| new_id[d]).collect();
        if matches!(slits, Slits::Open(_)) {
            hole_darts.push(new_id[lo(0)]);
            hole_darts.push(new_id[ri(0)]);
        }
        let map = CombMap::assemble(new_alpha, new_sigma, labels, &hole_darts, true)?;
        Ok(Cut { map, origin })
    }

    /// Index in `rot` of the dart following the unique hole corner.
    fn single_hole_corner(&self, rot: &[Dart]) -> Result<usize, MapError> {
        let holes: Vec<usize> = (1..rot.len()).filter(|&j| self.is_hole_dart(rot[j])).collect();
        match holes.as_slice() {
            [] => Err(MapError::ArcEndpointNotOnBoundary { vertex: self.vertex_of(rot[0]) }),
            [j] => Ok(*j),
            _ => Err(MapError::CurveNotEmbedded(format!(
                "vertex {} touches the boundary more than once",
                self.vertex_of(rot[0])
            ))),
        }
    }
}

impl Cut {
    /// Glues the two copies back together, for a cut made along `path` (as
    /// returned by [`CombMap::curve_darts`]) on a map whose curve edges carried
    /// `label`. Returns a map on the original dart ids.
    pub fn reglue(&self, path: &[Dart], label: CurveLabel) -> Result<CombMap, MapError> {
        let map = &self.map;
        let m = path.len();
        let kept = map.dart_count() - 4 * m;
        let n = kept + 2 * m;
        // copies sit after the kept darts as (lo, li, ro, ri) per curve dart
        let copy = |d: Dart| (d >= kept).then(|| ((d - kept) / 4, (d - kept) % 4));
        let back = |i: usize| self.map_back(path, i);
        let image = |d: Dart| match copy(d) {
            None => self.source_dart(d),
            Some((i, 0 | 2)) => path[i],
            Some((i, _)) => back(i),
        };
        let lo = |i: usize| kept + 4 * i;
        let li = |i: usize| kept + 4 * i + 1;
        let ro = |i: usize| kept + 4 * i + 2;
        let ri = |i: usize| kept + 4 * i + 3;
        let mut alpha = vec![usize::MAX; n];
        let mut sigma = vec![usize::MAX; n];
        let mut labels = vec![label; n];
        let mut hole_darts = Vec::new();
        for d in 0..kept {
            let x = self.source_dart(d);
            alpha[x] = image(map.alpha(d));
            labels[x] = map.label(d);
            if map.is_hole_dart(d) {
                hole_darts.push(x);
            }
            let s = map.sigma(d);
            sigma[x] = match copy(s) {
                None => image(s),
                // only arc endpoints rotate into these copies; skip the slit
                Some((i, 0)) => image(map.sigma(ro(i))),
                Some((i, 3)) => image(map.sigma(li(i))),
                Some(_) => image(s),
            };
        }
        for i in 0..m {
            alpha[path[i]] = back(i);
            alpha[back(i)] = path[i];
            sigma[path[i]] = image(map.sigma(lo(i)));
            sigma[back(i)] = image(map.sigma(ri(i)));
        }
        CombMap::assemble(alpha, sigma, labels, &hole_darts, true)
    }

    fn map_back(&self, path: &[Dart], i: usize) -> Dart {
        match self.origin[self.map.dart_count() - 4 * path.len() + 4 * i + 1] {
            Origin::Copy { of, .. } => of,
            Origin::Kept(x) => x,
        }
    }
}
