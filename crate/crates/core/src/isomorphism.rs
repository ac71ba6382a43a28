//! Element bijections and isomorphism search.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// A bijection `{0..n} -> {0..n}` stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PointedMap {
    images: Vec<usize>,
}

impl PointedMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::validation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(PointedMap { images })
    }

    pub fn identity(n: usize) -> Self {
        PointedMap {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, e: usize) -> usize {
        self.images[e]
    }

    pub fn image_of_set(&self, s: Subset) -> Subset {
        s.map(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> PointedMap {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        PointedMap { images: inv }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PointedMap) -> PointedMap {
        PointedMap {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }
}

/// Per-element data preserved by every isomorphism.
fn element_signature(m: &Matroid, e: usize) -> (usize, Vec<(usize, usize)>) {
    let in_bases = m.bases().iter().filter(|b| b.contains(e)).count();
    let mut lines: Vec<(usize, usize)> = m
        .ground()
        .without(e)
        .iter()
        .map(|f| {
            let pair = Subset::from_elements([e, f]);
            (m.rank_of(pair), m.closure(pair).len())
        })
        .collect();
    lines.sort_unstable();
    (in_bases, lines)
}

fn flat_profile(m: &Matroid) -> Vec<Vec<usize>> {
    (0..=m.rank())
        .map(|k| {
            let mut sizes: Vec<usize> = m.flats_at(k).iter().map(|f| f.len()).collect();
            sizes.sort_unstable();
            sizes
        })
        .collect()
}

/// Finds a bijection carrying the bases of `a` exactly onto the bases of
/// `b`. Candidates are filtered by per-element invariants and extended one
/// element at a time, checking independence of every new small subset.
pub fn are_isomorphic(a: &Matroid, b: &Matroid) -> Option<PointedMap> {
    if a.ground_size() != b.ground_size()
        || a.rank() != b.rank()
        || a.bases().len() != b.bases().len()
    {
        return None;
    }
    if flat_profile(a) != flat_profile(b) {
        return None;
    }
    let n = a.ground_size();
    let sig_a: Vec<_> = (0..n).map(|e| element_signature(a, e)).collect();
    let sig_b: Vec<_> = (0..n).map(|e| element_signature(b, e)).collect();
    let candidates: Vec<Vec<usize>> = sig_a
        .iter()
        .map(|s| (0..n).filter(|&f| &sig_b[f] == s).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    let mut search = IsoSearch {
        a,
        b,
        candidates,
        images: vec![usize::MAX; n],
        used: Subset::EMPTY,
    };
    if search.extend(0) {
        let map = PointedMap::new(search.images).expect("search yields a bijection");
        debug_assert_eq!(a.relabel(&map).ok().as_ref(), Some(b));
        Some(map)
    } else {
        None
    }
}

struct IsoSearch<'a> {
    a: &'a Matroid,
    b: &'a Matroid,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    used: Subset,
}

impl IsoSearch<'_> {
    fn extend(&mut self, e: usize) -> bool {
        if e == self.images.len() {
            return true;
        }
        let assigned = Subset::full(e);
        for ci in 0..self.candidates[e].len() {
            let f = self.candidates[e][ci];
            if self.used.contains(f) {
                continue;
            }
            self.images[e] = f;
            if self.consistent(assigned, e) {
                self.used.insert(f);
                if self.extend(e + 1) {
                    return true;
                }
                self.used.remove(f);
            }
        }
        self.images[e] = usize::MAX;
        false
    }

    /// Independence agrees on every subset of `assigned ∪ {e}` containing
    /// `e` of size at most the rank. Smaller subsets were checked earlier.
    fn consistent(&self, assigned: Subset, e: usize) -> bool {
        let r = self.a.rank();
        (0..r.min(assigned.len() + 1)).all(|k| {
            assigned.k_subsets(k).all(|s| {
                let x = s.with(e);
                self.a.is_independent(x) == self.b.is_independent(x.map(&self.images))
            })
        })
    }
}
