//! The lattice of flats, stratified by rank.

use std::collections::HashMap;

use crate::matroid::Matroid;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLattice {
    flats_by_rank: Vec<Vec<Subset>>,
}

impl FlatLattice {
    pub fn of(m: &Matroid) -> Self {
        FlatLattice {
            flats_by_rank: (0..=m.rank()).map(|k| m.flats_at(k)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.flats_by_rank.len() - 1
    }

    pub fn flats_at(&self, k: usize) -> &[Subset] {
        self.flats_by_rank.get(k).map_or(&[], Vec::as_slice)
    }

    /// `L_k^{>s}`: rank-`k` flats with more than `s` elements.
    pub fn flats_larger_than(&self, k: usize, s: usize) -> Vec<Subset> {
        self.flats_at(k).iter().copied().filter(|f| f.len() > s).collect()
    }

    pub fn bottom(&self) -> Subset {
        self.flats_by_rank[0][0]
    }

    /// Copoints: flats of rank `r - 1`.
    pub fn copoints(&self) -> &[Subset] {
        self.flats_at(self.rank().saturating_sub(1))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Subset)> + '_ {
        self.flats_by_rank
            .iter()
            .enumerate()
            .flat_map(|(k, fs)| fs.iter().map(move |&f| (k, f)))
    }

    pub fn len(&self) -> usize {
        self.flats_by_rank.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `μ(0̂, X)` for every flat, from `μ(0̂, 0̂) = 1` and
    /// `μ(0̂, X) = -Σ_{0̂ ≤ Y < X} μ(0̂, Y)`.
    pub fn mobius_from_bottom(&self) -> HashMap<Subset, i64> {
        let mut mu: HashMap<Subset, i64> = HashMap::new();
        mu.insert(self.bottom(), 1);
        for k in 1..=self.rank() {
            for &x in self.flats_at(k) {
                let below: i64 = (0..k)
                    .flat_map(|j| self.flats_at(j))
                    .filter(|y| y.is_subset(x))
                    .map(|y| mu[y])
                    .sum();
                mu.insert(x, -below);
            }
        }
        mu
    }
}
