//! Matroids on at most 64 elements, stored by their canonical basis list.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::isomorphism::PointedMap;
use crate::subset::{binomial, Subset, MAX_ELEMENTS};

/// Ground sets up to this size get a precomputed rank table (`2^n` bytes).
const RANK_TABLE_LIMIT: usize = 20;

/// A matroid given by its bases.
///
/// The basis list is sorted in canonical subset order, so two matroids on
/// the same labelled ground set are equal exactly when their basis lists
/// are equal.
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
    rank_table: OnceLock<Option<Box<[u8]>>>,
}

/// A matroid derived from a host, with `origin[i]` recording the host
/// elements that the new element `i` stands for. Deletion and contraction
/// produce singletons; simplification produces parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reindexed {
    pub matroid: Matroid,
    pub origin: Vec<Subset>,
}

impl Reindexed {
    pub fn into_matroid(self) -> Matroid {
        self.matroid
    }

    /// Host elements covered by the new ground set.
    pub fn support(&self) -> Subset {
        self.origin.iter().fold(Subset::EMPTY, |acc, &s| acc | s)
    }

    /// Translates a subset of the derived ground set back into host labels.
    pub fn lift(&self, set: Subset) -> Subset {
        set.iter().fold(Subset::EMPTY, |acc, e| acc | self.origin[e])
    }

    /// Composes with a further derivation of `self.matroid`.
    pub fn then(&self, next: Reindexed) -> Reindexed {
        let origin = next.origin.iter().map(|&s| self.lift(s)).collect();
        Reindexed {
            matroid: next.matroid,
            origin,
        }
    }
}

impl Matroid {
    /// Builds a matroid from an explicit basis list, checking the
    /// basis-exchange axiom on every ordered pair.
    pub fn from_bases<I: IntoIterator<Item = Subset>>(n: usize, bases: I) -> Result<Self> {
        check_ground(n)?;
        let bases: BTreeSet<Subset> = bases.into_iter().collect();
        let Some(first) = bases.first().copied() else {
            return Err(Error::validation("basis family is empty"));
        };
        let full = Subset::full(n);
        let rank = first.len();
        for &b in &bases {
            if !b.is_subset(full) {
                return Err(Error::validation(format!("basis {b} leaves the ground set")));
            }
            if b.len() != rank {
                return Err(Error::validation(format!(
                    "basis {b} has size {} but {first} has size {rank}",
                    b.len()
                )));
            }
        }
        let m = Matroid::from_sorted_bases(n, bases.into_iter().collect());
        if let Some((b1, b2, f)) = m.exchange_violation() {
            return Err(Error::validation(format!(
                "basis exchange fails for {b1}, {b2} and element {f}"
            )));
        }
        Ok(m)
    }

    /// Trusted constructor: `bases` must already be a valid, canonically
    /// sorted, duplicate-free basis family.
    pub(crate) fn from_sorted_bases(n: usize, bases: Vec<Subset>) -> Self {
        debug_assert!(!bases.is_empty());
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        let rank = bases[0].len();
        Matroid {
            n,
            rank,
            bases,
            rank_table: OnceLock::new(),
        }
    }

    /// Builds the simple matroid of the given rank whose nontrivial flats
    /// (rank `k` flats with more than `k` elements, `1 <= k < rank`) are
    /// exactly the listed ones. Every other independent set of size `k` is
    /// taken to be a trivial flat of rank `k`.
    pub fn from_flats(n: usize, rank: usize, flats: &[(usize, Subset)]) -> Result<Self> {
        check_ground(n)?;
        if rank == 0 || rank > n {
            return Err(Error::validation(format!(
                "rank {rank} must lie in 1..={n}"
            )));
        }
        let full = Subset::full(n);
        let mut listed: BTreeSet<(usize, Subset)> = BTreeSet::new();
        for &(k, f) in flats {
            if !f.is_subset(full) {
                return Err(Error::validation(format!("flat {f} leaves the ground set 0..{n}")));
            }
            if k == 0 || k >= rank {
                return Err(Error::validation(format!(
                    "flat {f} has rank {k}, outside 1..{rank}"
                )));
            }
            if f.len() <= k {
                return Err(Error::validation(format!(
                    "flat {f} of rank {k} is trivial and must not be listed"
                )));
            }
            if !listed.insert((k, f)) {
                return Err(Error::validation(format!("flat {f} listed twice")));
            }
        }
        let listed: Vec<(usize, Subset)> = listed.into_iter().collect();

        // rank of X = min(|X|, rank, ranks of listed flats containing X);
        // exact whenever the listing is complete and consistent, which the
        // round-trip below verifies.
        let formula = |x: Subset| -> usize {
            listed
                .iter()
                .filter(|(_, f)| x.is_subset(*f))
                .map(|&(k, _)| k)
                .fold(x.len().min(rank), usize::min)
        };

        for &(k, f) in &listed {
            let r = formula(f);
            if r != k {
                return Err(Error::validation(format!(
                    "flat {f} listed at rank {k} lies inside a flat of rank {r}"
                )));
            }
        }
        for (i, &(k, f)) in listed.iter().enumerate() {
            for &(k2, g) in &listed[i + 1..] {
                if k == k2 && formula(f & g) >= k {
                    return Err(Error::validation(format!(
                        "flats {f} and {g} of rank {k} share the rank-{k} subset {}",
                        f & g
                    )));
                }
            }
        }

        let bases: Vec<Subset> = full.k_subsets(rank).filter(|&b| formula(b) == rank).collect();
        if bases.is_empty() {
            return Err(Error::validation("no independent set of full rank"));
        }
        let m = Matroid::from_sorted_bases(n, bases);
        if let Some((b1, b2, f)) = m.exchange_violation() {
            return Err(Error::validation(format!(
                "basis exchange fails for {b1}, {b2} and element {f}"
            )));
        }
        let mut rebuilt: Vec<(usize, Subset)> = (1..rank)
            .flat_map(|k| {
                m.flats_at(k)
                    .into_iter()
                    .filter(move |f| f.len() > k)
                    .map(move |f| (k, f))
            })
            .collect();
        rebuilt.sort();
        if rebuilt != listed {
            let missing = rebuilt.iter().find(|x| !listed.contains(x));
            let extra = listed.iter().find(|x| !rebuilt.contains(x));
            return Err(Error::validation(format!(
                "flat listing is inconsistent (implied but unlisted: {:?}; listed but not closed: {:?})",
                missing.map(|x| x.1),
                extra.map(|x| x.1)
            )));
        }
        Ok(m)
    }

    /// The free matroid: every subset independent.
    pub fn free(n: usize) -> Self {
        Matroid::uniform(n, n)
    }

    /// The uniform matroid `U(rank, n)`.
    pub fn uniform(rank: usize, n: usize) -> Self {
        assert!(rank <= n && n <= MAX_ELEMENTS);
        let mut bases: Vec<Subset> = Subset::full(n).k_subsets(rank).collect();
        bases.sort();
        Matroid::from_sorted_bases(n, bases)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonically sorted bases.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, x: Subset) -> bool {
        self.bases.binary_search(&x).is_ok()
    }

    fn table(&self) -> Option<&[u8]> {
        self.rank_table
            .get_or_init(|| (self.n <= RANK_TABLE_LIMIT).then(|| build_rank_table(self.n, &self.bases)))
            .as_deref()
    }

    /// Size of a largest independent subset of `x`.
    pub fn rank_of(&self, x: Subset) -> usize {
        let x = x & self.ground();
        match self.table() {
            Some(t) => t[x.bits() as usize] as usize,
            None => self
                .bases
                .iter()
                .map(|&b| (b & x).len())
                .max()
                .unwrap_or(0),
        }
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.rank_of(x) == x.len()
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank_of(x);
        (self.ground() - x)
            .iter()
            .filter(|&e| self.rank_of(x.with(e)) == r)
            .fold(x & self.ground(), Subset::with)
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.closure(x) == x
    }

    pub fn spans(&self, x: Subset) -> bool {
        self.rank_of(x) == self.rank
    }

    /// The canonically sorted flats of rank `k`.
    pub fn flats_at(&self, k: usize) -> Vec<Subset> {
        if k > self.rank {
            return Vec::new();
        }
        let mut level = vec![self.closure(Subset::EMPTY)];
        for _ in 0..k {
            let next: BTreeSet<Subset> = level
                .iter()
                .flat_map(|&f| (self.ground() - f).iter().map(move |e| (f, e)))
                .map(|(f, e)| self.closure(f.with(e)))
                .collect();
            level = next.into_iter().collect();
        }
        level
    }

    /// Flats of rank `k` with more than `min_size` elements.
    pub fn flats_at_larger_than(&self, k: usize, min_size: usize) -> Vec<Subset> {
        self.flats_at(k)
            .into_iter()
            .filter(|f| f.len() > min_size)
            .collect()
    }

    /// Nontrivial flats `(k, F)` with `1 <= k < rank` and `|F| > k`.
    pub fn nontrivial_flats(&self) -> Vec<(usize, Subset)> {
        (1..self.rank)
            .flat_map(|k| self.flats_at_larger_than(k, k).into_iter().map(move |f| (k, f)))
            .collect()
    }

    pub fn loops(&self) -> Subset {
        self.closure(Subset::EMPTY)
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty()
            && self
                .ground()
                .k_subsets(2)
                .all(|pair| self.rank_of(pair) == 2)
    }

    /// First failure of the basis-exchange axiom, if any.
    pub fn exchange_violation(&self) -> Option<(Subset, Subset, usize)> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for f in (b2 - b1).iter() {
                    let without = b2.without(f);
                    if !(b1 - b2).iter().any(|e| self.is_basis(without.with(e))) {
                        return Some((b1, b2, f));
                    }
                }
            }
        }
        None
    }

    /// Deletes `x`; the remaining elements are renumbered in increasing order.
    pub fn delete(&self, x: Subset) -> Result<Reindexed> {
        let keep = self.ground() - x;
        if keep.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let r = self.rank_of(keep);
        let restricted: BTreeSet<Subset> = self
            .bases
            .iter()
            .map(|&b| b & keep)
            .filter(|b| b.len() == r)
            .collect();
        Ok(self.reindex(keep, restricted))
    }

    /// Contracts `x`, using `rk(Y) = rk(Y ∪ X) - rk(X)` on the remaining elements.
    pub fn contract(&self, x: Subset) -> Result<Reindexed> {
        let x = x & self.ground();
        let keep = self.ground() - x;
        if keep.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let basis_of_x = self.maximal_independent_subset(x);
        let contracted: BTreeSet<Subset> = self
            .bases
            .iter()
            .filter(|b| basis_of_x.is_subset(**b))
            .map(|&b| b - basis_of_x)
            .collect();
        debug_assert!(contracted.iter().all(|b| b.is_subset(keep)));
        Ok(self.reindex(keep, contracted))
    }

    pub fn restrict(&self, keep: Subset) -> Result<Reindexed> {
        self.delete(self.ground() - keep)
    }

    /// Greedy maximal independent subset of `x`, scanning in increasing order.
    pub fn maximal_independent_subset(&self, x: Subset) -> Subset {
        x.iter().fold(Subset::EMPTY, |acc, e| {
            let grown = acc.with(e);
            if self.is_independent(grown) {
                grown
            } else {
                acc
            }
        })
    }

    fn reindex(&self, keep: Subset, bases: BTreeSet<Subset>) -> Reindexed {
        let kept: Vec<usize> = keep.to_vec();
        let mut position = [usize::MAX; MAX_ELEMENTS];
        for (i, &e) in kept.iter().enumerate() {
            position[e] = i;
        }
        let mut renumbered: Vec<Subset> = bases.into_iter().map(|b| b.map(&position)).collect();
        renumbered.sort();
        Reindexed {
            matroid: Matroid::from_sorted_bases(kept.len(), renumbered),
            origin: kept.into_iter().map(Subset::singleton).collect(),
        }
    }

    /// Removes loops and collapses each parallel class onto its least
    /// element. `origin` lists the classes.
    pub fn simplify(&self) -> Result<Reindexed> {
        let loops = self.loops();
        let mut classes: Vec<Subset> = Vec::new();
        let mut seen = loops;
        for e in self.ground().iter() {
            if seen.contains(e) {
                continue;
            }
            let class = (self.ground() - loops)
                .iter()
                .filter(|&f| f == e || self.rank_of(Subset::from_elements([e, f])) == 1)
                .collect::<Subset>();
            seen = seen | class;
            classes.push(class);
        }
        if classes.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let representatives: Subset = classes.iter().filter_map(|c| c.min_element()).collect();
        let restricted = self.restrict(representatives)?;
        Ok(Reindexed {
            matroid: restricted.matroid,
            origin: classes,
        })
    }

    /// The truncation: same flats below rank `r - 1`, with `E` on top.
    pub fn truncation(&self) -> Result<Matroid> {
        if self.rank <= 1 {
            return Err(Error::RankTooLow { rank: self.rank });
        }
        let lowered: BTreeSet<Subset> = self
            .bases
            .iter()
            .flat_map(|&b| b.k_subsets(self.rank - 1))
            .collect();
        Ok(Matroid::from_sorted_bases(self.n, lowered.into_iter().collect()))
    }

    /// `self ≺ other`: every independent set of `self` is independent in `other`.
    pub fn is_weak_map_image_of(&self, other: &Matroid) -> Result<bool> {
        self.check_same_ground(other)?;
        Ok(self.bases.iter().all(|&b| other.is_independent(b)))
    }

    /// Weak map image whose flats are all flats of `other`.
    pub fn is_quotient_of(&self, other: &Matroid) -> Result<bool> {
        if !self.is_weak_map_image_of(other)? {
            return Ok(false);
        }
        Ok((0..=self.rank).all(|k| self.flats_at(k).into_iter().all(|f| other.is_flat(f))))
    }

    fn check_same_ground(&self, other: &Matroid) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Renames element `e` to `map.image(e)`.
    pub fn relabel(&self, map: &PointedMap) -> Result<Matroid> {
        if map.len() != self.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: map.len(),
            });
        }
        let mut bases: Vec<Subset> = self.bases.iter().map(|b| b.map(map.images())).collect();
        bases.sort();
        Ok(Matroid::from_sorted_bases(self.n, bases))
    }

    /// Number of `rank`-subsets of the ground set, the ceiling on basis count.
    pub fn basis_capacity(&self) -> u64 {
        binomial(self.n, self.rank)
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: MAX_ELEMENTS,
        });
    }
    Ok(())
}

fn build_rank_table(n: usize, bases: &[Subset]) -> Box<[u8]> {
    let size = 1usize << n;
    let mut independent = vec![false; size];
    for b in bases {
        for s in b.submasks() {
            independent[s.bits() as usize] = true;
        }
    }
    let mut rank = vec![0u8; size];
    for x in 1..size {
        rank[x] = if independent[x] {
            x.count_ones() as u8
        } else {
            // some element of x is missed by a maximal independent subset
            let mut best = 0;
            let mut rest = x;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                best = best.max(rank[x ^ low]);
                rest ^= low;
            }
            best
        };
    }
    rank.into_boxed_slice()
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            n: self.n,
            rank: self.rank,
            bases: self.bases.clone(),
            rank_table: self.rank_table.clone(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl PartialOrd for Matroid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: ground size, rank, then basis lists.
impl Ord for Matroid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.rank, &self.bases).cmp(&(other.n, other.rank, &other.bases))
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases.len())
            .finish()
    }
}
