//! Erections of a matroid, found through their copoints.
//!
//! A family of blocks is the copoint set of an erection of a rank-`r`
//! matroid `M` exactly when every block spans `M`, every block is
//! `(r-1)`-closed, and every basis of `M` lies in exactly one block. The
//! last condition is an exact-cover problem over the bases of `M`, with
//! the proper spanning `(r-1)`-closed sets as candidate options.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_cover::ExactCover;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Exhaustive subset scans are limited to ground sets of this size.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Node limit for backtracking searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget(pub u64);

impl SearchBudget {
    pub const ENV_VAR: &'static str = "MATROID_FORGE_BUDGET";

    /// The default budget, overridden by `MATROID_FORGE_BUDGET` when that
    /// holds a positive integer.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&v| v > 0)
            .map_or_else(SearchBudget::default, SearchBudget)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget(100_000_000)
    }
}

/// True if `x` contains the closure of each of its `k`-element subsets.
pub fn is_k_closed(m: &Matroid, x: Subset, k: usize) -> bool {
    x.k_subsets(k).all(|s| m.closure(s).is_subset(x))
}

/// All sets that span `m` and are `k`-closed, canonically sorted. With
/// `proper_only` the ground set itself is left out.
pub fn spanning_k_closed_sets(m: &Matroid, k: usize, proper_only: bool) -> Result<Vec<Subset>> {
    let n = m.ground_size();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    // only k-sets whose closure grows can violate k-closedness
    let growing: Vec<(Subset, Subset)> = m
        .ground()
        .k_subsets(k)
        .map(|s| (s, m.closure(s)))
        .filter(|(s, c)| c != s)
        .collect();
    let full = m.ground();
    let mut found: Vec<Subset> = (0..1u64 << n)
        .map(Subset::from_bits)
        .filter(|&x| !(proper_only && x == full))
        .filter(|&x| x.len() >= m.rank() && m.spans(x))
        .filter(|&x| {
            growing
                .iter()
                .all(|&(s, c)| !s.is_subset(x) || c.is_subset(x))
        })
        .collect();
    found.sort();
    Ok(found)
}

/// Candidate copoints of an erection, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockFamily {
    blocks: Vec<Subset>,
}

impl BlockFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(blocks: I) -> Self {
        let mut blocks: Vec<Subset> = blocks.into_iter().collect();
        blocks.sort();
        blocks.dedup();
        BlockFamily { blocks }
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_trivial(&self, m: &Matroid) -> bool {
        self.blocks == [m.ground()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum BlockViolation {
    /// Condition (i).
    NotSpanning { block: Subset },
    /// Condition (ii): `subset ⊆ block` but its closure is not.
    NotClosed {
        block: Subset,
        subset: Subset,
        closure: Subset,
    },
    /// Condition (iii), no covering block.
    BasisUncovered { basis: Subset },
    /// Condition (iii), two covering blocks.
    BasisCoveredTwice {
        basis: Subset,
        first: Subset,
        second: Subset,
    },
}

impl BlockViolation {
    pub fn condition(&self) -> &'static str {
        match self {
            BlockViolation::NotSpanning { .. } => "(i) spanning",
            BlockViolation::NotClosed { .. } => "(ii) closed",
            BlockViolation::BasisUncovered { .. } | BlockViolation::BasisCoveredTwice { .. } => {
                "(iii) unique cover"
            }
        }
    }
}

impl std::fmt::Display for BlockViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockViolation::NotSpanning { block } => write!(f, "block {block} does not span"),
            BlockViolation::NotClosed {
                block,
                subset,
                closure,
            } => write!(f, "block {block} contains {subset} but not its closure {closure}"),
            BlockViolation::BasisUncovered { basis } => write!(f, "basis {basis} lies in no block"),
            BlockViolation::BasisCoveredTwice {
                basis,
                first,
                second,
            } => write!(f, "basis {basis} lies in both {first} and {second}"),
        }
    }
}

/// Outcome of checking the three copoint conditions on a block family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub spanning: bool,
    pub closed: bool,
    pub unique_cover: bool,
    /// First violation, in condition order.
    pub violation: Option<BlockViolation>,
}

impl BlockReport {
    pub fn passes(&self) -> bool {
        self.spanning && self.closed && self.unique_cover
    }
}

pub fn check_erection_blocks(m: &Matroid, family: &BlockFamily) -> BlockReport {
    let k = m.rank().saturating_sub(1);
    let non_spanning = family
        .blocks()
        .iter()
        .find(|&&b| !m.spans(b))
        .map(|&block| BlockViolation::NotSpanning { block });
    let non_closed = family.blocks().iter().find_map(|&block| {
        block.k_subsets(k).find_map(|subset| {
            let closure = m.closure(subset);
            (!closure.is_subset(block)).then_some(BlockViolation::NotClosed {
                block,
                subset,
                closure,
            })
        })
    });
    let cover = m.bases().iter().find_map(|&basis| {
        let mut holders = family.blocks().iter().filter(|b| basis.is_subset(**b));
        match (holders.next(), holders.next()) {
            (None, _) => Some(BlockViolation::BasisUncovered { basis }),
            (Some(&first), Some(&second)) => Some(BlockViolation::BasisCoveredTwice {
                basis,
                first,
                second,
            }),
            _ => None,
        }
    });
    BlockReport {
        spanning: non_spanning.is_none(),
        closed: non_closed.is_none(),
        unique_cover: cover.is_none(),
        violation: non_spanning.or(non_closed).or(cover),
    }
}

/// Builds the rank-`r+1` matroid whose copoints are `family`, keeping the
/// flats of `m` below rank `r`.
pub fn erect_from_blocks(m: &Matroid, family: &BlockFamily) -> Result<Matroid> {
    if family.is_trivial(m) {
        return Ok(m.clone());
    }
    let r = m.rank();
    let mut flats = m.nontrivial_flats();
    flats.extend(family.blocks().iter().filter(|b| b.len() > r).map(|&b| (r, b)));
    Matroid::from_flats(m.ground_size(), r + 1, &flats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erection {
    pub matroid: Matroid,
    pub blocks: BlockFamily,
}

/// All erections of a matroid, the trivial one first, together with the
/// weak order among them.
#[derive(Clone, Debug)]
pub struct ErectionFamily {
    erections: Vec<Erection>,
    /// `weak_order[i][j]` iff erection `i` is a weak map image of erection `j`.
    weak_order: Vec<Vec<bool>>,
    /// Proper spanning closed sets offered to the cover search.
    candidates: Vec<Subset>,
}

impl ErectionFamily {
    pub fn erections(&self) -> &[Erection] {
        &self.erections
    }

    pub fn len(&self) -> usize {
        self.erections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.erections.is_empty()
    }

    pub fn matroids(&self) -> impl Iterator<Item = &Matroid> {
        self.erections.iter().map(|e| &e.matroid)
    }

    pub fn candidates(&self) -> &[Subset] {
        &self.candidates
    }

    pub fn weak_order(&self) -> &[Vec<bool>] {
        &self.weak_order
    }

    pub fn nontrivial(&self) -> &[Erection] {
        &self.erections[1..]
    }

    /// Index of the element above every other one in the weak order.
    pub fn maximum(&self) -> Option<usize> {
        let n = self.erections.len();
        let tops: Vec<usize> = (0..n)
            .filter(|&j| (0..n).all(|i| self.weak_order[i][j]))
            .collect();
        match tops.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    /// Pairs `i != j` related both ways; empty for a partial order on
    /// distinct matroids.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let n = self.erections.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.weak_order[i][j] && self.weak_order[j][i])
            .collect()
    }
}

/// Every erection of `m`, with the trivial erection first and the others in
/// canonical matroid order.
pub fn enumerate_erections(m: &Matroid, budget: SearchBudget) -> Result<ErectionFamily> {
    let r = m.rank();
    if r < 2 {
        return Err(Error::RankTooLow { rank: r });
    }
    let candidates = spanning_k_closed_sets(m, r - 1, true)?;
    let options: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&block| {
            m.bases()
                .iter()
                .enumerate()
                .filter(|(_, b)| b.is_subset(block))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let solutions = ExactCover::new(m.bases().len(), options).solve_all(budget.0)?;

    let mut nontrivial = Vec::with_capacity(solutions.len());
    for solution in solutions {
        let blocks = BlockFamily::new(solution.iter().map(|&o| candidates[o]));
        debug_assert!(check_erection_blocks(m, &blocks).passes());
        let matroid = erect_from_blocks(m, &blocks).map_err(|e| {
            Error::validation(format!("block family {:?} does not erect: {e}", blocks.blocks()))
        })?;
        nontrivial.push(Erection { matroid, blocks });
    }
    nontrivial.sort_by(|a, b| a.matroid.cmp(&b.matroid));
    nontrivial.dedup_by(|a, b| a.matroid == b.matroid);

    let mut erections = vec![Erection {
        matroid: m.clone(),
        blocks: BlockFamily::new([m.ground()]),
    }];
    erections.extend(nontrivial);
    let weak_order = erections
        .iter()
        .map(|a| {
            erections
                .iter()
                .map(|b| a.matroid.is_weak_map_image_of(&b.matroid))
                .collect::<Result<Vec<bool>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErectionFamily {
        erections,
        weak_order,
        candidates,
    })
}

/// The maximum of the erection family under the weak order.
pub fn free_erection(m: &Matroid, budget: SearchBudget) -> Result<Matroid> {
    let family = enumerate_erections(m, budget)?;
    let top = family.maximum().ok_or(Error::MaximalityViolation)?;
    Ok(family.erections[top].matroid.clone())
}

/// A nontrivial erection if one exists. An erection keeps all points and
/// lines and has `m` as a quotient, so its existence shows `m` is not
/// taut. `None` only rules out one-step erections.
pub fn tautness_witness(m: &Matroid, budget: SearchBudget) -> Result<Option<Matroid>> {
    let family = enumerate_erections(m, budget)?;
    if family.len() == 1 {
        return Ok(None);
    }
    let top = family.maximum().ok_or(Error::MaximalityViolation)?;
    Ok(Some(family.erections[top].matroid.clone()))
}
