//! Minor search and Fano-type realizability obstructions.
//!
//! A simple minor of `host` with rank `r` can be reached by contracting an
//! independent set `C` with `|C| <= rk(host) - r`, simplifying, and
//! restricting to a set of points. Contracting a dependent set only adds
//! loops, which simplification removes again, so independent sets suffice,
//! and two independent sets with the same closure give the same simple
//! contraction. Contraction sets are tried smallest first; when `|C|` is
//! below `rk(host) - r` the chosen points must themselves drop in rank.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::catalog;
use crate::erection::SearchBudget;
use crate::error::{Error, Result};
use crate::isomorphism::{are_isomorphic, PointedMap};
use crate::matroid::{Matroid, Reindexed};
use crate::subset::Subset;

/// How a target is found inside a host, in host labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub contract: Subset,
    /// Loops created by the contraction.
    pub loops: Subset,
    /// Points of the simplified contraction that are deleted.
    pub delete: Subset,
    /// Parallel classes of the kept points; point `i` of the restriction.
    pub points: Vec<Subset>,
    /// Point `i` goes to target element `iso.image(i)`.
    pub iso: PointedMap,
}

impl MinorWitness {
    /// Contracts, simplifies, restricts and relabels `host` as recorded.
    pub fn replay(&self, host: &Matroid) -> Result<Matroid> {
        let simple = simple_contraction(host, self.contract)?;
        let keep: Subset = simple
            .origin
            .iter()
            .enumerate()
            .filter(|(_, class)| self.points.contains(class))
            .map(|(i, _)| i)
            .collect();
        if keep.len() != self.points.len() {
            return Err(Error::validation("witness classes do not match the contraction"));
        }
        let restricted = simple.then(simple.matroid.restrict(keep)?);
        if restricted.origin != self.points {
            return Err(Error::validation("witness points out of order"));
        }
        restricted.matroid.relabel(&self.iso)
    }

    pub fn is_identity(&self) -> bool {
        self.contract.is_empty()
            && self.delete.is_empty()
            && self.points.iter().all(|c| c.len() == 1)
            && self.iso.is_identity()
    }
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "contract {} delete {} points [", self.contract, self.delete)?;
        for (i, class) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let elems: Vec<String> = class.iter().map(|e| e.to_string()).collect();
            write!(f, "[{}]", elems.join(","))?;
        }
        f.write_str("]")
    }
}

fn simple_contraction(host: &Matroid, contract: Subset) -> Result<Reindexed> {
    let contracted = host.contract(contract)?;
    Ok(contracted.then(contracted.matroid.simplify()?))
}

/// Finds `target` (which must be simple) as a minor of `host`; the first
/// witness in search order, or `None` after an exhaustive search.
pub fn find_minor(
    host: &Matroid,
    target: &Matroid,
    budget: SearchBudget,
) -> Result<Option<MinorWitness>> {
    if !target.is_simple() {
        return Err(Error::TargetNotSimple);
    }
    let (t_rank, t_size) = (target.rank(), target.ground_size());
    if t_rank > host.rank() || t_size > host.ground_size() {
        return Ok(None);
    }
    let mut nodes = 0u64;
    for c in 0..=host.rank() - t_rank {
        let mut seen: HashSet<Subset> = HashSet::new();
        for contract in host.ground().k_subsets(c) {
            if !host.is_independent(contract) || !seen.insert(host.closure(contract)) {
                continue;
            }
            if contract.len() == host.ground_size() {
                continue;
            }
            let simple = simple_contraction(host, contract)?;
            let points = simple.matroid.ground();
            for keep in points.k_subsets(t_size) {
                nodes += 1;
                if nodes > budget.0 {
                    return Err(Error::SearchBudgetExceeded { budget: budget.0 });
                }
                if simple.matroid.rank_of(keep) != t_rank {
                    continue;
                }
                let restricted = simple.matroid.restrict(keep)?;
                if let Some(iso) = are_isomorphic(&restricted.matroid, target) {
                    let contracted_ground = host.ground() - contract;
                    let kept_classes: Vec<Subset> =
                        keep.iter().map(|p| simple.origin[p]).collect();
                    let covered = simple.support();
                    let dropped = (points - keep)
                        .iter()
                        .fold(Subset::EMPTY, |acc, p| acc | simple.origin[p]);
                    let witness = MinorWitness {
                        contract,
                        loops: contracted_ground - covered,
                        delete: dropped,
                        points: kept_classes,
                        iso,
                    };
                    debug_assert_eq!(witness.replay(host).ok().as_ref(), Some(target));
                    return Ok(Some(witness));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Has an `F7` minor only.
    Char2Only,
    /// Has an `F7⁻` minor only.
    CharNot2Only,
    /// Has both; realizable over no field.
    NoField,
    /// Neither minor; says nothing about realizability.
    NoObstructionFound,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Char2Only => "char-2-only",
            Verdict::CharNot2Only => "char-not-2-only",
            Verdict::NoField => "no-field",
            Verdict::NoObstructionFound => "no-obstruction-found",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub fano: Option<MinorWitness>,
    pub non_fano: Option<MinorWitness>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    pub fn has_fano(&self) -> bool {
        self.fano.is_some()
    }

    pub fn has_non_fano(&self) -> bool {
        self.non_fano.is_some()
    }
}

/// Looks for Fano and non-Fano minors. `F7` is realizable only in
/// characteristic 2 and `F7⁻` only outside it, and minors of a realizable
/// matroid are realizable over the same field.
pub fn realizability_obstruction(m: &Matroid, budget: SearchBudget) -> Result<ObstructionReport> {
    let fano = find_minor(m, &catalog::fano(), budget)?;
    let non_fano = find_minor(m, &catalog::non_fano(), budget)?;
    let verdict = match (fano.is_some(), non_fano.is_some()) {
        (true, true) => Verdict::NoField,
        (true, false) => Verdict::Char2Only,
        (false, true) => Verdict::CharNot2Only,
        (false, false) => Verdict::NoObstructionFound,
    };
    Ok(ObstructionReport {
        fano,
        non_fano,
        verdict,
    })
}
