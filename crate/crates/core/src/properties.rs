//! Axiom checkers used by the property suites and by `reproduce`.
//!
//! Each checker returns the number of cases examined, or a description of
//! the first counterexample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::ExactMatrix;
use crate::matroid::Matroid;
use crate::subset::Subset;

pub type CheckResult = Result<u64, String>;

fn all_subsets(m: &Matroid) -> impl Iterator<Item = Subset> {
    (0..1u64 << m.ground_size()).map(Subset::from_bits)
}

/// Unit increase on every `(X, e)` and submodularity on every pair `(X, Y)`.
/// Quadratic in `2^n`; meant for `n <= 10`.
pub fn rank_axioms_exhaustive(m: &Matroid) -> CheckResult {
    let mut cases = 0;
    for x in all_subsets(m) {
        let rx = m.rank_of(x);
        if rx > x.len() {
            return Err(format!("rk{x} = {rx} exceeds |X|"));
        }
        for e in (m.ground() - x).iter() {
            let step = m.rank_of(x.with(e)) - rx;
            if step > 1 {
                return Err(format!("adding {e} to {x} raises rank by {step}"));
            }
            cases += 1;
        }
        for y in all_subsets(m) {
            if m.rank_of(x | y) + m.rank_of(x & y) > rx + m.rank_of(y) {
                return Err(format!("submodularity fails for {x}, {y}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Random unit-increase and submodularity checks with a fixed seed.
pub fn rank_axioms_sampled(m: &Matroid, samples: u64, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = m.ground().bits();
    for _ in 0..samples {
        let x = Subset::from_bits(rng.gen::<u64>() & mask);
        let y = Subset::from_bits(rng.gen::<u64>() & mask);
        let e = rng.gen_range(0..m.ground_size());
        let rx = m.rank_of(x);
        let step = m.rank_of(x.with(e)) as i64 - rx as i64;
        if !(0..=1).contains(&step) {
            return Err(format!("adding {e} to {x} changes rank by {step}"));
        }
        if m.rank_of(x | y) + m.rank_of(x & y) > rx + m.rank_of(y) {
            return Err(format!("submodularity fails for {x}, {y}"));
        }
    }
    Ok(samples)
}

/// Closure is extensive, monotone under adding one element, and
/// idempotent, on every subset.
pub fn closure_axioms(m: &Matroid) -> CheckResult {
    let mut cases = 0;
    for x in all_subsets(m) {
        let cx = m.closure(x);
        if !x.is_subset(cx) {
            return Err(format!("cl{x} = {cx} does not contain {x}"));
        }
        if m.closure(cx) != cx {
            return Err(format!("closure of {x} is not idempotent"));
        }
        if m.rank_of(cx) != m.rank_of(x) {
            return Err(format!("cl{x} changes rank"));
        }
        for e in (m.ground() - x).iter() {
            if !cx.is_subset(m.closure(x.with(e))) {
                return Err(format!("closure not monotone at {x} + {e}"));
            }
        }
        cases += 1;
    }
    Ok(cases)
}

pub fn basis_exchange(m: &Matroid) -> CheckResult {
    match m.exchange_violation() {
        Some((b1, b2, f)) => Err(format!("no exchange for {b1}, {b2}, {f}")),
        None => Ok((m.bases().len() * m.bases().len()) as u64),
    }
}

/// The column matroid of `a` is a quotient of that of its formalization,
/// with the same points and lines, and the rank gap is zero exactly when
/// `a` is formal.
pub fn formalization_quotient(a: &ExactMatrix) -> CheckResult {
    let g = a.formalization().map_err(|e| e.to_string())?;
    let ma = a.column_matroid();
    let mg = g.column_matroid();
    match ma.is_quotient_of(&mg) {
        Ok(true) => {}
        Ok(false) => return Err("not a quotient of its formalization".into()),
        Err(e) => return Err(e.to_string()),
    }
    for k in [1, 2] {
        if ma.flats_at(k) != mg.flats_at(k) {
            return Err(format!("rank-{k} flats differ from the formalization"));
        }
    }
    if a.is_formal() != (g.rank() == a.rank()) {
        return Err(format!(
            "formal = {} but ranks are {} and {}",
            a.is_formal(),
            a.rank(),
            g.rank()
        ));
    }
    Ok(1)
}
