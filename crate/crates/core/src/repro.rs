//! The reproduction report: the full list of checks on the bundled data,
//! run in order, each with a verdict and a one-line summary.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arrangement::ExactMatrix;
use crate::erection::{
    check_erection_blocks, enumerate_erections, spanning_k_closed_sets, BlockFamily,
    ErectionFamily, SearchBudget,
};
use crate::error::{Error, Result};
use crate::format::{parse_matrix, parse_set_list, MatroidFile};
use crate::isomorphism::are_isomorphic;
use crate::matroid::Matroid;
use crate::minor::{find_minor, realizability_obstruction, Verdict};
use crate::polynomial::{characteristic_polynomial, splits_over_integers};
use crate::properties;
use crate::subset::Subset;
use crate::catalog;

/// A matroid file that parsed; `matroid` holds the validation outcome.
#[derive(Clone, Debug)]
pub struct LoadedMatroid {
    pub file: MatroidFile,
    pub matroid: std::result::Result<Matroid, String>,
}

impl LoadedMatroid {
    fn from_text(name: &str, text: &str) -> Result<Self> {
        let file = MatroidFile::parse(text).map_err(|e| e.in_file(name))?;
        let matroid = file.to_matroid().map_err(|e| format!("{name}: {e}"));
        Ok(LoadedMatroid { file, matroid })
    }

    fn get(&self) -> std::result::Result<&Matroid, String> {
        self.matroid.as_ref().map_err(Clone::clone)
    }
}

/// Everything `reproduce` reads. Syntax and IO problems abort loading;
/// matroid files that parse but do not validate are kept, and the checks
/// that need them fail.
#[derive(Clone, Debug)]
pub struct DataSet {
    pub m: LoadedMatroid,
    pub n: LoadedMatroid,
    pub f7: LoadedMatroid,
    pub f7_minus: LoadedMatroid,
    pub n_planes3: Vec<Subset>,
    pub s: Vec<Subset>,
    pub a: ExactMatrix,
    pub fano_gf2: ExactMatrix,
    pub fano_gf3: ExactMatrix,
    pub yuzvinsky1: ExactMatrix,
    pub yuzvinsky2: ExactMatrix,
}

impl DataSet {
    /// The copies compiled into the library.
    pub fn bundled() -> Result<Self> {
        Self::from_reader(|name| {
            catalog::FILES
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| Error::validation(format!("no bundled file {name}")))
        })
    }

    pub fn load(dir: &Path) -> Result<Self> {
        Self::from_reader(|name| {
            let path = dir.join(name);
            std::fs::read_to_string(&path).map_err(|e| Error::from(e).in_file(path.display().to_string()))
        })
    }

    fn from_reader(read: impl Fn(&str) -> Result<String>) -> Result<Self> {
        let matroid = |name: &str| LoadedMatroid::from_text(name, &read(name)?);
        let matrix = |name: &str| parse_matrix(&read(name)?).map_err(|e| e.in_file(name));
        let sets = |name: &str| parse_set_list(&read(name)?).map_err(|e| e.in_file(name));
        Ok(DataSet {
            m: matroid("M.matroid")?,
            n: matroid("N.matroid")?,
            f7: matroid("F7.matroid")?,
            f7_minus: matroid("F7minus.matroid")?,
            n_planes3: sets("N.planes3.sets")?,
            s: sets("S.sets")?,
            a: matrix("A.matrix")?,
            fano_gf2: matrix("fano.gf2.matrix")?,
            fano_gf3: matrix("fano.gf3.matrix")?,
            yuzvinsky1: matrix("yuzvinsky1.matrix")?,
            yuzvinsky2: matrix("yuzvinsky2.matrix")?,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub limit_secs: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub checks: Vec<Check>,
}

impl ReproReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    /// Fixed-width table; wall-clock lines only when `timing` is set.
    pub fn render(&self, timing: bool) -> String {
        let mut out = String::new();
        writeln!(out, "{:>2}  {:<26}  {:<6}  detail", "#", "check", "result").unwrap();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{:>2}  {:<26}  {:<6}  {}", c.id, c.name, verdict, c.detail).unwrap();
        }
        let overall = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "overall: {overall} ({}/{} checks)", self.passed_count(), self.checks.len())
            .unwrap();
        if timing {
            for c in &self.checks {
                writeln!(
                    out,
                    "time {:>2}  {:<26}  {:>9.3}s  (limit {}s)",
                    c.id,
                    c.name,
                    c.elapsed.as_secs_f64(),
                    c.limit_secs
                )
                .unwrap();
            }
        }
        out
    }

    pub fn to_json(&self, timing: bool) -> serde_json::Value {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = serde_json::to_value(c).expect("check serializes");
                if timing {
                    v["elapsed_secs"] = serde_json::json!(c.elapsed.as_secs_f64());
                }
                v
            })
            .collect();
        serde_json::json!({
            "overall": if self.passed() { "PASS" } else { "FAIL" },
            "passed": self.passed_count(),
            "total": self.checks.len(),
            "checks": checks,
        })
    }
}

type Outcome = std::result::Result<String, String>;
type CheckFn<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

fn set_list(sets: &[Subset]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn s(elements: &[usize]) -> Subset {
    Subset::from_elements(elements.iter().copied())
}

/// For each three-element set of `S`: a candidate block `Z` and a basis
/// `B ⊆ Z` that no other candidate contains.
const BASIS_WITNESSES: &[(&[usize], &[usize], &[usize])] = &[
    (&[0, 1, 12], &[0, 1, 3, 4, 7, 9, 12], &[0, 1, 3]),
    (&[3, 4, 12], &[0, 1, 3, 4, 7, 9, 12], &[0, 1, 3]),
    (&[0, 2, 11], &[0, 2, 3, 5, 6, 9, 11], &[0, 2, 3]),
    (&[3, 5, 11], &[0, 2, 3, 5, 6, 9, 11], &[0, 2, 3]),
    (&[1, 2, 10], &[1, 2, 4, 5, 8, 9, 10], &[1, 2, 4]),
    (&[4, 5, 10], &[1, 2, 4, 5, 8, 9, 10], &[1, 2, 4]),
    (&[6, 7, 8], &[6, 7, 8, 9, 10, 11, 12], &[7, 8, 9]),
];

/// Parallel classes of `N/6` after simplification, in point order.
const CONTRACTION_CLASSES: &[&[usize]] =
    &[&[0, 5], &[1], &[2, 3], &[4], &[7], &[8], &[9, 11], &[10, 12]];

/// Its nontrivial lines, as unions of classes.
const CONTRACTION_LINES: &[&[usize]] = &[
    &[0, 1, 5, 8],
    &[1, 2, 3, 7],
    &[0, 2, 3, 5, 9, 11],
    &[1, 4, 9, 11],
    &[0, 4, 5, 7],
    &[2, 3, 4, 8],
    &[7, 8, 9, 10, 11, 12],
];

fn check_m_well_formed(data: &DataSet) -> Outcome {
    let m = data.m.get()?;
    let lines = data.m.file.flats_of_rank(2);
    ensure(data.m.file.flats.len() == lines.len(), || "M.matroid lists flats other than lines".into())?;
    // a triple is dependent exactly when it lies on a listed line
    let mut oracle_bases = Vec::new();
    let mut triples = 0;
    for t in m.ground().k_subsets(3) {
        triples += 1;
        if !lines.iter().any(|l| t.is_subset(*l)) {
            oracle_bases.push(t);
        }
    }
    ensure(m.rank() == 3 && m.ground_size() == 13, || {
        format!("expected rank 3 on 13 points, got rank {} on {}", m.rank(), m.ground_size())
    })?;
    ensure(m.bases() == oracle_bases.as_slice(), || {
        format!("bases disagree with the triple oracle ({} vs {})", m.bases().len(), oracle_bases.len())
    })?;
    ensure(m.bases().len() == 271, || format!("{} bases, expected 271", m.bases().len()))?;
    let found: BTreeSet<Subset> = m.flats_at_larger_than(2, 2).into_iter().collect();
    let listed: BTreeSet<Subset> = lines.iter().copied().collect();
    ensure(found == listed && listed.len() == 15, || {
        format!("{} nontrivial lines, {} listed", found.len(), listed.len())
    })?;
    Ok(format!("271 bases, 15 lines; {triples} triples checked"))
}

fn check_realization(data: &DataSet) -> Outcome {
    let m = data.m.get()?;
    ensure(data.a.realizes(m).map_err(err_str)?, || "A does not realize M".into())?;
    Ok(format!("{}x{} matrix over Q realizes M", data.a.rows(), data.a.cols()))
}

fn check_erections(data: &DataSet, family: &ErectionFamily) -> Outcome {
    let m = data.m.get()?;
    let n = data.n.get()?;
    let mut found: Vec<&Matroid> = family.matroids().collect();
    found.sort();
    let mut expected = vec![m, n];
    expected.sort();
    ensure(found == expected && family.len() == 2, || {
        let ranks: Vec<String> = family.matroids().map(|e| format!("rank {}", e.rank())).collect();
        format!("{} erections ({}), expected the trivial one and N", family.len(), ranks.join(", "))
    })?;
    ensure(family.erections()[0].matroid == *m, || "trivial erection not listed first".into())?;
    Ok(format!(
        "exactly 2 erections: trivial and N ({} bases); {} candidate blocks",
        n.bases().len(),
        family.candidates().len()
    ))
}

fn census(data: &DataSet) -> std::result::Result<Vec<Subset>, String> {
    spanning_k_closed_sets(data.m.get()?, 2, true).map_err(err_str)
}

fn check_candidate_census(data: &DataSet) -> Outcome {
    let n = data.n.get()?;
    let candidates = census(data)?;
    let large: BTreeSet<Subset> = n.flats_at_larger_than(3, 3).into_iter().collect();
    let small: BTreeSet<Subset> = data.n_planes3.iter().copied().collect();
    let n_small: BTreeSet<Subset> =
        n.flats_at(3).into_iter().filter(|f| f.len() == 3).collect();
    ensure(small == n_small, || "N.planes3 differs from the 3-element planes of N".into())?;
    let extra: BTreeSet<Subset> = data.s.iter().copied().collect();
    ensure(extra.len() == 13 && extra.is_disjoint(&small) && extra.is_disjoint(&large), || {
        "S must hold 13 sets that are not planes of N".into()
    })?;
    let expected: BTreeSet<Subset> = large.iter().chain(&small).chain(&extra).copied().collect();
    let found: BTreeSet<Subset> = candidates.iter().copied().collect();
    ensure(found == expected, || {
        let missing: Vec<Subset> = expected.difference(&found).copied().collect();
        let unexpected: Vec<Subset> = found.difference(&expected).copied().collect();
        format!("missing [{}], unexpected [{}]", set_list(&missing), set_list(&unexpected))
    })?;
    ensure(found.len() == 52, || format!("{} candidates, expected 52", found.len()))?;
    Ok(format!(
        "52 = {} large planes + {} small planes + {} others",
        large.len(),
        small.len(),
        extra.len()
    ))
}

fn check_crapo_conditions(data: &DataSet) -> Outcome {
    let m = data.m.get()?;
    let n = data.n.get()?;
    let family = BlockFamily::new(n.flats_at(3));
    let report = check_erection_blocks(m, &family);
    if let Some(v) = &report.violation {
        return Err(format!("condition {}: {v}", v.condition()));
    }
    let candidates = census(data)?;
    let triples: BTreeSet<Subset> = data.s.iter().copied().filter(|x| x.len() == 3).collect();
    let listed: BTreeSet<Subset> = BASIS_WITNESSES.iter().map(|(x, _, _)| s(x)).collect();
    ensure(triples == listed, || "three-element members of S differ from the witness table".into())?;
    for &(x, z, b) in BASIS_WITNESSES {
        let (x, z, b) = (s(x), s(z), s(b));
        ensure(candidates.contains(&z), || format!("{z} is not a candidate block"))?;
        ensure(b.is_subset(z) && m.is_basis(b), || format!("{b} is not a basis inside {z}"))?;
        ensure(!b.is_subset(x), || format!("{b} lies in {x}"))?;
        let holders: Vec<Subset> = candidates.iter().copied().filter(|c| b.is_subset(*c)).collect();
        ensure(holders == [z], || format!("{b} lies in [{}]", set_list(&holders)))?;
    }
    for y in data.s.iter().filter(|y| y.len() == 4) {
        ensure(triples.iter().any(|x| x.is_subset(*y)), || {
            format!("{y} contains no three-element member of S")
        })?;
    }
    Ok(format!(
        "{} planes of N pass all three conditions; {} basis witnesses confirmed",
        family.len(),
        BASIS_WITNESSES.len()
    ))
}

fn check_minor_chain(data: &DataSet, budget: SearchBudget) -> Outcome {
    let n = data.n.get()?;
    let fano = data.f7.get()?;
    let non_fano = data.f7_minus.get()?;
    let w = find_minor(n, non_fano, budget)
        .map_err(err_str)?
        .ok_or("no F7- minor in N")?;
    let first_six = Subset::full(6);
    ensure(w.contract.is_empty() && w.delete == first_six, || {
        format!("F7- found by contract {} delete {}, expected delete {first_six}", w.contract, w.delete)
    })?;
    let contracted = n.contract(Subset::singleton(6)).map_err(err_str)?;
    let simple = contracted.then(contracted.matroid.simplify().map_err(err_str)?);
    let classes: Vec<Subset> = CONTRACTION_CLASSES.iter().map(|c| s(c)).collect();
    ensure(simple.origin == classes, || {
        format!("N/6 simplifies to classes [{}]", set_list(&simple.origin))
    })?;
    let lines: BTreeSet<Subset> = simple
        .matroid
        .flats_at_larger_than(2, 2)
        .into_iter()
        .map(|l| simple.lift(l))
        .collect();
    let expected: BTreeSet<Subset> = CONTRACTION_LINES.iter().map(|l| s(l)).collect();
    ensure(lines == expected, || {
        format!("N/6 has lines [{}]", set_list(&lines.iter().copied().collect::<Vec<_>>()))
    })?;
    let w7 = find_minor(n, fano, budget)
        .map_err(err_str)?
        .ok_or("no F7 minor in N")?;
    ensure(w7.replay(n).map_err(err_str)? == *fano, || "F7 witness does not replay".into())?;
    Ok(format!(
        "F7- = N\\{first_six}; N/6 has 8 points, 7 lines; F7 via {w7}"
    ))
}

fn check_obstructions(data: &DataSet, budget: SearchBudget) -> Outcome {
    let cases = [
        ("N", data.n.get()?, Verdict::NoField),
        ("F7", data.f7.get()?, Verdict::Char2Only),
        ("F7-", data.f7_minus.get()?, Verdict::CharNot2Only),
    ];
    let mut parts = Vec::new();
    for (name, m, expected) in cases {
        let verdict = realizability_obstruction(m, budget).map_err(err_str)?.verdict;
        ensure(verdict == expected, || format!("{name}: {verdict}, expected {expected}"))?;
        parts.push(format!("{name} {verdict}"));
    }
    Ok(parts.join(", "))
}

fn check_fano_matrices(data: &DataSet) -> Outcome {
    let fano = data.f7.get()?;
    let non_fano = data.f7_minus.get()?;
    for (name, a, p, target) in [
        ("GF(2)", &data.fano_gf2, 2, fano),
        ("GF(3)", &data.fano_gf3, 3, non_fano),
    ] {
        ensure(a.characteristic() == p, || format!("{name} matrix has characteristic {}", a.characteristic()))?;
        ensure(a.column_matroid() == *target, || format!("column matroid over {name} is wrong"))?;
    }
    Ok("GF(2) gives F7, GF(3) gives F7-".into())
}

fn check_yuzvinsky_pair(data: &DataSet) -> Outcome {
    let m = data.m.get()?;
    let (a1, a2) = (&data.yuzvinsky1, &data.yuzvinsky2);
    ensure(a1.is_formal(), || "A1 is not formal".into())?;
    ensure(!a2.is_formal(), || "A2 is formal".into())?;
    let g = a2.formalization().map_err(err_str)?;
    ensure(g.rank() > 3, || format!("formalization of A2 has rank {}", g.rank()))?;
    let restricted = m
        .delete(Subset::from_elements(9..13))
        .map_err(err_str)?
        .into_matroid();
    let (m1, m2) = (a1.column_matroid(), a2.column_matroid());
    ensure(are_isomorphic(&m1, &m2).is_some(), || "A1 and A2 have different matroids".into())?;
    ensure(are_isomorphic(&m1, &restricted).is_some(), || "A1 is not M\\{9..12}".into())?;
    Ok(format!(
        "A1 formal; A2 not formal, formalization rank {}; both are M\\{{9,10,11,12}}",
        g.rank()
    ))
}

fn check_formality_of_a(data: &DataSet) -> Outcome {
    let report = data.a.formality_report().map_err(err_str)?;
    ensure(report.formal, || "A is not formal".into())?;
    ensure(report.kernel_dim == 10 && report.weight3_dim == 10, || {
        format!("dim ker = {}, dim F = {}", report.kernel_dim, report.weight3_dim)
    })?;
    Ok(format!("formal, dim ker = dim F = {}", report.kernel_dim))
}

fn check_characteristic_polynomial(data: &DataSet) -> Outcome {
    let m = data.m.get()?;
    let chi = characteristic_polynomial(m);
    ensure(splits_over_integers(&chi).is_none(), || format!("{chi} splits over Z"))?;
    ensure(chi.coeff(2) == (-13).into(), || format!("t^2 coefficient of {chi} is not -13"))?;
    ensure(chi.eval(&1.into()) == 0.into(), || format!("{chi} does not vanish at 1"))?;
    Ok(format!("{chi} has no integer factorization"))
}

fn check_property_suites(data: &DataSet, family: &ErectionFamily) -> Outcome {
    let m = data.m.get()?;
    let n = data.n.get()?;
    let mut small: Vec<(String, Matroid)> = vec![
        ("F7".into(), data.f7.get()?.clone()),
        ("F7-".into(), data.f7_minus.get()?.clone()),
        ("A1".into(), data.yuzvinsky1.column_matroid()),
        ("A2".into(), data.yuzvinsky2.column_matroid()),
        ("fano/GF(2)".into(), data.fano_gf2.column_matroid()),
        ("fano/GF(3)".into(), data.fano_gf3.column_matroid()),
    ];
    let restricted = m.delete(Subset::from_elements(9..13)).map_err(err_str)?;
    small.push(("M\\{9..12}".into(), restricted.into_matroid()));
    let contracted = n.contract(Subset::singleton(6)).map_err(err_str)?;
    small.push(("si(N/6)".into(), contracted.matroid.simplify().map_err(err_str)?.into_matroid()));
    let large: Vec<(String, Matroid)> = vec![
        ("M".into(), m.clone()),
        ("N".into(), n.clone()),
        ("M(A)".into(), data.a.column_matroid()),
    ];

    let tag = |name: &str, r: properties::CheckResult| r.map_err(|e| format!("{name}: {e}"));
    let mut cases = 0u64;
    for (name, mat) in &small {
        cases += tag(name, properties::rank_axioms_exhaustive(mat))?;
    }
    for (i, (name, mat)) in large.iter().enumerate() {
        cases += tag(name, properties::rank_axioms_sampled(mat, 20_000, 0x5eed + i as u64))?;
    }
    for (name, mat) in small.iter().chain(&large) {
        cases += tag(name, properties::closure_axioms(mat))?;
        cases += tag(name, properties::basis_exchange(mat))?;
    }
    for e in family.nontrivial() {
        let t = e.matroid.truncation().map_err(err_str)?;
        ensure(t == *m, || "an erection does not truncate back to M".into())?;
        cases += 1;
    }
    for (name, a) in [
        ("A", &data.a),
        ("fano/GF(2)", &data.fano_gf2),
        ("fano/GF(3)", &data.fano_gf3),
        ("A1", &data.yuzvinsky1),
        ("A2", &data.yuzvinsky2),
    ] {
        cases += tag(name, properties::formalization_quotient(a))?;
    }
    let violations = family.antisymmetry_violations();
    ensure(violations.is_empty(), || format!("weak order not antisymmetric at {violations:?}"))?;
    ensure(family.maximum().is_some(), || "no maximum erection".into())?;
    Ok(format!(
        "{} small + {} large matroids, 5 matrices, {} erections; {cases} cases",
        small.len(),
        large.len(),
        family.len()
    ))
}

/// Runs every check in order. A check that exceeds its time limit fails.
pub fn run(data: &DataSet, budget: SearchBudget) -> ReproReport {
    // computed inside the first check that needs it, so its time is counted there
    let cell = OnceCell::new();
    let family = || {
        cell.get_or_init(|| {
            data.m
                .get()
                .and_then(|m| enumerate_erections(m, budget).map_err(err_str))
        })
        .clone()
    };
    let checks: Vec<(&'static str, u64, CheckFn<'_>)> = vec![
        ("m-well-formed", 1, Box::new(|| check_m_well_formed(data))),
        ("realization", 1, Box::new(|| check_realization(data))),
        ("erections", 60, Box::new(|| check_erections(data, &family()?))),
        ("candidate-census", 10, Box::new(|| check_candidate_census(data))),
        ("crapo-conditions", 5, Box::new(|| check_crapo_conditions(data))),
        ("minor-chain", 30, Box::new(|| check_minor_chain(data, budget))),
        ("obstructions", 30, Box::new(|| check_obstructions(data, budget))),
        ("fano-matrices", 1, Box::new(|| check_fano_matrices(data))),
        ("yuzvinsky-pair", 5, Box::new(|| check_yuzvinsky_pair(data))),
        ("formality-of-a", 5, Box::new(|| check_formality_of_a(data))),
        ("characteristic-polynomial", 5, Box::new(|| check_characteristic_polynomial(data))),
        ("property-suites", 60, Box::new(|| check_property_suites(data, &family()?))),
    ];
    let checks = checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, limit_secs, f))| {
            let start = Instant::now();
            let outcome = f();
            let elapsed = start.elapsed();
            let (mut passed, mut detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            if elapsed > Duration::from_secs(limit_secs) {
                passed = false;
                detail = format!("{detail} (over the {limit_secs}s limit)");
            }
            Check {
                id: i + 1,
                name,
                passed,
                detail,
                limit_secs,
                elapsed,
            }
        })
        .collect();
    ReproReport { checks }
}

/// Loads `dir` (or the bundled copies) and runs the report.
pub fn reproduce(dir: Option<&Path>, budget: SearchBudget) -> Result<ReproReport> {
    let data = match dir {
        Some(d) => DataSet::load(d)?,
        None => DataSet::bundled()?,
    };
    Ok(run(&data, budget))
}
