//! Text formats for matroids, matrices and set lists.
//!
//! All formats are line based, UTF-8, with `#` starting a comment that runs
//! to the end of the line. Blank lines are ignored.
//!
//! Matroid files:
//!
//! ```text
//! n 7
//! rank 3
//! flat 2 0 1 5      # a rank-2 flat with more than 2 elements
//! ```
//!
//! or, for matroids given by bases, `basis e1 e2 ...` lines instead of
//! `flat` lines. Only nontrivial flats (rank `k`, more than `k` elements)
//! may be listed.
//!
//! Matrix files:
//!
//! ```text
//! field Q           # or: field GF 3
//! rows 3
//! cols 4
//! 1 0 0 1/2
//! 0 1 0 -1
//! 0 0 1 3
//! ```
//!
//! Set lists hold one `set e1 e2 ...` line per set.

use std::fmt::Write as _;

use crate::arrangement::ExactMatrix;
use crate::error::{Error, Result};
use crate::field::{parse_ratio, Field, PrimeField, Rationals};
use crate::linalg::Matrix;
use crate::matroid::Matroid;
use crate::subset::{Subset, MAX_ELEMENTS};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_usize(line: usize, token: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::format(line, format!("expected a non-negative integer, got `{token}`")))
}

fn parse_elements(line: usize, tokens: &[&str]) -> Result<Subset> {
    let mut set = Subset::EMPTY;
    for t in tokens {
        let e = parse_usize(line, t)?;
        if e >= MAX_ELEMENTS {
            return Err(Error::format(line, format!("element {e} out of range")));
        }
        if set.contains(e) {
            return Err(Error::format(line, format!("element {e} repeated")));
        }
        set.insert(e);
    }
    Ok(set)
}

fn set_once(slot: &mut Option<usize>, line: usize, key: &str, value: usize) -> Result<()> {
    if slot.replace(value).is_some() {
        return Err(Error::format(line, format!("`{key}` given twice")));
    }
    Ok(())
}

/// The directives of a matroid file, syntax-checked but not yet validated
/// as a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidFile {
    pub n: usize,
    pub rank: Option<usize>,
    /// `(rank, flat)` in file order.
    pub flats: Vec<(usize, Subset)>,
    pub bases: Vec<Subset>,
}

impl MatroidFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut rank = None;
        let mut flats: Vec<(usize, usize, Subset)> = Vec::new();
        let mut bases: Vec<(usize, Subset)> = Vec::new();
        let mut last_line = 0;
        for (line, tokens) in content_lines(text) {
            last_line = line;
            match tokens[0] {
                "n" | "rank" if tokens.len() == 2 => {
                    let v = parse_usize(line, tokens[1])?;
                    let slot = if tokens[0] == "n" { &mut n } else { &mut rank };
                    set_once(slot, line, tokens[0], v)?;
                }
                "flat" if tokens.len() >= 2 => {
                    let k = parse_usize(line, tokens[1])?;
                    let f = parse_elements(line, &tokens[2..])?;
                    if f.len() <= k {
                        return Err(Error::format(
                            line,
                            format!("flat {f} of rank {k} is trivial; list only flats with more than {k} elements"),
                        ));
                    }
                    flats.push((line, k, f));
                }
                "basis" => bases.push((line, parse_elements(line, &tokens[1..])?)),
                other => {
                    return Err(Error::format(line, format!("unrecognized directive `{other}`")));
                }
            }
        }
        let n = n.ok_or_else(|| Error::format(last_line, "missing `n`"))?;
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::format(last_line, format!("n = {n} outside 1..={MAX_ELEMENTS}")));
        }
        let ground = Subset::full(n);
        for &(line, _, f) in &flats {
            if !f.is_subset(ground) {
                return Err(Error::format(line, format!("flat {f} leaves the ground set 0..{n}")));
            }
        }
        for &(line, b) in &bases {
            if !b.is_subset(ground) {
                return Err(Error::format(line, format!("basis {b} leaves the ground set 0..{n}")));
            }
        }
        if let (Some((line, _, _)), false) = (flats.first(), bases.is_empty()) {
            return Err(Error::format(*line, "`flat` and `basis` lines cannot be mixed"));
        }
        if bases.is_empty() && rank.is_none() {
            return Err(Error::format(last_line, "missing `rank`"));
        }
        Ok(MatroidFile {
            n,
            rank,
            flats: flats.into_iter().map(|(_, k, f)| (k, f)).collect(),
            bases: bases.into_iter().map(|(_, b)| b).collect(),
        })
    }

    /// Validates the directives and builds the matroid.
    pub fn to_matroid(&self) -> Result<Matroid> {
        if !self.bases.is_empty() {
            let m = Matroid::from_bases(self.n, self.bases.iter().copied())?;
            if let Some(r) = self.rank.filter(|&r| r != m.rank()) {
                return Err(Error::validation(format!(
                    "declared rank {r} but bases have size {}",
                    m.rank()
                )));
            }
            return Ok(m);
        }
        let rank = self.rank.expect("checked by parse");
        Matroid::from_flats(self.n, rank, &self.flats)
    }

    /// Listed flats of rank `k`.
    pub fn flats_of_rank(&self, k: usize) -> Vec<Subset> {
        self.flats.iter().filter(|(r, _)| *r == k).map(|&(_, f)| f).collect()
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    MatroidFile::parse(text)?.to_matroid()
}

/// Canonical text: nontrivial flats for simple matroids, bases otherwise.
pub fn serialize_matroid(m: &Matroid) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", m.ground_size()).unwrap();
    writeln!(out, "rank {}", m.rank()).unwrap();
    let elements = |s: Subset| s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
    if m.is_simple() && m.rank() > 0 {
        for (k, f) in m.nontrivial_flats() {
            writeln!(out, "flat {k} {}", elements(f)).unwrap();
        }
    } else {
        for &b in m.bases() {
            let body = elements(b);
            if body.is_empty() {
                writeln!(out, "basis").unwrap();
            } else {
                writeln!(out, "basis {body}").unwrap();
            }
        }
    }
    out
}

fn parse_entries<F: Field>(
    field: &F,
    rows: &[(usize, Vec<&str>)],
    cols: usize,
) -> Result<Vec<F::Elem>> {
    let mut data = Vec::with_capacity(rows.len() * cols);
    for (line, tokens) in rows {
        if tokens.len() != cols {
            return Err(Error::format(
                *line,
                format!("expected {cols} entries, found {}", tokens.len()),
            ));
        }
        for t in tokens {
            let (num, den) = parse_ratio(t)
                .ok_or_else(|| Error::format(*line, format!("bad entry `{t}`")))?;
            let value = field
                .ratio(&num, &den)
                .ok_or_else(|| Error::format(*line, format!("entry `{t}` has a vanishing denominator")))?;
            data.push(value);
        }
    }
    Ok(data)
}

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    enum Kind {
        Q,
        Gf(PrimeField),
    }
    let mut kind = None;
    let mut rows = None;
    let mut cols = None;
    let mut body: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        match tokens.as_slice() {
            ["field", "Q"] => kind = Some(Kind::Q),
            ["field", "GF", p] => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::format(line, format!("bad characteristic `{p}`")))?;
                let f = PrimeField::new(p)
                    .ok_or_else(|| Error::format(line, format!("GF {p}: not a prime below 2^31")))?;
                kind = Some(Kind::Gf(f));
            }
            ["field", ..] => return Err(Error::format(line, "expected `field Q` or `field GF <p>`")),
            ["rows", v] => set_once(&mut rows, line, "rows", parse_usize(line, v)?)?,
            ["cols", v] => set_once(&mut cols, line, "cols", parse_usize(line, v)?)?,
            _ => {
                if kind.is_none() || rows.is_none() || cols.is_none() {
                    return Err(Error::format(line, "entries before the `field`, `rows` and `cols` header"));
                }
                body.push((line, tokens));
            }
        }
    }
    let kind = kind.ok_or_else(|| Error::format(last_line, "missing `field`"))?;
    let rows = rows.ok_or_else(|| Error::format(last_line, "missing `rows`"))?;
    let cols = cols.ok_or_else(|| Error::format(last_line, "missing `cols`"))?;
    if body.len() != rows {
        return Err(Error::format(last_line, format!("expected {rows} rows, found {}", body.len())));
    }
    if cols > MAX_ELEMENTS {
        return Err(Error::format(last_line, format!("at most {MAX_ELEMENTS} columns supported")));
    }
    Ok(match kind {
        Kind::Q => ExactMatrix::Rational(Matrix::new(Rationals, rows, cols, parse_entries(&Rationals, &body, cols)?)?),
        Kind::Gf(f) => ExactMatrix::Prime(Matrix::new(f, rows, cols, parse_entries(&f, &body, cols)?)?),
    })
}

pub fn serialize_matrix(m: &ExactMatrix) -> String {
    let mut out = String::new();
    match m.characteristic() {
        0 => writeln!(out, "field Q").unwrap(),
        p => writeln!(out, "field GF {p}").unwrap(),
    }
    writeln!(out, "rows {}", m.rows()).unwrap();
    writeln!(out, "cols {}", m.cols()).unwrap();
    for row in m.render_rows() {
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// Sets listed as `set e1 e2 ...`, in file order.
pub fn parse_set_list(text: &str) -> Result<Vec<Subset>> {
    content_lines(text)
        .map(|(line, tokens)| match tokens[0] {
            "set" => parse_elements(line, &tokens[1..]),
            other => Err(Error::format(line, format!("unrecognized directive `{other}`"))),
        })
        .collect()
}

pub fn serialize_set_list(sets: &[Subset]) -> String {
    sets.iter()
        .map(|s| {
            let body: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            format!("set {}\n", body.join(" "))
        })
        .collect()
}
