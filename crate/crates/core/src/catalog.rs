//! Bundled matroids, matrices and set lists.
//!
//! The text of every file under `data/` is compiled in, so the library can
//! build these objects without touching the filesystem.

use crate::arrangement::ExactMatrix;
use crate::format::{parse_matrix, parse_matroid, parse_set_list};
use crate::matroid::Matroid;
use crate::subset::Subset;

pub const M_MATROID: &str = include_str!("../data/M.matroid");
pub const N_MATROID: &str = include_str!("../data/N.matroid");
pub const N_PLANES3_SETS: &str = include_str!("../data/N.planes3.sets");
pub const S_SETS: &str = include_str!("../data/S.sets");
pub const F7_MATROID: &str = include_str!("../data/F7.matroid");
pub const F7_MINUS_MATROID: &str = include_str!("../data/F7minus.matroid");
pub const A_MATRIX: &str = include_str!("../data/A.matrix");
pub const FANO_GF2_MATRIX: &str = include_str!("../data/fano.gf2.matrix");
pub const FANO_GF3_MATRIX: &str = include_str!("../data/fano.gf3.matrix");
pub const YUZVINSKY1_MATRIX: &str = include_str!("../data/yuzvinsky1.matrix");
pub const YUZVINSKY2_MATRIX: &str = include_str!("../data/yuzvinsky2.matrix");

/// `(file name, contents)` for every bundled file.
pub const FILES: &[(&str, &str)] = &[
    ("M.matroid", M_MATROID),
    ("N.matroid", N_MATROID),
    ("N.planes3.sets", N_PLANES3_SETS),
    ("S.sets", S_SETS),
    ("F7.matroid", F7_MATROID),
    ("F7minus.matroid", F7_MINUS_MATROID),
    ("A.matrix", A_MATRIX),
    ("fano.gf2.matrix", FANO_GF2_MATRIX),
    ("fano.gf3.matrix", FANO_GF3_MATRIX),
    ("yuzvinsky1.matrix", YUZVINSKY1_MATRIX),
    ("yuzvinsky2.matrix", YUZVINSKY2_MATRIX),
];

fn matroid(name: &str, text: &str) -> Matroid {
    parse_matroid(text).unwrap_or_else(|e| panic!("bundled {name} is invalid: {e}"))
}

fn matrix(name: &str, text: &str) -> ExactMatrix {
    parse_matrix(text).unwrap_or_else(|e| panic!("bundled {name} is invalid: {e}"))
}

/// The 13-point rank-3 matroid with 15 three-point lines.
pub fn matroid_m() -> Matroid {
    matroid("M.matroid", M_MATROID)
}

/// Its rank-4 erection.
pub fn matroid_n() -> Matroid {
    matroid("N.matroid", N_MATROID)
}

/// The Fano plane `F7`.
pub fn fano() -> Matroid {
    matroid("F7.matroid", F7_MATROID)
}

/// The non-Fano matroid `F7⁻`.
pub fn non_fano() -> Matroid {
    matroid("F7minus.matroid", F7_MINUS_MATROID)
}

/// Three-element rank-3 flats of `N`.
pub fn n_planes3() -> Vec<Subset> {
    parse_set_list(N_PLANES3_SETS).expect("bundled set list")
}

/// Spanning 2-closed proper subsets of `M` that are not flats of `N`.
pub fn s_sets() -> Vec<Subset> {
    parse_set_list(S_SETS).expect("bundled set list")
}

pub fn matrix_a() -> ExactMatrix {
    matrix("A.matrix", A_MATRIX)
}

pub fn fano_gf2() -> ExactMatrix {
    matrix("fano.gf2.matrix", FANO_GF2_MATRIX)
}

pub fn fano_gf3() -> ExactMatrix {
    matrix("fano.gf3.matrix", FANO_GF3_MATRIX)
}

pub fn yuzvinsky1() -> ExactMatrix {
    matrix("yuzvinsky1.matrix", YUZVINSKY1_MATRIX)
}

pub fn yuzvinsky2() -> ExactMatrix {
    matrix("yuzvinsky2.matrix", YUZVINSKY2_MATRIX)
}
