use std::collections::BTreeSet;

use proptest::prelude::*;

use matroid_forge::arrangement::{column_matroid, kernel_basis, weight3_subspace};
use matroid_forge::erection::{check_erection_blocks, enumerate_erections};
use matroid_forge::exact_cover::ExactCover;
use matroid_forge::field::{Field, PrimeField, Rationals};
use matroid_forge::format::{parse_matrix, parse_matroid, serialize_matrix, serialize_matroid};
use matroid_forge::linalg::Matrix;
use matroid_forge::minor::find_minor;
use matroid_forge::polynomial::characteristic_polynomial;
use matroid_forge::subset::binomial;
use matroid_forge::{are_isomorphic, properties, ExactMatrix, Matroid, PointedMap, SearchBudget, Subset};

fn int_rows(rows: &[Vec<i64>]) -> Vec<&[i64]> {
    rows.iter().map(|r| r.as_slice()).collect()
}

/// Small integer matrices, 1..=4 rows and 2..=8 columns.
fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 2usize..=8).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
    })
}

fn rational(rows: &[Vec<i64>]) -> Matrix<Rationals> {
    Matrix::from_int_rows(Rationals, &int_rows(rows)).unwrap()
}

fn matroid_from(rows: &[Vec<i64>], p: Option<u64>) -> Matroid {
    match p {
        None => column_matroid(&rational(rows)),
        Some(p) => {
            column_matroid(&Matrix::from_int_rows(PrimeField::new(p).unwrap(), &int_rows(rows)).unwrap())
        }
    }
}

/// Column matroids over Q, GF(2) or GF(3).
fn matroid() -> impl Strategy<Value = Matroid> {
    (int_matrix(), prop_oneof![Just(None), Just(Some(2)), Just(Some(3))])
        .prop_map(|(rows, p)| matroid_from(&rows, p))
}

fn simple_matroid() -> impl Strategy<Value = Matroid> {
    matroid()
        .prop_filter("needs a nonloop", |m| m.rank() > 0)
        .prop_map(|m| m.simplify().unwrap().into_matroid())
}

fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0u64..1 << n).map(Subset::from_bits)
}

/// Independent sets from the basis list alone.
fn independent_by_bases(m: &Matroid, x: Subset) -> bool {
    m.bases().iter().any(|b| x.is_subset(*b))
}

/// Circuits: minimal dependent sets, from the basis list alone.
fn circuits(m: &Matroid) -> Vec<Subset> {
    all_subsets(m.ground_size())
        .filter(|&c| !independent_by_bases(m, c))
        .filter(|&c| c.iter().all(|e| independent_by_bases(m, c.without(e))))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_and_closure_axioms(m in matroid()) {
        prop_assert!(properties::rank_axioms_exhaustive(&m).is_ok());
        prop_assert!(properties::closure_axioms(&m).is_ok());
        prop_assert!(properties::basis_exchange(&m).is_ok());
    }

    #[test]
    fn rank_matches_bases(m in matroid()) {
        for x in all_subsets(m.ground_size()) {
            prop_assert_eq!(m.is_independent(x), independent_by_bases(&m, x));
            let best = m.bases().iter().map(|b| (*b & x).len()).max().unwrap();
            prop_assert_eq!(m.rank_of(x), best);
        }
    }

    #[test]
    fn flats_meet_in_flats(m in matroid()) {
        let flats: Vec<Subset> = (0..=m.rank()).flat_map(|k| m.flats_at(k)).collect();
        for &a in &flats {
            prop_assert_eq!(m.closure(a), a);
            for &b in &flats {
                prop_assert!(m.is_flat(a & b));
            }
        }
        prop_assert_eq!(m.flats_at(m.rank()), vec![m.ground()]);
        prop_assert_eq!(m.flats_at(0), vec![m.loops()]);
    }

    #[test]
    fn delete_and_contract_commute(m in matroid(), split in any::<u64>(), pick in any::<u64>()) {
        let ground = m.ground().bits();
        let x = Subset::from_bits(split & pick & ground);
        let y = Subset::from_bits(split & !pick & ground);
        prop_assume!((x | y) != m.ground());
        let d = m.delete(x).unwrap();
        let dc = d.then(d.matroid.contract(d_index(&d, y)).unwrap());
        let c = m.contract(y).unwrap();
        let cd = c.then(c.matroid.delete(d_index(&c, x)).unwrap());
        prop_assert_eq!(&dc.matroid, &cd.matroid);
        prop_assert_eq!(dc.origin, cd.origin);
    }

    #[test]
    fn contraction_matches_circuits(m in matroid(), pick in any::<u64>()) {
        let y = Subset::from_bits(pick & m.ground().bits());
        prop_assume!(y != m.ground());
        let c = m.contract(y).unwrap();
        // circuits of M/Y are the minimal nonempty sets C - Y
        let shadows: BTreeSet<Subset> = circuits(&m)
            .into_iter()
            .map(|c| c - y)
            .filter(|s| !s.is_empty())
            .collect();
        let minimal: Vec<Subset> = shadows
            .iter()
            .copied()
            .filter(|s| !shadows.iter().any(|t| t != s && t.is_subset(*s)))
            .collect();
        for i in all_subsets(c.matroid.ground_size()) {
            let host = c.lift(i);
            let oracle = !minimal.iter().any(|s| s.is_subset(host));
            prop_assert_eq!(c.matroid.is_independent(i), oracle);
        }
    }

    #[test]
    fn flats_round_trip(m in simple_matroid()) {
        prop_assume!(m.rank() >= 1);
        let flats = m.nontrivial_flats();
        let rebuilt = Matroid::from_flats(m.ground_size(), m.rank(), &flats).unwrap();
        prop_assert_eq!(&rebuilt, &m);
        prop_assert_eq!(rebuilt.nontrivial_flats(), flats);
    }

    #[test]
    fn matroid_text_round_trip(m in matroid()) {
        prop_assume!(m.rank() > 0);
        let text = serialize_matroid(&m);
        let parsed = parse_matroid(&text).unwrap();
        prop_assert_eq!(&parsed, &m);
        prop_assert_eq!(serialize_matroid(&parsed), text);
    }

    #[test]
    fn matrix_text_round_trip(rows in int_matrix(), p in prop_oneof![Just(None), Just(Some(5u64))]) {
        let a = match p {
            None => ExactMatrix::Rational(rational(&rows)),
            Some(p) => ExactMatrix::Prime(
                Matrix::from_int_rows(PrimeField::new(p).unwrap(), &int_rows(&rows)).unwrap(),
            ),
        };
        let text = serialize_matrix(&a);
        let parsed = parse_matrix(&text).unwrap();
        prop_assert_eq!(&parsed, &a);
        prop_assert_eq!(serialize_matrix(&parsed), text);
    }

    #[test]
    fn column_matroid_ignores_scaling_and_row_operations(
        rows in int_matrix(),
        scales in proptest::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 8),
        c in -3i64..=3,
        from in 0usize..4,
        to in 0usize..4,
    ) {
        let before = matroid_from(&rows, None);
        let mut changed = rows.clone();
        for row in changed.iter_mut() {
            for (j, v) in row.iter_mut().enumerate() {
                *v *= scales[j];
            }
        }
        let (from, to) = (from % rows.len(), to % rows.len());
        if from != to {
            let source = changed[from].clone();
            for (v, s) in changed[to].iter_mut().zip(source) {
                *v += c * s;
            }
        }
        prop_assert_eq!(matroid_from(&changed, None), before);
    }

    #[test]
    fn weight3_relations_lie_in_kernel(rows in int_matrix()) {
        let a = rational(&rows);
        let w = weight3_subspace(&a);
        let k = kernel_basis(&a);
        prop_assert!(w.is_subspace_of(&k));
        for v in w.basis() {
            prop_assert!(a.mul_vec(v).iter().all(|x| a.field().is_zero(x)));
        }
    }

    #[test]
    fn formal_iff_formalization_keeps_rank(rows in int_matrix()) {
        let a = ExactMatrix::Rational(rational(&rows));
        prop_assume!(a.zero_columns().is_empty());
        prop_assert!(properties::formalization_quotient(&a).is_ok());
        let g = a.formalization().unwrap();
        prop_assert!(g.rank() >= a.rank());
        prop_assert_eq!(a.is_formal(), g.rank() == a.rank());
    }

    #[test]
    fn truncation_lowers_rank_and_keeps_low_flats(m in matroid()) {
        prop_assume!(m.rank() >= 2);
        let t = m.truncation().unwrap();
        prop_assert_eq!(t.rank(), m.rank() - 1);
        let expected: Vec<Subset> = m
            .ground()
            .k_subsets(m.rank() - 1)
            .filter(|&s| m.is_independent(s))
            .collect();
        prop_assert_eq!(t.bases(), expected.as_slice());
        for k in 0..t.rank() {
            prop_assert_eq!(t.flats_at(k), m.flats_at(k));
        }
        prop_assert!(t.is_quotient_of(&m).unwrap());
    }

    #[test]
    fn relabeling_is_found_again(m in matroid(), seed in any::<u64>()) {
        let n = m.ground_size();
        let mut images: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            images.swap(i, (s >> 33) as usize % (i + 1));
        }
        let map = PointedMap::new(images).unwrap();
        let other = m.relabel(&map).unwrap();
        let iso = are_isomorphic(&m, &other).expect("relabeled copy is isomorphic");
        prop_assert_eq!(m.relabel(&iso).unwrap(), other);
    }

    #[test]
    fn characteristic_polynomial_matches_whitney(m in matroid()) {
        let chi = characteristic_polynomial(&m);
        let r = m.rank();
        let mut whitney = vec![0i64; r + 1];
        for x in all_subsets(m.ground_size()) {
            whitney[r - m.rank_of(x)] += if x.len() % 2 == 0 { 1 } else { -1 };
        }
        for (i, w) in whitney.iter().enumerate() {
            prop_assert_eq!(chi.coeff(i), (*w).into());
        }
        if m.loops().is_empty() && r > 0 {
            prop_assert_eq!(chi.eval(&1.into()), 0.into());
        }
    }

    #[test]
    fn erections_truncate_back(m in simple_matroid()) {
        prop_assume!(m.rank() >= 2 && m.ground_size() <= 7);
        let family = enumerate_erections(&m, SearchBudget::default()).unwrap();
        prop_assert_eq!(&family.erections()[0].matroid, &m);
        for e in family.nontrivial() {
            prop_assert_eq!(&e.matroid.truncation().unwrap(), &m);
            prop_assert!(check_erection_blocks(&m, &e.blocks).passes());
            for b in m.bases() {
                let holders = e.blocks.blocks().iter().filter(|k| b.is_subset(**k)).count();
                prop_assert_eq!(holders, 1);
            }
        }
        prop_assert!(family.antisymmetry_violations().is_empty());
        let top = family.maximum().expect("free erection");
        for i in 0..family.len() {
            prop_assert!(family.weak_order()[i][top]);
        }
    }

    #[test]
    fn minors_are_found(m in matroid(), split in any::<u64>(), pick in any::<u64>()) {
        let ground = m.ground().bits();
        let x = Subset::from_bits(split & pick & ground);
        let y = Subset::from_bits(split & !pick & ground);
        prop_assume!((x | y) != m.ground());
        let d = m.delete(x).unwrap();
        let dc = d.matroid.contract(d_index(&d, y)).unwrap().into_matroid();
        prop_assume!(dc.rank() > 0);
        let target = dc.simplify().unwrap().into_matroid();
        let w = find_minor(&m, &target, SearchBudget::default()).unwrap().expect("a minor by construction");
        prop_assert_eq!(w.replay(&m).unwrap(), target);
    }

    #[test]
    fn exact_cover_matches_brute_force(
        options in proptest::collection::vec(proptest::collection::btree_set(0usize..6, 1..4), 1..10),
    ) {
        let options: Vec<Vec<usize>> = options.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut found = ExactCover::new(6, options.clone()).solve_all(1_000_000).unwrap();
        found.sort();
        let mut brute = Vec::new();
        for mask in 0u32..1 << options.len() {
            let mut count = [0; 6];
            let chosen: Vec<usize> = (0..options.len()).filter(|i| mask >> i & 1 == 1).collect();
            for &o in &chosen {
                for &i in &options[o] {
                    count[i] += 1;
                }
            }
            if count.iter().all(|&c| c == 1) {
                brute.push(chosen);
            }
        }
        brute.sort();
        prop_assert_eq!(found, brute);
    }

    #[test]
    fn k_subsets_are_counted_and_ordered(n in 0usize..12, k in 0usize..12) {
        let all: Vec<Subset> = Subset::full(n).k_subsets(k).collect();
        prop_assert_eq!(all.len() as u64, binomial(n, k));
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(all.iter().all(|s| s.len() == k));
    }
}

/// Host labels `set` in the derived ground set of `r`.
fn d_index(r: &matroid_forge::Reindexed, set: Subset) -> Subset {
    r.origin
        .iter()
        .enumerate()
        .filter(|(_, o)| o.is_subset(set))
        .map(|(i, _)| i)
        .collect()
}
