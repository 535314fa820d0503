#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qlat::exact::{Dyadic, DyadicMatrix, DyadicVector, IntMatrix};
use qlat::lattice::Lattice;
use qlat::perm::{schreier_sims, schreier_sims_with_base, Permutation};
use qlat::quaternion::HurwitzQuaternion;

pub const CASES: u32 = 128;

pub fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn dyadic_matrix(rows: usize, cols: usize) -> impl Strategy<Value = DyadicMatrix> {
    (prop::collection::vec(-4i64..=4, rows * cols), 0u32..3).prop_map(move |(v, exp)| {
        DyadicMatrix::from_scaled(rows, cols, v.into_iter().map(BigInt::from).collect(), exp).unwrap()
    })
}

pub fn kron_quadruple() -> impl Strategy<Value = (DyadicMatrix, DyadicMatrix, DyadicMatrix, DyadicMatrix)> {
    (1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(m, n, p, q, r, s)| {
        (dyadic_matrix(m, n), dyadic_matrix(p, q), dyadic_matrix(n, r), dyadic_matrix(q, s))
    })
}

pub fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..6, 1usize..5).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(-9i64..=9, rows * cols).prop_map(move |v| {
            IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

pub fn hurwitz() -> impl Strategy<Value = HurwitzQuaternion> {
    (prop::array::uniform4(-3i64..=3), any::<bool>()).prop_map(|(c, odd)| {
        let d = c.map(|x| 2 * x + odd as i64);
        HurwitzQuaternion::from_doubled(d).unwrap()
    })
}

/// A full-rank basis of dimension 1..=4 with small dyadic entries, kept to
/// those whose exhaustive-search box has at most `MAX_BOX` points.
pub fn small_basis() -> impl Strategy<Value = DyadicMatrix> {
    (1usize..=4)
        .prop_flat_map(|n| dyadic_matrix(n, n))
        .prop_filter("full rank with a small search box", |b| {
            !b.determinant().unwrap().is_zero() && box_size(&coefficient_bounds(b)) <= MAX_BOX
        })
}

pub const MAX_BOX: u64 = 50_000;

fn box_size(bounds: &[i64]) -> u64 {
    bounds.iter().map(|&b| 2 * b as u64 + 1).product()
}

/// `|x_i| <= sqrt(R * (G^-1)_ii)` for every coefficient vector of norm at
/// most `R`, the smallest diagonal Gram entry; the inverse diagonal is a
/// ratio of exact determinants.
pub fn coefficient_bounds(basis: &DyadicMatrix) -> Vec<i64> {
    let n = basis.rows();
    let gram = basis * &basis.transpose();
    let radius = (0..n).map(|i| gram.get(i, i)).min().unwrap().to_f64();
    let det = gram.determinant().unwrap().to_f64();
    (0..n)
        .map(|i| {
            let minor = if n == 1 {
                1.0
            } else {
                let idx: Vec<usize> = (0..n).filter(|&k| k != i).collect();
                let vals: Vec<Dyadic> =
                    idx.iter().flat_map(|&r| idx.iter().map(move |&c| (r, c))).map(|(r, c)| gram.get(r, c)).collect();
                DyadicMatrix::from_dyadics(n - 1, n - 1, &vals).unwrap().determinant().unwrap().to_f64()
            };
            (radius * minor / det).sqrt().floor() as i64 + 1
        })
        .collect()
}

/// All nonzero vectors of minimal norm, by exhaustive search over a
/// coefficient box that provably contains them.
pub fn brute_force_shell(basis: &DyadicMatrix) -> (Dyadic, Vec<DyadicVector>) {
    let n = basis.rows();
    let bounds = coefficient_bounds(basis);
    let mut best: Option<Dyadic> = None;
    let mut found = Vec::new();
    let mut x = bounds.iter().map(|b| -b).collect::<Vec<i64>>();
    loop {
        if x.iter().any(|&c| c != 0) {
            let mut v = DyadicVector::zero(n);
            for (i, &c) in x.iter().enumerate() {
                v = v.add(&basis.row(i).scale(&Dyadic::from(c)));
            }
            let norm = v.norm();
            match &best {
                Some(b) if &norm > b => {}
                Some(b) if &norm == b => found.push(v),
                _ => {
                    best = Some(norm);
                    found = vec![v];
                }
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                found.sort();
                return (best.unwrap(), found);
            }
            if x[k] < bounds[k] {
                x[k] += 1;
                break;
            }
            x[k] = -bounds[k];
            k += 1;
        }
    }
}

pub fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Generators of degree 3..=8 together with three base prefixes.
pub fn permutation_group() -> impl Strategy<Value = (Vec<Permutation>, Vec<Vec<u32>>)> {
    (3usize..=8).prop_flat_map(|d| {
        let prefix = Just((0..d as u32).collect::<Vec<u32>>()).prop_shuffle().prop_flat_map(move |p| {
            (0..=d.min(3)).prop_map(move |k| p[..k].to_vec())
        });
        (prop::collection::vec(permutation(d), 1..4), prop::collection::vec(prefix, 3))
    })
}

/// Closure by breadth-first search over explicit elements.
pub fn brute_force_order(gens: &[Permutation]) -> usize {
    let degree = gens[0].degree();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = g.compose(s);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen.len()
}

pub fn prop_kron_mixed_product(
    (a, b, c, d): (DyadicMatrix, DyadicMatrix, DyadicMatrix, DyadicMatrix),
) -> Result<(), TestCaseError> {
    let lhs = &a.kron(&b) * &c.kron(&d);
    let rhs = (&a * &c).kron(&(&b * &d));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn prop_hnf_idempotent_and_span_preserving(m: IntMatrix) -> Result<(), TestCaseError> {
    let h = m.hnf();
    prop_assert_eq!(&h.hnf(), &h);
    for r in 0..m.rows() {
        prop_assert!(h.solve_echelon(m.row(r)).is_some());
    }
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    rows.extend((0..h.rows()).map(|r| h.row(r).to_vec()));
    prop_assert_eq!(&IntMatrix::from_big_rows(rows, m.cols()).unwrap().hnf(), &h);
    let pivots = h.pivot_columns();
    for (r, &p) in pivots.iter().enumerate() {
        prop_assert!(h.get(r, p) > &BigInt::from(0));
        for above in 0..r {
            prop_assert!(h.get(above, p) >= &BigInt::from(0) && h.get(above, p) < h.get(r, p));
        }
    }
    prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
    Ok(())
}

pub fn prop_quaternion_laws((a, b, c): (HurwitzQuaternion, HurwitzQuaternion, HurwitzQuaternion)) -> Result<(), TestCaseError> {
    prop_assert_eq!((a * b) * c, a * (b * c));
    prop_assert_eq!((a * b).norm(), a.norm() * b.norm());
    prop_assert_eq!((a * b).conj(), b.conj() * a.conj());
    Ok(())
}

pub fn prop_shell_matches_oracle(basis: DyadicMatrix) -> Result<(), TestCaseError> {
    let lattice = Lattice::new(basis.clone()).unwrap();
    let shell = lattice.shortest_vectors();
    let (norm, vectors) = brute_force_shell(&basis);
    prop_assert_eq!(&shell.norm, &norm);
    prop_assert_eq!(&shell.vectors, &vectors);
    prop_assert!(shell.count().is_multiple_of(2) && shell.is_negation_closed());
    Ok(())
}

pub fn prop_bsgs_base_invariance((gens, prefixes): (Vec<Permutation>, Vec<Vec<u32>>)) -> Result<(), TestCaseError> {
    let reference = schreier_sims(&gens).unwrap();
    prop_assert!(reference.verify());
    prop_assert_eq!(reference.order(), brute_force_order(&gens).into());
    for prefix in &prefixes {
        let b = schreier_sims_with_base(&gens, prefix).unwrap();
        prop_assert_eq!(b.order(), reference.order());
        prop_assert!(b.verify());
    }
    let mut reversed = gens.clone();
    reversed.reverse();
    prop_assert_eq!(schreier_sims(&reversed).unwrap().order(), reference.order());
    for g in &gens {
        prop_assert!(reference.contains(g));
    }
    Ok(())
}

/// Runs a property for `CASES` cases; returns the failure message if any.
pub fn run_property<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    let mut runner = TestRunner::new(config());
    runner.run(&strategy, test).map(|_| CASES).map_err(|e| e.to_string())
}
