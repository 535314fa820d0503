//! Structural invariants and frozen oracle values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qlat::exact::{DyadicMatrix, DyadicVector};
use qlat::group::{FiniteMatrixGroup, PURE_TENSOR_CAP, WEYL_F4_CAP};
use qlat::lattice::bw16_lattice;
use qlat::perm::{action_on_short_vectors, schreier_sims, Permutation};
use qlat::report::{group_generators, Context};
use qlat::tensor::fact1_generators;

fn fact1_matrices() -> Vec<DyadicMatrix> {
    fact1_generators().unwrap().into_iter().map(|g| g.matrix).collect()
}

#[test]
fn pure_tensor_group_has_central_minus_identity() {
    let gens = group_generators("pure512").unwrap();
    let minus = DyadicMatrix::identity(16).neg();
    assert_eq!(gens.len(), 8);
    for g in &gens {
        assert_eq!(&(g * g), &minus);
    }
    let g = FiniteMatrixGroup::closure(&gens, PURE_TENSOR_CAP).unwrap();
    assert!(g.contains(&minus));
    assert!(g.is_closed());
}

#[test]
fn class_equation() {
    for (name, cap) in [("unit24", 100), ("pure512", PURE_TENSOR_CAP), ("wf4", WEYL_F4_CAP)] {
        let g = FiniteMatrixGroup::closure(&group_generators(name).unwrap(), cap).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.total(), g.order(), "{name}");
        assert!(classes.class_sizes.iter().all(|s| g.order().is_multiple_of(*s)), "{name}");
    }
}

#[test]
fn closure_ignores_generator_order() {
    let gens = group_generators("wf4").unwrap();
    let mut reversed = gens.clone();
    reversed.reverse();
    let a = FiniteMatrixGroup::closure(&gens, WEYL_F4_CAP).unwrap();
    let b = FiniteMatrixGroup::closure(&reversed, WEYL_F4_CAP).unwrap();
    assert_eq!(a.order(), b.order());
    assert!(a.elements().all(|m| b.contains(m)));
    assert!(a.elements().all(|m| a.contains(&m.transpose())));
}

#[test]
fn automorphisms_close_under_transpose_and_product() {
    let bw = bw16_lattice();
    let xs = fact1_matrices();
    for (i, a) in xs.iter().enumerate() {
        assert!(bw.is_automorphism(&a.transpose()).unwrap(), "x{}ᵀ", i + 1);
        for b in &xs {
            assert!(bw.is_automorphism(&(a * b)).unwrap());
        }
    }
}

#[test]
fn sums_of_members_are_members() {
    let bw = bw16_lattice();
    let rows = bw.basis().row_vectors();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let mut v = DyadicVector::zero(16);
        for r in &rows {
            let c: i64 = rng.gen_range(-3..=3);
            v = v.add(&r.scale(&c.into()));
        }
        assert!(bw.member(&v));
    }
}

#[test]
fn fact1_permutation_action() {
    let shell = bw16_lattice().shortest_vectors();
    let xs = fact1_matrices();
    let perms = action_on_short_vectors(&xs, &shell).unwrap();
    assert!(perms.iter().all(|p| p.degree() == 4320));
    assert_eq!(perms[3].cycle_type().to_string(), "2^1836 1^648");

    let bsgs = schreier_sims(&perms).unwrap();
    assert!(bsgs.verify());
    assert_eq!(bsgs.orbit_sizes(), vec![4320, 280, 72, 2, 2, 2, 16, 2, 2, 2]);

    let minus = action_on_short_vectors(&[DyadicMatrix::identity(16).neg()], &shell).unwrap().remove(0);
    assert!(minus.compose(&minus).is_identity());
    assert!((0..4320).all(|p| !minus.fixes(p)));
    assert!(bsgs.contains(&minus));

    let swap = Permutation::from_cycles(4320, &[&[1, 2]]).unwrap();
    assert!(!bsgs.contains(&swap));

    // faithfulness: a word is trivial on the shell iff its matrix is the identity
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..40 {
        let len = rng.gen_range(1..=6);
        let mut m = DyadicMatrix::identity(16);
        let mut p = Permutation::identity(4320);
        for _ in 0..len {
            let k = rng.gen_range(0..xs.len());
            m = &m * &xs[k];
            p = p.compose(&perms[k]);
        }
        assert_eq!(m.is_identity(), p.is_identity());
        assert!(bsgs.contains(&p));
        let from_matrix = action_on_short_vectors(&[m], &shell).unwrap().remove(0);
        assert_eq!(from_matrix, p);
    }
}

#[test]
fn bsgs_text_is_thread_independent() {
    let text = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| Context::default().bsgs("fact1").unwrap().to_text())
    };
    assert_eq!(text(1), text(4));
}
