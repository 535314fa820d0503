//! One test per acceptance criterion. Every comparison is exact; the only
//! tolerances are the wall-clock budgets below.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use qlat::exact::{Dyadic, DyadicMatrix, DyadicVector};
use qlat::group::{FiniteMatrixGroup, PURE_TENSOR_CAP, RANK1_CAP, WEYL_F4_CAP};
use qlat::lattice::{bw16_lattice, f4_lattice, matching_scale, span_from_vectors};
use qlat::perm::{action_on_short_vectors, factorize, schreier_sims};
use qlat::quaternion::unit_group;
use qlat::report::{group_generators, weyl_f4_coordinate_vectors, Context};
use qlat::tensor::{check_rank4_relations, cross_check_fact1, fact1_generators};

const BUDGET_UNIT24: Duration = Duration::from_secs(1);
const BUDGET_F4_KISSING: Duration = Duration::from_secs(1);
const BUDGET_F4_SPAN: Duration = Duration::from_secs(1);
const BUDGET_WF4_ORDER: Duration = Duration::from_secs(10);
const BUDGET_BW16_KISSING: Duration = Duration::from_secs(60);
const BUDGET_BW16_SPAN: Duration = Duration::from_secs(10);
const BUDGET_PURE512: Duration = Duration::from_secs(30);
const BUDGET_RELATIONS: Duration = Duration::from_secs(1);
const BUDGET_FACT1_AUTOMORPHISM: Duration = Duration::from_secs(1);
const BUDGET_FACT1_ORDER: Duration = Duration::from_secs(600);
const BUDGET_CROSS_VALIDATION: Duration = Duration::from_secs(30);
const BUDGET_CROSSCHECK: Duration = Duration::from_secs(5);
const BUDGET_PROPERTIES: Duration = Duration::from_secs(300);

fn report(n: u32, name: &str, ok: bool, detail: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    let in_time = elapsed <= budget;
    let verdict = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "criterion {n:>2} {name:<20} {verdict} {detail} [{:.3}s of {}s]",
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    assert!(ok, "criterion {n} ({name}) failed: {detail}");
    assert!(in_time, "criterion {n} ({name}) took {elapsed:?}, budget {budget:?}");
}

#[test]
fn criterion_01_unit24() {
    let t = Instant::now();
    let g = FiniteMatrixGroup::closure(&group_generators("unit24").unwrap(), RANK1_CAP).unwrap();
    let (order, abelian, involutions) = (g.order(), g.is_abelian(), g.involution_count());
    report(
        1,
        "unit24",
        order == 24 && !abelian && involutions == 1,
        &format!("order {order}, abelian {abelian}, involutions {involutions}"),
        t,
        BUDGET_UNIT24,
    );
}

#[test]
fn criterion_02_f4_kissing() {
    let t = Instant::now();
    let shell = f4_lattice().shortest_vectors();
    report(
        2,
        "f4-kissing",
        shell.count() == 24,
        &format!("{} vectors of norm {}", shell.count(), shell.norm),
        t,
        BUDGET_F4_KISSING,
    );
}

#[test]
fn criterion_03_f4_span() {
    let t = Instant::now();
    let coords: Vec<DyadicVector> = unit_group().unwrap().elements().iter().map(|q| q.coordinate_vector()).collect();
    let span = span_from_vectors(&coords).unwrap();
    let f4 = f4_lattice();
    let equal = span.hnf() == f4.hnf();
    report(3, "f4-span", equal, &format!("HNF equal: {equal}"), t, BUDGET_F4_SPAN);
}

#[test]
fn criterion_04_wf4_order() {
    let t = Instant::now();
    let g = FiniteMatrixGroup::closure(&group_generators("wf4").unwrap(), WEYL_F4_CAP).unwrap();
    report(4, "wf4-order", g.order() == 1152, &format!("{} elements", g.order()), t, BUDGET_WF4_ORDER);
}

#[test]
fn criterion_05_bw16_kissing() {
    let t = Instant::now();
    let shell = bw16_lattice().shortest_vectors();
    report(
        5,
        "bw16-kissing",
        shell.count() == 4320 && shell.norm == Dyadic::one(),
        &format!("{} vectors of norm {}", shell.count(), shell.norm),
        t,
        BUDGET_BW16_KISSING,
    );
}

#[test]
fn criterion_06_bw16_span_scale() {
    let t = Instant::now();
    let w = FiniteMatrixGroup::closure(&group_generators("wf4").unwrap(), WEYL_F4_CAP).unwrap();
    let coords = weyl_f4_coordinate_vectors(&w).unwrap();
    let span = span_from_vectors(&coords).unwrap();
    let c = matching_scale(&span, &bw16_lattice(), &[Dyadic::one(), Dyadic::from(2)]);
    let detail = match &c {
        Some(c) => format!("{} vectors, match at c = {c}", coords.len()),
        None => format!("{} vectors, no match; span det {}", coords.len(), span.determinant()),
    };
    report(6, "bw16-span-scale", c == Some(Dyadic::one()), &detail, t, BUDGET_BW16_SPAN);
}

#[test]
fn criterion_07_pure512() {
    let t = Instant::now();
    let g = FiniteMatrixGroup::closure(&group_generators("pure512").unwrap(), PURE_TENSOR_CAP).unwrap();
    let series = g.derived_series().unwrap();
    let classes = g.conjugacy_classes().class_count();
    let abelianization = g.abelianization_order().unwrap();
    let norm = g.character_norm();
    let ok = g.order() == 512
        && series.last() == Some(&1)
        && classes == 257
        && abelianization == 256
        && norm == BigRational::one();
    report(
        7,
        "pure512",
        ok,
        &format!(
            "order {}, derived series {series:?}, {classes} classes, |G/[G,G]| = {abelianization}, character norm {norm}",
            g.order()
        ),
        t,
        BUDGET_PURE512,
    );
}

#[test]
fn criterion_08_rank4_relations() {
    let t = Instant::now();
    let r = check_rank4_relations();
    report(
        8,
        "rank4-relations",
        r.holds() && r.checked == 70,
        &format!("{} relations checked, failures {:?}", r.checked, r.failures),
        t,
        BUDGET_RELATIONS,
    );
}

#[test]
fn criterion_09_fact1_automorphism() {
    let t = Instant::now();
    let bw = bw16_lattice();
    let gens = fact1_generators().unwrap();
    let good: Vec<bool> = gens
        .iter()
        .map(|g| g.matrix.is_orthogonal() && bw.is_automorphism(&g.matrix).unwrap())
        .collect();
    report(
        9,
        "fact1-automorphism",
        good.len() == 7 && good.iter().all(|&b| b),
        &format!("{} of {} orthogonal and lattice-preserving", good.iter().filter(|&&b| b).count(), good.len()),
        t,
        BUDGET_FACT1_AUTOMORPHISM,
    );
}

#[test]
fn criterion_10_fact1_order() {
    let t = Instant::now();
    let shell = bw16_lattice().shortest_vectors();
    let gens: Vec<DyadicMatrix> = fact1_generators().unwrap().into_iter().map(|g| g.matrix).collect();
    let perms = action_on_short_vectors(&gens, &shell).unwrap();
    let bsgs = schreier_sims(&perms).unwrap();
    let order = bsgs.order();
    let f = factorize(&order).to_string();
    report(
        10,
        "fact1-order",
        order == BigUint::from(89_181_388_800u64) && f == "2^21 * 3^5 * 5^2 * 7" && perms[0].degree() == 4320,
        &format!("{order} = {f} on {} points", perms[0].degree()),
        t,
        BUDGET_FACT1_ORDER,
    );
}

#[test]
fn criterion_11_cross_validation() {
    let t = Instant::now();
    let ctx = Context::default();
    let mut details = Vec::new();
    let mut ok = true;
    for (name, cap) in [("unit24", RANK1_CAP), ("pure512", PURE_TENSOR_CAP), ("wf4", WEYL_F4_CAP)] {
        let closure = FiniteMatrixGroup::closure(&group_generators(name).unwrap(), cap).unwrap().order();
        let bsgs = ctx.bsgs(name).unwrap().order();
        ok &= bsgs == BigUint::from(closure);
        details.push(format!("{name}: closure {closure}, bsgs {bsgs}"));
    }
    ok &= details.len() == 3;
    report(11, "cross-validation", ok, &details.join("; "), t, BUDGET_CROSS_VALIDATION);
}

#[test]
fn criterion_12_fact1_crosscheck() {
    let t = Instant::now();
    let report_rows = cross_check_fact1();
    let summary: Vec<String> = report_rows
        .iter()
        .map(|c| {
            if c.matches() {
                format!("{} match", c.name)
            } else {
                format!("{} differs in {} entries", c.name, c.differences.len())
            }
        })
        .collect();
    let complete = report_rows.len() == 7
        && report_rows.iter().enumerate().all(|(i, c)| c.name == format!("x{}", i + 1));
    report(12, "fact1-crosscheck", complete, &summary.join(", "), t, BUDGET_CROSSCHECK);
}

#[test]
fn criterion_13_property_suites() {
    use common::*;
    let t = Instant::now();
    let results = [
        ("kron mixed product", run_property(kron_quadruple(), prop_kron_mixed_product)),
        ("hnf idempotence and span", run_property(int_matrix(), prop_hnf_idempotent_and_span_preserving)),
        (
            "quaternion associativity and norm",
            run_property((hurwitz(), hurwitz(), hurwitz()), prop_quaternion_laws),
        ),
        ("shortest vector oracle", run_property(small_basis(), prop_shell_matches_oracle)),
        ("bsgs base invariance", run_property(permutation_group(), prop_bsgs_base_invariance)),
    ];
    let ok = results.iter().all(|(_, r)| matches!(r, Ok(n) if *n >= 100));
    let detail: Vec<String> = results
        .iter()
        .map(|(name, r)| match r {
            Ok(n) => format!("{name}: {n} cases"),
            Err(e) => format!("{name}: {e}"),
        })
        .collect();
    report(13, "property-suites", ok, &detail.join("; "), t, BUDGET_PROPERTIES);
}
