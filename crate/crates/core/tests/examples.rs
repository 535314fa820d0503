//! Each example's output, checked line by line where the values are fixed.

#[path = "../examples/automorphism_order.rs"]
mod automorphism_order;
#[path = "../examples/exact_arithmetic.rs"]
mod exact_arithmetic;
#[path = "../examples/lattice_shells.rs"]
mod lattice_shells;
#[path = "../examples/matrix_groups.rs"]
mod matrix_groups;
#[path = "../examples/quaternion_units.rs"]
mod quaternion_units;
#[path = "../examples/tensor_representations.rs"]
mod tensor_representations;
#[path = "../examples/verification_report.rs"]
mod verification_report;

fn has_lines(out: &str, lines: &[&str]) {
    for l in lines {
        assert!(out.lines().any(|x| x == *l), "missing `{l}` in:\n{out}");
    }
}

#[test]
fn exact_arithmetic() {
    let out = exact_arithmetic::run_example().unwrap();
    has_lines(&out, &["3/4 + -1/2 = 1/4, 3/4 * -1/2 = -3/8", "kron is 4x4, det 1/4"]);
}

#[test]
fn quaternion_units() {
    let out = quaternion_units::run_example().unwrap();
    has_lines(&out, &["units: 24 elements, abelian: false, involutions: 1", "matrix image: 24 elements, 7 classes"]);
}

#[test]
fn tensor_representations() {
    let out = tensor_representations::run_example().unwrap();
    has_lines(&out, &["rho2(e1) orthogonal: true", "recovered from matrix: true", "rank-4 relations: 70 checked, 0 failed"]);
    assert_eq!(out.lines().filter(|l| l.ends_with(": matches")).count(), 7);
}

#[test]
fn lattice_shells() {
    let out = lattice_shells::run_example().unwrap();
    has_lines(
        &out,
        &[
            "F4: det 1/2, minimal norm 1, kissing 24",
            "BW16: det 1/4096, minimal norm 1, kissing 4320",
            "W(F4) coordinate span = c * BW16 for c = 1",
        ],
    );
}

#[test]
fn matrix_groups() {
    let out = matrix_groups::run_example().unwrap();
    has_lines(&out, &["W(F4): 1152 elements", "classes: 257", "derived series: [512, 2, 1]", "character norm: 1"]);
}

#[test]
fn automorphism_order() {
    let out = automorphism_order::run_example().unwrap();
    has_lines(&out, &["x4 on the shell: 2^1836 1^648", "order 89181388800 = 2^21 * 3^5 * 5^2 * 7"]);
}

#[test]
fn verification_report() {
    let out = verification_report::run_example().unwrap();
    assert!(out.lines().any(|l| l.starts_with("fact1-order")));
}
