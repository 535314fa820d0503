//! Rank-2 and rank-4 tensor words and their 16x16 images.

use std::fmt::Write as _;

use qlat::tensor::{check_rank4_relations, cross_check_fact1, fact1_expressions, weyl_f4_generators, AlgebraElement};

pub fn run_example() -> qlat::Result<String> {
    let mut out = String::new();
    let e1 = &weyl_f4_generators()[0];
    let m = e1.rho2()?;
    writeln!(out, "e1 = {e1}").unwrap();
    writeln!(out, "rho2(e1) orthogonal: {}", m.is_orthogonal()).unwrap();
    writeln!(out, "recovered from matrix: {}", AlgebraElement::from_rho2(&m)? == *e1).unwrap();

    let relations = check_rank4_relations();
    writeln!(out, "rank-4 relations: {} checked, {} failed", relations.checked, relations.failures.len()).unwrap();

    let x1 = &fact1_expressions()[0];
    writeln!(out, "x1 = {x1}").unwrap();
    for c in cross_check_fact1() {
        writeln!(out, "{}: {}", c.name, if c.matches() { "matches" } else { "differs" }).unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qlat::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
