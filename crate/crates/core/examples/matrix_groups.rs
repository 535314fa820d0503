//! Closure, conjugacy classes, derived series and character norm.

use std::fmt::Write as _;

use qlat::group::{FiniteMatrixGroup, PURE_TENSOR_CAP, WEYL_F4_CAP};
use qlat::report::group_generators;

pub fn run_example() -> qlat::Result<String> {
    let mut out = String::new();
    let w = FiniteMatrixGroup::closure(&group_generators("wf4")?, WEYL_F4_CAP)?;
    writeln!(out, "W(F4): {} elements", w.order()).unwrap();

    let g = FiniteMatrixGroup::closure(&group_generators("pure512")?, PURE_TENSOR_CAP)?;
    writeln!(out, "pure tensor group: {} elements", g.order()).unwrap();
    writeln!(out, "classes: {}", g.conjugacy_classes().class_count()).unwrap();
    writeln!(out, "derived series: {:?}", g.derived_series()?).unwrap();
    writeln!(out, "character norm: {}", g.character_norm()).unwrap();

    match FiniteMatrixGroup::closure(&group_generators("fact1")?, 5000) {
        Ok(big) => writeln!(out, "fact1 closure: {} elements", big.order()).unwrap(),
        Err(e) => writeln!(out, "fact1 closure: {e}").unwrap(),
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qlat::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
