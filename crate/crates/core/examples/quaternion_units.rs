//! The 24 Hurwitz units and their 4x4 matrix images.

use std::fmt::Write as _;

use qlat::group::{FiniteMatrixGroup, RANK1_CAP};
use qlat::quaternion::{tau, unit_group, HurwitzQuaternion};

pub fn run_example() -> qlat::Result<String> {
    let mut out = String::new();
    let w = HurwitzQuaternion::OMEGA;
    writeln!(out, "omega = {w}, omega^3 = {}, order {:?}", w * w * w, w.order()).unwrap();

    let units = unit_group()?;
    writeln!(
        out,
        "units: {} elements, abelian: {}, involutions: {}",
        units.order(),
        units.is_abelian(),
        units.involution_count()
    )
    .unwrap();

    let gens = [HurwitzQuaternion::I, HurwitzQuaternion::J, HurwitzQuaternion::OMEGA].map(tau);
    let g = FiniteMatrixGroup::closure(&gens, RANK1_CAP)?;
    writeln!(
        out,
        "matrix image: {} elements, {} classes",
        g.order(),
        g.conjugacy_classes().class_count()
    )
    .unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qlat::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
