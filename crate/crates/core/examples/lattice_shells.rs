//! Minimal shells, membership and spans of the F4 and Barnes-Wall lattices.

use std::fmt::Write as _;

use qlat::exact::{Dyadic, DyadicVector};
use qlat::group::{FiniteMatrixGroup, WEYL_F4_CAP};
use qlat::lattice::{bw16_lattice, f4_lattice, matching_scale, span_from_vectors};
use qlat::report::{group_generators, weyl_f4_coordinate_vectors};

pub fn run_example() -> qlat::Result<String> {
    let mut out = String::new();
    let f4 = f4_lattice();
    let bw = bw16_lattice();
    for (name, l) in [("F4", &f4), ("BW16", &bw)] {
        let shell = l.shortest_vectors();
        writeln!(out, "{name}: det {}, minimal norm {}, kissing {}", l.determinant(), shell.norm, shell.count()).unwrap();
    }
    writeln!(out, "(1,0,0,0) in F4: {}", f4.member(&DyadicVector::from_ints(&[1, 0, 0, 0], 0))).unwrap();

    let w = FiniteMatrixGroup::closure(&group_generators("wf4")?, WEYL_F4_CAP)?;
    let span = span_from_vectors(&weyl_f4_coordinate_vectors(&w)?)?;
    let c = matching_scale(&span, &bw, &[Dyadic::one(), Dyadic::from(2)]);
    writeln!(out, "W(F4) coordinate span = c * BW16 for c = {}", c.map_or("none".into(), |c| c.to_string())).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qlat::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
