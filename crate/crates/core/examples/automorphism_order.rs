//! Order of the group generated by x1..x7, from its action on 4320 vectors.

use std::fmt::Write as _;

use qlat::lattice::bw16_lattice;
use qlat::perm::{action_on_short_vectors, factorize, schreier_sims};
use qlat::tensor::fact1_generators;

pub fn run_example() -> qlat::Result<String> {
    let mut out = String::new();
    let bw = bw16_lattice();
    let shell = bw.shortest_vectors();
    let gens: Vec<_> = fact1_generators()?.into_iter().map(|g| g.matrix).collect();
    for (n, g) in gens.iter().enumerate() {
        writeln!(out, "x{} preserves BW16: {}", n + 1, bw.is_automorphism(g)?).unwrap();
    }
    let perms = action_on_short_vectors(&gens, &shell)?;
    writeln!(out, "x4 on the shell: {}", perms[3].cycle_type()).unwrap();
    let bsgs = schreier_sims(&perms)?;
    let order = bsgs.order();
    writeln!(out, "base orbits: {:?}", bsgs.orbit_sizes()).unwrap();
    writeln!(out, "order {order} = {}", factorize(&order)).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qlat::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
