//! Dyadic scalars and matrices, Hermite normal form and the text format.

use std::fmt::Write as _;

use qlat::exact::text::{format_matrix, parse_matrix};
use qlat::exact::{Dyadic, DyadicMatrix, IntMatrix};

pub fn run_example() -> qlat::Result<String> {
    let mut out = String::new();
    let a: Dyadic = "3/4".parse()?;
    let b: Dyadic = "-1/2".parse()?;
    writeln!(out, "{a} + {b} = {}, {a} * {b} = {}", &a + &b, &a * &b).unwrap();

    let m = parse_matrix("2 2\n1/2 1/2\n1/2 -1/2\n")?;
    let k = m.kron(&DyadicMatrix::identity(2));
    writeln!(out, "kron is {}x{}, det {}", k.rows(), k.cols(), k.determinant()?).unwrap();
    write!(out, "{}", format_matrix(&(&m * &m))).unwrap();

    let h = IntMatrix::from_rows(&[[2, 0], [0, 2], [1, 1]])?.hnf();
    write!(out, "hnf:\n{h}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qlat::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
