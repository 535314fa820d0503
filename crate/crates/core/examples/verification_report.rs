//! Running registered checks and reading the report.

use std::fmt::Write as _;

use qlat::report::{run_checks, Status, REGISTRY};

pub fn run_example() -> qlat::Result<String> {
    let mut out = String::new();
    for check in REGISTRY {
        writeln!(out, "{:<20} {}", check.name, check.claim).unwrap();
    }
    let selection: Vec<String> = ["unit24", "f4-kissing", "rank4-relations"].map(String::from).into();
    let report = run_checks(&selection, 1)?;
    out += &report.render_text();
    let passed = report.checks.iter().filter(|c| c.status == Status::Pass).count();
    writeln!(out, "json bytes: {}, passed: {passed}", report.to_json().len()).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qlat::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
