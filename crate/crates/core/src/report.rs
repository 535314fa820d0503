//! The verification registry and its report.
//!
//! Each registry entry pairs a CLI name with the claim it checks and a
//! frozen expected value. Shared intermediate results (lattices, shells,
//! enumerated groups) are computed once per [`Context`].

use std::path::Path;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Dyadic, DyadicMatrix, DyadicVector};
use crate::group::{FiniteMatrixGroup, PURE_TENSOR_CAP, RANK1_CAP, WEYL_F4_CAP};
use crate::lattice::{bw16_lattice, f4_lattice, matching_scale, span_from_vectors, Lattice, ShortVectorSet};
use crate::perm::{action_on_short_vectors, factorize, schreier_sims, Bsgs, Permutation};
use crate::quaternion::{tau, unit_group, HurwitzQuaternion};
use crate::tensor::{
    check_rank4_relations, cross_check_fact1, fact1_generators, rho4_basis, weyl_f4_generators, AlgebraElement,
    Symbol,
};

pub const FACT1_ORDER: u64 = 89_181_388_800;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub timestamp: String,
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn emit_json(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json() + "\n")
    }

    /// One line per check, then a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            out += &format!(
                "{tag:<5} {:<20} expected {:<40} actual {} ({:.3}s)\n",
                c.name, c.expected, c.actual, c.seconds
            );
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        out += &format!("{passed}/{} checks passed\n", self.checks.len());
        out
    }
}

/// A registry entry.
pub struct Check {
    pub name: &'static str,
    pub claim: &'static str,
    pub expected: &'static str,
    run: fn(&Context) -> Result<String>,
}

impl Check {
    pub fn run(&self, ctx: &Context) -> CheckResult {
        let start = Instant::now();
        let (status, actual) = match (self.run)(ctx) {
            Ok(actual) if actual == self.expected => (Status::Pass, actual),
            Ok(actual) => (Status::Fail, actual),
            Err(e) => (Status::Error, e.to_string()),
        };
        CheckResult {
            name: self.name.to_string(),
            status,
            expected: self.expected.to_string(),
            actual,
            seconds: (start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0,
        }
    }
}

pub const REGISTRY: &[Check] = &[
    Check {
        name: "unit24",
        claim: "the unit Hurwitz quaternions form a non-abelian group of order 24 with one involution",
        expected: "order 24, non-abelian, 1 involution",
        run: check_unit24,
    },
    Check {
        name: "f4-kissing",
        claim: "the F4 lattice has kissing number 24",
        expected: "24",
        run: |ctx| Ok(ctx.f4_shell()?.count().to_string()),
    },
    Check {
        name: "f4-span",
        claim: "the unit quaternion coordinates span the F4 lattice",
        expected: "equal",
        run: check_f4_span,
    },
    Check {
        name: "wf4-order",
        claim: "e1..e4 generate W(F4) of order 1152 in dimension 16",
        expected: "1152",
        run: |ctx| Ok(ctx.weyl_f4()?.order().to_string()),
    },
    Check {
        name: "bw16-kissing",
        claim: "the Barnes-Wall lattice has kissing number 4320",
        expected: "4320",
        run: |ctx| Ok(ctx.bw16_shell()?.count().to_string()),
    },
    Check {
        name: "bw16-span-scale",
        claim: "the algebra coordinates of W(F4) span the Barnes-Wall lattice",
        expected: "c = 1",
        run: check_bw16_span_scale,
    },
    Check {
        name: "pure512-order",
        claim: "the eight single-slot matrices generate a group of order 2*4^4",
        expected: "512",
        run: |ctx| Ok(ctx.pure512()?.order().to_string()),
    },
    Check {
        name: "pure512-classes",
        claim: "the pure tensor group has 257 conjugacy classes",
        expected: "257",
        run: |ctx| Ok(ctx.pure512()?.conjugacy_classes().class_count().to_string()),
    },
    Check {
        name: "pure512-solvable",
        claim: "the pure tensor group is solvable with 256 linear characters",
        expected: "solvable, |G/[G,G]| = 256",
        run: check_pure512_solvable,
    },
    Check {
        name: "pure512-irrep",
        claim: "the 16-dimensional representation of the pure tensor group is irreducible",
        expected: "1",
        run: |ctx| Ok(ctx.pure512()?.character_norm().to_string()),
    },
    Check {
        name: "rank4-relations",
        claim: "single-slot matrices commute across slots and square to -I",
        expected: "70 relations hold",
        run: |_| {
            let r = check_rank4_relations();
            Ok(if r.holds() {
                format!("{} relations hold", r.checked)
            } else {
                format!("{} of {} relations fail: {}", r.failures.len(), r.checked, r.failures.join("; "))
            })
        },
    },
    Check {
        name: "fact1-crosscheck",
        claim: "the tensor expressions for x1..x7 reproduce the tabulated matrices",
        expected: "7 of 7 generators match",
        run: |_| {
            let report = cross_check_fact1();
            let matching = report.iter().filter(|c| c.matches()).count();
            let mut out = format!("{matching} of {} generators match", report.len());
            for c in report.iter().filter(|c| !c.matches()) {
                out += &format!("; {} differs in {} entries", c.name, c.differences.len());
            }
            Ok(out)
        },
    },
    Check {
        name: "fact1-automorphism",
        claim: "x1..x7 are orthogonal automorphisms of the Barnes-Wall lattice",
        expected: "7 of 7 preserve the lattice",
        run: check_fact1_automorphism,
    },
    Check {
        name: "fact1-order",
        claim: "x1..x7 generate the full automorphism group, of order 2^21*3^5*5^2*7",
        expected: "89181388800 = 2^21 * 3^5 * 5^2 * 7",
        run: |ctx| {
            let order = ctx.bsgs("fact1")?.order();
            Ok(format!("{order} = {}", factorize(&order)))
        },
    },
];

pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name).collect()
}

/// Registry entries for `selection`, in registry order; `all` selects everything.
pub fn select(selection: &[String]) -> Result<Vec<&'static Check>> {
    for name in selection {
        if name != "all" && !REGISTRY.iter().any(|c| c.name == name) {
            return Err(Error::UnknownName(format!(
                "check `{name}` (known: {})",
                check_names().join(", ")
            )));
        }
    }
    let all = selection.iter().any(|s| s == "all");
    Ok(REGISTRY
        .iter()
        .filter(|c| all || selection.iter().any(|s| s == c.name))
        .collect())
}

/// Runs the selected checks on a pool of `threads` workers (0 = all cores).
pub fn run_checks(selection: &[String], threads: usize) -> Result<VerificationReport> {
    let checks = select(selection)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let ctx = Context::default();
    let results: Vec<CheckResult> = pool.install(|| {
        checks
            .iter()
            .map(|c| {
                log::info!("running {}", c.name);
                let r = c.run(&ctx);
                log::info!("{} finished in {:.3}s", c.name, r.seconds);
                r
            })
            .collect()
    });
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339(),
        overall: results.iter().all(|r| r.status == Status::Pass),
        checks: results,
    })
}

fn check_unit24(ctx: &Context) -> Result<String> {
    let g = ctx.unit24()?;
    let abelian = if g.is_abelian() { "abelian" } else { "non-abelian" };
    let inv = g.involution_count();
    Ok(format!(
        "order {}, {abelian}, {inv} involution{}",
        g.order(),
        if inv == 1 { "" } else { "s" }
    ))
}

fn check_f4_span(ctx: &Context) -> Result<String> {
    let units = unit_group()?;
    let coords: Vec<DyadicVector> = units.elements().iter().map(HurwitzQuaternion::coordinate_vector).collect();
    let span = span_from_vectors(&coords)?;
    Ok(if span.same_lattice(ctx.f4()) { "equal" } else { "different" }.to_string())
}

/// Coordinates of every W(F4) element in the rank-2 algebra.
pub fn weyl_f4_coordinate_vectors(g: &FiniteMatrixGroup) -> Result<Vec<DyadicVector>> {
    g.elements()
        .map(|m| AlgebraElement::from_rho2(m).map(|a| DyadicVector::from_dyadics(a.coords())))
        .collect()
}

fn check_bw16_span_scale(ctx: &Context) -> Result<String> {
    let span = span_from_vectors(&weyl_f4_coordinate_vectors(ctx.weyl_f4()?)?)?;
    Ok(match matching_scale(&span, ctx.bw16(), &[Dyadic::one(), Dyadic::from(2)]) {
        Some(c) => format!("c = {c}"),
        None => format!("no match for c in {{1, 2}}; span determinant {}", span.determinant()),
    })
}

fn check_pure512_solvable(ctx: &Context) -> Result<String> {
    let g = ctx.pure512()?;
    let series = g.derived_series()?;
    let solvable = if series.last() == Some(&1) { "solvable" } else { "not solvable" };
    Ok(format!("{solvable}, |G/[G,G]| = {}", g.abelianization_order()?))
}

fn check_fact1_automorphism(ctx: &Context) -> Result<String> {
    let bw = ctx.bw16();
    let mut good = 0;
    let gens = fact1_generators()?;
    for g in &gens {
        if g.matrix.is_orthogonal() && bw.is_automorphism(&g.matrix)? {
            good += 1;
        }
    }
    Ok(format!("{good} of {} preserve the lattice", gens.len()))
}

/// Generators of the groups handled by `order` and the cross-validations.
pub const GROUP_NAMES: &[&str] = &["unit24", "wf4", "pure512", "fact1"];

pub fn group_generators(name: &str) -> Result<Vec<DyadicMatrix>> {
    Ok(match name {
        "unit24" => [HurwitzQuaternion::I, HurwitzQuaternion::J, HurwitzQuaternion::OMEGA]
            .map(tau)
            .to_vec(),
        "wf4" => weyl_f4_generators().iter().map(AlgebraElement::rho2).collect::<Result<_>>()?,
        "pure512" => (1..=4)
            .flat_map(|s| [Symbol::I, Symbol::J].map(move |y| rho4_basis(s, y)))
            .collect::<Result<_>>()?,
        "fact1" => fact1_generators()?.into_iter().map(|g| g.matrix).collect(),
        _ => {
            return Err(Error::UnknownName(format!(
                "group `{name}` (known: {})",
                GROUP_NAMES.join(", ")
            )))
        }
    })
}

/// Any named matrix: `x1`..`x7`, `e1`..`e4` (rank-2 images), `i1`..`j4`
/// (single-slot matrices) or `tau-i`, `tau-j`, `tau-k`, `tau-omega`.
pub fn generator_matrix(name: &str) -> Result<DyadicMatrix> {
    let unknown = || Error::UnknownName(format!("generator `{name}`"));
    let index = |prefix: &str, max: usize| -> Option<usize> {
        let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
        (1..=max).contains(&n).then_some(n)
    };
    if let Some(n) = index("x", 7) {
        return Ok(fact1_generators()?.swap_remove(n - 1).matrix);
    }
    if let Some(n) = index("e", 4) {
        return weyl_f4_generators()[n - 1].rho2();
    }
    if let Some(n) = index("i", 4) {
        return rho4_basis(n, Symbol::I);
    }
    if let Some(n) = index("j", 4) {
        return rho4_basis(n, Symbol::J);
    }
    let q = match name {
        "tau-i" => HurwitzQuaternion::I,
        "tau-j" => HurwitzQuaternion::J,
        "tau-k" => HurwitzQuaternion::K,
        "tau-omega" => HurwitzQuaternion::OMEGA,
        _ => return Err(unknown()),
    };
    Ok(tau(q))
}

pub fn lattice_by_name(name: &str) -> Result<Lattice> {
    match name {
        "f4" => Ok(f4_lattice()),
        "bw16" => Ok(bw16_lattice()),
        _ => Err(Error::UnknownName(format!("lattice `{name}` (known: f4, bw16)"))),
    }
}

/// Lazily computed shared data.
#[derive(Default)]
pub struct Context {
    f4: OnceLock<Lattice>,
    bw16: OnceLock<Lattice>,
    f4_shell: OnceLock<ShortVectorSet>,
    bw16_shell: OnceLock<ShortVectorSet>,
    unit24: OnceLock<Result<FiniteMatrixGroup>>,
    weyl_f4: OnceLock<Result<FiniteMatrixGroup>>,
    pure512: OnceLock<Result<FiniteMatrixGroup>>,
    bsgs: [OnceLock<Result<Bsgs>>; 4],
}

fn cached<T>(cell: &OnceLock<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

impl Context {
    pub fn f4(&self) -> &Lattice {
        self.f4.get_or_init(f4_lattice)
    }

    pub fn bw16(&self) -> &Lattice {
        self.bw16.get_or_init(bw16_lattice)
    }

    pub fn f4_shell(&self) -> Result<&ShortVectorSet> {
        Ok(self.f4_shell.get_or_init(|| self.f4().shortest_vectors()))
    }

    pub fn bw16_shell(&self) -> Result<&ShortVectorSet> {
        Ok(self.bw16_shell.get_or_init(|| {
            log::info!("enumerating the Barnes-Wall minimal shell");
            self.bw16().shortest_vectors()
        }))
    }

    pub fn unit24(&self) -> Result<&FiniteMatrixGroup> {
        cached(&self.unit24, || {
            FiniteMatrixGroup::closure(&group_generators("unit24")?, RANK1_CAP)
        })
    }

    pub fn weyl_f4(&self) -> Result<&FiniteMatrixGroup> {
        cached(&self.weyl_f4, || {
            FiniteMatrixGroup::closure(&group_generators("wf4")?, WEYL_F4_CAP)
        })
    }

    pub fn pure512(&self) -> Result<&FiniteMatrixGroup> {
        cached(&self.pure512, || {
            FiniteMatrixGroup::closure(&group_generators("pure512")?, PURE_TENSOR_CAP)
        })
    }

    /// Permutation images of a named group's generators on the minimal shell
    /// of the lattice it preserves (F4 for `unit24`, Barnes-Wall otherwise).
    pub fn permutation_generators(&self, name: &str) -> Result<Vec<Permutation>> {
        let gens = group_generators(name)?;
        let shell = if name == "unit24" {
            self.f4_shell()?
        } else {
            self.bw16_shell()?
        };
        action_on_short_vectors(&gens, shell)
    }

    pub fn bsgs(&self, name: &str) -> Result<&Bsgs> {
        let slot = GROUP_NAMES
            .iter()
            .position(|&g| g == name)
            .ok_or_else(|| Error::UnknownName(format!("group `{name}`")))?;
        cached(&self.bsgs[slot], || {
            let perms = self.permutation_generators(name)?;
            log::info!("running Schreier-Sims for {name} on {} points", perms[0].degree());
            schreier_sims(&perms)
        })
    }
}

/// Group order with its factorization, via Schreier–Sims.
pub fn group_order(ctx: &Context, name: &str) -> Result<(BigUint, String)> {
    let order = ctx.bsgs(name)?.order();
    let f = factorize(&order).to_string();
    Ok((order, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_fourteen_unique_names() {
        let names = check_names();
        assert_eq!(names.len(), 14);
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 14);
    }

    #[test]
    fn selection() {
        assert_eq!(select(&["all".into()]).unwrap().len(), 14);
        assert!(select(&[]).unwrap().is_empty());
        let picked = select(&["fact1-order".into(), "unit24".into()]).unwrap();
        assert_eq!(picked.iter().map(|c| c.name).collect::<Vec<_>>(), vec!["unit24", "fact1-order"]);
        assert!(matches!(select(&["nonexistent".into()]), Err(Error::UnknownName(_))));
    }

    #[test]
    fn empty_report_passes() {
        let r = run_checks(&[], 1).unwrap();
        assert!(r.checks.is_empty());
        assert!(r.overall);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn unit24_check() {
        let r = run_checks(&["unit24".into()], 1).unwrap();
        assert_eq!(r.checks[0].status, Status::Pass);
        assert_eq!(r.checks[0].actual, "order 24, non-abelian, 1 involution");
    }

    #[test]
    fn named_generators() {
        assert_eq!(generator_matrix("x4").unwrap().rows(), 16);
        assert_eq!(generator_matrix("e2").unwrap().rows(), 16);
        assert_eq!(generator_matrix("j3").unwrap().rows(), 16);
        assert_eq!(generator_matrix("tau-omega").unwrap().rows(), 4);
        for bad in ["x0", "x8", "e5", "i", "tau-q", ""] {
            assert!(generator_matrix(bad).is_err(), "{bad}");
        }
        assert!(group_generators("nope").is_err());
        assert!(lattice_by_name("e8").is_err());
    }
}
