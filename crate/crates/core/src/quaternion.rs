//! Hurwitz quaternions, the 24-element unit group and its 4×4 representation.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::exact::{Dyadic, DyadicMatrix, DyadicVector};
use crate::tables;

/// Safety bound on unit-group closure; a larger group means broken arithmetic.
pub const UNIT_GROUP_CAP: usize = 1000;

/// A Hurwitz integer `(c0 + c1·i + c2·j + c3·k) / 2` stored by its doubled
/// coordinates, which are all even or all odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzQuaternion {
    doubled: [i64; 4],
}

impl HurwitzQuaternion {
    pub const E: Self = Self::from_doubled_unchecked([2, 0, 0, 0]);
    pub const I: Self = Self::from_doubled_unchecked([0, 2, 0, 0]);
    pub const J: Self = Self::from_doubled_unchecked([0, 0, 2, 0]);
    pub const K: Self = Self::from_doubled_unchecked([0, 0, 0, 2]);
    /// `(1 + i + j + k) / 2`.
    pub const OMEGA: Self = Self::from_doubled_unchecked([1, 1, 1, 1]);

    const fn from_doubled_unchecked(doubled: [i64; 4]) -> Self {
        HurwitzQuaternion { doubled }
    }

    /// Rejects mixed parities, which would leave the Hurwitz order.
    pub fn from_doubled(doubled: [i64; 4]) -> Result<Self> {
        let p = doubled[0].rem_euclid(2);
        if doubled.iter().all(|c| c.rem_euclid(2) == p) {
            Ok(HurwitzQuaternion { doubled })
        } else {
            Err(Error::Parse(format!(
                "doubled coordinates {doubled:?} mix integral and half-integral parts"
            )))
        }
    }

    /// Quaternion with integer coordinates `a + b·i + c·j + d·k`.
    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Self {
        HurwitzQuaternion {
            doubled: [2 * a, 2 * b, 2 * c, 2 * d],
        }
    }

    pub fn doubled(&self) -> [i64; 4] {
        self.doubled
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.doubled;
        HurwitzQuaternion {
            doubled: [a, -b, -c, -d],
        }
    }

    /// `q·conj(q)`, always a non-negative integer on the Hurwitz order.
    pub fn norm(&self) -> i64 {
        self.doubled.iter().map(|c| c * c).sum::<i64>() / 4
    }

    /// Coordinates in the basis `(e, i, j, k)`.
    pub fn phi_inverse(&self) -> [Dyadic; 4] {
        self.doubled.map(|c| Dyadic::new(c, 1))
    }

    pub fn coordinate_vector(&self) -> DyadicVector {
        DyadicVector::from_ints(&self.doubled, 1)
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// Multiplicative order of a unit; `None` for non-units.
    pub fn order(&self) -> Option<usize> {
        if !self.is_unit() {
            return None;
        }
        let mut x = *self;
        let mut n = 1;
        while x != Self::E {
            x = x * *self;
            n += 1;
        }
        Some(n)
    }
}

impl Mul for HurwitzQuaternion {
    type Output = HurwitzQuaternion;

    /// Hamilton product with `ij = k`, `jk = i`, `ki = j`.
    fn mul(self, rhs: Self) -> Self {
        let [a1, b1, c1, d1] = self.doubled;
        let [a2, b2, c2, d2] = rhs.doubled;
        // (x/2)(y/2) = xy/4, so the doubled product is xy/2
        let prod = [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ];
        debug_assert!(prod.iter().all(|x| x % 2 == 0));
        HurwitzQuaternion {
            doubled: prod.map(|x| x / 2),
        }
    }
}

impl Neg for HurwitzQuaternion {
    type Output = HurwitzQuaternion;
    fn neg(self) -> Self {
        HurwitzQuaternion {
            doubled: self.doubled.map(|c| -c),
        }
    }
}

impl fmt::Display for HurwitzQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.phi_inverse();
        write!(f, "{a} + {b}i + {c}j + {d}k")
    }
}

pub fn quat_mul(a: HurwitzQuaternion, b: HurwitzQuaternion) -> HurwitzQuaternion {
    a * b
}

pub fn quat_conj(q: HurwitzQuaternion) -> HurwitzQuaternion {
    q.conj()
}

pub fn quat_norm(q: HurwitzQuaternion) -> i64 {
    q.norm()
}

pub fn phi_inverse(q: HurwitzQuaternion) -> [Dyadic; 4] {
    q.phi_inverse()
}

/// A finite group of unit quaternions, enumerated breadth-first.
#[derive(Clone, Debug)]
pub struct QuatUnitGroup {
    generators: Vec<HurwitzQuaternion>,
    elements: Vec<HurwitzQuaternion>,
}

impl QuatUnitGroup {
    /// Closure under left multiplication by the generators.
    pub fn generate(generators: &[HurwitzQuaternion], cap: usize) -> Result<Self> {
        let mut seen: HashSet<HurwitzQuaternion> = HashSet::new();
        let mut elements = vec![HurwitzQuaternion::E];
        seen.insert(HurwitzQuaternion::E);
        let mut queue = VecDeque::from([HurwitzQuaternion::E]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = g * x;
                if seen.insert(y) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    elements.push(y);
                    queue.push_back(y);
                }
            }
        }
        Ok(QuatUnitGroup {
            generators: generators.to_vec(),
            elements,
        })
    }

    pub fn generators(&self) -> &[HurwitzQuaternion] {
        &self.generators
    }

    pub fn elements(&self) -> &[HurwitzQuaternion] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, q: &HurwitzQuaternion) -> bool {
        self.elements.contains(q)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|&a| self.elements.iter().all(|&b| a * b == b * a))
    }

    pub fn involution_count(&self) -> usize {
        self.elements.iter().filter(|q| q.order() == Some(2)).count()
    }
}

/// The group `⟨i, j, k, ω⟩` of the 24 Hurwitz units.
pub fn unit_group() -> Result<QuatUnitGroup> {
    use HurwitzQuaternion as H;
    let group = QuatUnitGroup::generate(&[H::I, H::J, H::K, H::OMEGA], UNIT_GROUP_CAP)?;
    if group.elements.iter().any(|q| !q.is_unit()) {
        return Err(Error::Internal("unit group contains a non-unit".into()));
    }
    Ok(group)
}

/// `τ(i)`, `τ(j)`, `τ(k)` as tabulated.
pub fn tau_basis() -> [DyadicMatrix; 4] {
    [
        DyadicMatrix::identity(4),
        DyadicMatrix::from_table(&tables::TAU_I, 0),
        DyadicMatrix::from_table(&tables::TAU_J, 0),
        DyadicMatrix::from_table(&tables::TAU_K, 0),
    ]
}

/// The 4×4 representation, extended linearly: `τ(q) = Σ c_b τ(b)`.
pub fn tau(q: HurwitzQuaternion) -> DyadicMatrix {
    let basis = tau_basis();
    let mut out = DyadicMatrix::zeros(4, 4);
    for (c, b) in q.doubled.iter().zip(&basis) {
        if *c != 0 {
            out = out.checked_add(&b.scale(&Dyadic::new(*c, 1))).expect("4x4");
        }
    }
    out
}

/// The tabulated third generator of the binary tetrahedral matrix group.
///
/// It equals `τ(ω²) = τ((−1 + i + j + k)/2)`, not `τ(ω)`.
pub fn tabulated_third_generator() -> DyadicMatrix {
    DyadicMatrix::from_table(&tables::BINARY_TETRAHEDRAL_THIRD_X2, 1)
}
