//! Full-rank lattices in Q^n with dyadic bases.
//!
//! Row vectors throughout: a lattice is the Z-span of the rows of its basis,
//! and a matrix `g` acts by `v ↦ v·g`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{Dyadic, DyadicMatrix, DyadicVector, IntMatrix};
use crate::tables;

#[derive(Clone, Debug)]
pub struct Lattice {
    basis: DyadicMatrix,
    gram: DyadicMatrix,
    // HNF of `basis · 2^scale`, which is integral
    hnf: IntMatrix,
    scale: u32,
}

impl Lattice {
    /// Rejects non-square or singular bases.
    pub fn new(basis: DyadicMatrix) -> Result<Self> {
        if !basis.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "basis is {}x{}, expected square",
                basis.rows(),
                basis.cols()
            )));
        }
        let (scaled, scale) = basis.to_scaled_int();
        let hnf = scaled.hnf();
        if hnf.rows() < basis.rows() {
            return Err(Error::RankDeficient {
                rank: hnf.rows(),
                dim: basis.rows(),
            });
        }
        let gram = &basis * &basis.transpose();
        Ok(Lattice {
            basis,
            gram,
            hnf,
            scale,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &DyadicMatrix {
        &self.basis
    }

    pub fn gram(&self) -> &DyadicMatrix {
        &self.gram
    }

    pub fn determinant(&self) -> Dyadic {
        self.basis.determinant().expect("basis is square")
    }

    /// Canonical basis: the HNF divided by `2^e`, returned as `(hnf, e)`.
    pub fn hnf(&self) -> (&IntMatrix, u32) {
        (&self.hnf, self.scale)
    }

    pub fn hnf_basis(&self) -> DyadicMatrix {
        let entries = (0..self.hnf.rows())
            .flat_map(|r| self.hnf.row(r).to_vec())
            .collect();
        DyadicMatrix::from_scaled(self.hnf.rows(), self.hnf.cols(), entries, self.scale).expect("square hnf")
    }

    /// `v` is an integer combination of the basis rows.
    pub fn member(&self, v: &DyadicVector) -> bool {
        if v.len() != self.dim() {
            return false;
        }
        match v.scaled_to(self.scale) {
            Some(scaled) => self.hnf.solve_echelon(&scaled).is_some(),
            None => false,
        }
    }

    /// Equality as subsets of Q^n.
    pub fn same_lattice(&self, other: &Lattice) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let scale = self.scale.max(other.scale);
        let lift = |l: &Lattice| l.hnf.scale(&(BigInt::from(1) << (scale - l.scale) as usize));
        lift(self) == lift(other)
    }

    /// `self = c · other`.
    pub fn equals_scaled(&self, other: &Lattice, c: &Dyadic) -> bool {
        match Lattice::new(other.basis.scale(c)) {
            Ok(scaled) => self.same_lattice(&scaled),
            Err(_) => false,
        }
    }

    /// `v·g` and `v·gᵀ` lie in the lattice for every basis row `v`.
    pub fn is_automorphism(&self, g: &DyadicMatrix) -> Result<bool> {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on a rank {} lattice",
                g.rows(),
                g.cols(),
                self.dim()
            )));
        }
        if !g.is_orthogonal() {
            return Err(Error::NotOrthogonal);
        }
        let preserves = |m: &DyadicMatrix| (&self.basis * m).row_vectors().iter().all(|v| self.member(v));
        Ok(preserves(g) && preserves(&g.transpose()))
    }

    /// All nonzero vectors of minimal norm.
    ///
    /// Fincke–Pohst enumeration over coefficient vectors. The search radius
    /// starts at the smallest diagonal Gram entry and shrinks whenever a
    /// shorter vector turns up. A float Cholesky factor only decides which
    /// branches to visit; each candidate's norm is recomputed exactly.
    pub fn shortest_vectors(&self) -> ShortVectorSet {
        let n = self.dim();
        let (scaled, scale) = self.basis.to_scaled_int();
        let gram_int: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let dot: BigInt = scaled.row(i).iter().zip(scaled.row(j)).map(|(a, b)| a * b).sum();
                        dot.to_i128().expect("gram entry fits in i128")
                    })
                    .collect()
            })
            .collect();
        let bound = (0..n).map(|i| gram_int[i][i]).min().expect("nonempty basis");
        let mut search = Enumeration::new(&gram_int, bound);
        let mut x = vec![0i64; n];
        search.visit(n - 1, 0.0, &mut x);
        let mut vectors: Vec<DyadicVector> = search
            .found
            .iter()
            .map(|coeffs| {
                let mut v = DyadicVector::zero(n);
                for (i, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        v = v.add(&self.basis.row(i).scale(&Dyadic::from(c)));
                    }
                }
                v
            })
            .collect();
        vectors.sort();
        ShortVectorSet {
            norm: Dyadic::new(search.bound, 2 * scale),
            vectors,
        }
    }
}

struct Enumeration<'a> {
    gram: &'a [Vec<i128>],
    // upper Cholesky data: q(x) = Σ diag[i] (x_i + Σ_{j>i} mu[i][j] x_j)²
    diag: Vec<f64>,
    mu: Vec<Vec<f64>>,
    bound: i128,
    found: Vec<Vec<i64>>,
}

impl<'a> Enumeration<'a> {
    fn new(gram: &'a [Vec<i128>], bound: i128) -> Self {
        let n = gram.len();
        let mut r = vec![vec![0f64; n]; n];
        for i in 0..n {
            for j in i..n {
                let mut s = gram[i][j] as f64;
                for row in &r[..i] {
                    s -= row[i] * row[j];
                }
                r[i][j] = if i == j { s.max(0.0).sqrt() } else { s / r[i][i] };
            }
        }
        let diag = (0..n).map(|i| r[i][i] * r[i][i]).collect();
        let mu = (0..n)
            .map(|i| (0..n).map(|j| if j > i { r[i][j] / r[i][i] } else { 0.0 }).collect())
            .collect();
        Enumeration {
            gram,
            diag,
            mu,
            bound,
            found: Vec::new(),
        }
    }

    fn slack(&self) -> f64 {
        1e-7 * (self.bound as f64).max(1.0)
    }

    fn visit(&mut self, i: usize, partial: f64, x: &mut [i64]) {
        let n = x.len();
        let center: f64 = -(i + 1..n).map(|j| self.mu[i][j] * x[j] as f64).sum::<f64>();
        let room = self.bound as f64 - partial + self.slack();
        if room < 0.0 {
            return;
        }
        let radius = (room / self.diag[i]).sqrt();
        let lo = (center - radius).ceil() as i64;
        let hi = (center + radius).floor() as i64;
        for xi in lo..=hi {
            let t = xi as f64 - center;
            let used = partial + self.diag[i] * t * t;
            if used > self.bound as f64 + self.slack() {
                continue;
            }
            x[i] = xi;
            if i == 0 {
                self.accept(x);
            } else {
                self.visit(i - 1, used, x);
            }
        }
        x[i] = 0;
    }

    fn accept(&mut self, x: &[i64]) {
        if x.iter().all(|&c| c == 0) {
            return;
        }
        let n = x.len();
        let mut norm: i128 = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                norm += x[i] as i128 * self.gram[i][j] * x[j] as i128;
            }
        }
        if norm < self.bound {
            self.bound = norm;
            self.found.clear();
        }
        if norm == self.bound {
            self.found.push(x.to_vec());
        }
    }
}

/// The minimal shell of a lattice, sorted in exact lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVectorSet {
    pub norm: Dyadic,
    pub vectors: Vec<DyadicVector>,
}

impl ShortVectorSet {
    pub fn count(&self) -> usize {
        self.vectors.len()
    }

    pub fn index_of(&self, v: &DyadicVector) -> Option<usize> {
        self.vectors.binary_search(v).ok()
    }

    pub fn is_negation_closed(&self) -> bool {
        self.vectors.iter().all(|v| self.index_of(&v.neg()).is_some())
    }
}

/// The F₄ root lattice with basis `½(1,1,1,1), e₂, e₃, e₄`.
pub fn f4_lattice() -> Lattice {
    Lattice::new(DyadicMatrix::from_table(&tables::F4_BASIS_X2, 1)).expect("tabulated basis is full rank")
}

/// The Barnes–Wall lattice in the tabulated ¼-scaled frame.
pub fn bw16_lattice() -> Lattice {
    Lattice::new(DyadicMatrix::from_table(&tables::BW16_BASIS_X4, 2)).expect("tabulated basis is full rank")
}

/// HNF basis of the Z-span of `vectors`; errors unless they span Q^n.
pub fn span_from_vectors(vectors: &[DyadicVector]) -> Result<Lattice> {
    let dim = vectors
        .first()
        .map(DyadicVector::len)
        .ok_or_else(|| Error::DimensionMismatch("no vectors".into()))?;
    if vectors.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch("vectors of different lengths".into()));
    }
    let scale = vectors.iter().map(DyadicVector::exponent).max().unwrap_or(0);
    let rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.scaled_to(scale).expect("scale covers every vector"))
        .collect();
    let hnf = IntMatrix::from_big_rows(rows, dim)?.hnf();
    if hnf.rows() < dim {
        return Err(Error::RankDeficient { rank: hnf.rows(), dim });
    }
    let entries = (0..dim).flat_map(|r| hnf.row(r).to_vec()).collect();
    Lattice::new(DyadicMatrix::from_scaled(dim, dim, entries, scale)?)
}

/// Z-span of all rows of all the given matrices.
pub fn row_span_of_matrices(matrices: &[DyadicMatrix]) -> Result<Lattice> {
    let rows: Vec<DyadicVector> = matrices.iter().flat_map(DyadicMatrix::row_vectors).collect();
    span_from_vectors(&rows)
}

/// Smallest `c` in `candidates` with `l = c · reference`, if any.
pub fn matching_scale(l: &Lattice, reference: &Lattice, candidates: &[Dyadic]) -> Option<Dyadic> {
    candidates.iter().find(|c| l.equals_scaled(reference, c)).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64], exp: u32) -> DyadicVector {
        DyadicVector::from_ints(xs, exp)
    }

    #[test]
    fn f4_basis_and_determinant() {
        let l = f4_lattice();
        assert_eq!(l.basis().row(0), v(&[1, 1, 1, 1], 1));
        assert_eq!(l.determinant(), Dyadic::half());
        assert!(l.member(&v(&[1, 0, 0, 0], 0)));
        assert!(!l.member(&v(&[1, 0, 0, 0], 1)));
        assert!(!l.member(&v(&[1, 0, 0], 0)));
    }

    #[test]
    fn bw16_basis_rows() {
        let l = bw16_lattice();
        let mut e8 = vec![0; 16];
        e8[7] = 1;
        assert_eq!(l.basis().row(7), v(&e8, 0));
        assert!(l.member(&l.basis().row(0)));
        let mut quarter = vec![0; 16];
        quarter[0] = 1;
        assert!(!l.member(&v(&quarter, 2)));
    }

    #[test]
    fn integer_lattice_shell() {
        let z2 = Lattice::new(DyadicMatrix::identity(2)).unwrap();
        let s = z2.shortest_vectors();
        assert_eq!(s.norm, Dyadic::one());
        assert_eq!(s.count(), 4);
        assert!(s.is_negation_closed());
    }

    #[test]
    fn shell_tightens_below_the_diagonal() {
        // both diagonal entries are 5; the shortest vectors have norm 2
        let l = Lattice::new(DyadicMatrix::from_int_rows(&[[2, 1], [1, 2]], 0).unwrap()).unwrap();
        let s = l.shortest_vectors();
        assert_eq!(s.norm, Dyadic::from(2));
        assert_eq!(s.count(), 2);
        assert_eq!(s.vectors, vec![v(&[-1, 1], 0), v(&[1, -1], 0)]);
    }

    #[test]
    fn f4_kissing() {
        let s = f4_lattice().shortest_vectors();
        assert_eq!(s.norm, Dyadic::one());
        assert_eq!(s.count(), 24);
        assert!(s.is_negation_closed());
    }

    #[test]
    fn rank_and_shape_errors() {
        assert!(Lattice::new(DyadicMatrix::diagonal(&[1, 0])).is_err());
        assert!(Lattice::new(DyadicMatrix::zeros(2, 3)).is_err());
        assert_eq!(
            span_from_vectors(&[v(&[1, 0, 0], 0), v(&[0, 1, 0], 0)]).unwrap_err(),
            Error::RankDeficient { rank: 2, dim: 3 }
        );
    }

    #[test]
    fn span_of_unit_vectors() {
        let units: Vec<DyadicVector> = (0..4)
            .map(|i| {
                let mut e = vec![0; 4];
                e[i] = 1;
                v(&e, 0)
            })
            .collect();
        let l = span_from_vectors(&units).unwrap();
        assert!(l.same_lattice(&Lattice::new(DyadicMatrix::identity(4)).unwrap()));
        let doubled = Lattice::new(DyadicMatrix::diagonal(&[2, 2, 2, 2])).unwrap();
        assert!(doubled.equals_scaled(&l, &Dyadic::from(2)));
        assert_eq!(
            matching_scale(&doubled, &l, &[Dyadic::one(), Dyadic::from(2)]),
            Some(Dyadic::from(2))
        );
    }

    #[test]
    fn automorphism_checks() {
        let l = f4_lattice();
        assert!(l.is_automorphism(&DyadicMatrix::identity(4)).unwrap());
        assert!(l.is_automorphism(&DyadicMatrix::diagonal(&[-1, 1, 1, 1])).unwrap());
        assert_eq!(l.is_automorphism(&DyadicMatrix::diagonal(&[2, 1, 1, 1])), Err(Error::NotOrthogonal));
        assert!(l.is_automorphism(&DyadicMatrix::identity(3)).is_err());
    }

    #[test]
    fn bw16_single_sign_flip_is_not_an_automorphism() {
        let l = bw16_lattice();
        let mut d = vec![1; 16];
        d[0] = -1;
        assert!(!l.is_automorphism(&DyadicMatrix::diagonal(&d)).unwrap());
        assert!(l.is_automorphism(&DyadicMatrix::identity(16).neg()).unwrap());
    }
}
