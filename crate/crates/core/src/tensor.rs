//! Tensor powers of the quaternions and their 4- and 16-dimensional
//! representations.
//!
//! An element of rank `r` is a Z[1/2]-combination of the `4^r` pure words
//! `a₁⊗…⊗a_r` with `a_s ∈ {e, i, j, k}`. Coordinates are indexed
//! lexicographically over `(e, i, j, k)` with slot 1 most significant, so
//! `i⊗j` sits at index `1·4 + 2 = 6`.
//!
//! Rank 2 is represented by `kron(τ(a), τ(b))`, left factor first. Rank 4
//! does not come from a Kronecker product (16 ≠ 4⁴); it is built from eight
//! tabulated single-slot matrices by multiplicativity, with `k = i·j` in each
//! slot.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{Dyadic, DyadicMatrix};
use crate::quaternion::tau_basis;
use crate::tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    E,
    I,
    J,
    K,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::E, Symbol::I, Symbol::J, Symbol::K];
    pub const IMAGINARY: [Symbol; 3] = [Symbol::I, Symbol::J, Symbol::K];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Symbol {
        Self::ALL[i]
    }

    /// Product of two basis symbols as `(sign, symbol)`.
    pub fn product(self, rhs: Symbol) -> (i8, Symbol) {
        use Symbol::*;
        match (self, rhs) {
            (E, x) | (x, E) => (1, x),
            (I, I) | (J, J) | (K, K) => (-1, E),
            (I, J) => (1, K),
            (J, I) => (-1, K),
            (J, K) => (1, I),
            (K, J) => (-1, I),
            (K, I) => (1, J),
            (I, K) => (-1, J),
        }
    }

    fn from_char(c: char) -> Option<Symbol> {
        match c {
            'e' | '1' => Some(Symbol::E),
            'i' => Some(Symbol::I),
            'j' => Some(Symbol::J),
            'k' => Some(Symbol::K),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = ['e', 'i', 'j', 'k'][self.index()];
        write!(f, "{c}")
    }
}

fn check_rank(rank: usize) -> Result<()> {
    if matches!(rank, 1 | 2 | 4) {
        Ok(())
    } else {
        Err(Error::InvalidRank(rank))
    }
}

/// A signed pure tensor `±a₁⊗…⊗a_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorWord {
    negative: bool,
    factors: Vec<Symbol>,
}

impl TensorWord {
    pub fn new(negative: bool, factors: Vec<Symbol>) -> Result<Self> {
        check_rank(factors.len())?;
        Ok(TensorWord { negative, factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn factors(&self) -> &[Symbol] {
        &self.factors
    }

    /// Lexicographic coordinate index of the unsigned word.
    pub fn index(&self) -> usize {
        self.factors.iter().fold(0, |acc, s| acc * 4 + s.index())
    }

    pub fn from_index(rank: usize, mut index: usize) -> Result<Self> {
        check_rank(rank)?;
        let mut factors = vec![Symbol::E; rank];
        for slot in (0..rank).rev() {
            factors[slot] = Symbol::from_index(index % 4);
            index /= 4;
        }
        Ok(TensorWord {
            negative: false,
            factors,
        })
    }

    /// Factor-wise product with sign bookkeeping.
    pub fn mul(&self, rhs: &TensorWord) -> Result<TensorWord> {
        if self.rank() != rhs.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: rhs.rank(),
            });
        }
        let mut negative = self.negative ^ rhs.negative;
        let factors = self
            .factors
            .iter()
            .zip(&rhs.factors)
            .map(|(&a, &b)| {
                let (s, c) = a.product(b);
                negative ^= s < 0;
                c
            })
            .collect();
        Ok(TensorWord { negative, factors })
    }
}

impl FromStr for TensorWord {
    type Err = Error;

    /// Parses `ijki`, `-i⊗j⊗k⊗i` or `i x j`; `e` or `1` denotes the unit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let factors = body
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '⊗' && *c != 'x' && *c != '*')
            .map(|c| Symbol::from_char(c).ok_or_else(|| Error::Parse(format!("bad symbol `{c}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        TensorWord::new(negative, factors)
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        let parts: Vec<String> = self.factors.iter().map(Symbol::to_string).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// A general element of the rank-`r` tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    rank: usize,
    coords: Vec<Dyadic>,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(AlgebraElement {
            rank,
            coords: vec![Dyadic::zero(); 1 << (2 * rank)],
        })
    }

    pub fn identity(rank: usize) -> Result<Self> {
        let mut out = Self::zero(rank)?;
        out.coords[0] = Dyadic::one();
        Ok(out)
    }

    pub fn from_coords(rank: usize, coords: Vec<Dyadic>) -> Result<Self> {
        check_rank(rank)?;
        if coords.len() != 1 << (2 * rank) {
            return Err(Error::DimensionMismatch(format!(
                "rank {rank} needs {} coordinates, got {}",
                1 << (2 * rank),
                coords.len()
            )));
        }
        Ok(AlgebraElement { rank, coords })
    }

    pub fn from_word(word: &TensorWord) -> Self {
        let mut out = Self::zero(word.rank()).expect("word rank is valid");
        out.coords[word.index()] = if word.is_negative() {
            -Dyadic::one()
        } else {
            Dyadic::one()
        };
        out
    }

    /// `scale · Σ words`, e.g. `½(e⊗e + i⊗j + j⊗k − k⊗i)`.
    pub fn from_words(scale: Dyadic, words: &[&str]) -> Result<Self> {
        let parsed: Vec<TensorWord> = words.iter().map(|w| w.parse()).collect::<Result<_>>()?;
        let rank = parsed.first().map(TensorWord::rank).ok_or_else(|| Error::Parse("no words".into()))?;
        let mut out = Self::zero(rank)?;
        for w in &parsed {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
            let term = if w.is_negative() { -scale.clone() } else { scale.clone() };
            out.coords[w.index()] += &term;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> &[Dyadic] {
        &self.coords
    }

    pub fn coord(&self, word: &TensorWord) -> Dyadic {
        let c = self.coords[word.index()].clone();
        if word.is_negative() {
            -c
        } else {
            c
        }
    }

    /// Nonzero terms as `(coefficient, unsigned word)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Dyadic, TensorWord)> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (c, TensorWord::from_index(self.rank, idx).expect("rank is valid")))
    }

    pub fn add(&self, rhs: &AlgebraElement) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rhs.rank,
            });
        }
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        Ok(AlgebraElement {
            rank: self.rank,
            coords,
        })
    }

    pub fn scale(&self, s: &Dyadic) -> Self {
        AlgebraElement {
            rank: self.rank,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Bilinear extension of the factor-wise product of words.
    pub fn mul(&self, rhs: &AlgebraElement) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rhs.rank,
            });
        }
        let mut out = Self::zero(self.rank)?;
        for (a, wa) in self.terms() {
            for (b, wb) in rhs.terms() {
                let w = wa.mul(&wb)?;
                let c = a * b;
                if w.is_negative() {
                    out.coords[w.index()] = &out.coords[w.index()] - &c;
                } else {
                    out.coords[w.index()] += &c;
                }
            }
        }
        Ok(out)
    }

    fn expect_rank(&self, rank: usize) -> Result<()> {
        if self.rank == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: rank,
            })
        }
    }

    fn linear_image(&self, dim: usize, word_matrix: impl Fn(&TensorWord) -> DyadicMatrix) -> DyadicMatrix {
        let mut out = DyadicMatrix::zeros(dim, dim);
        for (c, w) in self.terms() {
            out = out.checked_add(&word_matrix(&w).scale(c)).expect("same shape");
        }
        out
    }

    /// Image under the 4×4 representation τ.
    pub fn rho1(&self) -> Result<DyadicMatrix> {
        self.expect_rank(1)?;
        let tau = tau_basis();
        Ok(self.linear_image(4, |w| tau[w.factors()[0].index()].clone()))
    }

    /// Image under `a⊗b ↦ kron(τ(a), τ(b))`.
    pub fn rho2(&self) -> Result<DyadicMatrix> {
        self.expect_rank(2)?;
        let tau = tau_basis();
        Ok(self.linear_image(16, |w| {
            let f = w.factors();
            tau[f[0].index()].kron(&tau[f[1].index()])
        }))
    }

    /// Image under the 16-dimensional rank-4 representation.
    pub fn rho4(&self) -> Result<DyadicMatrix> {
        self.expect_rank(4)?;
        let slots = SlotMatrices::new();
        Ok(self.linear_image(16, |w| slots.word(w.factors())))
    }

    /// Inverse of `rho2` on its image, via the trace form.
    ///
    /// The 16 matrices `kron(τ(a), τ(b))` satisfy `tr(X·Yᵀ) = 16·δ`, so each
    /// coordinate is a normalized trace; the result is re-checked by
    /// applying `rho2`.
    pub fn from_rho2(m: &DyadicMatrix) -> Result<Self> {
        if m.rows() != 16 || m.cols() != 16 {
            return Err(Error::DimensionMismatch(format!("expected 16x16, got {}x{}", m.rows(), m.cols())));
        }
        let tau = tau_basis();
        let sixteenth = Dyadic::new(1, 4);
        let mut coords = Vec::with_capacity(16);
        for a in &tau {
            for b in &tau {
                let basis = a.kron(b).transpose();
                coords.push(&(m * &basis).trace() * &sixteenth);
            }
        }
        let out = AlgebraElement::from_coords(2, coords)?;
        if &out.rho2()? != m {
            return Err(Error::Internal("matrix is not in the image of rho2".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, w) in self.terms() {
            let negative = c < &Dyadic::zero();
            match (first, negative) {
                (true, false) => {}
                (true, true) => write!(f, "-")?,
                (false, false) => write!(f, " + ")?,
                (false, true) => write!(f, " - ")?,
            }
            first = false;
            write!(f, "{}·{w}", c.abs())?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn algebra_mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.mul(b)
}

pub fn rho1(w: &AlgebraElement) -> Result<DyadicMatrix> {
    w.rho1()
}

pub fn rho2(w: &AlgebraElement) -> Result<DyadicMatrix> {
    w.rho2()
}

pub fn rho4(w: &AlgebraElement) -> Result<DyadicMatrix> {
    w.rho4()
}

/// The tabulated single-slot matrix for `symbol ∈ {i, j}` in `slot ∈ 1..=4`.
pub fn rho4_basis(slot: usize, symbol: Symbol) -> Result<DyadicMatrix> {
    let table = match (slot, symbol) {
        (1, Symbol::I) => &tables::SLOT_I1,
        (1, Symbol::J) => &tables::SLOT_J1,
        (2, Symbol::I) => &tables::SLOT_I2,
        (2, Symbol::J) => &tables::SLOT_J2,
        (3, Symbol::I) => &tables::SLOT_I3,
        (3, Symbol::J) => &tables::SLOT_J3,
        (4, Symbol::I) => &tables::SLOT_I4,
        (4, Symbol::J) => &tables::SLOT_J4,
        _ => {
            return Err(Error::UnknownName(format!("slot symbol {symbol} in slot {slot}")));
        }
    };
    Ok(DyadicMatrix::from_table(table, 0))
}

/// All eight tabulated single-slot matrices, ordered `i1, j1, i2, …, j4`.
pub fn rho4_basis_all() -> Vec<DyadicMatrix> {
    (1..=4)
        .flat_map(|slot| [Symbol::I, Symbol::J].map(|s| rho4_basis(slot, s).expect("valid slot")))
        .collect()
}

/// Slot matrices for all four symbols, with `k = i·j`.
#[derive(Clone, Debug)]
pub struct SlotMatrices {
    slots: Vec<[DyadicMatrix; 4]>,
}

impl SlotMatrices {
    pub fn new() -> Self {
        let slots = (1..=4)
            .map(|slot| {
                let i = rho4_basis(slot, Symbol::I).expect("valid slot");
                let j = rho4_basis(slot, Symbol::J).expect("valid slot");
                let k = &i * &j;
                [DyadicMatrix::identity(16), i, j, k]
            })
            .collect();
        SlotMatrices { slots }
    }

    /// Matrix for `symbol` in 1-based `slot`.
    pub fn get(&self, slot: usize, symbol: Symbol) -> &DyadicMatrix {
        &self.slots[slot - 1][symbol.index()]
    }

    /// Product of the slot matrices of a rank-4 word, slot 1 leftmost.
    pub fn word(&self, factors: &[Symbol]) -> DyadicMatrix {
        self.word_in_order(factors, &[0, 1, 2, 3])
    }

    /// Product of the slot matrices taken in the given slot order.
    pub fn word_in_order(&self, factors: &[Symbol], order: &[usize]) -> DyadicMatrix {
        let mut out = DyadicMatrix::identity(16);
        for &s in order {
            if factors[s] != Symbol::E {
                out = &out * &self.slots[s][factors[s].index()];
            }
        }
        out
    }
}

impl Default for SlotMatrices {
    fn default() -> Self {
        Self::new()
    }
}

/// Outcome of checking the tabulated rank-4 relations.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Cross-slot commutation for every `y, y' ∈ {i, j, k}`, squares `= −I`,
/// and anticommutation of `i` and `j` within each slot.
pub fn check_rank4_relations() -> RelationReport {
    let slots = SlotMatrices::new();
    let minus_id = DyadicMatrix::identity(16).neg();
    let mut report = RelationReport::default();
    for s in 1..=4 {
        for y in Symbol::IMAGINARY {
            let m = slots.get(s, y);
            report.record((m * m) == minus_id, || format!("({y} in slot {s})^2 != -I"));
            for t in (s + 1)..=4 {
                for z in Symbol::IMAGINARY {
                    let n = slots.get(t, z);
                    report.record(m * n == n * m, || {
                        format!("{y} in slot {s} does not commute with {z} in slot {t}")
                    });
                }
            }
        }
        let (i, j) = (slots.get(s, Symbol::I), slots.get(s, Symbol::J));
        report.record((i * j) == (j * i).neg(), || format!("i and j in slot {s} do not anticommute"));
    }
    report
}

/// The rank-2 generators `e₁…e₄` of W(F₄).
pub fn weyl_f4_generators() -> [AlgebraElement; 4] {
    let half = Dyadic::half();
    [
        ["ee", "ij", "jk", "-ki"],
        ["ee", "-ii", "-jj", "-kk"],
        ["ee", "-ii", "-jk", "kj"],
        ["ee", "-ij", "-ji", "kk"],
    ]
    .map(|words| AlgebraElement::from_words(half.clone(), &words).expect("valid words"))
}

/// The rank-4 tensor expressions for `x₁…x₇`.
pub fn fact1_expressions() -> [AlgebraElement; 7] {
    let half = Dyadic::half();
    [
        ["eeee", "ijki", "jkik", "kijj"],
        ["eeee", "iiki", "jkik", "-kjjj"],
        ["eeee", "jjii", "ikkk", "kijj"],
        ["eeee", "kjik", "ikkj", "-jiji"],
        ["eeee", "kjkk", "-ikij", "-jiji"],
        ["eeee", "iiee", "jkee", "kjee"],
        ["eeee", "jjke", "ikie", "kije"],
    ]
    .map(|words| AlgebraElement::from_words(half.clone(), &words).expect("valid words"))
}

/// The tabulated 16×16 matrices for `x₁…x₇`.
pub fn tabulated_matrices() -> [DyadicMatrix; 7] {
    [
        DyadicMatrix::from_table(&tables::X1_X2, 1),
        DyadicMatrix::from_table(&tables::X2_X2, 1),
        DyadicMatrix::from_table(&tables::X3_X2, 1),
        DyadicMatrix::from_table(&tables::X4, 0),
        DyadicMatrix::from_table(&tables::X5, 0),
        DyadicMatrix::from_table(&tables::X6_X2, 1),
        DyadicMatrix::from_table(&tables::X7_X2, 1),
    ]
}

/// A group element in the 16-dimensional representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepElement {
    pub name: String,
    pub matrix: DyadicMatrix,
    pub source: Option<AlgebraElement>,
}

/// `ρ(x₁)…ρ(x₇)` as tabulated, each checked to be orthogonal.
pub fn fact1_generators() -> Result<Vec<RepElement>> {
    tabulated_matrices()
        .into_iter()
        .zip(fact1_expressions())
        .enumerate()
        .map(|(n, (matrix, source))| {
            if !matrix.is_orthogonal() {
                return Err(Error::Internal(format!("x{} is not orthogonal", n + 1)));
            }
            Ok(RepElement {
                name: format!("x{}", n + 1),
                matrix,
                source: Some(source),
            })
        })
        .collect()
}

/// Entry-wise comparison of a computed matrix against a tabulated one.
#[derive(Clone, Debug)]
pub struct GeneratorComparison {
    pub name: String,
    /// `(row, col, tabulated, computed)` for each differing entry.
    pub differences: Vec<(usize, usize, Dyadic, Dyadic)>,
}

impl GeneratorComparison {
    pub fn compare(name: &str, tabulated: &DyadicMatrix, computed: &DyadicMatrix) -> Self {
        GeneratorComparison {
            name: name.to_string(),
            differences: tabulated.differences(computed),
        }
    }

    pub fn matches(&self) -> bool {
        self.differences.is_empty()
    }
}

/// `ρ₄` of each tensor expression against the tabulated matrix.
pub fn cross_check_fact1() -> Vec<GeneratorComparison> {
    tabulated_matrices()
        .iter()
        .zip(fact1_expressions())
        .enumerate()
        .map(|(n, (tabulated, expr))| {
            let computed = expr.rho4().expect("rank 4");
            GeneratorComparison::compare(&format!("x{}", n + 1), tabulated, &computed)
        })
        .collect()
}
