//! Finite groups of orthogonal dyadic matrices, enumerated element by element.
//!
//! Only small groups are handled here (up to a few thousand elements). Larger
//! groups go through the permutation machinery in [`crate::perm`].

use indexmap::IndexSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::DyadicMatrix;

pub const RANK1_CAP: usize = 100;
pub const WEYL_F4_CAP: usize = 2000;
pub const PURE_TENSOR_CAP: usize = 1000;

#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    generators: Vec<DyadicMatrix>,
    elements: IndexSet<DyadicMatrix>,
    cap: usize,
}

impl FiniteMatrixGroup {
    /// Breadth-first closure under right multiplication by the generators.
    ///
    /// Each frontier is expanded in parallel and merged in order, so the
    /// element order matches a sequential run.
    pub fn closure(generators: &[DyadicMatrix], cap: usize) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::DimensionMismatch("no generators".into()))?;
        let n = first.rows();
        for g in generators {
            if g.rows() != n || g.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator is {}x{}, expected {n}x{n}",
                    g.rows(),
                    g.cols()
                )));
            }
            if !g.is_orthogonal() {
                return Err(Error::NotOrthogonal);
            }
        }
        let mut elements = IndexSet::new();
        elements.insert(DyadicMatrix::identity(n));
        let mut frontier = vec![DyadicMatrix::identity(n)];
        while !frontier.is_empty() {
            let products: Vec<DyadicMatrix> = frontier
                .par_iter()
                .flat_map_iter(|g| generators.iter().map(move |s| g * s))
                .collect();
            frontier = Vec::new();
            for p in products {
                if !elements.contains(&p) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    elements.insert(p.clone());
                    frontier.push(p);
                }
            }
        }
        Ok(FiniteMatrixGroup {
            generators: generators.to_vec(),
            elements,
            cap,
        })
    }

    pub fn generators(&self) -> &[DyadicMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &DyadicMatrix> {
        self.elements.iter()
    }

    pub fn element(&self, index: usize) -> Option<&DyadicMatrix> {
        self.elements.get_index(index)
    }

    pub fn index_of(&self, m: &DyadicMatrix) -> Option<usize> {
        self.elements.get_index_of(m)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn dimension(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn contains(&self, m: &DyadicMatrix) -> bool {
        self.elements.contains(m)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a * b == b * a))
    }

    /// `g·s ∈ G` for every element and generator, and `gᵀ ∈ G` for every element.
    pub fn is_closed(&self) -> bool {
        self.elements.par_iter().all(|g| {
            self.generators.iter().all(|s| self.elements.contains(&(g * s)))
                && self.elements.contains(&g.transpose())
        })
    }

    /// Order of each element, in enumeration order.
    pub fn element_orders(&self) -> Vec<usize> {
        self.elements
            .par_iter()
            .map(|g| {
                let mut power = g.clone();
                let mut k = 1;
                while !power.is_identity() {
                    power = &power * g;
                    k += 1;
                }
                k
            })
            .collect()
    }

    pub fn involution_count(&self) -> usize {
        self.element_orders().into_iter().filter(|&k| k == 2).count()
    }

    /// Orbits of conjugation by the generators, which are the conjugacy classes.
    pub fn conjugacy_classes(&self) -> ConjugacyClassing {
        let conjugators: Vec<(DyadicMatrix, DyadicMatrix)> =
            self.generators.iter().map(|s| (s.transpose(), s.clone())).collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut frontier = vec![start];
            while !frontier.is_empty() {
                let images: Vec<usize> = frontier
                    .par_iter()
                    .flat_map_iter(|&x| {
                        let g = &self.elements[x];
                        conjugators.iter().map(move |(si, s)| {
                            let c = &(si * g) * s;
                            self.elements.get_index_of(&c).expect("group is closed under conjugation")
                        })
                    })
                    .collect();
                frontier = Vec::new();
                for y in images {
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                        frontier.push(y);
                    }
                }
            }
            classes.push(members);
        }
        ConjugacyClassing {
            class_sizes: classes.iter().map(Vec::len).collect(),
            representatives: classes.iter().map(|c| self.elements[c[0]].clone()).collect(),
        }
    }

    /// `[G, G]`: the normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Result<FiniteMatrixGroup> {
        let n = self.dimension();
        let mut gens: Vec<DyadicMatrix> = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = &(&(&a.transpose() * &b.transpose()) * a) * b;
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        if gens.is_empty() {
            return FiniteMatrixGroup::closure(&[DyadicMatrix::identity(n)], self.cap);
        }
        loop {
            let h = FiniteMatrixGroup::closure(&gens, self.cap)?;
            let missing: Vec<DyadicMatrix> = gens
                .iter()
                .flat_map(|x| self.generators.iter().map(move |s| &(&s.transpose() * x) * s))
                .filter(|c| !h.contains(c))
                .collect();
            if missing.is_empty() {
                return Ok(h);
            }
            for c in missing {
                if !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
    }

    /// Orders `|G| = |G⁽⁰⁾|, |G⁽¹⁾|, …` until the series stabilizes.
    pub fn derived_series(&self) -> Result<Vec<usize>> {
        let mut orders = vec![self.order()];
        let mut current = self.clone();
        loop {
            let next = current.derived_subgroup()?;
            if next.order() == current.order() {
                return Ok(orders);
            }
            orders.push(next.order());
            if next.order() == 1 {
                return Ok(orders);
            }
            current = next;
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last() == Some(&1))
    }

    /// `|G / [G, G]|`.
    pub fn abelianization_order(&self) -> Result<usize> {
        Ok(self.order() / self.derived_subgroup()?.order())
    }

    /// `(1/|G|) Σ tr(g)²`, exact.
    pub fn character_norm(&self) -> BigRational {
        let sum = self
            .elements
            .par_iter()
            .map(|g| {
                let t = g.trace().to_rational();
                &t * &t
            })
            .reduce(BigRational::zero, |a, b| a + b);
        sum / BigRational::from_integer(BigInt::from(self.order()))
    }
}

pub fn closure(generators: &[DyadicMatrix], cap: usize) -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(generators, cap)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClassing {
    /// One entry per class, in order of first appearance.
    pub class_sizes: Vec<usize>,
    pub representatives: Vec<DyadicMatrix>,
}

impl ConjugacyClassing {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn total(&self) -> usize {
        self.class_sizes.iter().sum()
    }
}
