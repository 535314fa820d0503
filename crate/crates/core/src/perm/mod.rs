//! Permutation groups: the action of lattice automorphisms on a minimal
//! shell, Schreier–Sims, and order factorization.

mod bsgs;
mod factor;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::DyadicMatrix;
use crate::lattice::ShortVectorSet;

pub use bsgs::{schreier_sims, schreier_sims_with_base, Bsgs};
pub use factor::{factorize, Factorization};

/// A bijection of `{0, …, n−1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &p in &images {
            match seen.get_mut(p as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::InvalidPermutation(format!("image {p} repeated or out of range"))),
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based cycles, e.g. `[[1, 2, 3], [4, 5]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p == 0 || q == 0 || p as usize > degree || q as usize > degree {
                    return Err(Error::InvalidPermutation(format!("point {p} outside 1..={degree}")));
                }
                images[p as usize - 1] = q - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&p| other.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn fixes(&self, point: u32) -> bool {
        self.apply(point) == point
    }

    /// Disjoint cycles, each starting at its smallest point, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start as u32;
            while !seen[p as usize] {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        let mut moved = 0;
        for c in self.cycles() {
            moved += c.len();
            *counts.entry(c.len()).or_insert(0) += 1;
        }
        if moved < self.degree() {
            counts.insert(1, self.degree() - moved);
        }
        CycleType(counts)
    }
}

impl fmt::Display for Permutation {
    /// Image notation, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Cycle length to number of cycles of that length, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType(pub BTreeMap<usize, usize>);

impl fmt::Display for CycleType {
    /// Longest cycles first: `2^1836 1^648`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().rev().map(|(len, n)| format!("{len}^{n}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Permutation of the (sorted) minimal shell induced by each matrix, acting
/// on row vectors by `v ↦ v·g`.
pub fn action_on_short_vectors(gens: &[DyadicMatrix], svs: &ShortVectorSet) -> Result<Vec<Permutation>> {
    gens.iter()
        .map(|g| {
            let gt = g.transpose();
            let images = svs
                .vectors
                .par_iter()
                .map(|v| {
                    let w = gt.mul_vec(v)?;
                    svs.index_of(&w).map(|i| i as u32).ok_or_else(|| {
                        Error::NotShellAutomorphism(format!("{v} maps to {w}, which is not a minimal vector"))
                    })
                })
                .collect::<Result<Vec<u32>>>()?;
            Permutation::from_images(images)
        })
        .collect()
}
