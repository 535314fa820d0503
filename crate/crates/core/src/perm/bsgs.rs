use std::fmt::Write as _;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::Permutation;
use crate::error::{Error, Result};

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    // indices into the strong generating set
    gens: Vec<usize>,
    orbit: Vec<u32>,
    position: Vec<u32>,
    // inv_reps[k] maps orbit[k] back to `point`
    inv_reps: Vec<Permutation>,
    // (orbit index, generator index) that first reached each orbit point
    parent: Vec<Option<(usize, usize)>>,
    // per orbit point, how many of `gens` have had their Schreier generator sifted
    checked: Vec<usize>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut position = vec![ABSENT; degree];
        position[point as usize] = 0;
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            position,
            inv_reps: vec![Permutation::identity(degree)],
            parent: vec![None],
            checked: vec![0],
        }
    }

    /// Append-only orbit extension: existing points keep their representatives.
    fn extend(&mut self, strong: &[Permutation], strong_inv: &[Permutation]) {
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for &g in &self.gens {
                let q = strong[g].apply(p);
                if self.position[q as usize] == ABSENT {
                    self.position[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.inv_reps.push(strong_inv[g].compose(&self.inv_reps[k]));
                    self.parent.push(Some((k, g)));
                    self.checked.push(0);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    strong: Vec<Permutation>,
    strong_inv: Vec<Permutation>,
    levels: Vec<Level>,
}

enum Strip {
    Identity,
    /// Residue and the level at which sifting stopped (`levels.len()` if
    /// every base point was matched but the residue is not the identity).
    Residue(Permutation, usize),
}

fn image(chain: &[&Permutation], mut p: u32) -> u32 {
    for g in chain {
        p = g.apply(p);
    }
    p
}

fn materialize(chain: &[&Permutation], degree: usize) -> Permutation {
    Permutation {
        images: (0..degree as u32).map(|p| image(chain, p)).collect(),
    }
}

/// Point in the longest cycle of `p`, lowest index on ties.
fn longest_cycle_point(p: &Permutation) -> u32 {
    let mut best = (0, 0);
    for c in p.cycles() {
        if c.len() > best.0 {
            best = (c.len(), c[0]);
        }
    }
    best.1
}

fn largest_orbit_point(gens: &[Permutation], degree: usize) -> u32 {
    let mut seen = vec![false; degree];
    let mut best = (0, 0);
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start as u32];
        let mut k = 0;
        while k < orbit.len() {
            for g in gens {
                let q = g.apply(orbit[k]);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
            k += 1;
        }
        if orbit.len() > best.0 {
            best = (orbit.len(), start as u32);
        }
    }
    best.1
}

pub fn schreier_sims(gens: &[Permutation]) -> Result<Bsgs> {
    schreier_sims_with_base(gens, &[])
}

/// Deterministic Schreier–Sims. The base starts with `prefix` and is then
/// extended greedily: the largest orbit first, afterwards a point on the
/// longest cycle of the generator that needs it.
pub fn schreier_sims_with_base(gens: &[Permutation], prefix: &[u32]) -> Result<Bsgs> {
    let degree = gens.first().map(Permutation::degree).unwrap_or(0);
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation("generators of different degrees".into()));
    }
    let mut base: Vec<u32> = Vec::new();
    for &p in prefix {
        if p as usize >= degree || base.contains(&p) {
            return Err(Error::InvalidPermutation(format!("bad base point {p}")));
        }
        base.push(p);
    }
    let mut strong: Vec<Permutation> = Vec::new();
    for g in gens {
        if !g.is_identity() && !strong.contains(g) {
            strong.push(g.clone());
        }
    }
    if base.is_empty() && !strong.is_empty() {
        base.push(largest_orbit_point(&strong, degree));
    }
    for s in &strong {
        if base.iter().all(|&b| s.fixes(b)) {
            base.push(longest_cycle_point(s));
        }
    }
    let strong_inv = strong.iter().map(Permutation::inverse).collect();
    let mut bsgs = Bsgs {
        degree,
        strong,
        strong_inv,
        levels: Vec::new(),
    };
    for (l, &point) in base.iter().enumerate() {
        let mut level = Level::new(point, degree);
        level.gens = (0..bsgs.strong.len())
            .filter(|&g| base[..l].iter().all(|&b| bsgs.strong[g].fixes(b)))
            .collect();
        level.extend(&bsgs.strong, &bsgs.strong_inv);
        bsgs.levels.push(level);
    }
    bsgs.complete();
    Ok(bsgs)
}

impl Bsgs {
    fn complete(&mut self) {
        let Some(mut i) = self.levels.len().checked_sub(1) else {
            return;
        };
        loop {
            match self.first_failure(i) {
                None => {
                    let level = &mut self.levels[i];
                    let n = level.gens.len();
                    level.checked.iter_mut().for_each(|c| *c = n);
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                }
                Some((idx, gpos, residue, j)) => {
                    let level = &mut self.levels[i];
                    let n = level.gens.len();
                    level.checked[..idx].iter_mut().for_each(|c| *c = n);
                    level.checked[idx] = gpos;
                    i = self.add_generator(residue, i, j);
                }
            }
        }
    }

    /// First unchecked Schreier generator of level `i` that does not sift
    /// through the levels below it.
    fn first_failure(&self, i: usize) -> Option<(usize, usize, Permutation, usize)> {
        let level = &self.levels[i];
        let pairs: Vec<(usize, usize)> = (0..level.orbit.len())
            .flat_map(|idx| (level.checked[idx]..level.gens.len()).map(move |gpos| (idx, gpos)))
            .collect();
        pairs.par_iter().find_map_first(|&(idx, gpos)| {
            let g = level.gens[gpos];
            let beta = level.orbit[idx];
            let q = level.position[self.strong[g].apply(beta) as usize] as usize;
            if level.parent[q] == Some((idx, g)) {
                return None;
            }
            let u = level.inv_reps[idx].inverse();
            let chain = [&u, &self.strong[g], &level.inv_reps[q]];
            match self.strip(&chain, i + 1) {
                Strip::Identity => None,
                Strip::Residue(r, j) => Some((idx, gpos, r, j)),
            }
        })
    }

    /// Adds `y` (which fixes the first `j` base points) to levels `i+1..=j`,
    /// extending the base if `j` is past the end. Returns the level to resume at.
    fn add_generator(&mut self, y: Permutation, i: usize, j: usize) -> usize {
        if j == self.levels.len() {
            let point = longest_cycle_point(&y);
            self.levels.push(Level::new(point, self.degree));
        }
        let g = self.strong.len();
        self.strong_inv.push(y.inverse());
        self.strong.push(y);
        for l in i + 1..=j {
            self.levels[l].gens.push(g);
            self.levels[l].extend(&self.strong, &self.strong_inv);
        }
        j
    }

    fn strip(&self, start: &[&Permutation], from: usize) -> Strip {
        let mut chain: Vec<&Permutation> = start.to_vec();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let p = image(&chain, level.point);
            let pos = level.position[p as usize];
            if pos == ABSENT {
                return Strip::Residue(materialize(&chain, self.degree), l);
            }
            if p != level.point {
                chain.push(&level.inv_reps[pos as usize]);
            }
        }
        if (0..self.degree as u32).all(|p| image(&chain, p) == p) {
            Strip::Identity
        } else {
            Strip::Residue(materialize(&chain, self.degree), self.levels.len())
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().map(|l| BigUint::from(l.orbit.len())).product()
    }

    /// Membership by sifting.
    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && matches!(self.strip(&[p], 0), Strip::Identity)
    }

    /// Independent check of the strong generating property: every level's
    /// generators fix the earlier base points, and every Schreier generator
    /// sifts to the identity through the levels below.
    pub fn verify(&self) -> bool {
        self.levels.iter().enumerate().all(|(i, level)| {
            let fixes_prefix = level
                .gens
                .iter()
                .all(|&g| self.levels[..i].iter().all(|l| self.strong[g].fixes(l.point)));
            fixes_prefix
                && (0..level.orbit.len()).into_par_iter().all(|idx| {
                    let u = level.inv_reps[idx].inverse();
                    level.gens.iter().all(|&g| {
                        let q = level.position[self.strong[g].apply(level.orbit[idx]) as usize];
                        q != ABSENT && {
                            let chain = [&u, &self.strong[g], &level.inv_reps[q as usize]];
                            matches!(self.strip(&chain, i + 1), Strip::Identity)
                        }
                    })
                })
        })
    }

    /// `degree`, then the base, then one strong generator per line in
    /// image notation.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.degree);
        let base: Vec<String> = self.base().iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", base.join(" "));
        for s in &self.strong {
            let _ = writeln!(out, "{s}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn symmetric_group_s4() {
        let b = schreier_sims(&[cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(b.order(), BigUint::from(24u32));
        assert!(b.verify());
        assert!(b.contains(&cyc(4, &[&[2, 4]])));
        for s in b.strong_generators() {
            assert!(b.contains(s));
        }
    }

    #[test]
    fn alternating_group_rejects_odd_permutations() {
        let b = schreier_sims(&[cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(b.order(), BigUint::from(60u32));
        assert!(!b.contains(&cyc(5, &[&[1, 2]])));
        assert!(b.contains(&cyc(5, &[&[1, 2], &[3, 4]])));
        assert!(!b.contains(&Permutation::identity(4)));
    }

    #[test]
    fn trivial_and_empty() {
        let b = schreier_sims(&[Permutation::identity(3)]).unwrap();
        assert_eq!(b.order(), BigUint::from(1u32));
        assert!(b.base().is_empty());
        assert!(b.contains(&Permutation::identity(3)));
        assert_eq!(schreier_sims(&[]).unwrap().order(), BigUint::from(1u32));
    }

    #[test]
    fn base_prefix_is_respected() {
        let gens = [cyc(6, &[&[1, 2, 3, 4, 5, 6]]), cyc(6, &[&[1, 2]])];
        let b = schreier_sims_with_base(&gens, &[5, 2]).unwrap();
        assert_eq!(&b.base()[..2], &[5, 2]);
        assert_eq!(b.order(), BigUint::from(720u32));
        assert!(b.verify());
        assert!(schreier_sims_with_base(&gens, &[9]).is_err());
        assert!(schreier_sims_with_base(&gens, &[1, 1]).is_err());
    }

    #[test]
    fn mixed_degrees_rejected() {
        assert!(schreier_sims(&[Permutation::identity(3), Permutation::identity(4)]).is_err());
    }

    #[test]
    fn text_format() {
        let b = schreier_sims(&[cyc(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(b.to_text(), "3\n0\n1 2 0\n");
    }
}
