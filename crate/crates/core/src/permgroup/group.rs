use std::sync::OnceLock;

use indexmap::IndexSet;

use super::blocks::DisjointSets;
use super::Permutation;
use crate::{Error, Result};

/// Element cap for group materialization.
pub const DEFAULT_CAP: usize = 10_000_000;

/// A permutation group given by generators, with its element list
/// materialized on demand by breadth-first closure.
#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceLock<Vec<Permutation>>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(e) = self.elements.get() {
            let _ = elements.set(e.clone());
        }
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements,
        }
    }
}

impl PermutationGroup {
    /// A group from generators; nothing is materialized yet.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Range("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermutationGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    /// Builds the group and materializes its full element set.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let g = Self::new(degree, generators)?;
        g.elements(cap)?;
        Ok(g)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
            if degree > 2 {
                gens.push(Permutation::from_cycles(degree, &[&[0, 1]]).unwrap());
            }
        }
        Self::new(degree, gens).expect("positive degree")
    }

    pub fn alternating(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 3 {
            gens.push(Permutation::from_cycles(degree, &[&[0, 1, 2]]).unwrap());
            if degree > 3 {
                let long: Vec<usize> = if degree % 2 == 1 {
                    (0..degree).collect()
                } else {
                    (1..degree).collect()
                };
                gens.push(Permutation::from_cycles(degree, &[&long]).unwrap());
            }
        }
        Self::new(degree, gens).expect("positive degree")
    }

    pub fn cyclic(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
        }
        Self::new(degree, gens).expect("positive degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The full element list in deterministic closure order, identity first.
    pub fn elements(&self, cap: usize) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let closure = self.closure(cap)?;
        Ok(self.elements.get_or_init(|| closure))
    }

    /// Materialized elements if a previous call already computed them.
    pub fn cached_elements(&self) -> Option<&[Permutation]> {
        self.elements.get().map(Vec::as_slice)
    }

    fn closure(&self, cap: usize) -> Result<Vec<Permutation>> {
        let gens: Vec<&Permutation> = self
            .generators
            .iter()
            .filter(|g| !g.is_identity())
            .collect();
        let mut set = IndexSet::new();
        set.insert(Permutation::identity(self.degree));
        let mut next = 0;
        while next < set.len() {
            let current = set[next].clone();
            for g in &gens {
                let p = current.then(g);
                if set.insert(p) && set.len() > cap {
                    return Err(Error::ClosureExceedsCap { cap });
                }
            }
            next += 1;
        }
        Ok(set.into_iter().collect())
    }

    pub fn order(&self, cap: usize) -> Result<u64> {
        Ok(self.elements(cap)?.len() as u64)
    }

    pub fn contains(&self, p: &Permutation, cap: usize) -> Result<bool> {
        Ok(self.elements(cap)?.contains(p))
    }

    /// Orbits as ascending point lists, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut sets = DisjointSets::new(self.degree);
        for g in &self.generators {
            for x in 0..self.degree {
                sets.union(x, g.image(x));
            }
        }
        sets.classes()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Smallest block of imprimitivity containing `alpha` and `beta`.
    pub fn minimal_block(&self, alpha: usize, beta: usize) -> Vec<usize> {
        let mut sets = DisjointSets::new(self.degree);
        let mut pending = Vec::new();
        if sets.union(alpha, beta) {
            pending.push((alpha, beta));
        }
        while let Some((x, y)) = pending.pop() {
            for g in &self.generators {
                let (gx, gy) = (sets.find(g.image(x)), sets.find(g.image(y)));
                if gx != gy {
                    sets.union(gx, gy);
                    pending.push((gx, gy));
                }
            }
        }
        let root = sets.find(alpha);
        (0..self.degree).filter(|&x| sets.find(x) == root).collect()
    }

    /// No block system other than the trivial ones. Groups of degree at most
    /// two count as primitive.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if self.degree <= 2 {
            return Ok(true);
        }
        Ok((1..self.degree).all(|beta| self.minimal_block(0, beta).len() == self.degree))
    }

    pub fn is_regular(&self, cap: usize) -> Result<bool> {
        Ok(self.is_transitive() && self.order(cap)? == self.degree as u64)
    }

    /// Minimum support size over nonidentity elements, with the first element
    /// in closure order attaining it.
    pub fn minimal_degree(&self, cap: usize) -> Result<(usize, Permutation)> {
        let elements = self.elements(cap)?;
        elements
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| (p.support_size(), p))
            .min_by_key(|&(s, _)| s)
            .map(|(s, p)| (s, p.clone()))
            .ok_or(Error::TrivialGroup)
    }
}
