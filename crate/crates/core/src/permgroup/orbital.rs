use super::PermutationGroup;
use crate::{Error, Result};

/// One orbit of a group on ordered pairs of points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbital {
    degree: usize,
    /// Ascending `(alpha, beta)` pairs.
    arcs: Vec<(usize, usize)>,
}

impl Orbital {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.arcs.iter().all(|&(a, b)| a == b)
    }

    /// The orbital equals its transpose.
    pub fn is_self_paired(&self) -> bool {
        let mut t: Vec<(usize, usize)> = self.arcs.iter().map(|&(a, b)| (b, a)).collect();
        t.sort_unstable();
        t == self.arcs
    }
}

impl PermutationGroup {
    /// Orbits on `Ω × Ω` without any transitivity requirement, ordered by
    /// their lexicographically smallest pair.
    pub fn pair_orbits(&self) -> Vec<Orbital> {
        let n = self.degree();
        let mut label = vec![u32::MAX; n * n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n * n {
            if label[start] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            label[start] = id;
            stack.push(start);
            let mut arcs = Vec::new();
            while let Some(pair) = stack.pop() {
                let (a, b) = (pair / n, pair % n);
                arcs.push((a, b));
                for g in self.generators() {
                    let img = g.image(a) * n + g.image(b);
                    if label[img] == u32::MAX {
                        label[img] = id;
                        stack.push(img);
                    }
                }
            }
            arcs.sort_unstable();
            out.push(Orbital { degree: n, arcs });
        }
        out
    }

    /// The orbitals of a transitive group; the diagonal comes first.
    pub fn orbitals(&self) -> Result<Vec<Orbital>> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(self.pair_orbits())
    }

    pub fn permutational_rank(&self) -> Result<usize> {
        Ok(self.orbitals()?.len())
    }
}
