//! Dense digraphs on `0..n` with loops permitted.
//!
//! Equality is exact arc-set equality; isomorphism is a separate search in
//! [`are_isomorphic`].

mod aut;
mod srg;

use std::fmt::Write as _;

pub use aut::{
    are_isomorphic, automorphism_group, find_isomorphism, AutResult, AutomorphismSearch,
    SearchBudget,
};
pub use srg::{srg_parameters, SrgParameters};

use crate::permgroup::{content_lines, parse_numbers, MixedRadix, Orbital, Permutation, PermutationGroup};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={})", self.n, self.arc_count())
    }
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("a digraph needs at least one vertex".into()));
        }
        Ok(Digraph {
            n,
            adj: vec![false; n * n],
        })
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::Range(format!("arc ({u}, {v}) outside 0..{n}")));
            }
            g.adj[u * n + v] = true;
        }
        Ok(g)
    }

    /// Builds the digraph whose arcs are the pairs accepted by `arc`.
    pub fn from_fn(n: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in 0..n {
                g.adj[u * n + v] = arc(u, v);
            }
        }
        Ok(g)
    }

    pub fn from_orbital(orbital: &Orbital) -> Self {
        Self::from_arcs(orbital.degree(), orbital.arcs().iter().copied())
            .expect("orbital arcs lie in range")
    }

    /// `L_m`: exactly the `m` loops.
    pub fn loop_graph(m: usize) -> Result<Self> {
        Self::from_fn(m, |u, v| u == v)
    }

    /// `K_m`: every pair of distinct vertices, no loops.
    pub fn complete_graph(m: usize) -> Result<Self> {
        Self::from_fn(m, |u, v| u != v)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn set_arc(&mut self, u: usize, v: usize, present: bool) {
        self.adj[u * self.n + v] = present;
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.adj
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a)
            .map(move |(i, _)| (i / n, i % n))
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count()
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a)
            .map(|(u, _)| u)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&a| a)
            .count()
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.has_arc(v, v))
    }

    /// The arc set is symmetric.
    pub fn is_graph(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_arc(u, v) == self.has_arc(v, u)))
    }

    pub fn transpose(&self) -> Digraph {
        Self::from_fn(self.n, |u, v| self.has_arc(v, u)).expect("nonempty")
    }

    /// Arc `((u_1..u_r), (v_1..v_r))` iff every `(u_i, v_i)` is an arc of
    /// factor `i`; vertices indexed through [`MixedRadix`].
    pub fn direct_product(factors: &[Digraph]) -> Result<Digraph> {
        if factors.is_empty() {
            return Err(Error::Range("direct product needs a factor".into()));
        }
        let codec = MixedRadix::new(factors.iter().map(|f| f.n).collect())?;
        let n = codec.size();
        let tuples: Vec<Vec<usize>> = (0..n).map(|i| codec.decode(i)).collect();
        Self::from_fn(n, |u, v| {
            factors
                .iter()
                .enumerate()
                .all(|(i, f)| f.has_arc(tuples[u][i], tuples[v][i]))
        })
    }

    /// Union of arc sets on a shared vertex set.
    pub fn union(&self, other: &Digraph) -> Result<Digraph> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(Digraph {
            n: self.n,
            adj: self.adj.iter().zip(&other.adj).map(|(a, b)| *a || *b).collect(),
        })
    }

    /// Off-diagonal complement; the result never has loops.
    pub fn complement(&self) -> Digraph {
        Self::from_fn(self.n, |u, v| u != v && !self.has_arc(u, v)).expect("nonempty")
    }

    /// Common out-valency; fails if vertices disagree.
    pub fn out_valency(&self) -> Result<usize> {
        let d = self.out_degree(0);
        if (1..self.n).all(|v| self.out_degree(v) == d) {
            Ok(d)
        } else {
            Err(Error::Irregular)
        }
    }

    /// Weak connectivity, ignoring loops.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if !seen[v] && (self.has_arc(u, v) || self.has_arc(v, u)) {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// `adj(u, v) = adj(p(u), p(v))` for all pairs, loops included.
    pub fn is_preserved_by(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && self
                .arcs()
                .all(|(u, v)| self.has_arc(p.image(u), p.image(v)))
    }

    /// `group` acts by automorphisms and is transitive on the vertices.
    pub fn is_vertex_transitive_under(&self, group: &PermutationGroup) -> bool {
        group.degree() == self.n
            && group.generators().iter().all(|g| self.is_preserved_by(g))
            && group.is_transitive()
    }

    /// Relabels vertex `v` as `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Digraph> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch(self.n, p.degree()));
        }
        Digraph::from_arcs(self.n, self.arcs().map(|(u, v)| (p.image(u), p.image(v))))
    }

    /// `digraph <n>` followed by one `u v` line per arc, ascending.
    pub fn to_text(&self) -> String {
        let mut out = format!("digraph {}\n", self.n);
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Digraph> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "empty digraph file"))?;
        let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["digraph", n] => n
                .parse::<usize>()
                .map_err(|_| Error::parse(line_no, "bad vertex count"))?,
            _ => return Err(Error::parse(line_no, "expected header `digraph <n>`")),
        };
        let mut g = Digraph::empty(n).map_err(|e| Error::parse(line_no, e.to_string()))?;
        for (line_no, line) in lines {
            match parse_numbers(line_no, line)?[..] {
                [u, v] if u < n && v < n => g.set_arc(u, v, true),
                _ => return Err(Error::parse(line_no, format!("bad arc line {line:?}"))),
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u).unwrap()
    }

    #[test]
    fn loop_and_complete() {
        let l3 = Digraph::loop_graph(3).unwrap();
        assert_eq!(l3.arc_count(), 3);
        assert!(l3.arcs().all(|(u, v)| u == v));
        let k3 = Digraph::complete_graph(3).unwrap();
        assert_eq!(k3.arc_count(), 6);
        assert!(k3.is_graph() && !k3.has_loops());
        assert_eq!(Digraph::complete_graph(1).unwrap().arc_count(), 0);
        assert!(Digraph::empty(0).is_err());
    }

    #[test]
    fn products() {
        let k2 = Digraph::complete_graph(2).unwrap();
        let l2 = Digraph::loop_graph(2).unwrap();
        let m = Digraph::direct_product(&[k2.clone(), k2.clone()]).unwrap();
        // (0,0)-(1,1) and (0,1)-(1,0)
        assert_eq!(m.arcs().collect::<Vec<_>>(), vec![(0, 3), (1, 2), (2, 1), (3, 0)]);
        assert_eq!(
            Digraph::direct_product(&[l2.clone(), l2.clone()]).unwrap(),
            Digraph::loop_graph(4).unwrap()
        );
        let c4 = cycle(4);
        let copies = Digraph::direct_product(&[Digraph::loop_graph(3).unwrap(), c4.clone()]).unwrap();
        for u in 0..12 {
            for v in 0..12 {
                let expect = u / 4 == v / 4 && c4.has_arc(u % 4, v % 4);
                assert_eq!(copies.has_arc(u, v), expect);
            }
        }
    }

    #[test]
    fn unions() {
        let l3 = Digraph::loop_graph(3).unwrap();
        let k3 = Digraph::complete_graph(3).unwrap();
        assert_eq!(l3.union(&k3).unwrap().arc_count(), 9);
        assert_eq!(k3.union(&k3).unwrap(), k3);
        assert!(matches!(
            l3.union(&Digraph::loop_graph(2).unwrap()),
            Err(Error::SizeMismatch(3, 2))
        ));

        let k2 = Digraph::complete_graph(2).unwrap();
        let l2 = Digraph::loop_graph(2).unwrap();
        let kk = Digraph::direct_product(&[k2.clone(), k2.clone()]).unwrap();
        let lk = Digraph::direct_product(&[l2.clone(), k2.clone()]).unwrap();
        let kl = Digraph::direct_product(&[k2, l2]).unwrap();
        let all = kk.union(&lk.union(&kl).unwrap()).unwrap();
        assert_eq!(all.arc_count(), 12);
        assert_eq!(all, Digraph::complete_graph(4).unwrap());
    }

    #[test]
    fn complements() {
        assert_eq!(Digraph::complete_graph(4).unwrap().complement().arc_count(), 0);
        assert_eq!(
            Digraph::empty(4).unwrap().complement(),
            Digraph::complete_graph(4).unwrap()
        );
        let c5 = cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.arc_count(), 10);
        assert!(are_isomorphic(&c5, &comp).unwrap());
        assert_eq!(comp.complement(), c5);
    }

    #[test]
    fn valency_and_connectivity() {
        assert_eq!(Digraph::complete_graph(5).unwrap().out_valency().unwrap(), 4);
        let l4 = Digraph::loop_graph(4).unwrap();
        assert_eq!(l4.out_valency().unwrap(), 1);
        assert!(!l4.is_connected());
        assert!(cycle(6).is_connected());
        let star = Digraph::from_arcs(3, [(0, 1), (0, 2)]).unwrap();
        assert!(matches!(star.out_valency(), Err(Error::Irregular)));
        assert!(star.is_connected());
    }

    #[test]
    fn vertex_transitivity() {
        let c5 = cycle(5);
        assert!(c5.is_vertex_transitive_under(&PermutationGroup::cyclic(5)));
        assert!(!c5.is_vertex_transitive_under(&PermutationGroup::symmetric(5)));
    }

    #[test]
    fn text_round_trip() {
        let g = Digraph::from_arcs(3, [(2, 0), (0, 1), (1, 1)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "digraph 3\n0 1\n1 1\n2 0\n");
        assert_eq!(Digraph::from_text(&text).unwrap(), g);
        assert_eq!(
            Digraph::from_text("# c\ndigraph 2\n0 1 # arc\n").unwrap().arc_count(),
            1
        );
        assert!(Digraph::from_text("digraph 2\n0 2\n").is_err());
        assert!(Digraph::from_text("graph 2\n").is_err());
    }

    #[test]
    fn double_complement_property() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..9);
            let g = Digraph::from_fn(n, |u, v| u != v && rng.gen_bool(0.4)).unwrap();
            assert_eq!(g.complement().complement(), g);
        }
    }
}
