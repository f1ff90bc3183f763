//! Automorphism groups and isomorphism by individualization-refinement.
//!
//! Refinement splits cells by the out- and in-neighbour counts into every
//! current cell, ordering the pieces by those counts only, so it commutes
//! with relabelling. A fixed leftmost path of individualizations gives a
//! base `v_0, …, v_{d-1}`; for each level (deepest first) the search decides,
//! for every vertex `w` in the target cell, whether some automorphism fixing
//! `v_0, …, v_{i-1}` maps `v_i` to `w`. The group order is the product of the
//! resulting basic orbit lengths.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use super::Digraph;
use crate::permgroup::{DisjointSets, Permutation, PermutationGroup};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchBudget {
    deadline: Option<Instant>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget { deadline: None }
    }

    pub fn millis(ms: u64) -> Self {
        SearchBudget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::SearchBudgetExceeded),
            _ => Ok(()),
        }
    }
}

/// Generators of `Aut(Γ)` with its exact order.
#[derive(Clone, Debug)]
pub struct AutResult {
    pub group: PermutationGroup,
    pub order: BigUint,
    /// Base points of the leftmost path.
    pub base: Vec<usize>,
    /// `|v_i^{G_i}|` for each base point, `G_i` the pointwise stabilizer of
    /// the earlier base points.
    pub basic_orbit_lengths: Vec<usize>,
}

/// Ordered partition of the vertex set.
#[derive(Clone, Debug)]
struct Partition {
    cells: Vec<Vec<u32>>,
}

impl Partition {
    fn first_nontrivial(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.len() > 1)
    }

    fn individualize(&self, cell: usize, v: u32) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..cell]);
        cells.push(vec![v]);
        cells.push(self.cells[cell].iter().copied().filter(|&x| x != v).collect());
        cells.extend_from_slice(&self.cells[cell + 1..]);
        Partition { cells }
    }

    fn leaf_order(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c[0]).collect()
    }
}

struct Refiner<'a> {
    graph: &'a Digraph,
    out: Vec<Vec<u32>>,
    inn: Vec<Vec<u32>>,
    directed: bool,
}

impl<'a> Refiner<'a> {
    fn new(graph: &'a Digraph) -> Self {
        let n = graph.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in graph.arcs() {
            out[u].push(v as u32);
            inn[v].push(u as u32);
        }
        Refiner {
            graph,
            out,
            inn,
            directed: !graph.is_graph(),
        }
    }

    /// Unit partition split by loop presence, then refined.
    fn root(&self) -> (Partition, u64) {
        let n = self.graph.vertex_count() as u32;
        let (looped, plain): (Vec<u32>, Vec<u32>) =
            (0..n).partition(|&v| self.graph.has_arc(v as usize, v as usize));
        let cells = [plain, looped].into_iter().filter(|c| !c.is_empty()).collect();
        let mut p = Partition { cells };
        let trace = self.refine(&mut p);
        (p, trace)
    }

    /// Refines to the coarsest equitable partition below `p`; returns a
    /// relabelling-invariant trace of the splits.
    fn refine(&self, p: &mut Partition) -> u64 {
        let n = self.graph.vertex_count();
        let mut hasher = DefaultHasher::new();
        let mut cell_of = vec![0u32; n];
        loop {
            let k = p.cells.len();
            if k == n {
                break;
            }
            for (ci, cell) in p.cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v as usize] = ci as u32;
                }
            }
            let width = if self.directed { 2 * k } else { k };
            let mut counts = vec![0u32; n * width];
            for u in 0..n {
                let row = &mut counts[u * width..(u + 1) * width];
                for &v in &self.out[u] {
                    row[cell_of[v as usize] as usize] += 1;
                }
                if self.directed {
                    for &v in &self.inn[u] {
                        row[k + cell_of[v as usize] as usize] += 1;
                    }
                }
            }
            let row = |v: u32| &counts[v as usize * width..(v as usize + 1) * width];
            let mut cells = Vec::with_capacity(k);
            for (ci, mut cell) in std::mem::take(&mut p.cells).into_iter().enumerate() {
                if cell.len() == 1 {
                    cells.push(cell);
                    continue;
                }
                cell.sort_by(|&a, &b| row(a).cmp(row(b)));
                let mut start = 0;
                for end in 1..=cell.len() {
                    if end == cell.len() || row(cell[end]) != row(cell[start]) {
                        (ci, end - start).hash(&mut hasher);
                        row(cell[start]).hash(&mut hasher);
                        cells.push(cell[start..end].to_vec());
                        start = end;
                    }
                }
            }
            let split = cells.len() > k;
            p.cells = cells;
            if !split {
                break;
            }
        }
        p.cells.len().hash(&mut hasher);
        hasher.finish()
    }
}

struct Node {
    partition: Partition,
    trace: u64,
    /// Target cell and the vertex individualized on the leftmost path; `None`
    /// at the leaf.
    choice: Option<(usize, u32)>,
}

fn leftmost_path(refiner: &Refiner) -> Vec<Node> {
    let (mut partition, mut trace) = refiner.root();
    let mut path = Vec::new();
    loop {
        let Some(cell) = partition.first_nontrivial() else {
            path.push(Node {
                partition,
                trace,
                choice: None,
            });
            return path;
        };
        let v = partition.cells[cell][0];
        let mut next = partition.individualize(cell, v);
        let next_trace = refiner.refine(&mut next);
        path.push(Node {
            partition,
            trace,
            choice: Some((cell, v)),
        });
        partition = next;
        trace = next_trace;
    }
}

/// Searches the subtree below `p` (which corresponds to `path[depth]`) for a
/// leaf whose induced map passes `accept`.
fn descend(
    refiner: &Refiner,
    path: &[Node],
    p: &Partition,
    depth: usize,
    budget: &SearchBudget,
    accept: &dyn Fn(&[u32]) -> bool,
) -> Result<Option<Vec<u32>>> {
    budget.check()?;
    let Some((cell, _)) = path[depth].choice else {
        let left = path[depth].partition.leaf_order();
        let right = p.leaf_order();
        let mut map = vec![0u32; left.len()];
        for (&a, &b) in left.iter().zip(&right) {
            map[a as usize] = b;
        }
        return Ok(accept(&map).then_some(map));
    };
    for &u in &p.cells[cell] {
        let mut q = p.individualize(cell, u);
        if refiner.refine(&mut q) != path[depth + 1].trace {
            continue;
        }
        if let Some(map) = descend(refiner, path, &q, depth + 1, budget, accept)? {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

fn maps_arcs_into(source: &Refiner, target: &Digraph, map: &[u32]) -> bool {
    source.out.iter().enumerate().all(|(u, nbrs)| {
        let mu = map[u] as usize;
        nbrs.iter().all(|&v| target.has_arc(mu, map[v as usize] as usize))
    })
}

/// Configurable entry point for automorphism and isomorphism searches.
#[derive(Clone, Copy, Debug, Default)]
pub struct AutomorphismSearch {
    pub budget: SearchBudget,
}

impl AutomorphismSearch {
    pub fn with_budget(budget: SearchBudget) -> Self {
        AutomorphismSearch { budget }
    }

    pub fn automorphisms(&self, graph: &Digraph) -> Result<AutResult> {
        let n = graph.vertex_count();
        let refiner = Refiner::new(graph);
        let path = leftmost_path(&refiner);
        let depth = path.len() - 1;
        let accept = |map: &[u32]| maps_arcs_into(&refiner, graph, map);

        let mut gens: Vec<Permutation> = Vec::new();
        let mut lengths = vec![0usize; depth];
        for level in (0..depth).rev() {
            let node = &path[level];
            let (cell, v) = node.choice.expect("inner node");
            let mut orbits = orbit_partition(n, &gens);
            let mut failed: Vec<u32> = Vec::new();
            for &w in &node.partition.cells[cell] {
                if orbits.find(w as usize) == orbits.find(v as usize)
                    || failed
                        .iter()
                        .any(|&f| orbits.find(f as usize) == orbits.find(w as usize))
                {
                    continue;
                }
                let mut q = node.partition.individualize(cell, w);
                let found = if refiner.refine(&mut q) == path[level + 1].trace {
                    descend(&refiner, &path, &q, level + 1, &self.budget, &accept)?
                } else {
                    None
                };
                match found {
                    Some(map) => {
                        let g = Permutation::from_raw(map);
                        for x in 0..n {
                            orbits.union(x, g.image(x));
                        }
                        gens.push(g);
                    }
                    None => failed.push(w),
                }
            }
            let root = orbits.find(v as usize);
            lengths[level] = (0..n).filter(|&x| orbits.find(x) == root).count();
        }

        let order = lengths
            .iter()
            .fold(BigUint::from(1u32), |acc, &l| acc * BigUint::from(l));
        let base = path
            .iter()
            .filter_map(|node| node.choice.map(|(_, v)| v as usize))
            .collect();
        Ok(AutResult {
            group: PermutationGroup::new(n, gens)?,
            order,
            base,
            basic_orbit_lengths: lengths,
        })
    }

    /// An adjacency-preserving bijection `a → b`, if one exists.
    pub fn isomorphism(&self, a: &Digraph, b: &Digraph) -> Result<Option<Permutation>> {
        if a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count() {
            return Ok(None);
        }
        let ra = Refiner::new(a);
        let rb = Refiner::new(b);
        if ra.directed != rb.directed {
            return Ok(None);
        }
        let path = leftmost_path(&ra);
        let (root_b, trace_b) = rb.root();
        if trace_b != path[0].trace || root_b.cells.len() != path[0].partition.cells.len() {
            return Ok(None);
        }
        let accept = |map: &[u32]| maps_arcs_into(&ra, b, map);
        // candidate tree lives in `b`
        let found = descend(&rb, &path, &root_b, 0, &self.budget, &accept)?;
        Ok(found.map(Permutation::from_raw))
    }
}

fn orbit_partition(n: usize, gens: &[Permutation]) -> DisjointSets {
    let mut sets = DisjointSets::new(n);
    for g in gens {
        for x in 0..n {
            sets.union(x, g.image(x));
        }
    }
    sets
}

/// `Aut(Γ)` with no time limit.
pub fn automorphism_group(graph: &Digraph) -> Result<AutResult> {
    AutomorphismSearch::default().automorphisms(graph)
}

pub fn find_isomorphism(a: &Digraph, b: &Digraph) -> Result<Option<Permutation>> {
    AutomorphismSearch::default().isomorphism(a, b)
}

pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_CAP;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u).unwrap()
    }

    fn order(g: &Digraph) -> u64 {
        let r = automorphism_group(g).unwrap();
        for p in r.group.generators() {
            assert!(g.is_preserved_by(p));
        }
        r.order.try_into().unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&Digraph::complete_graph(4).unwrap()), 24);
        assert_eq!(order(&cycle(5)), 10);
        assert_eq!(order(&cycle(6)), 12);
        assert_eq!(order(&Digraph::complete_graph(1).unwrap()), 1);
        assert_eq!(order(&Digraph::empty(3).unwrap()), 6);
        // directed 3-cycle: only rotations
        let dc3 = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(order(&dc3), 3);
        // a loop on one vertex of K3 leaves a transposition
        let mut k3 = Digraph::complete_graph(3).unwrap();
        k3.set_arc(0, 0, true);
        assert_eq!(order(&k3), 2);
    }

    #[test]
    fn petersen() {
        // Kneser graph K(5, 2)
        let sets: Vec<u32> = (0u32..32).filter(|m| m.count_ones() == 2).collect();
        let g = Digraph::from_fn(10, |u, v| sets[u] & sets[v] == 0).unwrap();
        assert_eq!(order(&g), 120);
    }

    #[test]
    fn order_matches_closure() {
        let g = cycle(7);
        let r = automorphism_group(&g).unwrap();
        assert_eq!(
            BigUint::from(r.group.order(DEFAULT_CAP).unwrap()),
            r.order
        );
    }

    #[test]
    fn isomorphism_search() {
        let k4 = Digraph::complete_graph(4).unwrap();
        let p = Permutation::from_cycles(4, &[&[0, 2, 1]]).unwrap();
        assert!(are_isomorphic(&k4, &k4.relabel(&p).unwrap()).unwrap());
        assert!(!are_isomorphic(&k4, &cycle(4)).unwrap());
        let c6 = cycle(6);
        let two_triangles =
            Digraph::from_fn(6, |u, v| u != v && u / 3 == v / 3).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles).unwrap());
        let q = Permutation::from_cycles(6, &[&[0, 3, 5], &[1, 4]]).unwrap();
        let relabelled = c6.relabel(&q).unwrap();
        let iso = find_isomorphism(&c6, &relabelled).unwrap().unwrap();
        assert_eq!(c6.relabel(&iso).unwrap(), relabelled);
    }

    #[test]
    fn expired_budget() {
        let g = cycle(8);
        let search = AutomorphismSearch::with_budget(SearchBudget {
            deadline: Some(Instant::now() - Duration::from_secs(1)),
        });
        assert!(matches!(
            search.automorphisms(&g),
            Err(Error::SearchBudgetExceeded)
        ));
    }
}
