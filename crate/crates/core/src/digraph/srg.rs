use super::Digraph;
use crate::{Error, Result};

/// `(v, d, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParameters {
    pub v: usize,
    pub d: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParameters {
    /// `(v − d − 1)·μ = d·(d − λ − 1)`, which every strongly regular graph
    /// satisfies by double counting paths of length two.
    pub fn is_feasible(&self) -> bool {
        let (v, d, l, m) = (
            self.v as i64,
            self.d as i64,
            self.lambda as i64,
            self.mu as i64,
        );
        (v - d - 1) * m == d * (d - l - 1)
    }

    /// Parameters of the complement graph.
    pub fn complement(&self) -> SrgParameters {
        let SrgParameters { v, d, lambda, mu } = *self;
        SrgParameters {
            v,
            d: v - d - 1,
            lambda: v + mu - 2 * d - 2,
            mu: v + lambda - 2 * d,
        }
    }
}

impl std::fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.d, self.lambda, self.mu)
    }
}

/// `Some` iff the loopless graph is regular with constant common-neighbour
/// counts on edges and on distinct non-edges.
pub fn srg_parameters(graph: &Digraph) -> Result<Option<SrgParameters>> {
    if graph.has_loops() || !graph.is_graph() {
        return Err(Error::NotAGraph);
    }
    let n = graph.vertex_count();
    let d = match graph.out_valency() {
        Ok(d) => d,
        Err(_) => return Ok(None),
    };
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|u| {
            let mut bits = vec![0u64; n.div_ceil(64)];
            for v in graph.out_neighbors(u) {
                bits[v / 64] |= 1 << (v % 64);
            }
            bits
        })
        .collect();
    let common = |u: usize, v: usize| -> usize {
        rows[u]
            .iter()
            .zip(&rows[v])
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    };
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = common(u, v);
            let slot = if graph.has_arc(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return Ok(None),
                _ => {}
            }
        }
    }
    // Complete and edgeless graphs leave one of the counts unconstrained.
    Ok(Some(SrgParameters {
        v: n,
        d,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u).unwrap()
    }

    fn triangular(m: usize) -> Digraph {
        let sets: Vec<u32> = (0u32..1 << m).filter(|s| s.count_ones() == 2).collect();
        Digraph::from_fn(sets.len(), |u, v| (sets[u] & sets[v]).count_ones() == 1).unwrap()
    }

    #[test]
    fn pentagon() {
        let p = srg_parameters(&cycle(5)).unwrap().unwrap();
        assert_eq!(p, SrgParameters { v: 5, d: 2, lambda: 0, mu: 1 });
        assert!(p.is_feasible());
    }

    #[test]
    fn triangular_graph() {
        let p = srg_parameters(&triangular(6)).unwrap().unwrap();
        assert_eq!(p, SrgParameters { v: 15, d: 8, lambda: 4, mu: 4 });
        assert!(p.is_feasible());
        let c = srg_parameters(&triangular(6).complement()).unwrap().unwrap();
        assert_eq!(c, p.complement());
    }

    #[test]
    fn not_strongly_regular() {
        assert_eq!(srg_parameters(&cycle(6)).unwrap(), None);
        let path = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(srg_parameters(&path).unwrap(), None);
    }

    #[test]
    fn rejects_digraphs() {
        assert!(matches!(
            srg_parameters(&Digraph::loop_graph(3).unwrap()),
            Err(Error::NotAGraph)
        ));
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(matches!(srg_parameters(&arc), Err(Error::NotAGraph)));
    }
}
