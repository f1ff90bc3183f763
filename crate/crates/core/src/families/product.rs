use super::JSet;
use crate::digraph::Digraph;
use crate::permgroup::MixedRadix;
use crate::{Error, Result};

/// Largest vertex count for a merged product (dense adjacency is `n²` bytes).
pub const MAX_MERGED_VERTICES: usize = 1 << 14;

/// The merged product action digraph: the union over `(j_1, …, j_r) ∈ J` of
/// the direct products `Γ_{j_1} × … × Γ_{j_r}` on `V^r`.
///
/// `graphs[0]` must be the loop graph on the common vertex set.
pub fn merged_product_action(r: usize, graphs: &[Digraph], jset: &JSet) -> Result<Digraph> {
    let first = graphs
        .first()
        .ok_or_else(|| Error::Range("at least one factor digraph is required".into()))?;
    let m = first.vertex_count();
    if let Some(g) = graphs.iter().find(|g| g.vertex_count() != m) {
        return Err(Error::SizeMismatch(m, g.vertex_count()));
    }
    if *first != Digraph::loop_graph(m)? {
        return Err(Error::Range("the first factor must be the loop graph".into()));
    }
    if jset.arity() != r {
        return Err(Error::Range(format!("index set has arity {}, expected {r}", jset.arity())));
    }
    if jset.max_index() >= graphs.len() {
        return Err(Error::Range(format!(
            "index {} out of range for {} factors",
            jset.max_index(),
            graphs.len()
        )));
    }
    let codec = MixedRadix::uniform(m, r)?;
    let n = codec.size();
    if n > MAX_MERGED_VERTICES {
        return Err(Error::Overflow(format!("{m}^{r} vertices")));
    }
    // labels[u * m + v]: bitmask of the factors containing the arc (u, v)
    let labels: Vec<u64> = (0..m * m)
        .map(|p| {
            graphs
                .iter()
                .enumerate()
                .filter(|(_, g)| g.has_arc(p / m, p % m))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let tuples = jset.tuples();
    let coords: Vec<Vec<usize>> = (0..n).map(|x| codec.decode(x)).collect();
    Digraph::from_fn(n, |x, y| {
        let (cx, cy) = (&coords[x], &coords[y]);
        tuples.iter().any(|t| {
            t.iter()
                .enumerate()
                .all(|(j, &i)| labels[cx[j] * m + cy[j]] >> i & 1 == 1)
        })
    })
}

/// Generalised Hamming graph `H(r, m, J)` for a homogeneous `J ⊆ {0,1}^r`.
pub fn generalized_hamming(r: usize, m: usize, jset: &JSet) -> Result<Digraph> {
    if jset.max_index() != 1 {
        return Err(Error::Range("a generalised Hamming index set lies in {0,1}^r".into()));
    }
    if !jset.is_homogeneous()? {
        return Err(Error::NotHomogeneous);
    }
    merged_product_action(
        r,
        &[Digraph::loop_graph(m)?, Digraph::complete_graph(m)?],
        jset,
    )
}

/// The Hamming graph `H(r, m)`.
pub fn hamming(r: usize, m: usize) -> Result<Digraph> {
    generalized_hamming(r, m, &JSet::unit_vectors(r))
}
