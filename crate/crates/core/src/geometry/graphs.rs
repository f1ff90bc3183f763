use std::collections::{BTreeSet, HashMap};

use super::{FormKind, FormedSpace, ProjectivePoint};
use crate::digraph::Digraph;
use crate::{Error, Result};

fn normalize(space: &FormedSpace, v: &[u8]) -> Option<Vec<u8>> {
    let f = space.field();
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead)?;
    Some(v.iter().map(|&x| f.mul(x, inv)).collect())
}

/// Distinct points adjacent when orthogonal under the polar form.
pub fn orthogonality_graph(points: &[ProjectivePoint], space: &FormedSpace) -> Result<Digraph> {
    Digraph::from_fn(points.len(), |u, v| {
        u != v && space.polar(&points[u].0, &points[v].0) == 0
    })
}

/// Nonsingular points adjacent when the line through them meets the quadric
/// in exactly one point.
pub fn tangent_line_graph(points: &[ProjectivePoint], space: &FormedSpace) -> Result<Digraph> {
    if !matches!(space.kind(), FormKind::Quadratic(_)) {
        return Err(Error::Range("tangent lines need a quadratic space".into()));
    }
    let f = space.field();
    Digraph::from_fn(points.len(), |u, v| {
        if u == v {
            return false;
        }
        let (a, b) = (&points[u].0, &points[v].0);
        // every point of the line other than a is b + c·a for some scalar c
        let singular = std::iter::once(a.clone())
            .chain(f.elements().map(|c| {
                a.iter().zip(b).map(|(&x, &y)| f.add(y, f.mul(c, x))).collect()
            }))
            .filter(|p| space.form(p) == 0)
            .count();
        singular == 1
    })
}

/// Totally isotropic lines of a hermitian space, as sorted point-index
/// quintuples (indices into `space.singular_points()`).
pub fn isotropic_lines(space: &FormedSpace) -> Result<Vec<Vec<usize>>> {
    if space.kind() != FormKind::Hermitian {
        return Err(Error::Range("isotropic lines need a hermitian space".into()));
    }
    let f = space.field();
    let points = space.singular_points();
    let index: HashMap<&[u8], usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.0.as_slice(), i))
        .collect();
    let mut lines = BTreeSet::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if space.polar(&p.0, &q.0) != 0 {
                continue;
            }
            let mut line: Vec<usize> = std::iter::once(p.0.clone())
                .chain(f.elements().map(|c| {
                    p.0.iter().zip(&q.0).map(|(&x, &y)| f.add(y, f.mul(c, x))).collect()
                }))
                .map(|v| index[normalize(space, &v).expect("nonzero").as_slice()])
                .collect();
            line.sort_unstable();
            lines.insert(line);
        }
    }
    Ok(lines.into_iter().collect())
}

/// Totally isotropic lines, adjacent when they meet in a point.
pub fn isotropic_line_graph(space: &FormedSpace) -> Result<Digraph> {
    let lines = isotropic_lines(space)?;
    Digraph::from_fn(lines.len(), |u, v| {
        u != v && lines[u].iter().filter(|x| lines[v].binary_search(x).is_ok()).count() == 1
    })
}
