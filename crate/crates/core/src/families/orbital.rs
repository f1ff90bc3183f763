use super::{merged_product_action, JSet};
use crate::digraph::Digraph;
use crate::permgroup::{rank_r_action, PermutationGroup};
use crate::{Error, Result};

/// Orbital digraphs of a transitive group, diagonal first.
pub fn orbital_digraphs(group: &PermutationGroup) -> Result<Vec<Digraph>> {
    Ok(group.orbitals()?.iter().map(Digraph::from_orbital).collect())
}

/// One merged product action digraph per `H`-orbit on index tuples `X^r`,
/// ordered by the lexicographically least tuple of each orbit.
///
/// When `k_orbitals` are the orbital digraphs of a group `K`, these are the
/// orbital digraphs of `K ≀ H` in product action.
pub fn orbital_digraphs_wreath(
    k_orbitals: &[Digraph],
    top: &PermutationGroup,
) -> Result<Vec<Digraph>> {
    if k_orbitals.is_empty() {
        return Err(Error::Range("at least one orbital digraph is required".into()));
    }
    let r = top.degree();
    let index_action = rank_r_action(top, k_orbitals.len())?;
    let k = k_orbitals.len() - 1;
    // Orbits come back ordered by least element; codes order tuples
    // lexicographically.
    index_action
        .orbits()
        .into_iter()
        .map(|orbit| {
            let codes = orbit.into_iter().map(|c| c as u32).collect();
            merged_product_action(r, k_orbitals, &JSet::from_codes(r, k, codes)?)
        })
        .collect()
}

/// Whether the orbital digraphs of `group` are exactly those produced by
/// [`orbital_digraphs_wreath`], compared as sets of arc sets.
pub fn orbitals_match(
    group: &PermutationGroup,
    k_orbitals: &[Digraph],
    top: &PermutationGroup,
) -> Result<bool> {
    let m = k_orbitals
        .first()
        .map(Digraph::vertex_count)
        .ok_or_else(|| Error::Range("at least one orbital digraph is required".into()))?;
    let expected_degree = (m as u128).checked_pow(top.degree() as u32).unwrap_or(u128::MAX);
    if group.degree() as u128 != expected_degree {
        return Err(Error::DegreeMismatch(
            usize::try_from(expected_degree).unwrap_or(usize::MAX),
            group.degree(),
        ));
    }
    let mut ours: Vec<Digraph> = group
        .pair_orbits()
        .iter()
        .map(Digraph::from_orbital)
        .collect();
    let mut theirs = orbital_digraphs_wreath(k_orbitals, top)?;
    ours.sort();
    theirs.sort();
    Ok(ours == theirs)
}
