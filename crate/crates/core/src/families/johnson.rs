use crate::digraph::Digraph;
use crate::permgroup::{Permutation, PermutationGroup};
use crate::{Error, Result};

/// Largest ground set supported by the bitmask subset encoding.
pub const MAX_GROUND_SET: usize = 32;

/// The `k`-subsets of `{0, …, m−1}` as bitmasks in colex order.
pub fn k_subsets(m: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    // Gosper's hack enumerates same-weight masks in increasing order.
    let mut s: u64 = (1 << k) - 1;
    let limit: u64 = 1 << m;
    while s < limit {
        out.push(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// Representatives of the partitions of `{0, …, 2m−1}` into two `m`-sets:
/// the part containing 0, in colex order.
pub fn half_partitions(m: usize) -> Vec<u64> {
    k_subsets(2 * m, m).into_iter().filter(|s| s & 1 == 1).collect()
}

fn check_ground(m: usize) -> Result<()> {
    if m == 0 || m > MAX_GROUND_SET {
        Err(Error::Range(format!("ground set size {m} outside 1..={MAX_GROUND_SET}")))
    } else {
        Ok(())
    }
}

/// Distance-`i` Johnson graph `J(m, k, i)`: `k`-subsets adjacent when they
/// meet in `k − i` points.
pub fn johnson(m: usize, k: usize, i: usize) -> Result<Digraph> {
    check_ground(m)?;
    if k == 0 || k > m || i > k {
        return Err(Error::Range(format!("J({m}, {k}, {i}) needs 1 ≤ k ≤ m, i ≤ k")));
    }
    let sets = k_subsets(m, k);
    Digraph::from_fn(sets.len(), |u, v| {
        (sets[u] & sets[v]).count_ones() as usize == k - i
    })
}

/// Squashed distance-`i` Johnson graph `QJ(2m, m, i)` on half-partitions:
/// classes adjacent when some representatives meet in `m − i` points.
pub fn squashed_johnson(two_m: usize, m: usize, i: usize) -> Result<Digraph> {
    check_ground(two_m)?;
    if two_m != 2 * m || m < 2 || i > m / 2 {
        return Err(Error::Range(format!(
            "QJ({two_m}, {m}, {i}) needs 2m = {two_m}, m ≥ 2, i ≤ ⌊m/2⌋"
        )));
    }
    let parts = half_partitions(m);
    Digraph::from_fn(parts.len(), |u, v| {
        let meet = (parts[u] & parts[v]).count_ones() as usize;
        meet.min(m - meet) == i
    })
}

/// The permutation induced by `g` on the given sets of points.
fn induced(g: &Permutation, sets: &[u64]) -> Permutation {
    let images = sets
        .iter()
        .map(|&s| {
            let mut t = 0u64;
            let mut bits = s;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                t |= 1 << g.image(x);
                bits &= bits - 1;
            }
            t
        })
        .collect::<Vec<_>>();
    let index = |t: u64| sets.binary_search(&t).expect("closed under the action");
    Permutation::from_images(images.into_iter().map(index).collect())
        .expect("induced map is a bijection")
}

/// `group` acting on `k`-subsets of its points, in [`k_subsets`] order.
pub fn induced_on_subsets(group: &PermutationGroup, k: usize) -> Result<PermutationGroup> {
    let m = group.degree();
    check_ground(m)?;
    if k == 0 || k > m {
        return Err(Error::Range(format!("subset size {k} outside 1..={m}")));
    }
    let sets = k_subsets(m, k);
    let gens = group.generators().iter().map(|g| induced(g, &sets)).collect();
    PermutationGroup::new(sets.len(), gens)
}

/// `group` (on `2m` points) acting on half-partitions, in
/// [`half_partitions`] order.
pub fn induced_on_half_partitions(group: &PermutationGroup) -> Result<PermutationGroup> {
    let two_m = group.degree();
    check_ground(two_m)?;
    if !two_m.is_multiple_of(2) || two_m < 4 {
        return Err(Error::Range(format!("degree {two_m} is not 2m with m ≥ 2")));
    }
    let m = two_m / 2;
    let reps = half_partitions(m);
    let all = k_subsets(two_m, m);
    let full: u64 = (1 << two_m) - 1;
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            let moved = induced(g, &all);
            let images = reps
                .iter()
                .map(|&s| {
                    let t = all[moved.image(all.binary_search(&s).expect("m-set"))];
                    let rep = if t & 1 == 1 { t } else { full ^ t };
                    reps.binary_search(&rep).expect("representative")
                })
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::new(reps.len(), gens)
}

/// Sym(m) on `k`-subsets.
pub fn symmetric_on_subsets(m: usize, k: usize) -> Result<PermutationGroup> {
    induced_on_subsets(&PermutationGroup::symmetric(m), k)
}

/// Sym(2m) on partitions into two `m`-sets.
pub fn symmetric_on_half_partitions(m: usize) -> Result<PermutationGroup> {
    induced_on_half_partitions(&PermutationGroup::symmetric(2 * m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::automorphism_group;
    use crate::permgroup::DEFAULT_CAP;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn subsets_in_colex_order() {
        assert_eq!(k_subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(6, 2).len(), 15);
        assert_eq!(half_partitions(4).len(), 35);
        assert_eq!(half_partitions(3).len(), 10);
    }

    #[test]
    fn johnson_valencies() {
        assert_eq!(johnson(6, 2, 0).unwrap(), Digraph::loop_graph(15).unwrap());
        assert_eq!(johnson(6, 2, 1).unwrap().out_valency().unwrap(), 8);
        assert_eq!(johnson(6, 2, 2).unwrap().out_valency().unwrap(), 6);
        assert!(johnson(6, 2, 3).is_err());
        assert!(johnson(6, 0, 0).is_err());
    }

    #[test]
    fn johnson_partitions_all_pairs() {
        for (m, k) in [(5, 2), (6, 2), (7, 3)] {
            let n = binomial(m as u64, k as u64) as usize;
            let mut total = 0;
            for i in 0..=k {
                let g = johnson(m, k, i).unwrap();
                assert!(g.is_graph() || i == 0);
                assert_eq!(g, g.transpose());
                total += g.arc_count();
                let expected = binomial(k as u64, i as u64) * binomial((m - k) as u64, i as u64);
                assert_eq!(g.out_valency().unwrap() as u64, expected);
            }
            assert_eq!(total, n * n);
        }
    }

    #[test]
    fn squashed_valencies() {
        assert_eq!(squashed_johnson(8, 4, 0).unwrap(), Digraph::loop_graph(35).unwrap());
        assert_eq!(squashed_johnson(8, 4, 1).unwrap().out_valency().unwrap(), 16);
        assert_eq!(squashed_johnson(6, 3, 1).unwrap().out_valency().unwrap(), 9);
        assert!(squashed_johnson(8, 4, 3).is_err());
        assert!(squashed_johnson(8, 3, 1).is_err());
    }

    #[test]
    fn squashed_is_quotient_of_johnson() {
        // QJ(2m, m, i) has an arc between two classes iff J(2m, m, i) has an
        // arc between some pair of representatives.
        let m = 4;
        let all = k_subsets(2 * m, m);
        let reps = half_partitions(m);
        let full = (1u64 << (2 * m)) - 1;
        for i in 0..=m / 2 {
            let q = squashed_johnson(2 * m, m, i).unwrap();
            let j = johnson(2 * m, m, i).unwrap();
            let pos = |s: u64| all.binary_search(&s).unwrap();
            for (u, &x) in reps.iter().enumerate() {
                for (v, &y) in reps.iter().enumerate() {
                    let any = [x, full ^ x]
                        .iter()
                        .any(|&a| [y, full ^ y].iter().any(|&b| j.has_arc(pos(a), pos(b))));
                    assert_eq!(q.has_arc(u, v), any, "i={i} u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn orbitals_of_symmetric_on_pairs_are_johnson() {
        let g = symmetric_on_subsets(6, 2).unwrap();
        assert_eq!(g.order(DEFAULT_CAP).unwrap(), 720);
        let mut orbitals: Vec<Digraph> = g
            .orbitals()
            .unwrap()
            .iter()
            .map(Digraph::from_orbital)
            .collect();
        orbitals.sort();
        let mut expected: Vec<Digraph> = (0..=2).map(|i| johnson(6, 2, i).unwrap()).collect();
        expected.sort();
        assert_eq!(orbitals, expected);
    }

    #[test]
    fn orbitals_of_symmetric_on_half_partitions_are_squashed() {
        for m in [3, 4] {
            let g = symmetric_on_half_partitions(m).unwrap();
            let mut orbitals: Vec<Digraph> = g
                .orbitals()
                .unwrap()
                .iter()
                .map(Digraph::from_orbital)
                .collect();
            orbitals.sort();
            let mut expected: Vec<Digraph> = (0..=m / 2)
                .map(|i| squashed_johnson(2 * m, m, i).unwrap())
                .collect();
            expected.sort();
            assert_eq!(orbitals, expected, "m = {m}");
        }
    }

    #[test]
    fn alternating_has_the_same_orbitals() {
        let alt = induced_on_subsets(&PermutationGroup::alternating(6), 2).unwrap();
        assert_eq!(alt.permutational_rank().unwrap(), 3);
        let alt = induced_on_half_partitions(&PermutationGroup::alternating(8)).unwrap();
        assert_eq!(alt.permutational_rank().unwrap(), 3);
    }

    #[test]
    fn johnson_automorphisms() {
        let aut = automorphism_group(&johnson(6, 2, 1).unwrap()).unwrap();
        assert_eq!(aut.order, 720u32.into());
    }

    #[test]
    fn squashed_automorphisms() {
        let aut = automorphism_group(&squashed_johnson(8, 4, 1).unwrap()).unwrap();
        assert_eq!(aut.order, 40320u32.into());
    }
}
