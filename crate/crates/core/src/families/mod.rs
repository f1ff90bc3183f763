//! The named digraph families and the index-set algebra behind them.
//!
//! A merged product action digraph is built from a list of digraphs on a
//! common vertex set `V` (the first being the loop graph) and a set `J` of
//! index tuples: its vertex set is `V^r`, ordered by [`MixedRadix`] with
//! coordinate 0 most significant.
//!
//! [`MixedRadix`]: crate::permgroup::MixedRadix

mod johnson;
mod jset;
mod orbital;
mod product;

use std::fmt;
use std::str::FromStr;

pub use johnson::{
    half_partitions, induced_on_half_partitions, induced_on_subsets, johnson, k_subsets,
    squashed_johnson, symmetric_on_half_partitions, symmetric_on_subsets, MAX_GROUND_SET,
};
pub use jset::{JSet, MAX_SCAN_ARITY};
pub use orbital::{orbital_digraphs, orbital_digraphs_wreath, orbitals_match};
pub use product::{generalized_hamming, hamming, merged_product_action, MAX_MERGED_VERTICES};

use crate::digraph::Digraph;
use crate::geometry::{construct_row, SrgRow};
use crate::{Error, Result};

/// Setwise stabilizer of `J` in Sym(r).
pub fn jset_stabilizer(jset: &JSet) -> Result<crate::permgroup::PermutationGroup> {
    jset.stabilizer()
}

pub fn is_homogeneous(jset: &JSet) -> Result<bool> {
    jset.is_homogeneous()
}

pub fn is_hamming(jset: &JSet) -> Result<bool> {
    jset.is_hamming()
}

pub fn to_binary_jset(jset: &JSet) -> JSet {
    jset.to_binary()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Factors `{L_m, K_m}`.
    GeneralisedHamming,
    /// Factors `J(m, k, i)`, `i = 0..=k`.
    Johnson { k: usize },
    /// Factors `QJ(2m, m, i)`, `i = 0..=⌊m/2⌋`.
    SquashedJohnson,
    /// Factors `{L_v, Γ, complement of Γ}` with `Γ` from a table row.
    SrgProduct { row: SrgRow },
}

/// A member of one of the families: the family, the arity `r`, the family
/// parameter `m` and the index set `J ⊆ X^r`.
///
/// Text form: `hamming:r=2,m=4,j=01+10`, `johnson:m=6,k=2,j=1`,
/// `squashed:m=4,j=1`, `srg:row=ii,m=2,j=1`. `r` defaults to 1 and `j` to the
/// unit vectors `e_1, …, e_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyDescriptor {
    pub family: Family,
    pub r: usize,
    pub m: usize,
    pub jset: JSet,
}

impl FamilyDescriptor {
    pub fn new(family: Family, r: usize, m: usize, jset: JSet) -> Result<Self> {
        let d = FamilyDescriptor { family, r, m, jset };
        if d.jset.arity() != r {
            return Err(Error::Range(format!("index set arity {} ≠ r = {r}", d.jset.arity())));
        }
        if d.jset.max_index() != d.max_index() {
            return Err(Error::Range(format!(
                "index set over {{0..{}}} but the family has indices 0..={}",
                d.jset.max_index(),
                d.max_index()
            )));
        }
        Ok(d)
    }

    pub fn hamming(r: usize, m: usize) -> Self {
        Self::new(Family::GeneralisedHamming, r, m, JSet::unit_vectors(r)).expect("valid Hamming")
    }

    /// `J(m, k, i)` as the `r = 1` member with `J = {(i)}`.
    pub fn johnson(m: usize, k: usize, i: usize) -> Result<Self> {
        Self::new(Family::Johnson { k }, 1, m, JSet::new(1, k, [[i]])?)
    }

    /// `QJ(2m, m, i)` as the `r = 1` member with `J = {(i)}`.
    pub fn squashed(m: usize, i: usize) -> Result<Self> {
        Self::new(Family::SquashedJohnson, 1, m, JSet::new(1, m / 2, [[i]])?)
    }

    /// Largest index `k` of `X = {0..k}`.
    pub fn max_index(&self) -> usize {
        match self.family {
            Family::GeneralisedHamming => 1,
            Family::Johnson { k } => k,
            Family::SquashedJohnson => self.m / 2,
            Family::SrgProduct { .. } => 2,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self.family {
            Family::GeneralisedHamming => "hamming",
            Family::Johnson { .. } => "johnson",
            Family::SquashedJohnson => "squashed",
            Family::SrgProduct { .. } => "srg",
        }
    }

    /// The factor digraphs, loop graph first.
    pub fn base_graphs(&self) -> Result<Vec<Digraph>> {
        let m = self.m;
        match self.family {
            Family::GeneralisedHamming => {
                Ok(vec![Digraph::loop_graph(m)?, Digraph::complete_graph(m)?])
            }
            Family::Johnson { k } => (0..=k).map(|i| johnson(m, k, i)).collect(),
            Family::SquashedJohnson => (0..=m / 2).map(|i| squashed_johnson(2 * m, m, i)).collect(),
            Family::SrgProduct { row } => {
                let g = construct_row(row, m)?.graph;
                let complement = g.complement();
                Ok(vec![Digraph::loop_graph(g.vertex_count())?, g, complement])
            }
        }
    }

    pub fn construct(&self) -> Result<Digraph> {
        if self.family == Family::GeneralisedHamming {
            return generalized_hamming(self.r, self.m, &self.jset);
        }
        merged_product_action(self.r, &self.base_graphs()?, &self.jset)
    }

    /// The side conditions under which the family has relative fixity above
    /// 1/3: `m ≥ 4` for Hamming; `k ≥ 2`, `m ≥ 2k + 2` for Johnson; `m ≥ 4`
    /// for squashed; a homogeneous `J`, and a non-Hamming `J` outside the
    /// Hamming family.
    pub fn side_conditions_hold(&self) -> bool {
        let range = match self.family {
            Family::GeneralisedHamming => self.m >= 4,
            Family::Johnson { k } => k >= 2 && self.m >= 2 * k + 2,
            Family::SquashedJohnson => self.m >= 4,
            Family::SrgProduct { row } => self.m >= row.min_m() && self.m <= row.max_m(),
        };
        let homogeneous = self.jset.is_homogeneous().unwrap_or(false);
        let shape = match self.family {
            Family::GeneralisedHamming => true,
            _ => self.jset.is_hamming().map(|h| !h).unwrap_or(false),
        };
        range && homogeneous && shape
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.tag())?;
        match self.family {
            Family::GeneralisedHamming | Family::SquashedJohnson => {
                write!(f, "r={},m={}", self.r, self.m)?
            }
            Family::Johnson { k } => write!(f, "r={},m={},k={k}", self.r, self.m)?,
            Family::SrgProduct { row } => write!(f, "r={},row={row},m={}", self.r, self.m)?,
        }
        write!(f, ",j={}", self.jset.to_compact())
    }
}

impl FromStr for FamilyDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Range(format!("family spec {s:?}: {msg}"));
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut r = 1usize;
        let (mut m, mut k, mut row, mut j) = (None, None, None, None);
        for field in rest.split(',').filter(|f| !f.is_empty()) {
            let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let number = || value.parse::<usize>().map_err(|_| bad("expected a number"));
            match key.trim() {
                "r" => r = number()?,
                "m" => m = Some(number()?),
                "k" => k = Some(number()?),
                "row" => row = Some(value.parse::<SrgRow>()?),
                "j" => j = Some(value.to_string()),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        let m = m.ok_or_else(|| bad("missing m"))?;
        let family = match tag.trim() {
            "hamming" => Family::GeneralisedHamming,
            "johnson" => Family::Johnson {
                k: k.ok_or_else(|| bad("missing k"))?,
            },
            "squashed" => Family::SquashedJohnson,
            "srg" => Family::SrgProduct {
                row: row.ok_or_else(|| bad("missing row"))?,
            },
            _ => return Err(bad("unknown family; use hamming, johnson, squashed or srg")),
        };
        let probe = FamilyDescriptor {
            family,
            r,
            m,
            jset: JSet::unit_vectors(r.max(1)),
        };
        let kmax = probe.max_index();
        let jset = match j {
            Some(text) => JSet::from_compact(r, kmax, &text)?,
            None => JSet::unit_vectors_over(r, kmax)?,
        };
        FamilyDescriptor::new(family, r, m, jset)
    }
}
