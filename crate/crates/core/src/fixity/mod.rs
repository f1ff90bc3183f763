//! Fixity, relative fixity and the checks built on them.
//!
//! `Fix(Γ)` is the largest number of vertices fixed by a nonidentity
//! automorphism, so `Fix(Γ) = n − μ(Aut(Γ))` with `μ` the minimal degree.
//! Everything here is exact: relative fixities are [`Rational`]s.

mod classify;
mod growth;
mod verify;

use std::fmt;

use num_bigint::BigUint;

pub use classify::{classify, ClassificationResult, MatchConfidence, Verdict};
pub use growth::{growth_csv, growth_report, GrowthRow};
pub use verify::{verify_batch, verify_family, verify_table1, verification_csv, VerificationRecord};

use crate::digraph::{AutomorphismSearch, Digraph, SearchBudget};
use crate::families::{Family, FamilyDescriptor};
use crate::geometry::srg_catalog;
use crate::permgroup::{Permutation, PermutationGroup, DEFAULT_CAP};
use crate::rational::{int, ratio, Rational};
use crate::{Error, Result};

/// Resource limits for brute-force computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group that may be materialized element by element.
    pub element_cap: usize,
    /// Wall-clock limit per automorphism or isomorphism search.
    pub search_ms: Option<u64>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            element_cap: DEFAULT_CAP,
            search_ms: None,
        }
    }
}

impl Limits {
    /// A fresh search configuration; the clock starts now.
    pub fn search(&self) -> AutomorphismSearch {
        AutomorphismSearch::with_budget(match self.search_ms {
            Some(ms) => SearchBudget::millis(ms),
            None => SearchBudget::unlimited(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Formula,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixityReport {
    pub n: usize,
    pub aut_order: BigUint,
    /// Minimal degree of `Aut(Γ)`.
    pub mu: usize,
    pub fix: usize,
    pub relfix: Rational,
    /// A nonidentity automorphism moving exactly `mu` vertices.
    pub witness: Option<Permutation>,
    pub method: Method,
}

impl fmt::Display for FixityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} aut_order={} mu={} relfix={}",
            self.n,
            self.aut_order,
            self.mu,
            crate::rational::render(&self.relfix)
        )
    }
}

/// Fixity from a materialized automorphism group.
pub fn fixity_of_group(group: &PermutationGroup, aut_order: BigUint, cap: usize) -> Result<FixityReport> {
    let n = group.degree();
    let (mu, witness) = group.minimal_degree(cap).map_err(|e| match e {
        Error::TrivialGroup => Error::RigidGraph,
        e => e,
    })?;
    Ok(FixityReport {
        n,
        aut_order,
        mu,
        fix: n - mu,
        relfix: ratio((n - mu) as i64, n as i64),
        witness: Some(witness),
        method: Method::BruteForce,
    })
}

/// Computes `Aut(Γ)`, materializes it and scans for the minimal degree.
pub fn fixity_brute(graph: &Digraph, limits: &Limits) -> Result<FixityReport> {
    let aut = limits.search().automorphisms(graph)?;
    if aut.order == BigUint::from(1u32) {
        return Err(Error::RigidGraph);
    }
    if aut.order > BigUint::from(limits.element_cap) {
        return Err(Error::ClosureExceedsCap {
            cap: limits.element_cap,
        });
    }
    fixity_of_group(&aut.group, aut.order, limits.element_cap)
}

/// The closed-form relative fixity of a family member:
/// `1 − 2/m` (Hamming), `1 − 2k(m−k)/(m(m−1))` (Johnson),
/// `(1/2)(1 − 1/(2m−1))` (squashed) and the table column (strongly regular
/// factors). The value does not depend on `r` or `J`.
pub fn relfix_formula(family: &FamilyDescriptor) -> Result<Rational> {
    let m = family.m as i64;
    match family.family {
        Family::GeneralisedHamming => {
            if m < 2 {
                return Err(Error::Range("Hamming family needs m ≥ 2".into()));
            }
            Ok(int(1) - ratio(2, m))
        }
        Family::Johnson { k } => {
            let k = k as i64;
            if k < 1 || m <= k {
                return Err(Error::Range("Johnson family needs 1 ≤ k < m".into()));
            }
            Ok(int(1) - ratio(2 * k * (m - k), m * (m - 1)))
        }
        Family::SquashedJohnson => {
            if m < 2 {
                return Err(Error::Range("squashed family needs m ≥ 2".into()));
            }
            Ok(ratio(1, 2) * (int(1) - ratio(1, 2 * m - 1)))
        }
        Family::SrgProduct { row } => Ok(srg_catalog(row, family.m)?.relfix),
    }
}

/// `1 − (μ_K · m^{r−1}) / m^r = 1 − μ_K/m`: the relative fixity when the
/// minimal degree is attained in one coordinate of the base group.
pub fn relfix_product(base_mu: usize, m: usize, r: usize) -> Result<Rational> {
    if r == 0 || base_mu == 0 || base_mu > m {
        return Err(Error::Range(format!(
            "need 1 ≤ base_mu ≤ m and r ≥ 1 (got base_mu={base_mu}, m={m}, r={r})"
        )));
    }
    Ok(int(1) - ratio(base_mu as i64, m as i64))
}

/// Whether `relfix` exceeds the 1/3 threshold.
pub fn above_threshold(relfix: &Rational) -> bool {
    *relfix > ratio(1, 3)
}
