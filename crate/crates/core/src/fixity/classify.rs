use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::{above_threshold, fixity_of_group, FixityReport, Limits};
use crate::digraph::Digraph;
use crate::families::{Family, FamilyDescriptor, JSet, MAX_GROUND_SET};
use crate::geometry::{construct_row, srg_catalog, standard_space, SrgRow};
use crate::rational::{int, render, Rational};
use crate::{Error, Result};

/// Index spaces `X^r` larger than this are not searched for `J`.
const MAX_INDEX_CODES: usize = 16;
/// Table-row constructions with more projective points than this are skipped.
const MAX_ROW_POINTS: usize = 1200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    GeneralisedHamming,
    JohnsonFamily,
    SquashedJohnsonFamily,
    SrgProductFamily,
    BelowThreshold,
    NotVertexPrimitive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchConfidence {
    /// An explicit isomorphism to the constructed member was found.
    Isomorphism,
    /// Vertex count and valency agree but the isomorphism search ran out of
    /// budget.
    ParameterMatch,
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    /// The family member the digraph was identified with, also reported for
    /// `BelowThreshold` verdicts when one exists.
    pub matched: Option<FamilyDescriptor>,
    pub confidence: Option<MatchConfidence>,
    pub relfix: Rational,
    pub fixity: Option<FixityReport>,
    pub advisory: Option<String>,
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict={} relfix={}", self.verdict, render(&self.relfix))?;
        if let Some(m) = &self.matched {
            write!(f, " family={m}")?;
        }
        if self.confidence == Some(MatchConfidence::ParameterMatch) {
            write!(f, " confidence=parameter-match")?;
        }
        if let Some(a) = &self.advisory {
            write!(f, " advisory=\"{a}\"")?;
        }
        Ok(())
    }
}

fn verdict_for(family: Family) -> Verdict {
    match family {
        Family::GeneralisedHamming => Verdict::GeneralisedHamming,
        Family::Johnson { .. } => Verdict::JohnsonFamily,
        Family::SquashedJohnson => Verdict::SquashedJohnsonFamily,
        Family::SrgProduct { .. } => Verdict::SrgProductFamily,
    }
}

/// Decides whether `Aut(Γ)` is vertex-primitive, computes the relative
/// fixity, and identifies the family member isomorphic to `Γ`.
///
/// A relative fixity of at most 1/3 gives `BelowThreshold` even when a
/// family member matches; the match is then reported with an advisory.
/// A primitive digraph above the threshold that matches no enumerated
/// member is an error.
pub fn classify(graph: &Digraph, limits: &Limits) -> Result<ClassificationResult> {
    if graph.arc_count() == 0 {
        return Err(Error::NoArcs);
    }
    let aut = limits.search().automorphisms(graph)?;
    let primitive = aut.group.is_transitive() && aut.group.is_primitive().unwrap_or(false);
    let fixity = if aut.order == BigUint::from(1u32) {
        None
    } else {
        if aut.order > BigUint::from(limits.element_cap) {
            return Err(Error::ClosureExceedsCap {
                cap: limits.element_cap,
            });
        }
        Some(fixity_of_group(&aut.group, aut.order, limits.element_cap)?)
    };
    let relfix = fixity.as_ref().map_or(int(0), |f| f.relfix);
    let mut result = ClassificationResult {
        verdict: Verdict::NotVertexPrimitive,
        matched: None,
        confidence: None,
        relfix,
        fixity,
        advisory: None,
    };
    if !primitive {
        return Ok(result);
    }
    let found = match_family(graph, limits)?;
    let above = above_threshold(&relfix);
    match (found, above) {
        (Some((desc, conf)), true) => {
            result.verdict = verdict_for(desc.family);
            result.matched = Some(desc);
            result.confidence = Some(conf);
        }
        (None, true) => {
            return Err(Error::NoFamilyMatch(format!(
                "{} vertices, relative fixity {}",
                graph.vertex_count(),
                render(&relfix)
            )))
        }
        (found, false) => {
            result.verdict = Verdict::BelowThreshold;
            if let Some((desc, conf)) = found {
                result.advisory = Some(advisory(&desc));
                result.matched = Some(desc);
                result.confidence = Some(conf);
            }
        }
    }
    Ok(result)
}

fn advisory(desc: &FamilyDescriptor) -> String {
    match desc.family {
        Family::SrgProduct { row } => {
            let listed = srg_catalog(row, desc.m)
                .map(|e| render(&e.relfix))
                .unwrap_or_else(|_| "?".into());
            format!(
                "matches {desc}; table row {row} lists relative fixity {listed}, which is not above 1/3"
            )
        }
        _ => format!("matches {desc}, whose side conditions for relative fixity above 1/3 fail"),
    }
}

/// A family, its parameter `m`, arity `r` and factor digraphs.
struct Base {
    family: Family,
    m: usize,
    r: usize,
    graphs: Vec<Digraph>,
}

fn int_root(n: usize, r: u32) -> Option<usize> {
    let guess = (n as f64).powf(1.0 / r as f64).round() as usize;
    (guess.saturating_sub(1)..=guess + 1).find(|&m| m >= 2 && m.checked_pow(r) == Some(n))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Arities `r` with `v^r = n` and a searchable index space.
fn arities(v: usize, n: usize, index_size: usize) -> impl Iterator<Item = usize> {
    (1..=8u32)
        .take_while(move |&r| index_size.checked_pow(r).is_some_and(|c| c <= MAX_INDEX_CODES))
        .filter(move |&r| v.checked_pow(r) == Some(n))
        .map(|r| r as usize)
}

fn row_graphs() -> &'static [(SrgRow, usize, Digraph)] {
    static CACHE: OnceLock<Vec<(SrgRow, usize, Digraph)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::new();
        for row in SrgRow::ALL {
            for m in row.min_m()..=row.max_m() {
                let Ok(space) = standard_space(row, m) else { break };
                if space.field().order().pow(space.dim() as u32) > MAX_ROW_POINTS * 3 {
                    break;
                }
                if let Ok(rg) = construct_row(row, m) {
                    out.push((row, m, rg.graph));
                }
            }
        }
        out
    })
}

fn bases(n: usize) -> impl Iterator<Item = Result<Base>> {
    let hamming = (1..=4u32).filter_map(move |r| {
        let m = int_root(n, r)?;
        Some((|| {
            Ok(Base {
                family: Family::GeneralisedHamming,
                m,
                r: r as usize,
                graphs: vec![Digraph::loop_graph(m)?, Digraph::complete_graph(m)?],
            })
        })())
    });
    let johnson = (2..MAX_GROUND_SET / 2)
        .flat_map(move |k| (2 * k + 2..=MAX_GROUND_SET).map(move |m| (m, k)))
        .filter(move |&(m, k)| binomial(m, k) <= n)
        .flat_map(move |(m, k)| arities(binomial(m, k), n, k + 1).map(move |r| (m, k, r)))
        .map(|(m, k, r)| {
            let desc = FamilyDescriptor::new(Family::Johnson { k }, r, m, JSet::unit_vectors_over(r, k)?)?;
            Ok(Base {
                family: desc.family,
                m,
                r,
                graphs: desc.base_graphs()?,
            })
        });
    let squashed = (3..=MAX_GROUND_SET / 2)
        .filter(move |&m| binomial(2 * m, m) / 2 <= n)
        .flat_map(move |m| arities(binomial(2 * m, m) / 2, n, m / 2 + 1).map(move |r| (m, r)))
        .map(|(m, r)| {
            let desc = FamilyDescriptor::new(Family::SquashedJohnson, r, m, JSet::unit_vectors_over(r, m / 2)?)?;
            Ok(Base {
                family: desc.family,
                m,
                r,
                graphs: desc.base_graphs()?,
            })
        });
    // Only consulted once the cheaper families are exhausted.
    let srg = std::iter::once(()).flat_map(move |_| {
        row_graphs()
            .iter()
            .filter(move |(_, _, g)| (g.vertex_count() as f64) <= n as f64)
            .flat_map(move |(row, m, g)| {
                arities(g.vertex_count(), n, 3).map(move |r| {
                    Ok(Base {
                        family: Family::SrgProduct { row: *row },
                        m: *m,
                        r,
                        graphs: vec![Digraph::loop_graph(g.vertex_count())?, g.clone(), g.complement()],
                    })
                })
            })
    });
    hamming.chain(johnson).chain(squashed).chain(srg)
}

/// First family member isomorphic to `graph`, searching families in the
/// order Hamming, Johnson, squashed Johnson, table rows and, within one,
/// index sets `J` by increasing bitmask over `X^r`.
fn match_family(graph: &Digraph, limits: &Limits) -> Result<Option<(FamilyDescriptor, MatchConfidence)>> {
    let n = graph.vertex_count();
    let Ok(valency) = graph.out_valency() else {
        return Ok(None);
    };
    let mut fallback = None;
    for base in bases(n) {
        let base = base?;
        let vals: Vec<usize> = base
            .graphs
            .iter()
            .map(|g| g.out_valency())
            .collect::<Result<_>>()?;
        let k = base.graphs.len() - 1;
        let codes = (k + 1).pow(base.r as u32);
        for mask in 1u32..(1 << codes) {
            let set: Vec<u32> = (0..codes as u32).filter(|c| mask >> c & 1 == 1).collect();
            let jset = JSet::from_codes(base.r, k, set)?;
            let total: usize = jset
                .tuples()
                .iter()
                .map(|t| t.iter().map(|&i| vals[i]).product::<usize>())
                .sum();
            if total != valency || !jset.is_homogeneous()? {
                continue;
            }
            let desc = FamilyDescriptor::new(base.family, base.r, base.m, jset)?;
            let candidate = crate::families::merged_product_action(base.r, &base.graphs, &desc.jset)?;
            match limits.search().isomorphism(&candidate, graph) {
                Ok(Some(_)) => return Ok(Some((desc, MatchConfidence::Isomorphism))),
                Ok(None) => {}
                Err(e) if e.is_budget() => {
                    fallback.get_or_insert((desc, MatchConfidence::ParameterMatch));
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(fallback)
}
