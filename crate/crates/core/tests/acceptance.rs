//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use primfix::digraph::{automorphism_group, srg_parameters, Digraph, SrgParameters};
use primfix::families::{
    hamming, johnson, orbital_digraphs_wreath, squashed_johnson, FamilyDescriptor, JSet,
};
use primfix::fixity::{classify, fixity_brute, growth_report, relfix_formula, verify_table1, Limits, Verdict};
use primfix::geometry::{construct_row, standard_space, SrgRow};
use primfix::permgroup::{wreath_product_action, Permutation, PermutationGroup};
use primfix::rational::ratio;
use primfix::report::Status;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, format!("took {took:.2?}, limit {limit:?}"))
}

fn fixity_case(
    graph: &Digraph,
    desc: &FamilyDescriptor,
    order: u32,
    mu: usize,
    limit: Duration,
    start: Instant,
) -> Check {
    let rep = fixity_brute(graph, &Limits::default()).map_err(err)?;
    let formula = relfix_formula(desc).map_err(err)?;
    ensure(rep.aut_order == BigUint::from(order), format!("aut order {}", rep.aut_order))?;
    ensure(rep.mu == mu, format!("mu {}", rep.mu))?;
    ensure(rep.relfix == formula, format!("relfix {} vs formula {}", rep.relfix, formula))?;
    within(start, limit)?;
    Ok(rep.to_string())
}

fn c1() -> Check {
    let t = Instant::now();
    let g = hamming(2, 4).map_err(err)?;
    ensure(g.vertex_count() == 16, "vertex count")?;
    let out = fixity_case(&g, &FamilyDescriptor::hamming(2, 4), 1152, 8, Duration::from_secs(10), t)?;
    ensure(relfix_formula(&FamilyDescriptor::hamming(2, 4)).unwrap() == ratio(1, 2), "1 - 2/4")?;
    Ok(out)
}

fn c2() -> Check {
    let t = Instant::now();
    let g = johnson(6, 2, 1).map_err(err)?;
    let desc = FamilyDescriptor::johnson(6, 2, 1).map_err(err)?;
    // μ = 2·C(m−2, k−1) for k = 2
    let mu = 2 * 4;
    fixity_case(&g, &desc, 720, mu, Duration::from_secs(30), t)
}

fn c3() -> Check {
    let t = Instant::now();
    let g = squashed_johnson(8, 4, 1).map_err(err)?;
    ensure(g.vertex_count() == 35, "vertex count")?;
    let desc = FamilyDescriptor::squashed(4, 1).map_err(err)?;
    ensure(relfix_formula(&desc).unwrap() == ratio(1, 2) * (ratio(1, 1) - ratio(1, 7)), "formula")?;
    fixity_case(&g, &desc, 40320, 20, Duration::from_secs(300), t)
}

fn c4() -> Check {
    let t = Instant::now();
    let rg = construct_row(SrgRow::I, 2).map_err(err)?;
    let params = srg_parameters(&rg.graph).map_err(err)?;
    let want = SrgParameters { v: 27, d: 10, lambda: 1, mu: 5 };
    ensure(params == Some(want), format!("parameters {params:?}"))?;
    let rep = fixity_brute(&rg.graph, &Limits::default()).map_err(err)?;
    let class = classify(&rg.graph, &Limits::default()).map_err(err)?;
    within(t, Duration::from_secs(120))?;
    let mut problems = Vec::new();
    if rep.relfix != ratio(7, 27) {
        problems.push(format!("brute relfix {} ({rep}), table 7/27", rep.relfix));
    }
    if class.verdict != Verdict::BelowThreshold || class.advisory.is_none() {
        problems.push(format!("classifier: {class}"));
    }
    if problems.is_empty() {
        Ok(format!("{rep}; {class}"))
    } else {
        Err(problems.join("; "))
    }
}

fn c5() -> Check {
    let t = Instant::now();
    let rg = construct_row(SrgRow::II, 2).map_err(err)?;
    let params = srg_parameters(&rg.graph).map_err(err)?;
    ensure(
        params == Some(SrgParameters { v: 40, d: 12, lambda: 2, mu: 4 }),
        format!("parameters {params:?}"),
    )?;
    let records = verify_table1(SrgRow::II, 2, &Limits::default()).map_err(err)?;
    let get = |q: &str| records.iter().find(|r| r.quantity == q).ok_or(format!("no {q} record"));
    let v = get("v")?;
    ensure(
        v.status == Status::Discrepancy && v.expected == "13/1" && v.measured == "40/1",
        format!("v record: {v}"),
    )?;
    for q in ["d", "lambda", "mu"] {
        ensure(get(q)?.status == Status::Pass, format!("{q}: {}", get(q)?))?;
    }
    let rf = get("relfix")?;
    ensure(rf.status == Status::Pass && rf.measured == "2/5", format!("relfix: {rf}"))?;
    within(t, Duration::from_secs(120))?;
    Ok(format!("(40, 12, 2, 4), relfix 2/5, {v}"))
}

fn c6() -> Check {
    let t = Instant::now();
    let top = PermutationGroup::symmetric(2);
    let action = wreath_product_action(&PermutationGroup::symmetric(4), &top).map_err(err)?;
    let mut from_group: Vec<Vec<(usize, usize)>> = action
        .group()
        .orbitals()
        .map_err(err)?
        .iter()
        .map(|o| o.arcs().iter().copied().sorted().collect())
        .collect();
    let factors = [Digraph::loop_graph(4).unwrap(), Digraph::complete_graph(4).unwrap()];
    let mut from_lemma: Vec<Vec<(usize, usize)>> = orbital_digraphs_wreath(&factors, &top)
        .map_err(err)?
        .iter()
        .map(|g| g.arcs().collect())
        .collect();
    from_group.sort();
    from_lemma.sort();
    let covered: usize = from_lemma.iter().map(Vec::len).sum();
    let distinct = from_lemma.iter().flatten().unique().count();
    ensure(covered == 256 && distinct == 256, format!("partition covers {covered}/{distinct} pairs"))?;
    ensure(from_group == from_lemma, "orbital partitions differ")?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("{} orbitals on 256 ordered pairs", from_group.len()))
}

fn klein() -> PermutationGroup {
    let a = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
    let b = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
    PermutationGroup::new(4, vec![a, b]).unwrap()
}

fn c7() -> Check {
    let t = Instant::now();
    // (name, group, primitive, regular) with the last two known independently
    let inner = [
        ("Sym(3)", PermutationGroup::symmetric(3), true, false),
        ("Sym(4)", PermutationGroup::symmetric(4), true, false),
        ("C3", PermutationGroup::cyclic(3), true, true),
        ("C4", PermutationGroup::cyclic(4), false, true),
        ("Alt(4)", PermutationGroup::alternating(4), true, false),
        ("Klein", klein(), false, true),
    ];
    let tops = [("C2", PermutationGroup::cyclic(2), true), ("1", PermutationGroup::trivial(2), false)];
    let cap = 10_000_000;
    let mut cases = 0;
    for (kname, k, prim, reg) in &inner {
        ensure(k.is_primitive().map_err(err)? == *prim, format!("{kname} primitivity"))?;
        ensure(k.is_regular(cap).map_err(err)? == *reg, format!("{kname} regularity"))?;
        for (hname, h, htrans) in &tops {
            let w = wreath_product_action(k, h).map_err(err)?;
            let got = w.group().is_transitive() && w.group().is_primitive().map_err(err)?;
            let want = *htrans && *prim && !*reg;
            ensure(got == want, format!("{kname} wr {hname}: primitive {got}, expected {want}"))?;
            cases += 1;
        }
    }
    within(t, Duration::from_secs(30))?;
    Ok(format!("{cases}/{cases} agree"))
}

/// Independent oracle on bitmasks over `{0,1,2}^r`.
struct MaskOracle {
    r: usize,
    space: usize,
    /// Elements of each transitive subgroup of Sym(r), as indices into `perms`.
    transitive: Vec<Vec<usize>>,
    /// Byte tables: `tables[p][chunk][byte]` is the image mask of those bits.
    tables: Vec<Vec<[u32; 256]>>,
}

impl MaskOracle {
    fn new(r: usize) -> Self {
        let space = 3usize.pow(r as u32);
        let perms: Vec<Vec<usize>> = (0..r).permutations(r).collect();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..r).map(|i| b[a[i]]).collect() };
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        // every subset of Sym(r) closed under composition is a subgroup
        let mut transitive = Vec::new();
        for bits in 1u32..(1 << perms.len()) {
            let members: Vec<usize> = (0..perms.len()).filter(|&i| bits >> i & 1 == 1).collect();
            let closed = members.iter().all(|&a| {
                members
                    .iter()
                    .all(|&b| bits >> index(&compose(&perms[a], &perms[b])) & 1 == 1)
            });
            let moves_zero_everywhere =
                (0..r).all(|j| members.iter().any(|&m| perms[m][0] == j));
            if closed && moves_zero_everywhere {
                transitive.push(members);
            }
        }
        let digits = |mut c: usize| -> Vec<usize> {
            let mut d = vec![0; r];
            for slot in d.iter_mut().rev() {
                *slot = c % 3;
                c /= 3;
            }
            d
        };
        let tables = perms
            .iter()
            .map(|p| {
                let image = |c: usize| {
                    let d = digits(c);
                    let mut out = vec![0; r];
                    for j in 0..r {
                        out[p[j]] = d[j];
                    }
                    out.iter().fold(0, |acc, &x| acc * 3 + x)
                };
                (0..space.div_ceil(8))
                    .map(|chunk| {
                        let mut t = [0u32; 256];
                        for (byte, slot) in t.iter_mut().enumerate() {
                            for bit in 0..8 {
                                let c = chunk * 8 + bit;
                                if byte >> bit & 1 == 1 && c < space {
                                    *slot |= 1 << image(c);
                                }
                            }
                        }
                        t
                    })
                    .collect()
            })
            .collect();
        MaskOracle { r, space, transitive, tables }
    }

    fn image(&self, p: usize, mask: u32) -> u32 {
        self.tables[p]
            .iter()
            .enumerate()
            .fold(0, |acc, (chunk, t)| acc | t[(mask >> (8 * chunk)) as usize & 0xff])
    }

    fn invariant_groups(&self, mask: u32) -> impl Iterator<Item = &Vec<usize>> {
        self.transitive
            .iter()
            .filter(move |h| h.iter().all(|&p| self.image(p, mask) == mask))
    }

    fn homogeneous(&self, mask: u32) -> bool {
        self.invariant_groups(mask).next().is_some()
    }

    fn core(&self, a: usize, b: usize) -> u32 {
        (0..self.space)
            .filter(|&c| {
                let mut d = vec![0; self.r];
                let mut x = c;
                for slot in d.iter_mut().rev() {
                    *slot = x % 3;
                    x /= 3;
                }
                (0..self.r).all(|j| match j {
                    j if j < a => d[j] != 0,
                    j if j < a + b => true,
                    _ => d[j] == 0,
                })
            })
            .fold(0, |m, c| m | 1 << c)
    }

    fn hamming(&self, mask: u32) -> bool {
        let cores: Vec<u32> = (0..=self.r)
            .flat_map(|a| (0..=self.r - a).map(move |b| (a, b)))
            .map(|(a, b)| self.core(a, b))
            .collect();
        self.invariant_groups(mask).any(|h| {
            cores
                .iter()
                .any(|&core| h.iter().fold(0, |u, &p| u | self.image(p, core)) == mask)
        })
    }
}

fn codes_of(mut mask: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        v.push(mask.trailing_zeros());
        mask &= mask - 1;
    }
    v
}

fn c8() -> Check {
    let t = Instant::now();
    let mut checked = 0u64;
    let (mut homogeneous, mut hamming_sets) = (0u64, 0u64);
    for r in 1..=3 {
        let oracle = MaskOracle::new(r);
        let full = 1u64 << oracle.space;
        for mask in 1..full {
            let mask = mask as u32;
            let jset = JSet::from_codes(r, 2, codes_of(mask)).map_err(err)?;
            let h = jset.is_homogeneous().map_err(err)?;
            if h != oracle.homogeneous(mask) {
                return Err(format!("is_homogeneous disagrees on r={r} {}", jset.to_compact()));
            }
            if h {
                homogeneous += 1;
                let ham = jset.is_hamming().map_err(err)?;
                if ham != oracle.hamming(mask) {
                    return Err(format!("is_hamming disagrees on r={r} {}", jset.to_compact()));
                }
                hamming_sets += u64::from(ham);
            } else if mask % 1024 == 1 || r < 3 {
                ensure(jset.is_hamming().is_err(), "is_hamming accepted a non-homogeneous set")?;
            }
            checked += 1;
        }
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!(
        "{checked} sets, {homogeneous} homogeneous, {hamming_sets} Hamming, all agree ({:.1?})",
        t.elapsed()
    ))
}

fn c9() -> Check {
    let limits = Limits::default();
    let descs = [
        FamilyDescriptor::hamming(1, 4),
        FamilyDescriptor::hamming(2, 3),
        FamilyDescriptor::hamming(2, 4),
        FamilyDescriptor::johnson(6, 2, 1).unwrap(),
        FamilyDescriptor::johnson(6, 2, 2).unwrap(),
        FamilyDescriptor::squashed(4, 1).unwrap(),
    ];
    for d in &descs {
        let res = classify(&d.construct().map_err(err)?, &limits).map_err(err)?;
        ensure(res.matched.as_ref() == Some(d), format!("{d} classified as {res}"))?;
        let verdict_ok = if res.relfix > ratio(1, 3) {
            res.verdict != Verdict::BelowThreshold
        } else {
            res.verdict == Verdict::BelowThreshold
        };
        ensure(verdict_ok, format!("{d}: {res}"))?;
    }
    let k3 = classify(&Digraph::complete_graph(3).unwrap(), &limits).map_err(err)?;
    ensure(
        k3.verdict == Verdict::BelowThreshold && k3.relfix == ratio(1, 3),
        format!("K3: {k3}"),
    )?;
    Ok(format!("{} descriptors round-trip; K3 {k3}", descs.len()))
}

fn c10() -> Check {
    let mut count = 0;
    for row in SrgRow::ALL {
        for m in row.min_m()..=row.max_m() {
            let Ok(space) = standard_space(row, m) else { break };
            if space.field().order().pow(space.dim() as u32) > 7000 {
                break;
            }
            let rg = construct_row(row, m).map_err(err)?;
            let p = srg_parameters(&rg.graph)
                .map_err(err)?
                .ok_or(format!("row {row} m={m} is not strongly regular"))?;
            let (v, d, l, mu) = (p.v as i64, p.d as i64, p.lambda as i64, p.mu as i64);
            ensure((v - d - 1) * mu == d * (d - l - 1), format!("row {row} m={m}: {p}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} graphs, zero failures"))
}

fn brute_aut_order(g: &Digraph) -> usize {
    let n = g.vertex_count();
    (0..n)
        .permutations(n)
        .filter(|p| g.arcs().all(|(u, v)| g.has_arc(p[u], p[v])))
        .count()
}

fn c11() -> Check {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for case in 0..200 {
        let n = rng.gen_range(1..=7);
        let p: f64 = rng.gen_range(0.1..0.9);
        let symmetric = case % 2 == 0;
        let mut g = Digraph::empty(n).unwrap();
        for u in 0..n {
            for v in 0..n {
                if (!symmetric || u <= v) && rng.gen_bool(p) {
                    g.set_arc(u, v, true);
                    if symmetric {
                        g.set_arc(v, u, true);
                    }
                }
            }
        }
        let got = automorphism_group(&g).map_err(err)?.order;
        let want = brute_aut_order(&g);
        ensure(got == BigUint::from(want), format!("case {case}: {got} vs {want}\n{}", g.to_text()))?;
    }
    within(t, Duration::from_secs(120))?;
    Ok("200/200 agree".into())
}

fn c12() -> Check {
    let specs: Vec<_> = (1..=4).map(|r| FamilyDescriptor::hamming(r, 4)).collect();
    let rows = growth_report(&specs).map_err(err)?;
    let constant = 3.0 / 4f64.ln();
    for (r, row) in (1..=4).zip(&rows) {
        ensure(row.n == 4usize.pow(r) && row.valency == 3 * r as usize, format!("{row:?}"))?;
        ensure((row.ratio - constant).abs() <= 1e-12 * constant, format!("{row:?}"))?;
    }
    Ok(format!("valency/ln n = {constant:.6} for r = 1..4"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("hamming fixity", c1),
        ("johnson fixity", c2),
        ("squashed johnson fixity", c3),
        ("srg row i", c4),
        ("srg row ii", c5),
        ("wreath orbitals", c6),
        ("wreath primitivity grid", c7),
        ("hamming set algebra", c8),
        ("classifier round trip", c9),
        ("srg feasibility", c10),
        ("small automorphism oracle", c11),
        ("growth report", c12),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
