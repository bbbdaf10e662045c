//! Exhaustive self-test suites comparing every fast path with the exact
//! oracles over all small graphs.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::families::GraphFamily;
use crate::graph::Graph;
use crate::hereditary::generate::{all_graphs_up_to, generate_class};
use crate::hereditary::lemmas::symmetric_difference;
use crate::hereditary::{
    are_isomorphic, find_claw, has_hereditary_gap_at_most_1, independent_domination_claw_2p3_free,
    mine_forbidden_catalog,
};
use crate::io::to_graph6;
use crate::oracles;
use crate::partitions::{
    all_clique_partitions, certify_gap_at_most, find_alpha_clique_partition, gap_via_tightness, is_k_tight,
    CliquePartition, TightnessEquivalence,
};
use crate::reductions::{
    build_gap1_gadget, reduce_wellcovered_to_gap, verify_gadget_claims, verify_star_union_reduction,
    verify_universal_reduction,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Four tightness conditions agree on connected semi-perfect graphs.
    Tightness,
    /// Gap from tightness equals the oracle gap.
    GapFormula,
    /// Bounded witness search agrees with the reference tightness check.
    BoundedWitness,
    /// {claw, 2P3}-freeness iff hereditary gap at most one.
    Claw2P3,
    /// Forbidden-subgraph catalogs for k = 0, 1, 2.
    Miner,
    /// Gap-one gadget claims.
    Gadget,
    /// Universal-vertex reduction.
    UniversalVertex,
    /// Independent domination pipeline on {claw, 2P3}-free graphs.
    Domination,
    /// Star-union reduction and gap additivity.
    StarUnion,
    /// Symmetric differences of maximal independent sets.
    SymmetricDifference,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Tightness,
        Suite::GapFormula,
        Suite::BoundedWitness,
        Suite::Claw2P3,
        Suite::Miner,
        Suite::Gadget,
        Suite::UniversalVertex,
        Suite::Domination,
        Suite::StarUnion,
        Suite::SymmetricDifference,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Tightness => "tightness",
            Suite::GapFormula => "gap-formula",
            Suite::BoundedWitness => "bounded-witness",
            Suite::Claw2P3 => "claw-2p3",
            Suite::Miner => "miner",
            Suite::Gadget => "gadget",
            Suite::UniversalVertex => "universal-vertex",
            Suite::Domination => "domination",
            Suite::StarUnion => "star-union",
            Suite::SymmetricDifference => "symmetric-difference",
        }
    }

    pub fn default_max_n(&self) -> usize {
        match self {
            Suite::Gadget => 5,
            Suite::StarUnion => 6,
            Suite::UniversalVertex | Suite::SymmetricDifference => 7,
            Suite::Domination => 9,
            _ => 8,
        }
    }

    /// Values of `k` exercised when none are given.
    pub fn default_ks(&self) -> Vec<usize> {
        match self {
            Suite::BoundedWitness => vec![0, 1, 2],
            Suite::Gadget | Suite::UniversalVertex => vec![2, 3],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub max_n: usize,
    /// Number of (graph, parameter) cases checked.
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, g: &Graph, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                graph6: to_graph6(g),
                detail: detail(),
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self
    }
}

/// Runs `per_graph` over `graphs` in parallel, keeping input order.
fn over<F>(graphs: &[Graph], per_graph: F) -> Result<Tally>
where
    F: Fn(&Graph, &mut Tally) -> Result<()> + Sync,
{
    let parts: Vec<Result<Tally>> = graphs
        .par_iter()
        .map(|g| {
            let mut t = Tally::default();
            per_graph(g, &mut t)?;
            Ok(t)
        })
        .collect();
    parts.into_iter().try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

pub fn run_suite(suite: Suite, max_n: Option<usize>, ks: &[usize]) -> Result<SuiteOutcome> {
    let max_n = max_n.unwrap_or_else(|| suite.default_max_n());
    let ks: Vec<usize> = if ks.is_empty() { suite.default_ks() } else { ks.to_vec() };
    let start = Instant::now();
    let tally = match suite {
        Suite::Tightness => tightness(max_n)?,
        Suite::GapFormula => gap_formula(max_n)?,
        Suite::BoundedWitness => bounded_witness(max_n, &ks)?,
        Suite::Claw2P3 => claw_2p3(max_n)?,
        Suite::Miner => miner(max_n)?,
        Suite::Gadget => gadget(max_n, &ks)?,
        Suite::UniversalVertex => universal_vertex(max_n, &ks)?,
        Suite::Domination => domination(max_n)?,
        Suite::StarUnion => star_union(max_n)?,
        Suite::SymmetricDifference => symmetric_differences(max_n)?,
    };
    Ok(SuiteOutcome {
        suite: suite.name().to_string(),
        max_n,
        checked: tally.checked,
        failures: tally.failures,
        notes: tally.notes,
        elapsed: start.elapsed(),
    })
}

fn semi_perfect(g: &Graph) -> Result<bool> {
    Ok(oracles::clique_cover_number(g)? == oracles::independence_number(g)?)
}

fn tightness(max_n: usize) -> Result<Tally> {
    let graphs: Vec<Graph> = all_graphs_up_to(max_n)?.into_iter().filter(Graph::is_connected).collect();
    over(&graphs, |g, t| {
        if !semi_perfect(g)? {
            return Ok(());
        }
        let eq = TightnessEquivalence::new(g)?;
        for k in 1..=eq.alpha() {
            let r = eq.check(k)?;
            t.check(r.agree, g, || format!("{r:?}"));
        }
        Ok(())
    })
}

fn gap_formula(max_n: usize) -> Result<Tally> {
    over(&all_graphs_up_to(max_n)?, |g, t| {
        if !semi_perfect(g)? {
            return Ok(());
        }
        let via = gap_via_tightness(g)?;
        let gap = oracles::independence_gap(g)?;
        t.check(via == gap, g, || format!("tightness gives {via}, oracle gap {gap}"));
        Ok(())
    })
}

const CERTIFY_CLIQUE_BOUND: usize = 3;

fn bounded_witness(max_n: usize, ks: &[usize]) -> Result<Tally> {
    let levels = generate_class(max_n, |g| find_triangle(g).is_none())?;
    let graphs: Vec<Graph> = levels.into_iter().skip(1).flatten().collect();
    over(&graphs, |g, t| {
        for p in all_clique_partitions(g)? {
            let p = masks_to_partition(g, &p);
            for &k in ks {
                let bounded = certify_gap_at_most(g, &p, k, CERTIFY_CLIQUE_BOUND)?.verdict;
                let reference = k + 1 > p.len() || is_k_tight(g, &p, k + 1)?.verdict;
                t.check(bounded == reference, g, || {
                    format!("partition {:?}, k={k}: bounded {bounded}, reference {reference}", p.to_lists())
                });
            }
        }
        if let Some(p) = find_alpha_clique_partition(g)? {
            let gap = oracles::independence_gap(g)?;
            for &k in ks {
                let v = certify_gap_at_most(g, &p, k, CERTIFY_CLIQUE_BOUND)?.verdict;
                t.check(v == (gap <= k), g, || format!("α-partition, k={k}: verdict {v}, gap {gap}"));
            }
        }
        Ok(())
    })
}

fn find_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    g.edges().find_map(|(u, v)| g.neighbors(u).and(g.neighbors(v)).first().map(|w| (u, v, w)))
}

pub(crate) fn masks_to_partition(g: &Graph, p: &[u64]) -> CliquePartition {
    CliquePartition::new(p.iter().map(|&m| VertexSet::from_mask(g.n(), m)).collect())
}

fn claw_2p3(max_n: usize) -> Result<Tally> {
    over(&all_graphs_up_to(max_n)?, |g, t| {
        let fast = has_hereditary_gap_at_most_1(g);
        let h = oracles::hereditary_independence_gap(g)?;
        t.check(fast == (h <= 1), g, || format!("claw/2P3-free {fast}, hereditary gap {h}"));
        Ok(())
    })
}

/// Gap at least `k + 1`, every proper induced subgraph at most `k`, and
/// bipartite unless it is the star or the disjoint paths.
fn minimal_member_check(g: &Graph, k: usize) -> Result<Option<String>> {
    let gap = oracles::independence_gap(g)?;
    if gap <= k {
        return Ok(Some(format!("gap {gap} <= {k}")));
    }
    for v in 0..g.n() {
        let h = oracles::hereditary_independence_gap(&g.delete_vertex(v))?;
        if h > k {
            return Ok(Some(format!("deleting {v} leaves hereditary gap {h}")));
        }
    }
    if !g.is_bipartite() {
        return Ok(Some("member is not bipartite".into()));
    }
    if g.n() < k + 3 {
        return Ok(Some(format!("member has only {} vertices", g.n())));
    }
    Ok(None)
}

fn same_members(found: &[Graph], expected: &[Graph]) -> bool {
    found.len() == expected.len() && expected.iter().all(|e| found.iter().any(|f| are_isomorphic(e, f)))
}

fn miner(max_n: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let p3 = GraphFamily::Path(3).build()?;
    let claw = GraphFamily::Claw.build()?;
    let two_p3 = GraphFamily::CopiesOfP3(2).build()?;

    let c0 = mine_forbidden_catalog(0, max_n.min(5))?;
    t.check(same_members(&c0.members, std::slice::from_ref(&p3)), &p3, || {
        format!("k=0 catalog: {:?}", c0.member_forms())
    });
    let c1 = mine_forbidden_catalog(1, max_n)?;
    t.check(same_members(&c1.members, &[claw.clone(), two_p3]), &claw, || {
        format!("k=1 catalog: {:?}", c1.member_forms())
    });
    let c2 = mine_forbidden_catalog(2, max_n.saturating_sub(1))?;
    let k14 = GraphFamily::Star(4).build()?;
    let claw_p3 = claw.disjoint_union(&p3)?;
    for expected in [&k14, &claw_p3] {
        if expected.n() <= c2.max_n {
            let present = c2.members.iter().any(|m| are_isomorphic(m, expected));
            t.check(present, expected, || "missing from the k=2 catalog".into());
        }
    }
    for (k, c) in [(0, &c0), (1, &c1), (2, &c2)] {
        for m in &c.members {
            let problem = minimal_member_check(m, k)?;
            t.check(problem.is_none(), m, || format!("k={k}: {}", problem.clone().unwrap_or_default()));
        }
        t.notes.push(format!(
            "k={k}: {} members up to {} vertices, derived bound {}, complete {}",
            c.members.len(),
            c.max_n,
            c.derived_bound,
            c.complete_flag
        ));
    }
    Ok(t)
}

fn gadget(max_n: usize, ks: &[usize]) -> Result<Tally> {
    over(&all_graphs_up_to(max_n)?, |g, t| {
        for &k in ks {
            let a = build_gap1_gadget(g, k)?;
            let claims = verify_gadget_claims(&a, g, k)?;
            t.check(claims.all_hold(), g, || format!("k={k}: {claims:?}"));
        }
        Ok(())
    })
}

fn universal_vertex(max_n: usize, ks: &[usize]) -> Result<Tally> {
    over(&all_graphs_up_to(max_n)?, |g, t| {
        for &k in ks {
            let r = verify_universal_reduction(g, k)?;
            let witness_ok = match r.witness_gap {
                Some(w) => r.alpha >= k && w + 1 == k,
                None => r.alpha < k,
            };
            t.check(r.holds && witness_ok, g, || format!("k={k}: {r:?}"));
        }
        Ok(())
    })
}

fn domination(max_n: usize) -> Result<Tally> {
    let levels = generate_class(max_n, has_hereditary_gap_at_most_1)?;
    let graphs: Vec<Graph> = levels.into_iter().skip(1).flatten().collect();
    over(&graphs, |g, t| {
        let fast = independent_domination_claw_2p3_free(g)?;
        let exact = oracles::independent_domination_number(g)?;
        t.check(fast == exact, g, || format!("pipeline {fast}, oracle {exact}"));
        Ok(())
    })
}

const STAR_UNION_MAX_LEAVES: usize = 4;

fn star_union(max_n: usize) -> Result<Tally> {
    let graphs = all_graphs_up_to(max_n)?;
    let mut t = over(&graphs, |g, t| {
        let gap = oracles::independence_gap(g)?;
        for m in 0..=STAR_UNION_MAX_LEAVES {
            let union = reduce_wellcovered_to_gap(g, 0, m)?.graph;
            let got = oracles::independence_gap(&union)?;
            let want = gap + m.saturating_sub(1);
            t.check(got == want, g, || format!("K1,{m}: gap {got}, expected {want}"));
        }
        for k in 0..STAR_UNION_MAX_LEAVES {
            let r = verify_star_union_reduction(g, k)?;
            t.check(r.iff_with_k_plus_1_leaves, g, || format!("k={k}: {r:?}"));
            // With k leaves the iff fails exactly on sources of gap one.
            let expected_k = k == 0 || gap != 1;
            t.check(r.iff_with_k_leaves == expected_k, g, || format!("k={k}, k leaves: {r:?}"));
        }
        Ok(())
    })?;
    let gap_one = graphs
        .iter()
        .map(oracles::independence_gap)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&g| g == 1)
        .count();
    t.notes.push(format!(
        "with k >= 1 leaves the well-covered iff fails on the {gap_one} sources of gap one; with k + 1 leaves it always holds"
    ));
    Ok(t)
}

fn symmetric_differences(max_n: usize) -> Result<Tally> {
    over(&all_graphs_up_to(max_n)?, |g, t| {
        let sets: Vec<VertexSet> = oracles::enumerate_maximal_independent_sets(g)?.collect();
        let claw_free = find_claw(g).is_none();
        for (x, i1) in sets.iter().enumerate() {
            for i2 in &sets[x + 1..] {
                let d = symmetric_difference(g, i1, i2)?;
                let ok = d.bipartite && d.sides_maximal && (!claw_free || d.max_degree <= 2);
                t.check(ok, g, || format!("{i1:?} vs {i2:?}: {d:?}"));
            }
        }
        Ok(())
    })
}
