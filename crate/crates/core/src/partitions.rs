//! Clique partitions and k-tightness.
//!
//! A clique partition is k-tight when the union of any k of its cliques
//! meets every maximal independent set. For semi-perfect graphs an
//! α-clique partition is (k+1)-tight exactly when the gap is at most k,
//! which turns tightness into a certificate for the gap.

use serde::{Serialize, Serializer};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::MaximalIndependentSets;
use crate::oracles::{self, enumerate_maximal_independent_sets};
use crate::vertex_set::VertexSet;

/// Ordered cliques `C_1, ..., C_l` of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    cliques: Vec<VertexSet>,
}

impl CliquePartition {
    pub fn new(cliques: Vec<VertexSet>) -> Self {
        CliquePartition { cliques }
    }

    /// Convenience constructor from explicit vertex lists.
    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let cliques = lists
            .iter()
            .map(|l| VertexSet::from_members(n, l.iter().copied()))
            .collect::<Result<_>>()?;
        Ok(CliquePartition { cliques })
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.cliques.iter().map(VertexSet::members).collect()
    }
}

impl Serialize for CliquePartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.cliques)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessCertificate {
    pub verdict: bool,
    /// Indices `J` of cliques whose union some maximal independent set avoids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_cliques: Option<Vec<usize>>,
    /// Independent set disjoint from the union of `J` that dominates it; any
    /// maximal extension avoids all cliques in `J`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_set: Option<VertexSet>,
}

impl TightnessCertificate {
    fn tight() -> Self {
        TightnessCertificate {
            verdict: true,
            witness_cliques: None,
            witness_set: None,
        }
    }
}

/// Nonempty pairwise-disjoint cliques covering every vertex.
pub fn validate_partition(g: &Graph, p: &CliquePartition) -> bool {
    let mut covered = VertexSet::new(g.n());
    for c in &p.cliques {
        if c.universe() != g.n() || c.is_empty() || !g.is_clique(c) || c.intersects(&covered) {
            return false;
        }
        covered = covered.or(c);
    }
    covered.count() == g.n()
}

fn require_valid(g: &Graph, p: &CliquePartition) -> Result<()> {
    if validate_partition(g, p) {
        Ok(())
    } else {
        Err(Error::Domain("not a clique partition of the graph".into()))
    }
}

/// Reference tightness check over every maximal independent set.
///
/// A k-subset `J` fails exactly when some maximal independent set misses
/// every clique in `J`, so the partition is k-tight iff no maximal
/// independent set misses k or more cliques. The canonical witness is the
/// lexicographically first failing `J`, paired with the first maximal
/// independent set (in enumeration order) that misses it.
pub fn is_k_tight(g: &Graph, p: &CliquePartition, k: usize) -> Result<TightnessCertificate> {
    require_valid(g, p)?;
    if k == 0 || k > p.len() {
        return Err(Error::Domain(format!("k must lie in 1..={}, got {k}", p.len())));
    }
    let sets: Vec<VertexSet> = enumerate_maximal_independent_sets(g)?.collect();
    Ok(tightness_over(g, p, k, &sets))
}

fn tightness_over(g: &Graph, p: &CliquePartition, k: usize, sets: &[VertexSet]) -> TightnessCertificate {
    let missed = |s: &VertexSet| -> Vec<usize> {
        p.cliques.iter().enumerate().filter(|(_, c)| !c.intersects(s)).map(|(j, _)| j).collect()
    };
    let first_failing = sets
        .iter()
        .filter_map(|s| {
            let m = missed(s);
            (m.len() >= k).then(|| m[..k].to_vec())
        })
        .min();
    let Some(j) = first_failing else {
        return TightnessCertificate::tight();
    };
    let union = j.iter().fold(VertexSet::new(g.n()), |acc, &i| acc.or(&p.cliques[i]));
    let avoider = sets.iter().find(|s| !s.intersects(&union)).expect("J was produced by some set");
    let witness = avoider.and(&g.neighborhood(&union));
    TightnessCertificate {
        verdict: false,
        witness_cliques: Some(j),
        witness_set: Some(witness),
    }
}

/// An optimal clique cover, returned only when its size equals α.
pub fn find_alpha_clique_partition(g: &Graph) -> Result<Option<CliquePartition>> {
    let alpha = oracles::independence_number(g)?;
    let cover = oracles::minimum_clique_cover(g)?;
    if cover.count != alpha {
        return Ok(None);
    }
    let cliques = cover
        .classes()
        .into_iter()
        .map(|c| VertexSet::from_members(g.n(), c).expect("in range"))
        .collect();
    Ok(Some(CliquePartition { cliques }))
}

fn require_semi_perfect(g: &Graph) -> Result<CliquePartition> {
    find_alpha_clique_partition(g)?
        .ok_or_else(|| Error::Precondition("graph is not semi-perfect (clique cover number exceeds α)".into()))
}

/// The gap as one less than the least k for which an α-clique partition is
/// k-tight.
pub fn gap_via_tightness(g: &Graph) -> Result<usize> {
    let p = require_semi_perfect(g)?;
    let sets: Vec<VertexSet> = enumerate_maximal_independent_sets(g)?.collect();
    let k = (1..=p.len())
        .find(|&k| tightness_over(g, &p, k, &sets).verdict)
        .expect("a partition is tight for k equal to its size");
    Ok(k - 1)
}

/// Whether `g` has a clique on `size` vertices.
fn has_clique_of_size(g: &Graph, size: usize) -> bool {
    fn go(g: &Graph, cand: VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if cand.count() < need {
            return false;
        }
        for v in cand.iter() {
            let mut rest = cand.and(g.neighbors(v));
            // Only larger vertices, so each clique is found once.
            for u in 0..=v {
                rest.remove(u);
            }
            if go(g, rest, need - 1) {
                return true;
            }
        }
        false
    }
    go(g, g.all_vertices(), size)
}

/// Decides whether the gap is at most `k` for a `K_{clique_bound}`-free
/// graph with α-clique partition `p`, by testing (k+1)-tightness of `p`.
///
/// A violation of (k+1)-tightness is witnessed by an independent set `S`
/// that avoids and dominates k+1 cliques of `p`; a minimal one has at most
/// `(k+1)(clique_bound-1)` vertices, so only independent sets up to that
/// size are enumerated, smallest first.
pub fn certify_gap_at_most(
    g: &Graph,
    p: &CliquePartition,
    k: usize,
    clique_bound: usize,
) -> Result<TightnessCertificate> {
    if !validate_partition(g, p) {
        return Err(Error::Precondition("not a clique partition of the graph".into()));
    }
    if clique_bound < 2 {
        return Err(Error::Precondition(format!("clique bound must be at least 2, got {clique_bound}")));
    }
    if has_clique_of_size(g, clique_bound) {
        return Err(Error::Precondition(format!("graph contains a clique on {clique_bound} vertices")));
    }
    let need = k + 1;
    if need > p.len() {
        return Ok(TightnessCertificate::tight());
    }
    let max_size = need.saturating_mul(clique_bound - 1).min(g.n());

    struct Walk<'a> {
        g: &'a Graph,
        cliques: &'a [VertexSet],
        need: usize,
        found: Option<(Vec<usize>, VertexSet)>,
    }
    impl Walk<'_> {
        fn check(&mut self, s: &VertexSet) {
            let dominated = self.g.neighborhood(s);
            let hit: Vec<usize> = self
                .cliques
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.intersects(s) && c.is_subset(&dominated))
                .map(|(j, _)| j)
                .take(self.need)
                .collect();
            if hit.len() == self.need {
                self.found = Some((hit, s.clone()));
            }
        }

        /// Independent sets of exactly `remaining` more vertices, chosen
        /// from `cand` in ascending order.
        fn go(&mut self, s: &mut VertexSet, cand: &VertexSet, remaining: usize) {
            if remaining == 0 {
                self.check(s);
                return;
            }
            if cand.count() < remaining {
                return;
            }
            for v in cand.iter() {
                let mut next = cand.and_not(&self.g.closed_neighbors(v));
                for u in 0..v {
                    next.remove(u);
                }
                s.insert(v);
                self.go(s, &next, remaining - 1);
                s.remove(v);
                if self.found.is_some() {
                    return;
                }
            }
        }
    }

    let mut walk = Walk {
        g,
        cliques: &p.cliques,
        need,
        found: None,
    };
    for size in 1..=max_size {
        walk.go(&mut VertexSet::new(g.n()), &g.all_vertices(), size);
        if let Some((j, s)) = walk.found.take() {
            return Ok(TightnessCertificate {
                verdict: false,
                witness_cliques: Some(j),
                witness_set: Some(s),
            });
        }
    }
    Ok(TightnessCertificate::tight())
}

/// Every partition of the vertex set into cliques, as per-clique masks
/// (`n <= 64`). Each partition appears once: the clique holding the lowest
/// unassigned vertex is always chosen next.
pub fn all_clique_partitions(g: &Graph) -> Result<Vec<Vec<u64>>> {
    let masks = g.masks().ok_or_else(|| Error::capacity("vertex count", g.n(), 64))?;
    let mut out = Vec::new();
    let mut current = Vec::new();

    fn cliques_with(masks: &[u64], pool: u64, clique: u64, out: &mut Vec<u64>) {
        // `pool`: unassigned vertices above the seed, adjacent to all of `clique`.
        out.push(clique);
        let mut rest = pool;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cliques_with(masks, rest & masks[u], clique | 1 << u, out);
        }
    }

    fn go(masks: &[u64], unassigned: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if unassigned == 0 {
            out.push(current.clone());
            return;
        }
        let v = unassigned.trailing_zeros() as usize;
        let pool = unassigned & masks[v];
        let mut options = Vec::new();
        cliques_with(masks, pool, 1 << v, &mut options);
        for c in options {
            current.push(c);
            go(masks, unassigned & !c, current, out);
            current.pop();
        }
    }

    go(&masks, <u64 as Bits>::full(g.n()), &mut current, &mut out);
    Ok(out)
}

/// Vertex cap for the exhaustive partition enumeration behind
/// [`tightness_equivalence_check`].
pub const PARTITION_CAP: usize = 9;

/// Outcome of evaluating the four equivalent conditions for one `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub k: usize,
    /// Some clique partition is k-tight.
    pub some_partition: bool,
    /// Some α-clique partition is k-tight.
    pub some_alpha_partition: bool,
    /// Every α-clique partition is k-tight.
    pub every_alpha_partition: bool,
    /// The gap is at most k - 1.
    pub gap_bound: bool,
    pub agree: bool,
}

/// Precomputed data for evaluating the equivalence for every `k` on one
/// semi-perfect graph.
pub struct TightnessEquivalence {
    alpha: usize,
    gap: usize,
    /// For each clique partition: (size, largest number of its cliques
    /// missed by a single maximal independent set).
    profiles: Vec<(usize, usize)>,
}

impl TightnessEquivalence {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_cap(g, PARTITION_CAP)
    }

    pub fn with_cap(g: &Graph, cap: usize) -> Result<Self> {
        if g.n() > cap.min(64) {
            return Err(Error::capacity("vertex count for partition enumeration", g.n(), cap.min(64)));
        }
        require_semi_perfect(g)?;
        let report = oracles::gap_report(g)?;
        let sets: Vec<u64> = MaximalIndependentSets::new(g).map(|s| s.to_mask()).collect();
        let profiles = all_clique_partitions(g)?
            .into_iter()
            .map(|p| {
                let worst = sets
                    .iter()
                    .map(|&s| p.iter().filter(|&&c| c & s == 0).count())
                    .max()
                    .unwrap_or(0);
                (p.len(), worst)
            })
            .collect();
        Ok(TightnessEquivalence {
            alpha: report.alpha,
            gap: report.gap,
            profiles,
        })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn check(&self, k: usize) -> Result<EquivalenceReport> {
        if k == 0 {
            return Err(Error::Domain("k must be at least 1".into()));
        }
        let tight = |worst: usize| worst < k;
        let some_partition = self.profiles.iter().any(|&(_, w)| tight(w));
        let mut alpha_parts = self.profiles.iter().filter(|&&(len, _)| len == self.alpha).peekable();
        let has_alpha = alpha_parts.peek().is_some();
        let some_alpha_partition = self.profiles.iter().any(|&(len, w)| len == self.alpha && tight(w));
        let every_alpha_partition = has_alpha && alpha_parts.all(|&(_, w)| tight(w));
        let gap_bound = self.gap < k;
        let agree = some_partition == some_alpha_partition
            && some_alpha_partition == every_alpha_partition
            && every_alpha_partition == gap_bound;
        Ok(EquivalenceReport {
            k,
            some_partition,
            some_alpha_partition,
            every_alpha_partition,
            gap_bound,
            agree,
        })
    }
}

/// Evaluates the four tightness conditions independently for `k` on a
/// semi-perfect graph with at most [`PARTITION_CAP`] vertices.
pub fn tightness_equivalence_check(g: &Graph, k: usize) -> Result<EquivalenceReport> {
    TightnessEquivalence::new(g)?.check(k)
}

/// Whether some clique partition consists of strong cliques only, by
/// exhaustive search over all clique partitions (`n <= PARTITION_CAP`).
pub fn has_strong_clique_partition(g: &Graph) -> Result<bool> {
    if g.n() > PARTITION_CAP {
        return Err(Error::capacity("vertex count for partition enumeration", g.n(), PARTITION_CAP));
    }
    let sets: Vec<u64> = enumerate_maximal_independent_sets(g)?.map(|s| s.to_mask()).collect();
    let strong = |c: u64| sets.iter().all(|&s| s & c != 0);
    Ok(all_clique_partitions(g)?.iter().any(|p| p.iter().all(|&c| strong(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GraphFamily;

    fn named(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }

    fn part(n: usize, lists: &[&[usize]]) -> CliquePartition {
        CliquePartition::from_lists(n, lists).unwrap()
    }

    #[test]
    fn validation() {
        let p4 = named(GraphFamily::Path(4));
        assert!(validate_partition(&p4, &part(4, &[&[0, 1], &[2, 3]])));
        let p3 = named(GraphFamily::Path(3));
        assert!(!validate_partition(&p3, &part(3, &[&[0, 1], &[1, 2]])));
        assert!(!validate_partition(&p3, &part(3, &[&[0, 2], &[1]])));
        assert!(!validate_partition(&p3, &part(3, &[&[0, 1]])));
        assert!(!validate_partition(&p3, &part(3, &[&[0, 1], &[], &[2]])));
    }

    #[test]
    fn tightness_examples() {
        let p4 = named(GraphFamily::Path(4));
        assert!(is_k_tight(&p4, &part(4, &[&[0, 1], &[2, 3]]), 1).unwrap().verdict);

        let p3 = named(GraphFamily::Path(3));
        let p = part(3, &[&[0, 1], &[2]]);
        let cert = is_k_tight(&p3, &p, 1).unwrap();
        assert!(!cert.verdict);
        assert_eq!(cert.witness_cliques, Some(vec![1]));
        assert_eq!(cert.witness_set.unwrap().members(), vec![1]);
        assert!(is_k_tight(&p3, &p, 2).unwrap().verdict);

        assert!(is_k_tight(&p3, &p, 0).is_err());
        assert!(is_k_tight(&p3, &p, 3).is_err());
        assert!(is_k_tight(&p3, &part(3, &[&[0, 2], &[1]]), 1).is_err());
    }

    #[test]
    fn alpha_partitions() {
        let p4 = find_alpha_clique_partition(&named(GraphFamily::Path(4))).unwrap().unwrap();
        assert_eq!(p4.to_lists(), vec![vec![0, 1], vec![2, 3]]);
        assert!(find_alpha_clique_partition(&named(GraphFamily::Cycle(5))).unwrap().is_none());
        let k5 = find_alpha_clique_partition(&named(GraphFamily::Complete(5))).unwrap().unwrap();
        assert_eq!(k5.to_lists(), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn gap_from_tightness() {
        assert_eq!(gap_via_tightness(&named(GraphFamily::Path(3))).unwrap(), 1);
        assert_eq!(gap_via_tightness(&named(GraphFamily::Path(4))).unwrap(), 0);
        assert_eq!(gap_via_tightness(&named(GraphFamily::Claw)).unwrap(), 2);
        assert!(matches!(gap_via_tightness(&named(GraphFamily::Cycle(5))), Err(Error::Precondition(_))));
    }

    #[test]
    fn bounded_certification() {
        let p3 = named(GraphFamily::Path(3));
        let p = part(3, &[&[0, 1], &[2]]);
        assert!(certify_gap_at_most(&p3, &p, 1, 3).unwrap().verdict);
        let cert = certify_gap_at_most(&p3, &p, 0, 3).unwrap();
        assert!(!cert.verdict);
        assert_eq!(cert.witness_cliques, Some(vec![1]));
        assert_eq!(cert.witness_set.unwrap().members(), vec![1]);

        let k3 = named(GraphFamily::Complete(3));
        let whole = part(3, &[&[0, 1, 2]]);
        assert!(matches!(certify_gap_at_most(&k3, &whole, 0, 3), Err(Error::Precondition(_))));
        assert!(certify_gap_at_most(&k3, &whole, 0, 4).unwrap().verdict);
        assert!(matches!(certify_gap_at_most(&p3, &part(3, &[&[0, 1]]), 0, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn partition_enumeration_counts() {
        // Clique partitions of K_n are all set partitions (Bell numbers).
        for (n, bell) in [(1, 1), (3, 5), (5, 52), (7, 877)] {
            assert_eq!(all_clique_partitions(&named(GraphFamily::Complete(n))).unwrap().len(), bell);
        }
        // P4: {01,23}, {01,2,3}, {0,12,3}, {0,1,23}, singletons.
        assert_eq!(all_clique_partitions(&named(GraphFamily::Path(4))).unwrap().len(), 5);
    }

    #[test]
    fn equivalence_examples() {
        let r = tightness_equivalence_check(&named(GraphFamily::Path(4)), 1).unwrap();
        assert!(r.agree && r.some_partition && r.gap_bound);
        let p3 = named(GraphFamily::Path(3));
        let r = tightness_equivalence_check(&p3, 1).unwrap();
        assert!(r.agree && !r.some_partition && !r.every_alpha_partition && !r.gap_bound);
        let r = tightness_equivalence_check(&p3, 2).unwrap();
        assert!(r.agree && r.some_partition && r.gap_bound);
        let r = tightness_equivalence_check(&named(GraphFamily::Claw), 3).unwrap();
        assert!(r.agree && r.every_alpha_partition);
        assert!(matches!(
            tightness_equivalence_check(&named(GraphFamily::Cycle(5)), 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            tightness_equivalence_check(&named(GraphFamily::Path(10)), 1),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn strong_clique_partitions() {
        assert!(has_strong_clique_partition(&named(GraphFamily::Path(4))).unwrap());
        assert!(!has_strong_clique_partition(&named(GraphFamily::Path(3))).unwrap());
        // Well-covered but not semi-perfect.
        assert!(!has_strong_clique_partition(&named(GraphFamily::Cycle(5))).unwrap());
    }

    #[test]
    fn certificate_json_omits_absent_witnesses() {
        let tight = serde_json::to_string(&TightnessCertificate::tight()).unwrap();
        assert_eq!(tight, r#"{"verdict":true}"#);
        let p3 = named(GraphFamily::Path(3));
        let cert = is_k_tight(&p3, &part(3, &[&[0, 1], &[2]]), 1).unwrap();
        assert_eq!(
            serde_json::to_string(&cert).unwrap(),
            r#"{"verdict":false,"witness_cliques":[1],"witness_set":[1]}"#
        );
        assert_eq!(serde_json::to_string(&part(3, &[&[1, 0], &[2]])).unwrap(), "[[0,1],[2]]");
    }
}
