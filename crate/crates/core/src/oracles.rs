//! Exact, exponential-time computation of the independence invariants.
//!
//! Everything else in the crate is validated against these routines.

use serde::Serialize;

use crate::bits::Bits;
use crate::coloring::{self, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{self, MaximalIndependentSets, MisIter};
use crate::vertex_set::VertexSet;

/// Default vertex cap for [`hereditary_independence_gap`]; `2^n` induced
/// subgraphs are examined.
pub const HEREDITARY_CAP: usize = 16;

/// A maximum and a minimum maximal independent set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// Maximum independent set (size α).
    pub i1: VertexSet,
    /// Minimum maximal independent set (size i).
    pub i2: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub alpha: usize,
    pub idom: usize,
    pub gap: usize,
    pub omega: usize,
    pub theta: usize,
    pub semi_perfect: bool,
    pub witnesses: Witnesses,
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(Error::Domain("the graph has no vertices".into()))
    } else {
        Ok(())
    }
}

/// Every maximal independent set exactly once, in a deterministic order.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> Result<MaximalIndependentSets> {
    require_nonempty(g)?;
    Ok(MaximalIndependentSets::new(g))
}

pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet> {
    require_nonempty(g)?;
    Ok(if g.n() <= 64 {
        let closed = mis::closed_neighborhoods::<u64>(g);
        VertexSet::from_mask(g.n(), mis::maximum_independent(&closed, <u64 as Bits>::full(g.n())))
    } else {
        let closed = mis::closed_neighborhoods::<VertexSet>(g);
        mis::maximum_independent(&closed, VertexSet::full(g.n()))
    })
}

pub fn minimum_maximal_independent_set(g: &Graph) -> Result<VertexSet> {
    require_nonempty(g)?;
    Ok(if g.n() <= 64 {
        let closed = mis::closed_neighborhoods::<u64>(g);
        VertexSet::from_mask(g.n(), mis::minimum_maximal_independent(&closed, <u64 as Bits>::full(g.n())))
    } else {
        let closed = mis::closed_neighborhoods::<VertexSet>(g);
        mis::minimum_maximal_independent(&closed, VertexSet::full(g.n()))
    })
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    maximum_independent_set(g).map(|s| s.len())
}

pub fn independent_domination_number(g: &Graph) -> Result<usize> {
    minimum_maximal_independent_set(g).map(|s| s.len())
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    independence_number(&g.complement())
}

/// Optimal clique cover as an optimal coloring of the complement.
pub fn minimum_clique_cover(g: &Graph) -> Result<Coloring> {
    require_nonempty(g)?;
    let comp = g.complement();
    let omega_bar = independence_number(g)?;
    Ok(coloring::chromatic(&comp, omega_bar))
}

pub fn clique_cover_number(g: &Graph) -> Result<usize> {
    minimum_clique_cover(g).map(|c| c.count)
}

/// All invariants, using the branch-and-bound solvers.
pub fn gap_report(g: &Graph) -> Result<GapReport> {
    let i1 = maximum_independent_set(g)?;
    let i2 = minimum_maximal_independent_set(g)?;
    finish_report(g, i1, i2)
}

/// Same fields as [`gap_report`], with α and i read off a full enumeration
/// of maximal independent sets. Slow; kept for cross-checking.
pub fn gap_report_naive(g: &Graph) -> Result<GapReport> {
    let mut i1: Option<VertexSet> = None;
    let mut i2: Option<VertexSet> = None;
    for s in enumerate_maximal_independent_sets(g)? {
        if i1.as_ref().is_none_or(|b| s.len() > b.len()) {
            i1 = Some(s.clone());
        }
        if i2.as_ref().is_none_or(|b| s.len() < b.len()) {
            i2 = Some(s);
        }
    }
    finish_report(g, i1.expect("nonempty"), i2.expect("nonempty"))
}

fn finish_report(g: &Graph, i1: VertexSet, i2: VertexSet) -> Result<GapReport> {
    let alpha = i1.len();
    let idom = i2.len();
    let omega = clique_number(g)?;
    let theta = coloring::chromatic(&g.complement(), alpha).count;
    Ok(GapReport {
        alpha,
        idom,
        gap: alpha - idom,
        omega,
        theta,
        semi_perfect: alpha == theta,
        witnesses: Witnesses { i1, i2 },
    })
}

/// α(G) and i(G) only; cheaper than a full report.
pub fn alpha_and_idom(g: &Graph) -> Result<(usize, usize)> {
    Ok((independence_number(g)?, independent_domination_number(g)?))
}

pub fn independence_gap(g: &Graph) -> Result<usize> {
    let (a, i) = alpha_and_idom(g)?;
    Ok(a - i)
}

/// All maximal independent sets have the same size.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    let mut sizes = enumerate_maximal_independent_sets(g)?.map(|s| s.len());
    let first = sizes.next().expect("nonempty graph has a maximal independent set");
    Ok(sizes.all(|s| s == first))
}

/// Gap of `G[within]` for a graph given by closed-neighborhood masks.
pub(crate) fn gap_within(closed: &[u64], within: u64) -> usize {
    let mut lo = usize::MAX;
    let mut hi = 0;
    for s in MisIter::new(closed, within) {
        let c = s.count_ones() as usize;
        lo = lo.min(c);
        hi = hi.max(c);
    }
    hi - lo
}

/// Hereditary independence gap together with an induced subgraph attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HereditaryGap {
    pub value: usize,
    pub witness: VertexSet,
}

pub fn hereditary_independence_gap(g: &Graph) -> Result<usize> {
    hereditary_gap_with_cap(g, HEREDITARY_CAP).map(|h| h.value)
}

/// Maximum of the gap over all nonempty induced subgraphs, by exhaustive
/// subset enumeration (`cap <= 30`).
pub fn hereditary_gap_with_cap(g: &Graph, cap: usize) -> Result<HereditaryGap> {
    require_nonempty(g)?;
    let cap = cap.min(30);
    let n = g.n();
    if n > cap {
        return Err(Error::capacity("vertex count for hereditary gap", n, cap));
    }
    let closed = mis::closed_neighborhoods::<u64>(g);
    let mut best = (0usize, 1u64);
    for s in 1u64..(1u64 << n) {
        // A graph on m >= 2 vertices has gap at most m - 2.
        let size = s.count_ones() as usize;
        if size < 3 || size - 2 <= best.0 {
            continue;
        }
        let gap = gap_within(&closed, s);
        if gap > best.0 {
            best = (gap, s);
        }
    }
    Ok(HereditaryGap {
        value: best.0,
        witness: VertexSet::from_mask(n, best.1),
    })
}

/// Whether the clique `c` meets every maximal independent set.
pub fn is_strong_clique(g: &Graph, c: &VertexSet) -> Result<bool> {
    g.check_bound(c)?;
    if !g.is_clique(c) {
        return Err(Error::Domain(format!("{c:?} is not a clique")));
    }
    Ok(enumerate_maximal_independent_sets(g)?.all(|s| s.intersects(c)))
}
