//! Maximal independent set enumeration and the α / i branch and bound.
//!
//! Enumeration is Bron–Kerbosch on the complement, phrased directly on the
//! graph: a frame holds the current independent set `r`, the undominated
//! candidates `p`, and the undominated but already-branched vertices `x`.
//! The pivot `u ∈ p ∪ x` minimizes `|p ∩ N[u]|` (lowest index on ties) and
//! only `p ∩ N[u]` is branched on, in ascending order, so the output order
//! is a deterministic function of the labeled graph.

use crate::bits::Bits;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Closed neighborhoods `N[v]` in the requested bitset representation.
pub(crate) fn closed_neighborhoods<B: Bits>(g: &Graph) -> Vec<B> {
    let n = g.n();
    (0..n)
        .map(|v| {
            let mut s = B::empty(n);
            g.neighbors(v).for_each(|u| s.insert(u));
            s.insert(v);
            s
        })
        .collect()
}

struct Frame<B> {
    r: B,
    p: B,
    x: B,
    todo: B,
}

/// Iterator over the maximal independent sets of the subgraph induced by a
/// vertex subset, given closed neighborhoods.
pub struct MisIter<'a, B: Bits> {
    closed: &'a [B],
    stack: Vec<Frame<B>>,
    pending_empty: bool,
}

fn pivot_branches<B: Bits>(closed: &[B], p: &B, x: &B) -> B {
    let mut best: Option<(usize, B)> = None;
    let mut consider = |u: usize| {
        let branch = p.and(&closed[u]);
        let c = branch.count();
        if best.as_ref().is_none_or(|(bc, _)| c < *bc) {
            best = Some((c, branch));
        }
    };
    p.or(x).for_each(&mut consider);
    best.map(|(_, b)| b).unwrap_or_else(|| p.clone())
}

impl<'a, B: Bits> MisIter<'a, B> {
    /// Enumerates maximal independent sets of `G[within]`.
    pub fn new(closed: &'a [B], within: B) -> Self {
        let n = closed.len();
        let empty = B::empty(n);
        let pending_empty = within.is_empty();
        let mut stack = Vec::new();
        if !pending_empty {
            let todo = pivot_branches(closed, &within, &empty);
            stack.push(Frame {
                r: empty.clone(),
                p: within,
                x: empty,
                todo,
            });
        }
        MisIter {
            closed,
            stack,
            pending_empty,
        }
    }
}

impl<B: Bits> Iterator for MisIter<'_, B> {
    type Item = B;

    fn next(&mut self) -> Option<B> {
        if self.pending_empty {
            // The empty subgraph has exactly one maximal independent set.
            self.pending_empty = false;
            return Some(B::empty(self.closed.len()));
        }
        loop {
            let top = self.stack.last_mut()?;
            let Some(v) = top.todo.first() else {
                self.stack.pop();
                continue;
            };
            top.todo.remove(v);
            let nv = &self.closed[v];
            let mut r = top.r.clone();
            r.insert(v);
            let p = top.p.and_not(nv);
            let x = top.x.and_not(nv);
            top.p.remove(v);
            top.x.insert(v);
            if p.is_empty() {
                if x.is_empty() {
                    return Some(r);
                }
                continue;
            }
            let todo = pivot_branches(self.closed, &p, &x);
            self.stack.push(Frame { r, p, x, todo });
        }
    }
}

/// Maximum independent set of `G[within]` by include/exclude branching with
/// the `|r| + |p|` bound.
pub(crate) fn maximum_independent<B: Bits>(closed: &[B], within: B) -> B {
    fn go<B: Bits>(closed: &[B], r: &mut B, r_len: usize, p: B, best: &mut (usize, B)) {
        if r_len + p.count() <= best.0 {
            return;
        }
        let Some(v) = p.first() else {
            if r_len > best.0 {
                *best = (r_len, r.clone());
            }
            return;
        };
        r.insert(v);
        go(closed, r, r_len + 1, p.and_not(&closed[v]), best);
        r.remove(v);
        // Some maximum set contains v or a neighbor of v inside p.
        if p.and(&closed[v]).count() > 1 {
            let mut rest = p;
            rest.remove(v);
            go(closed, r, r_len, rest, best);
        }
    }
    let n = closed.len();
    let mut best = (0, B::empty(n));
    let mut r = B::empty(n);
    go(closed, &mut r, 0, within, &mut best);
    best.1
}

/// Minimum maximal independent set of `G[within]`.
///
/// Walks the same pivoted recursion as [`MisIter`] but abandons a branch as
/// soon as it cannot beat the incumbent: each added vertex dominates at most
/// `Δ + 1` of the still-undominated vertices `p ∪ x`, and a branch where
/// some excluded vertex has no candidate neighbor left can never close.
pub(crate) fn minimum_maximal_independent<B: Bits>(closed: &[B], within: B) -> B {
    struct Search<'a, B> {
        closed: &'a [B],
        span: usize,
        best: Option<(usize, B)>,
    }
    impl<B: Bits> Search<'_, B> {
        fn go(&mut self, r: &B, r_len: usize, p: &B, x: &B) {
            if p.is_empty() {
                if x.is_empty() && self.best.as_ref().is_none_or(|(b, _)| r_len < *b) {
                    self.best = Some((r_len, r.clone()));
                }
                return;
            }
            let undominated = p.count() + x.count();
            let lower = r_len + undominated.div_ceil(self.span);
            if self.best.as_ref().is_some_and(|(b, _)| lower >= *b) {
                return;
            }
            let mut stuck = false;
            x.for_each(|u| stuck |= !self.closed[u].intersects(p));
            if stuck {
                return;
            }
            let mut p = p.clone();
            let mut x = x.clone();
            let todo = pivot_branches(self.closed, &p, &x);
            todo.for_each(|v| {
                let nv = &self.closed[v];
                let mut r2 = r.clone();
                r2.insert(v);
                let p2 = p.and_not(nv);
                let x2 = x.and_not(nv);
                self.go(&r2, r_len + 1, &p2, &x2);
                p.remove(v);
                x.insert(v);
            });
        }
    }
    let n = closed.len();
    let span = closed.iter().map(|c| c.count()).max().unwrap_or(1).max(1);
    let mut search = Search {
        closed,
        span,
        best: None,
    };
    let empty = B::empty(n);
    search.go(&empty, 0, &within, &empty);
    search.best.map(|(_, s)| s).unwrap_or(empty)
}

/// Maximal independent sets of a graph as [`VertexSet`]s, using a single
/// machine word per set when the graph has at most 64 vertices.
pub struct MaximalIndependentSets {
    inner: Inner,
}

enum Inner {
    Narrow { closed: Box<[u64]>, state: NarrowState },
    Wide(std::vec::IntoIter<VertexSet>),
}

struct NarrowState {
    stack: Vec<Frame<u64>>,
    n: usize,
}

impl MaximalIndependentSets {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        if n <= 64 {
            let closed: Box<[u64]> = closed_neighborhoods::<u64>(g).into_boxed_slice();
            let full = <u64 as Bits>::full(n);
            let todo = pivot_branches(&closed, &full, &0);
            let stack = vec![Frame {
                r: 0,
                p: full,
                x: 0,
                todo,
            }];
            MaximalIndependentSets {
                inner: Inner::Narrow {
                    closed,
                    state: NarrowState { stack, n },
                },
            }
        } else {
            // Wide graphs are collected eagerly; they only arise from gadget
            // constructions, which are verified under an enumeration budget.
            let closed = closed_neighborhoods::<VertexSet>(g);
            let all: Vec<VertexSet> = MisIter::new(&closed, VertexSet::full(n)).collect();
            MaximalIndependentSets {
                inner: Inner::Wide(all.into_iter()),
            }
        }
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        match &mut self.inner {
            Inner::Wide(it) => it.next(),
            Inner::Narrow { closed, state } => {
                let mut it = MisIter {
                    closed,
                    stack: std::mem::take(&mut state.stack),
                    pending_empty: false,
                };
                let out = it.next();
                state.stack = it.stack;
                out.map(|m| VertexSet::from_mask(state.n, m))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GraphFamily;

    fn brute_force_mis(g: &Graph) -> Vec<u64> {
        let n = g.n();
        let masks = g.masks().unwrap();
        (0u64..1 << n)
            .filter(|&s| {
                let independent = (0..n).all(|v| s >> v & 1 == 0 || masks[v] & s == 0);
                let dominating = (0..n).all(|v| s >> v & 1 == 1 || masks[v] & s != 0);
                independent && dominating
            })
            .collect()
    }

    #[test]
    fn enumeration_matches_brute_force_on_named_graphs() {
        for fam in [
            GraphFamily::Path(6),
            GraphFamily::Cycle(7),
            GraphFamily::Complete(4),
            GraphFamily::CompleteBipartite(2, 3),
            GraphFamily::CopiesOfP3(2),
            GraphFamily::Empty(3),
        ] {
            let g = fam.build().unwrap();
            let mut got: Vec<u64> = MaximalIndependentSets::new(&g).map(|s| s.to_mask()).collect();
            let n_got = got.len();
            got.sort();
            got.dedup();
            assert_eq!(n_got, got.len(), "duplicates for {fam}");
            assert_eq!(got, brute_force_mis(&g), "{fam}");
        }
    }

    #[test]
    fn restricted_enumeration() {
        let g = GraphFamily::Path(4).build().unwrap();
        let closed = closed_neighborhoods::<u64>(&g);
        let mut sets: Vec<u64> = MisIter::new(&closed, 0b0111).collect();
        sets.sort();
        assert_eq!(sets, vec![0b0010, 0b0101]);
        assert_eq!(MisIter::new(&closed, 0u64).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn wide_and_narrow_agree() {
        let g = GraphFamily::Cycle(9).build().unwrap();
        let narrow: Vec<Vec<usize>> = MaximalIndependentSets::new(&g).map(|s| s.members()).collect();
        let closed = closed_neighborhoods::<VertexSet>(&g);
        let wide: Vec<Vec<usize>> = MisIter::new(&closed, VertexSet::full(9)).map(|s| s.members()).collect();
        assert_eq!(narrow, wide);
    }

    #[test]
    fn branch_and_bound_extremes() {
        let g = GraphFamily::Cycle(7).build().unwrap();
        let closed = closed_neighborhoods::<u64>(&g);
        assert_eq!(maximum_independent(&closed, 0x7f).count_ones(), 3);
        assert_eq!(minimum_maximal_independent(&closed, 0x7f).count_ones(), 3);
        let star = GraphFamily::Star(5).build().unwrap();
        let closed = closed_neighborhoods::<u64>(&star);
        assert_eq!(maximum_independent(&closed, 0x3f), 0b111110);
        assert_eq!(minimum_maximal_independent(&closed, 0x3f), 0b1);
    }
}
