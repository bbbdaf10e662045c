//! Immutable simple undirected graphs with bitset adjacency.

use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by any constructor.
pub const MAX_VERTICES: usize = 4096;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; there is no mutation API once
/// a graph has been built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks (`n <= 64`).
    pub fn from_masks(masks: &[u64]) -> Result<Self> {
        let n = masks.len();
        if n > 64 {
            return Err(Error::capacity("vertex count for mask input", n, 64));
        }
        let mut g = Graph::empty(n)?;
        for (u, &m) in masks.iter().enumerate() {
            m.for_each(|v| {
                if v != u && v < n {
                    g.link(u, v);
                }
            });
        }
        Ok(g)
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Neighbor masks, available when the graph fits in one machine word.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.adj.iter().map(VertexSet::to_mask).collect())
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Rejects sets built for a graph of a different order.
    pub fn check_bound(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::Domain(format!(
                "vertex set over {} vertices used with a graph on {}",
                s.universe(),
                self.n
            )));
        }
        Ok(())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// Every vertex outside `s` has a neighbor in `s`.
    pub fn dominates(&self, s: &VertexSet) -> bool {
        (0..self.n).all(|v| s.contains(v) || self.adj[v].intersects(s))
    }

    pub fn is_maximal_independent(&self, s: &VertexSet) -> bool {
        self.is_independent(s) && self.dominates(s)
    }

    /// Vertices with at least one neighbor in `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in s.iter() {
            out = out.or(&self.adj[v]);
        }
        out
    }

    /// Symmetry and irreflexivity of the adjacency relation.
    pub fn check_invariants(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|u| {
                !self.adj[u].contains(u)
                    && self.adj[u].universe() == self.n
                    && self.adj[u].iter().all(|v| self.adj[v].contains(u))
            })
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending original
    /// order. The second component maps each new index to its original.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_bound(s)?;
        let map: Vec<usize> = s.iter().collect();
        let mut h = Graph::empty(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    h.link(i, j);
                }
            }
        }
        Ok((h, map))
    }

    /// Graph obtained by deleting one vertex (relabeled as in
    /// [`induced_subgraph`](Self::induced_subgraph)).
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let mut keep = self.all_vertices();
        keep.remove(v);
        self.induced_subgraph(&keep).expect("bound set").0
    }

    pub fn complement(&self) -> Graph {
        let full = self.all_vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut s = full.and_not(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// `self` on `0..n` followed by `other` shifted by `n`, with no edges between.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let total = self.n + other.n;
        if total > MAX_VERTICES {
            return Err(Error::capacity("vertex count", total, MAX_VERTICES));
        }
        let mut g = Graph::empty(total)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Adds vertex `n` adjacent to every existing vertex.
    pub fn add_universal_vertex(&self) -> Result<Graph> {
        let total = self.n + 1;
        if total > MAX_VERTICES {
            return Err(Error::capacity("vertex count", total, MAX_VERTICES));
        }
        let mut g = Graph::empty(total)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for u in 0..self.n {
            g.link(u, self.n);
        }
        Ok(g)
    }

    /// Adds vertex `n` adjacent exactly to `nbrs`.
    pub fn extend_with_vertex(&self, nbrs: &VertexSet) -> Result<Graph> {
        self.check_bound(nbrs)?;
        let mut g = Graph::empty(self.n + 1)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for u in nbrs.iter() {
            g.link(u, self.n);
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let next = self.neighborhood(&frontier).and_not(&comp);
                comp = comp.or(&next);
                frontier = next;
            }
            seen = seen.or(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-coloring if one exists: `Some(side)` where `side` is one color class.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for v in self.adj[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let side = color.iter().enumerate().filter(|(_, c)| **c == Some(false)).map(|(v, _)| v);
        Some(VertexSet::from_members(self.n, side).expect("in range"))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GraphFamily;

    fn path(n: usize) -> Graph {
        GraphFamily::Path(n).build().unwrap()
    }

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.check_invariants());
    }

    #[test]
    fn induced_subgraph_relabels_ascending() {
        let (h, map) = path(4).induced_subgraph(&set(4, &[0, 1, 2])).unwrap();
        assert_eq!(h, path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let claw = GraphFamily::Claw.build().unwrap();
        let (leaves, map) = claw.induced_subgraph(&set(4, &[1, 2, 3])).unwrap();
        assert_eq!(leaves, Graph::empty(3).unwrap());
        assert_eq!(map, vec![1, 2, 3]);

        let g = GraphFamily::Cycle(5).build().unwrap();
        assert_eq!(g.induced_subgraph(&g.all_vertices()).unwrap().0, g);
    }

    #[test]
    fn induced_subgraph_rejects_foreign_set() {
        assert!(path(4).induced_subgraph(&set(5, &[0])).is_err());
    }

    #[test]
    fn complement_examples() {
        let k3 = GraphFamily::Complete(3).build().unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        // P4 0-1-2-3 complements to 1-3-0-2, mapped back by 1->0, 3->1, 0->2, 2->3.
        let c = path(4).complement();
        assert_eq!(c.permute(&[2, 0, 3, 1]), path(4));
        let g = GraphFamily::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn disjoint_union_examples() {
        let p3 = path(3);
        assert_eq!(p3.disjoint_union(&p3).unwrap(), GraphFamily::CopiesOfP3(2).build().unwrap());
        assert_eq!(p3.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), p3);
        let big = Graph::empty(MAX_VERTICES).unwrap();
        assert!(matches!(big.disjoint_union(&p3), Err(Error::Capacity { .. })));
    }

    #[test]
    fn universal_vertex_examples() {
        let star = Graph::empty(3).unwrap().add_universal_vertex().unwrap();
        // K_{1,3} with the center last; move it to position 0.
        assert_eq!(star.permute(&[1, 2, 3, 0]), GraphFamily::Claw.build().unwrap());
        let k4 = GraphFamily::Complete(3).build().unwrap().add_universal_vertex().unwrap();
        assert_eq!(k4, GraphFamily::Complete(4).build().unwrap());
        assert!(Graph::empty(MAX_VERTICES).unwrap().add_universal_vertex().is_err());
    }

    #[test]
    fn components_and_bipartition() {
        let g = GraphFamily::CopiesOfP3(2).build().unwrap();
        assert_eq!(g.components().len(), 2);
        assert!(g.is_bipartite());
        assert!(!GraphFamily::Cycle(5).build().unwrap().is_bipartite());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn wide_graphs_beyond_one_word() {
        let g = path(100);
        assert!(g.masks().is_none());
        assert_eq!(g.edge_count(), 99);
        assert!(g.adjacent(63, 64));
        assert!(g.check_invariants());
        assert_eq!(g.complement().edge_count(), 100 * 99 / 2 - 99);
    }
}
