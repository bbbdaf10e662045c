//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first smallest
//! non-singleton cell, recurse. Leaves are compared by their relabeled
//! adjacency rows and the smallest wins. Two leaves with equal certificates
//! yield an automorphism; automorphisms fixing the current prefix are used to
//! skip children in an already-explored orbit.

use std::fmt;

use serde::Serialize;

use crate::bits::Bits;
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::vertex_set::VertexSet;

/// The graph6 string of a graph under its canonical labeling. Equal forms
/// hold exactly for isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Cells = Vec<Vec<usize>>;

struct Canon<'a, B> {
    adj: &'a [B],
    n: usize,
    words: usize,
    best_cert: Option<Vec<u64>>,
    /// `best_lab[v]` is the position of `v` in the best leaf.
    best_lab: Vec<usize>,
    /// Automorphisms found so far, as `v -> image`.
    autos: Vec<Vec<usize>>,
}

fn refine<B: Bits>(adj: &[B], n: usize, cells: &mut Cells) {
    'restart: loop {
        for w in 0..cells.len() {
            let mut splitter = B::empty(n);
            for &v in &cells[w] {
                splitter.insert(v);
            }
            let mut out: Cells = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    out.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cell.iter().map(|&v| (adj[v].and(&splitter).count(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        out.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                split |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            if split {
                *cells = out;
                continue 'restart;
            }
        }
        return;
    }
}

impl<B: Bits> Canon<'_, B> {
    fn certificate(&self, cells: &Cells) -> (Vec<u64>, Vec<usize>) {
        let mut lab = vec![0; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            lab[cell[0]] = pos;
        }
        let mut cert = vec![0u64; self.n * self.words];
        for (pos, cell) in cells.iter().enumerate() {
            let row = &mut cert[pos * self.words..(pos + 1) * self.words];
            self.adj[cell[0]].for_each(|u| {
                let p = lab[u];
                // Most significant bit first so lexicographic order on
                // words matches order on the row as a bit string.
                row[p / 64] |= 1 << (63 - p % 64);
            });
        }
        (cert, lab)
    }

    fn leaf(&mut self, cells: &Cells) {
        let (cert, lab) = self.certificate(cells);
        match &self.best_cert {
            None => {
                self.best_cert = Some(cert);
                self.best_lab = lab;
            }
            Some(best) => match cert.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_cert = Some(cert);
                    self.best_lab = lab;
                }
                std::cmp::Ordering::Equal => {
                    // best_lab^{-1} ∘ lab maps this leaf onto the best one.
                    let mut inv = vec![0; self.n];
                    for (v, &p) in self.best_lab.iter().enumerate() {
                        inv[p] = v;
                    }
                    let gamma: Vec<usize> = lab.iter().map(|&p| inv[p]).collect();
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.autos.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit representatives of `cell` under the known automorphisms that fix
    /// every vertex in `prefix`.
    fn orbit_root(&self, prefix: &[usize], v: usize, parent: &mut Vec<usize>) -> usize {
        parent.clear();
        parent.extend(0..self.n);
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&u| gamma[u] != u) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(parent, x), find(parent, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        find(parent, v)
    }

    fn search(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut explored_roots: Vec<usize> = Vec::new();
        let mut scratch = Vec::new();
        let mut candidates = cells[t].clone();
        candidates.sort_unstable();
        for v in candidates {
            let root = self.orbit_root(prefix, v, &mut scratch);
            let seen = explored_roots.iter().any(|&r| self.orbit_root(prefix, r, &mut scratch) == root);
            if seen {
                continue;
            }
            explored_roots.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[t].iter().copied().filter(|&u| u != v).collect();
            child[t] = vec![v];
            child.insert(t + 1, rest);
            refine(self.adj, self.n, &mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }
}

fn canonical_labeling_with<B: Bits>(adj: &[B], n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut canon = Canon {
        adj,
        n,
        words: n.div_ceil(64),
        best_cert: None,
        best_lab: Vec::new(),
        autos: Vec::new(),
    };
    let mut cells: Cells = vec![(0..n).collect()];
    refine(adj, n, &mut cells);
    canon.search(cells, &mut Vec::new());
    canon.best_lab
}

/// A permutation `lab` (vertex `v` goes to position `lab[v]`) such that
/// `g.permute(&lab)` is the same graph for every relabeling of `g`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    match g.masks() {
        Some(masks) => canonical_labeling_with(&masks, g.n()),
        None => {
            let adj: Vec<VertexSet> = g.adjacency().to_vec();
            canonical_labeling_with(&adj, g.n())
        }
    }
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6(&canonical_graph(g)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GraphFamily;

    fn named(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = named(GraphFamily::Path(3));
        // center relabeled to 0
        let b = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&named(GraphFamily::Claw)), canonical_form(&named(GraphFamily::Path(4))));
    }

    #[test]
    fn symmetric_graphs_finish() {
        for fam in [
            GraphFamily::Empty(12),
            GraphFamily::Complete(12),
            GraphFamily::CompleteBipartite(6, 6),
            GraphFamily::CopiesOfP3(4),
            GraphFamily::Cycle(16),
        ] {
            let g = named(fam);
            let rotated: Vec<usize> = (0..g.n()).map(|v| (v + 5) % g.n()).collect();
            assert_eq!(canonical_form(&g), canonical_form(&g.permute(&rotated)), "{fam}");
        }
    }

    #[test]
    fn wide_graphs() {
        let g = named(GraphFamily::Cycle(70));
        let shuffled: Vec<usize> = (0..70).map(|v| (v * 3) % 70).collect();
        assert!(are_isomorphic(&g, &g.permute(&shuffled)));
        assert!(!are_isomorphic(&g, &named(GraphFamily::Path(70))));
    }

    #[test]
    fn labeling_is_a_permutation() {
        let g = named(GraphFamily::CompleteBipartite(2, 3));
        let mut lab = canonical_labeling(&g);
        lab.sort();
        assert_eq!(lab, (0..5).collect::<Vec<_>>());
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).as_str(), "?");
    }
}
