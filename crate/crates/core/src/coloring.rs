//! Exact vertex coloring by DSATUR branch and bound.

use crate::graph::Graph;

/// An optimal proper coloring: `colors[v]` in `0..count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub count: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    /// Color classes, ordered by color, each sorted ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

struct Search<'a> {
    nbrs: &'a [Vec<usize>],
    degree: Vec<usize>,
    colors: Vec<Option<usize>>,
    /// `seen[v][c]`: number of neighbors of `v` currently colored `c`.
    seen: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Option<Vec<usize>>,
    best_count: usize,
    lower: usize,
}

impl Search<'_> {
    /// Uncolored vertex of maximum saturation, then maximum degree, then
    /// lowest index.
    fn pick(&self) -> Option<usize> {
        let mut pick: Option<usize> = None;
        for v in 0..self.colors.len() {
            if self.colors[v].is_some() {
                continue;
            }
            pick = match pick {
                None => Some(v),
                Some(u) => {
                    let ku = (self.saturation[u], self.degree[u]);
                    let kv = (self.saturation[v], self.degree[v]);
                    if kv > ku {
                        Some(v)
                    } else {
                        Some(u)
                    }
                }
            };
        }
        pick
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for &u in &self.nbrs[v] {
            if self.seen[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.seen[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for &u in &self.nbrs[v] {
            self.seen[u][c] -= 1;
            if self.seen[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn go(&mut self, used: usize) {
        if self.best_count <= self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_count {
                self.best_count = used;
                self.best = Some(self.colors.iter().map(|c| c.unwrap()).collect());
            }
            return;
        };
        // Opening a new color is only useful while it stays below the incumbent.
        let limit = (used + 1).min(self.best_count - 1);
        for c in 0..limit {
            if self.seen[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.go(used.max(c + 1));
            self.unassign(v, c);
            if self.best_count <= self.lower {
                return;
            }
        }
    }
}

/// Chromatic number with an optimal coloring. `clique_lower_bound` is any
/// known lower bound (typically the clique number); the search stops as soon
/// as it is met.
pub fn chromatic(g: &Graph, clique_lower_bound: usize) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring {
            count: 0,
            colors: Vec::new(),
        };
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let mut search = Search {
        degree: nbrs.iter().map(Vec::len).collect(),
        nbrs: &nbrs,
        colors: vec![None; n],
        seen: vec![vec![0; n + 1]; n],
        saturation: vec![0; n],
        best: None,
        best_count: n + 1,
        lower: clique_lower_bound.max(1),
    };
    search.go(0);
    let colors = search.best.expect("a coloring with at most n colors exists");
    Coloring {
        count: search.best_count,
        colors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GraphFamily;

    fn is_proper(g: &Graph, c: &Coloring) -> bool {
        g.edges().all(|(u, v)| c.colors[u] != c.colors[v]) && c.colors.iter().all(|&x| x < c.count)
    }

    #[test]
    fn known_chromatic_numbers() {
        for (fam, chi) in [
            (GraphFamily::Cycle(5), 3),
            (GraphFamily::Cycle(6), 2),
            (GraphFamily::Complete(5), 5),
            (GraphFamily::Empty(4), 1),
            (GraphFamily::CompleteBipartite(3, 3), 2),
            (GraphFamily::Path(1), 1),
        ] {
            let g = fam.build().unwrap();
            let c = chromatic(&g, 1);
            assert_eq!(c.count, chi, "{fam}");
            assert!(is_proper(&g, &c));
        }
    }

    #[test]
    fn petersen_needs_three() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let g = Graph::from_edges(10, edges).unwrap();
        let c = chromatic(&g, 2);
        assert_eq!(c.count, 3);
        assert!(is_proper(&g, &c));
    }
}
