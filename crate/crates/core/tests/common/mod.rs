//! Brute-force reference computations for integration tests. Nothing here
//! uses the crate's own search code; graphs are read through their
//! adjacency masks only.

#![allow(dead_code)]

use indgap::Graph;

pub fn masks(g: &Graph) -> Vec<u64> {
    g.masks().expect("test graphs have at most 64 vertices")
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

pub fn is_independent(adj: &[u64], s: u64) -> bool {
    bits(s).all(|v| adj[v] & s == 0)
}

/// Vertices of `within` dominated by `s` (including `s` itself).
pub fn dominated(adj: &[u64], s: u64) -> u64 {
    bits(s).fold(s, |acc, v| acc | adj[v])
}

/// All maximal independent sets of the subgraph induced by `within`, by
/// recursion over independent sets.
pub fn maximal_independent_sets_within(adj: &[u64], within: u64) -> Vec<u64> {
    fn go(adj: &[u64], within: u64, s: u64, from: usize, out: &mut Vec<u64>) {
        let free = within & !dominated(adj, s);
        if free == 0 {
            out.push(s);
        }
        for v in bits(free) {
            if v >= from {
                go(adj, within, s | 1 << v, v + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    go(adj, within, 0, 0, &mut out);
    out
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    maximal_independent_sets_within(&masks(g), full(g.n()))
}

/// `(α, i)` of the subgraph induced by `within` (nonempty).
pub fn alpha_idom_within(adj: &[u64], within: u64) -> (usize, usize) {
    let sizes: Vec<usize> =
        maximal_independent_sets_within(adj, within).iter().map(|s| s.count_ones() as usize).collect();
    (*sizes.iter().max().unwrap(), *sizes.iter().min().unwrap())
}

pub fn alpha(g: &Graph) -> usize {
    alpha_idom_within(&masks(g), full(g.n())).0
}

pub fn idom(g: &Graph) -> usize {
    alpha_idom_within(&masks(g), full(g.n())).1
}

pub fn gap(g: &Graph) -> usize {
    let (a, i) = alpha_idom_within(&masks(g), full(g.n()));
    a - i
}

/// Hereditary gap by tabulating independence and domination over all
/// subsets, then scanning the submasks of every induced subgraph.
pub fn hereditary_gap(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let adj = masks(g);
    let size = 1usize << n;
    let mut indep = vec![false; size];
    let mut dom = vec![0u64; size];
    indep[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        indep[s] = indep[rest] && adj[v] & rest as u64 == 0;
        dom[s] = dom[rest] | adj[v] | 1 << v;
    }
    let mut best = 0;
    for s in 1..size {
        let (mut lo, mut hi) = (usize::MAX, 0);
        let mut t = s;
        loop {
            if indep[t] && dom[t] & s as u64 == s as u64 {
                let c = t.count_ones() as usize;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        best = best.max(hi - lo);
    }
    best
}

/// Minimum number of cliques partitioning the vertex set, by dynamic
/// programming over subsets.
pub fn clique_cover_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let adj = masks(g);
    let size = 1usize << n;
    let is_clique = |s: u64| bits(s).all(|v| (s & !(1 << v)) & !adj[v] == 0);
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = (s as u64) & !(1 << low);
        // Cliques through the lowest vertex.
        let mut t = rest;
        loop {
            let c = t | 1 << low;
            if is_clique(c) {
                let r = best[(s as u64 & !c) as usize];
                best[s] = best[s].min(r + 1);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
    }
    best[size - 1]
}

pub fn semi_perfect(g: &Graph) -> bool {
    alpha(g) == clique_cover_number(g)
}

pub fn has_triangle(g: &Graph) -> bool {
    let adj = masks(g);
    (0..g.n()).any(|u| bits(adj[u]).any(|v| v > u && adj[u] & adj[v] != 0))
}

pub fn has_claw(g: &Graph) -> bool {
    let adj = masks(g);
    (0..g.n()).any(|c| {
        let nb: Vec<usize> = bits(adj[c]).collect();
        nb.iter().enumerate().any(|(x, &a)| {
            nb[x + 1..].iter().enumerate().any(|(y, &b)| {
                adj[a] & 1 << b == 0 && nb[x + 1 + y + 1..].iter().any(|&d| adj[a] & 1 << d == 0 && adj[b] & 1 << d == 0)
            })
        })
    })
}

/// Whether some six vertices induce two disjoint copies of P3.
pub fn has_two_p3(g: &Graph) -> bool {
    let n = g.n();
    let adj = masks(g);
    (0u64..1 << n).filter(|s| s.count_ones() == 6).any(|s| {
        let deg = |v: usize| (adj[v] & s).count_ones();
        let edges: u32 = bits(s).map(deg).sum::<u32>() / 2;
        let centers: Vec<usize> = bits(s).filter(|&v| deg(v) == 2).collect();
        let leaves = bits(s).filter(|&v| deg(v) == 1).count();
        edges == 4
            && centers.len() == 2
            && leaves == 4
            && adj[centers[0]] & 1 << centers[1] == 0
            && adj[centers[0]] & adj[centers[1]] & s == 0
    })
}

/// All partitions of the vertex set into cliques, as lists of masks.
pub fn clique_partitions(g: &Graph) -> Vec<Vec<u64>> {
    fn go(adj: &[u64], left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let v = left.trailing_zeros() as usize;
        let others = left & !(1 << v);
        let mut t = others;
        loop {
            let c = t | 1 << v;
            if bits(c).all(|x| (c & !(1 << x)) & !adj[x] == 0) {
                cur.push(c);
                go(adj, left & !c, cur, out);
                cur.pop();
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & others;
        }
    }
    let mut out = Vec::new();
    go(&masks(g), full(g.n()), &mut Vec::new(), &mut out);
    out
}

/// k-tightness straight from the definition: every k cliques together meet
/// every maximal independent set.
pub fn is_k_tight_by_definition(partition: &[u64], k: usize, mis: &[u64]) -> bool {
    fn subsets(l: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for j in from..l {
            cur.push(j);
            let ok = subsets(l, k, j + 1, cur, f);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if k > partition.len() {
        return true;
    }
    subsets(partition.len(), k, 0, &mut Vec::new(), &mut |j| {
        let union = j.iter().fold(0u64, |acc, &i| acc | partition[i]);
        mis.iter().all(|&s| s & union != 0)
    })
}

/// Isomorphism by trying every bijection that respects degrees.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (ga, ha) = (masks(g), masks(h));
    let n = g.n();
    fn go(ga: &[u64], ha: &[u64], map: &mut Vec<usize>, used: u64) -> bool {
        let v = map.len();
        if v == ga.len() {
            return true;
        }
        for w in 0..ha.len() {
            if used & 1 << w != 0 || ga[v].count_ones() != ha[w].count_ones() {
                continue;
            }
            let consistent = (0..v).all(|u| (ga[v] >> u & 1) == (ha[w] >> map[u] & 1));
            if consistent {
                map.push(w);
                if go(ga, ha, map, used | 1 << w) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(&ga, &ha, &mut Vec::with_capacity(n), 0)
}
