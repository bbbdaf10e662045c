use crate::bits::Bits;
use crate::families::GraphFamily;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Pattern vertices in connectivity-first order: start at 0, then always
/// the lowest-index vertex adjacent to an already placed one, falling back
/// to the lowest unplaced vertex.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let frontier = h.neighborhood(&placed).and_not(&placed);
        let next = frontier.first().or_else(|| placed.complement().first()).expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    /// `image[i]` is the host vertex of pattern vertex `order[i]`.
    image: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, used: &VertexSet) -> bool {
        let depth = self.image.len();
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.g.all_vertices().and_not(used);
        for (i, &q) in self.order[..depth].iter().enumerate() {
            let host = self.g.neighbors(self.image[i]);
            cand = if self.h.adjacent(p, q) { cand.and(host) } else { cand.and_not(host) };
            if cand.is_empty() {
                return false;
            }
        }
        let need = self.h.degree(p);
        for v in cand.iter() {
            if self.g.degree(v) < need {
                continue;
            }
            self.image.push(v);
            let mut used2 = used.clone();
            used2.insert(v);
            if self.extend(&used2) {
                return true;
            }
            self.image.pop();
        }
        false
    }
}

/// A vertex set `S` of `g` with `g[S]` isomorphic to `h`, or `None` if `g`
/// is `h`-free. The first embedding in lexicographic order of host vertices
/// (along the pattern's connectivity-first order) is returned.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(VertexSet::new(g.n()));
    }
    let mut m = Matcher {
        g,
        h,
        order: pattern_order(h),
        image: Vec::with_capacity(h.n()),
    };
    if m.extend(&VertexSet::new(g.n())) {
        Some(VertexSet::from_members(g.n(), m.image.iter().copied()).expect("host vertices"))
    } else {
        None
    }
}

/// An induced claw `{center, a, b, c}`, found by looking for an independent
/// triple inside each neighborhood.
pub fn find_claw(g: &Graph) -> Option<VertexSet> {
    for v in 0..g.n() {
        let nv = g.neighbors(v);
        if nv.count() < 3 {
            continue;
        }
        for a in nv.iter() {
            let after_a = nv.and_not(&g.closed_neighbors(a));
            for b in after_a.iter().filter(|&b| b > a) {
                let after_b = after_a.and_not(&g.closed_neighbors(b));
                let c = after_b.iter().find(|&c| c > b);
                if let Some(c) = c {
                    return Some(VertexSet::from_members(g.n(), [v, a, b, c]).expect("in range"));
                }
            }
        }
    }
    None
}

pub fn find_two_p3(g: &Graph) -> Option<VertexSet> {
    let pattern = GraphFamily::CopiesOfP3(2).build().expect("6 vertices");
    contains_induced(g, &pattern)
}

/// The first forbidden configuration found when `g` is not
/// {claw, 2P3}-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClawOr2P3 {
    Claw(VertexSet),
    TwoP3(VertexSet),
}

pub fn find_claw_or_two_p3(g: &Graph) -> Option<ClawOr2P3> {
    find_claw(g).map(ClawOr2P3::Claw).or_else(|| find_two_p3(g).map(ClawOr2P3::TwoP3))
}

/// Hereditary gap at most one, via the {claw, 2P3}-free characterization.
pub fn has_hereditary_gap_at_most_1(g: &Graph) -> bool {
    find_claw_or_two_p3(g).is_none()
}
