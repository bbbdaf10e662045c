//! Hardness gadgets and empirical checks of their iff-properties.
//!
//! * [`reduce_wellcovered_to_gap`]: `G ⊎ K_{1,m}`; well-coveredness of `G`
//!   becomes a gap bound.
//! * [`build_gap1_gadget`]: `k` copies of every vertex plus `k(k-1)`
//!   auxiliary vertices; `α(G) >= k` becomes "`G'` is not well-covered"
//!   while the gap of `G'` stays at most one.
//! * [`reduce_is_to_hereditary_gap`]: a universal vertex; `α(G) >= k`
//!   becomes "hereditary gap of `G'` is at least `k - 1`".

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::io::to_graph6;
use crate::oracles;
use crate::vertex_set::VertexSet;

/// Role of a gadget vertex. Rows and columns are 1-based, matching the
/// `v_{i,j}` / `u_{i,j}` naming.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    VType { row: usize, column: usize },
    UType { row: usize, column: usize },
    Original,
    StarCenter,
    StarLeaf,
    Universal,
}

impl Role {
    pub fn name(&self) -> &'static str {
        match self {
            Role::VType { .. } => "v_type",
            Role::UType { .. } => "u_type",
            Role::Original => "original",
            Role::StarCenter => "star_center",
            Role::StarLeaf => "star_leaf",
            Role::Universal => "universal",
        }
    }

    fn position(&self) -> Option<(usize, usize)> {
        match *self {
            Role::VType { row, column } | Role::UType { row, column } => Some((row, column)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Column,
    Row,
    Diagonal,
    Cross,
    GEdge,
    Union,
    Universal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GadgetParams {
    pub source_n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_leaves: Option<usize>,
}

/// A constructed graph with per-vertex roles and per-edge kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetArtifact {
    pub graph: Graph,
    pub role_map: Vec<Role>,
    pub params: GadgetParams,
    /// `(u, v, kind)` with `u < v`, in the graph's edge order.
    pub edge_kinds: Vec<(usize, usize, EdgeKind)>,
    /// For the universal-vertex reduction: an independent `k`-set of the
    /// source plus the universal vertex, inducing `K_{1,k}`, when one exists.
    pub witness: Option<VertexSet>,
}

impl GadgetArtifact {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    pub fn count_role(&self, name: &str) -> usize {
        self.role_map.iter().filter(|r| r.name() == name).count()
    }
}

impl Serialize for GadgetArtifact {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct RoleEntry {
            vertex: usize,
            role: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            row: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            column: Option<usize>,
        }
        #[derive(Serialize)]
        struct EdgeEntry {
            u: usize,
            v: usize,
            kind: EdgeKind,
        }
        let roles: Vec<RoleEntry> = self
            .role_map
            .iter()
            .enumerate()
            .map(|(vertex, r)| RoleEntry {
                vertex,
                role: r.name(),
                row: r.position().map(|p| p.0),
                column: r.position().map(|p| p.1),
            })
            .collect();
        let edges: Vec<EdgeEntry> = self.edge_kinds.iter().map(|&(u, v, kind)| EdgeEntry { u, v, kind }).collect();
        let fields = if self.witness.is_some() { 5 } else { 4 };
        let mut s = serializer.serialize_struct("GadgetArtifact", fields)?;
        s.serialize_field("graph6", &to_graph6(&self.graph))?;
        s.serialize_field("role_map", &roles)?;
        s.serialize_field("edge_kinds", &edges)?;
        s.serialize_field("params", &self.params)?;
        if let Some(w) = &self.witness {
            s.serialize_field("witness", w)?;
        }
        s.end()
    }
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(Error::Domain("the source graph has no vertices".into()))
    } else {
        Ok(())
    }
}

/// `g ⊎ K_{1,star_leaves}`. With `star_leaves = k + 1`, `g` is well-covered
/// iff the result has gap at most `k`.
pub fn reduce_wellcovered_to_gap(g: &Graph, k: usize, star_leaves: usize) -> Result<GadgetArtifact> {
    require_nonempty(g)?;
    let star = Graph::from_edges(star_leaves + 1, (1..=star_leaves).map(|l| (0, l)))?;
    let graph = g.disjoint_union(&star)?;
    let n = g.n();
    let mut role_map = vec![Role::Original; n];
    role_map.push(Role::StarCenter);
    role_map.extend(std::iter::repeat_n(Role::StarLeaf, star_leaves));
    let edge_kinds = graph
        .edges()
        .map(|(u, v)| (u, v, if u < n { EdgeKind::GEdge } else { EdgeKind::Union }))
        .collect();
    Ok(GadgetArtifact {
        graph,
        role_map,
        params: GadgetParams {
            source_n: n,
            k,
            star_leaves: Some(star_leaves),
        },
        edge_kinds,
        witness: None,
    })
}

/// Vertex of `v_{i,j}` (1-based) in a gadget with `k` columns.
pub fn v_index(k: usize, i: usize, j: usize) -> usize {
    (i - 1) * k + (j - 1)
}

/// Vertex of `u_{i,j}` (1-based, `i != j`) in a gadget built from `n` source
/// vertices: after all `v`-type vertices, pairs in lexicographic order.
pub fn u_index(n: usize, k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j);
    let rank = (i - 1) * (k - 1) + if j < i { j - 1 } else { j - 2 };
    n * k + rank
}

/// Kind of the gadget edge between two positioned vertices, if any. When a
/// pair qualifies for several kinds the first in the order column, row,
/// diagonal, cross, G-edge wins; only column and G-edges can coincide.
fn gadget_edge(g: &Graph, a: Role, b: Role) -> Option<EdgeKind> {
    use Role::{UType, VType};
    let (ra, ca) = a.position()?;
    let (rb, cb) = b.position()?;
    if ca == cb {
        return Some(EdgeKind::Column);
    }
    match (a, b) {
        (VType { .. }, VType { .. }) => {
            if ra == rb {
                Some(EdgeKind::Row)
            } else if g.adjacent(ra - 1, rb - 1) {
                Some(EdgeKind::GEdge)
            } else {
                None
            }
        }
        (UType { .. }, UType { .. }) => (ra != rb).then_some(EdgeKind::Diagonal),
        (UType { .. }, VType { .. }) => (ra == cb).then_some(EdgeKind::Cross),
        (VType { .. }, UType { .. }) => (rb == ca).then_some(EdgeKind::Cross),
        _ => None,
    }
}

/// The gap-one gadget on `n·k + k(k-1)` vertices.
pub fn build_gap1_gadget(g: &Graph, k: usize) -> Result<GadgetArtifact> {
    require_nonempty(g)?;
    if k < 2 {
        return Err(Error::Domain(format!("the gadget needs k >= 2, got {k}")));
    }
    let n = g.n();
    let total = n
        .checked_mul(k)
        .and_then(|v| v.checked_add(k * (k - 1)))
        .filter(|&t| t <= MAX_VERTICES)
        .ok_or_else(|| Error::capacity("gadget vertex count", n.saturating_mul(k), MAX_VERTICES))?;

    let mut role_map = Vec::with_capacity(total);
    for i in 1..=n {
        for j in 1..=k {
            role_map.push(Role::VType { row: i, column: j });
        }
    }
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            role_map.push(Role::UType { row: i, column: j });
        }
    }

    let mut edge_kinds = Vec::new();
    for a in 0..total {
        for b in a + 1..total {
            if let Some(kind) = gadget_edge(g, role_map[a], role_map[b]) {
                edge_kinds.push((a, b, kind));
            }
        }
    }
    let graph = Graph::from_edges(total, edge_kinds.iter().map(|&(u, v, _)| (u, v)))?;
    Ok(GadgetArtifact {
        graph,
        role_map,
        params: GadgetParams {
            source_n: n,
            k,
            star_leaves: None,
        },
        edge_kinds,
        witness: None,
    })
}

/// `g` plus a universal vertex (index `g.n()`). The witness is present
/// exactly when `α(g) >= k`.
pub fn reduce_is_to_hereditary_gap(g: &Graph, k: usize) -> Result<GadgetArtifact> {
    require_nonempty(g)?;
    if k < 2 {
        return Err(Error::Domain(format!("the reduction needs k >= 2, got {k}")));
    }
    let n = g.n();
    let graph = g.add_universal_vertex()?;
    let mut role_map = vec![Role::Original; n];
    role_map.push(Role::Universal);
    let edge_kinds = graph
        .edges()
        .map(|(u, v)| (u, v, if v == n { EdgeKind::Universal } else { EdgeKind::GEdge }))
        .collect();
    let max = oracles::maximum_independent_set(g)?;
    let witness = (max.len() >= k).then(|| {
        VertexSet::from_members(n + 1, max.iter().take(k).chain([n])).expect("in range")
    });
    Ok(GadgetArtifact {
        graph,
        role_map,
        params: GadgetParams {
            source_n: n,
            k,
            star_leaves: None,
        },
        edge_kinds,
        witness,
    })
}

/// Verification limits for gadget checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_maximal_sets: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 30,
            max_maximal_sets: 2000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetClaims {
    pub alpha_source: usize,
    pub alpha_gadget: usize,
    pub idom_gadget: usize,
    pub well_covered_gadget: bool,
    /// `i(G') = k - 1`.
    pub idom_is_k_minus_1: bool,
    /// Gap of `G'` at most one.
    pub gap_at_most_one: bool,
    /// `α(G) >= k` iff `α(G') >= k`.
    pub alpha_iff: bool,
    /// `α(G) >= k` iff `G'` is not well-covered.
    pub well_covered_iff: bool,
    /// Every independent set uses at most one vertex per column.
    pub column_bound: bool,
    /// Maximal independent sets with a `u`-type vertex have at most `k - 1`
    /// vertices.
    pub u_type_bound: bool,
    /// Diagonal placement `{v_{i_1,1}, ..., v_{i_k,k}}` of an independent
    /// `k`-set of the source is independent; `None` when `α(G) < k`.
    pub diagonal_lift: Option<bool>,
}

impl GadgetClaims {
    pub fn all_hold(&self) -> bool {
        self.idom_is_k_minus_1 && self.gap_at_most_one && self.alpha_iff && self.well_covered_iff && self.column_bound && self.u_type_bound && self.diagonal_lift != Some(false)
    }
}

pub fn verify_gadget_claims(a: &GadgetArtifact, source: &Graph, k: usize) -> Result<GadgetClaims> {
    verify_gadget_claims_with(a, source, k, OracleBudget::default())
}

pub fn verify_gadget_claims_with(
    a: &GadgetArtifact,
    source: &Graph,
    k: usize,
    budget: OracleBudget,
) -> Result<GadgetClaims> {
    if a.params.k != k || a.params.source_n != source.n() || a.params.star_leaves.is_some() {
        return Err(Error::Domain("artifact was not built from this source and k".into()));
    }
    let gp = &a.graph;
    if gp.n() > budget.max_vertices {
        return Err(Error::capacity("gadget vertex count", gp.n(), budget.max_vertices));
    }
    let mut sets = Vec::new();
    for s in oracles::enumerate_maximal_independent_sets(gp)? {
        if sets.len() == budget.max_maximal_sets {
            return Err(Error::capacity("maximal independent sets", sets.len() + 1, budget.max_maximal_sets));
        }
        sets.push(s);
    }

    let alpha_source = oracles::independence_number(source)?;
    let (alpha_gadget, idom_gadget) = oracles::alpha_and_idom(gp)?;
    let well_covered_gadget = alpha_gadget == idom_gadget;
    let big = alpha_source >= k;

    let column_of = |v: usize| a.role_map[v].position().map(|p| p.1);
    let column_bound = sets.iter().all(|s| {
        let mut seen = 0u64;
        s.iter().all(|v| {
            let bit = 1u64 << column_of(v).unwrap_or(0);
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        })
    });
    let u_type_bound = sets
        .iter()
        .filter(|s| s.iter().any(|v| matches!(a.role_map[v], Role::UType { .. })))
        .all(|s| s.len() < k);
    let diagonal_lift = big.then(|| {
        let base = oracles::maximum_independent_set(source).expect("nonempty");
        let lifted = base.iter().take(k).enumerate().map(|(t, i)| v_index(k, i + 1, t + 1));
        gp.is_independent(&VertexSet::from_members(gp.n(), lifted).expect("in range"))
    });

    Ok(GadgetClaims {
        alpha_source,
        alpha_gadget,
        idom_gadget,
        well_covered_gadget,
        idom_is_k_minus_1: idom_gadget + 1 == k,
        gap_at_most_one: alpha_gadget - idom_gadget <= 1,
        alpha_iff: big == (alpha_gadget >= k),
        well_covered_iff: big == !well_covered_gadget,
        column_bound,
        u_type_bound,
        diagonal_lift,
    })
}

/// Outcome of the disjoint-union-with-a-star reduction for both star sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarUnionReport {
    pub k: usize,
    pub source_gap: usize,
    pub well_covered: bool,
    /// Gap of `g ⊎ K_{1,k}`.
    pub gap_with_k_leaves: usize,
    /// Gap of `g ⊎ K_{1,k+1}`.
    pub gap_with_k_plus_1_leaves: usize,
    /// "`g` well-covered iff gap at most `k`" with `k` leaves.
    pub iff_with_k_leaves: bool,
    /// The same statement with `k + 1` leaves.
    pub iff_with_k_plus_1_leaves: bool,
}

pub fn verify_star_union_reduction(g: &Graph, k: usize) -> Result<StarUnionReport> {
    let source_gap = oracles::independence_gap(g)?;
    let well_covered = source_gap == 0;
    let gap_of = |leaves: usize| -> Result<usize> {
        oracles::independence_gap(&reduce_wellcovered_to_gap(g, k, leaves)?.graph)
    };
    let gap_with_k_leaves = gap_of(k)?;
    let gap_with_k_plus_1_leaves = gap_of(k + 1)?;
    Ok(StarUnionReport {
        k,
        source_gap,
        well_covered,
        gap_with_k_leaves,
        gap_with_k_plus_1_leaves,
        iff_with_k_leaves: well_covered == (gap_with_k_leaves <= k),
        iff_with_k_plus_1_leaves: well_covered == (gap_with_k_plus_1_leaves <= k),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalVertexReport {
    pub k: usize,
    pub alpha: usize,
    pub hereditary_gap: usize,
    /// `α(g) >= k` iff hereditary gap of `g + v` is at least `k - 1`.
    pub holds: bool,
    /// Gap of the subgraph induced by the artifact witness, if any.
    pub witness_gap: Option<usize>,
}

pub fn verify_universal_reduction(g: &Graph, k: usize) -> Result<UniversalVertexReport> {
    let a = reduce_is_to_hereditary_gap(g, k)?;
    let alpha = oracles::independence_number(g)?;
    let hereditary_gap = oracles::hereditary_independence_gap(&a.graph)?;
    let witness_gap = match &a.witness {
        Some(w) => Some(oracles::independence_gap(&a.graph.induced_subgraph(w)?.0)?),
        None => None,
    };
    Ok(UniversalVertexReport {
        k,
        alpha,
        hereditary_gap,
        holds: (alpha >= k) == (hereditary_gap + 1 >= k),
        witness_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits;
    use crate::families::GraphFamily;
    use crate::hereditary::are_isomorphic;

    fn named(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn gadget_on_an_edge_is_complete() {
        let a = build_gap1_gadget(&named(GraphFamily::Complete(2)), 2).unwrap();
        assert!(are_isomorphic(&a.graph, &named(GraphFamily::Complete(6))));
        let claims = verify_gadget_claims(&a, &named(GraphFamily::Complete(2)), 2).unwrap();
        assert!(claims.all_hold());
        assert_eq!(claims.alpha_gadget, 1);
    }

    #[test]
    fn gadget_on_two_isolated_vertices() {
        let src = named(GraphFamily::Empty(2));
        let a = build_gap1_gadget(&src, 2).unwrap();
        let claims = verify_gadget_claims(&a, &src, 2).unwrap();
        assert_eq!(claims.alpha_gadget, 2);
        assert!(!claims.well_covered_gadget);
        assert!(claims.all_hold());
        assert_eq!(claims.diagonal_lift, Some(true));
    }

    #[test]
    fn gadget_layout() {
        let src = named(GraphFamily::Path(4));
        let a = build_gap1_gadget(&src, 3).unwrap();
        assert_eq!(a.graph.n(), 18);
        assert_eq!(a.count_role("v_type"), 12);
        assert_eq!(a.count_role("u_type"), 6);
        assert_eq!(a.role_map[v_index(3, 2, 3)], Role::VType { row: 2, column: 3 });
        assert_eq!(a.role_map[u_index(4, 3, 1, 2)], Role::UType { row: 1, column: 2 });
        assert_eq!(a.role_map[u_index(4, 3, 3, 2)], Role::UType { row: 3, column: 2 });
        assert_eq!(a.edge_kinds.len(), a.graph.edge_count());

        let kind = |x: usize, y: usize| {
            a.edge_kinds.iter().find(|&&(u, v, _)| (u, v) == (x.min(y), x.max(y))).map(|e| e.2)
        };
        // v_{1,1} and v_{2,1}: same column and adjacent in the source.
        assert_eq!(kind(v_index(3, 1, 1), v_index(3, 2, 1)), Some(EdgeKind::Column));
        assert_eq!(kind(v_index(3, 1, 1), v_index(3, 1, 2)), Some(EdgeKind::Row));
        assert_eq!(kind(v_index(3, 1, 1), v_index(3, 2, 3)), Some(EdgeKind::GEdge));
        assert_eq!(kind(v_index(3, 1, 1), v_index(3, 3, 2)), None);
        assert_eq!(kind(u_index(4, 3, 1, 2), u_index(4, 3, 2, 3)), Some(EdgeKind::Diagonal));
        assert_eq!(kind(u_index(4, 3, 1, 2), u_index(4, 3, 1, 3)), None);
        assert_eq!(kind(u_index(4, 3, 1, 2), u_index(4, 3, 3, 2)), Some(EdgeKind::Column));
        assert_eq!(kind(u_index(4, 3, 1, 2), v_index(3, 4, 1)), Some(EdgeKind::Cross));
        assert_eq!(kind(u_index(4, 3, 1, 2), v_index(3, 4, 3)), None);
    }

    #[test]
    fn gadget_rejects_small_k() {
        assert!(matches!(build_gap1_gadget(&named(GraphFamily::Path(3)), 1), Err(Error::Domain(_))));
    }

    #[test]
    fn gadget_budget_is_enforced() {
        let src = named(GraphFamily::Empty(10));
        let a = build_gap1_gadget(&src, 3).unwrap();
        assert!(matches!(verify_gadget_claims(&a, &src, 3), Err(Error::Capacity { .. })));
    }

    #[test]
    fn star_union_examples() {
        let k2 = named(GraphFamily::Complete(2));
        let a = reduce_wellcovered_to_gap(&k2, 2, 3).unwrap();
        assert_eq!(a.graph.n(), 6);
        assert_eq!(oracles::independence_gap(&a.graph).unwrap(), 2);
        let p3 = named(GraphFamily::Path(3));
        let a = reduce_wellcovered_to_gap(&p3, 2, 3).unwrap();
        assert_eq!(oracles::independence_gap(&a.graph).unwrap(), 3);

        // A source with gap one separates the two star sizes.
        let r = verify_star_union_reduction(&p3, 2).unwrap();
        assert!(r.iff_with_k_plus_1_leaves);
        assert!(!r.iff_with_k_leaves);
        let r = verify_star_union_reduction(&named(GraphFamily::Cycle(5)), 3).unwrap();
        assert!(r.iff_with_k_leaves && r.iff_with_k_plus_1_leaves);
    }

    #[test]
    fn universal_vertex_examples() {
        let a = reduce_is_to_hereditary_gap(&named(GraphFamily::Empty(3)), 3).unwrap();
        assert!(are_isomorphic(&a.graph, &named(GraphFamily::Claw)));
        assert_eq!(a.witness.as_ref().unwrap().members(), vec![0, 1, 2, 3]);
        let r = verify_universal_reduction(&named(GraphFamily::Empty(3)), 3).unwrap();
        assert!(r.holds);
        assert_eq!(r.hereditary_gap, 2);
        assert_eq!(r.witness_gap, Some(2));

        let r = verify_universal_reduction(&named(GraphFamily::Complete(3)), 2).unwrap();
        assert!(r.holds);
        assert_eq!((r.alpha, r.hereditary_gap, r.witness_gap), (1, 0, None));
    }

    #[test]
    fn artifact_json_shape() {
        let a = reduce_is_to_hereditary_gap(&named(GraphFamily::Path(2)), 2).unwrap();
        let j = a.to_json();
        assert_eq!(j["graph6"], "Bw");
        assert_eq!(j["role_map"][2]["role"], "universal");
        assert!(j["role_map"][0].get("row").is_none());
        assert_eq!(j["edge_kinds"][0]["kind"], "g_edge");
        assert_eq!(j["edge_kinds"][1]["kind"], "universal");
        assert_eq!(j["params"]["k"], 2);
        assert!(j.get("witness").is_none());

        let g = build_gap1_gadget(&named(GraphFamily::Complete(2)), 2).unwrap().to_json();
        assert_eq!(g["role_map"][5]["role"], "u_type");
        assert_eq!(g["role_map"][5]["row"], 2);
        assert_eq!(g["role_map"][5]["column"], 1);
    }
}
