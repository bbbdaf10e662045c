//! Minimal forbidden induced subgraphs for hereditary gap at most `k`.
//!
//! A graph is a member when its gap is at least `k + 1` while every proper
//! induced subgraph has gap at most `k`. Equivalently: its gap exceeds `k`
//! and every single-vertex deletion lies in the class of hereditary gap at
//! most `k`. Mining walks that class level by level (it is closed under
//! vertex deletion), so the candidates on `n` vertices are exactly the
//! one-vertex extensions of class graphs on `n - 1` vertices.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, CanonicalForm};
use super::induced::contains_induced;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph6, to_graph6};
use crate::mis::closed_neighborhoods;
use crate::oracles::gap_within;
use crate::vertex_set::VertexSet;

/// Default largest `max_n` accepted by [`mine_forbidden_catalog`].
pub const MINING_BUDGET: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenCatalog {
    pub k: usize,
    pub max_n: usize,
    /// Canonically labeled members, ordered by vertex count then canonical form.
    pub members: Vec<Graph>,
    /// `max_n` reaches [`derived_bound`], so no member can be missing.
    pub complete_flag: bool,
    pub derived_bound: usize,
}

/// Sidecar metadata persisted next to the graph6 member list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogMeta {
    pub k: usize,
    pub max_n: usize,
    pub complete_flag: bool,
    pub derived_bound: usize,
}

/// Vertex bound for a connected bipartite graph of maximum degree `delta`
/// and diameter `diam`: `2 * (1 + (delta-1) + ... + (delta-1)^(diam-1))`.
pub fn bipartite_moore_bound(delta: usize, diam: usize) -> usize {
    match delta {
        0 => 1,
        1 => 2,
        _ => {
            let mut total = 0usize;
            let mut term = 1usize;
            for _ in 0..diam {
                total = total.saturating_add(term);
                term = term.saturating_mul(delta - 1);
            }
            total.saturating_mul(2)
        }
    }
}

/// Largest possible member order for `k`.
///
/// Besides `K_{1,k+2}` and `(k+1)P3`, every member is bipartite with at most
/// `k` components, maximum degree at most `k + 1` and component diameter at
/// most `4k + 1`; each component is then bounded by the bipartite Moore
/// bound.
pub fn derived_bound(k: usize) -> usize {
    let per_component = bipartite_moore_bound(k + 1, 4 * k + 1);
    (k + 3).max(3 * (k + 1)).max(k.saturating_mul(per_component))
}

/// Mines the catalog for `k` over all graphs with at most `max_n` vertices.
pub fn mine_forbidden_catalog(k: usize, max_n: usize) -> Result<ForbiddenCatalog> {
    mine_with_budget(k, max_n, MINING_BUDGET)
}

pub fn mine_with_budget(k: usize, max_n: usize, budget: usize) -> Result<ForbiddenCatalog> {
    if max_n > budget {
        return Err(Error::capacity("catalog order", max_n, budget));
    }
    // Level n of the class: canonical forms of graphs with hereditary gap <= k.
    let mut class: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)?]];
    let mut class_forms: Vec<BTreeSet<CanonicalForm>> = vec![[canonical_form(&Graph::empty(0)?)].into()];
    let mut members = Vec::new();

    for n in 1..=max_n {
        let parents = &class[n - 1];
        let prev_forms = &class_forms[n - 1];
        let children: BTreeSet<CanonicalForm> = parents
            .par_iter()
            .fold(BTreeSet::new, |mut acc, h| {
                for mask in 0u64..(1u64 << h.n()) {
                    let child = h.extend_with_vertex(&VertexSet::from_mask(h.n(), mask)).expect("small");
                    acc.insert(canonical_form(&child));
                }
                acc
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });

        let children: Vec<CanonicalForm> = children.into_iter().collect();
        let verdicts: Vec<(Graph, bool, bool)> = children
            .into_par_iter()
            .filter_map(|form| {
                let g = parse_graph6(form.as_str()).expect("canonical graph6");
                let closed = closed_neighborhoods::<u64>(&g);
                let gap = gap_within(&closed, <u64 as crate::bits::Bits>::full(n));
                let deletions_in_class =
                    (0..n).all(|v| prev_forms.contains(&canonical_form(&g.delete_vertex(v))));
                if !deletions_in_class {
                    return None;
                }
                Some((g, gap <= k, gap > k))
            })
            .collect();

        let mut level = Vec::new();
        let mut forms = BTreeSet::new();
        for (g, in_class, forbidden) in verdicts {
            if in_class {
                forms.insert(canonical_form(&g));
                level.push(g);
            } else if forbidden {
                members.push(g);
            }
        }
        class.push(level);
        class_forms.push(forms);
    }

    let bound = derived_bound(k);
    Ok(ForbiddenCatalog {
        k,
        max_n,
        members,
        complete_flag: max_n >= bound,
        derived_bound: bound,
    })
}

/// Verdict of catalog-based recognition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub verdict: bool,
    /// A `true` verdict only covers forbidden graphs up to the catalog's
    /// `max_n`; `false` verdicts are always sound.
    pub provisional: bool,
    /// Member found as an induced subgraph, and where.
    pub witness: Option<(String, VertexSet)>,
}

/// Hereditary gap at most `catalog.k`, decided by freeness from every member.
pub fn recognize_hereditary_gap_at_most(g: &Graph, catalog: &ForbiddenCatalog) -> Recognition {
    for m in &catalog.members {
        if let Some(s) = contains_induced(g, m) {
            return Recognition {
                verdict: false,
                provisional: false,
                witness: Some((to_graph6(m), s)),
            };
        }
    }
    Recognition {
        verdict: true,
        provisional: !catalog.complete_flag,
        witness: None,
    }
}

impl ForbiddenCatalog {
    pub fn meta(&self) -> CatalogMeta {
        CatalogMeta {
            k: self.k,
            max_n: self.max_n,
            complete_flag: self.complete_flag,
            derived_bound: self.derived_bound,
        }
    }

    pub fn member_forms(&self) -> Vec<String> {
        self.members.iter().map(to_graph6).collect()
    }

    /// Path of the JSON sidecar for a catalog stored at `path`.
    pub fn sidecar_path(path: &Path) -> PathBuf {
        let mut s = path.as_os_str().to_owned();
        s.push(".json");
        PathBuf::from(s)
    }

    /// Writes the members as sorted graph6 lines to `path` and the metadata
    /// to `path.json`.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut lines = self.member_forms();
        lines.sort();
        let mut body = lines.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        fs::write(path, body)?;
        let meta = serde_json::to_string_pretty(&self.meta()).expect("plain struct");
        fs::write(Self::sidecar_path(path), meta + "\n")?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let body = fs::read_to_string(path)?;
        let meta_text = fs::read_to_string(Self::sidecar_path(path))?;
        let meta: CatalogMeta =
            serde_json::from_str(&meta_text).map_err(|e| Error::Io(format!("catalog sidecar: {e}")))?;
        let mut members = body
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(parse_graph6)
            .collect::<Result<Vec<_>>>()?;
        members.sort_by_key(|g| (g.n(), to_graph6(g)));
        Ok(ForbiddenCatalog {
            k: meta.k,
            max_n: meta.max_n,
            members,
            complete_flag: meta.complete_flag,
            derived_bound: meta.derived_bound,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GraphFamily;
    use crate::hereditary::canon::are_isomorphic;

    fn named(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn k0_catalog_is_p3() {
        let c = mine_forbidden_catalog(0, 5).unwrap();
        assert_eq!(c.members.len(), 1);
        assert!(are_isomorphic(&c.members[0], &named(GraphFamily::Path(3))));
        assert!(c.complete_flag);
        assert_eq!(c.derived_bound, 3);
    }

    #[test]
    fn bounds() {
        assert_eq!(bipartite_moore_bound(2, 5), 10);
        assert_eq!(bipartite_moore_bound(3, 3), 14);
        assert_eq!(derived_bound(1), 10);
        assert_eq!(derived_bound(2), 2 * 2 * 511);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(mine_forbidden_catalog(1, 10), Err(Error::Capacity { .. })));
    }

    #[test]
    fn recognition_reports_witness() {
        let c = mine_forbidden_catalog(0, 4).unwrap();
        let r = recognize_hereditary_gap_at_most(&named(GraphFamily::Path(4)), &c);
        assert!(!r.verdict);
        assert_eq!(r.witness.unwrap().1.len(), 3);
        let k = named(GraphFamily::Complete(5)).disjoint_union(&named(GraphFamily::Complete(2))).unwrap();
        let r = recognize_hereditary_gap_at_most(&k, &c);
        assert!(r.verdict && !r.provisional);
    }

    #[test]
    fn save_and_load() {
        let dir = std::env::temp_dir().join(format!("indgap-catalog-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("k1.g6");
        let c = mine_forbidden_catalog(1, 6).unwrap();
        c.save(&path).unwrap();
        let meta: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(ForbiddenCatalog::sidecar_path(&path)).unwrap()).unwrap();
        assert_eq!(meta["k"], 1);
        assert_eq!(meta["complete_flag"], false);
        assert_eq!(meta["derived_bound"], 10);
        assert_eq!(ForbiddenCatalog::load(&path).unwrap(), c);
        fs::remove_dir_all(&dir).unwrap();
    }
}
