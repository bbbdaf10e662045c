//! Isomorph-free exhaustive generation of small graphs.
//!
//! Level `n` is built from level `n - 1` by adding one vertex adjacent to
//! every possible subset and keeping one representative per canonical form.
//! Restricting to a hereditary class is sound: deleting the last vertex of a
//! class member leaves a class member, so every member on `n` vertices is an
//! extension of some member on `n - 1`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::vertex_set::VertexSet;

/// Largest order the generator accepts; level 10 alone has twelve million
/// unrestricted graphs.
pub const GENERATION_CAP: usize = 12;

/// Graphs on `n` vertices that pass `keep`, one per isomorphism class, in
/// canonical form order.
pub fn extend_level<F>(parents: &[Graph], keep: &F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let forms: BTreeSet<CanonicalForm> = parents
        .par_iter()
        .fold(BTreeSet::new, |mut acc, h| {
            let n = h.n();
            for mask in 0u64..(1u64 << n) {
                let child = h.extend_with_vertex(&VertexSet::from_mask(n, mask)).expect("small graph");
                if keep(&child) {
                    acc.insert(canonical_form(&child));
                }
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        });
    forms
        .into_iter()
        .map(|f| parse_graph6(f.as_str()).expect("canonical forms are valid graph6"))
        .collect()
}

/// All graphs with `0..=max_n` vertices in the hereditary class described by
/// `keep`, one representative per isomorphism class; `levels[n]` holds
/// the graphs on `n` vertices. `keep` must be closed under vertex deletion
/// for the result to be complete.
pub fn generate_class<F>(max_n: usize, keep: F) -> Result<Vec<Vec<Graph>>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if max_n > GENERATION_CAP {
        return Err(Error::capacity("generation order", max_n, GENERATION_CAP));
    }
    let mut levels = vec![vec![Graph::empty(0)?]];
    for _ in 1..=max_n {
        let next = extend_level(levels.last().expect("level 0"), &keep);
        levels.push(next);
    }
    Ok(levels)
}

/// All graphs on exactly `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(generate_class(n, |_| true)?.pop().expect("nonempty"))
}

/// All graphs on `1..=max_n` vertices, flattened.
pub fn all_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    Ok(generate_class(max_n, |_| true)?.into_iter().skip(1).flatten().collect())
}
