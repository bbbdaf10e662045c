//! Structure of the symmetric difference of two maximal independent sets.
//!
//! For maximal independent sets `I1, I2` the subgraph `H` induced by
//! `I1 △ I2` is bipartite with sides `I1 \ I2` and `I2 \ I1`, and each side is
//! a maximal independent set of `H`. In claw-free graphs `H` also has maximum
//! degree at most two.

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricDifference {
    pub only_first: VertexSet,
    pub only_second: VertexSet,
    pub bipartite: bool,
    /// Both sides are maximal independent sets of the induced subgraph.
    pub sides_maximal: bool,
    pub max_degree: usize,
}

pub fn symmetric_difference(g: &Graph, i1: &VertexSet, i2: &VertexSet) -> Result<SymmetricDifference> {
    g.check_bound(i1)?;
    g.check_bound(i2)?;
    for s in [i1, i2] {
        if !g.is_maximal_independent(s) {
            return Err(Error::Domain(format!("{s:?} is not a maximal independent set")));
        }
    }
    let only_first = i1.and_not(i2);
    let only_second = i2.and_not(i1);
    let both = only_first.or(&only_second);
    let (h, map) = g.induced_subgraph(&both)?;
    let back = |s: &VertexSet| {
        VertexSet::from_members(h.n(), map.iter().enumerate().filter(|(_, &v)| s.contains(v)).map(|(i, _)| i))
            .expect("in range")
    };
    let (a, b) = (back(&only_first), back(&only_second));
    let bipartite = h.is_independent(&a) && h.is_independent(&b) && h.is_bipartite();
    let sides_maximal = h.is_maximal_independent(&a) && h.is_maximal_independent(&b);
    Ok(SymmetricDifference {
        only_first,
        only_second,
        bipartite,
        sides_maximal,
        max_degree: h.max_degree(),
    })
}
