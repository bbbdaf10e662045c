//! Independent domination on {claw, 2P3}-free graphs.
//!
//! Such graphs have gap at most one, so `i(G)` is `α(G)` when the graph is
//! well-covered and `α(G) - 1` otherwise. The two sub-problems are behind
//! traits so that polynomial claw-free algorithms can replace the exact
//! defaults.

use super::induced::{find_claw_or_two_p3, ClawOr2P3};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles;

pub trait IndependenceNumberSolver {
    fn independence_number(&self, g: &Graph) -> Result<usize>;
}

pub trait WellCoveredTester {
    fn is_well_covered(&self, g: &Graph) -> Result<bool>;
}

/// Exponential-time exact solver backing both traits.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactOracle;

impl IndependenceNumberSolver for ExactOracle {
    fn independence_number(&self, g: &Graph) -> Result<usize> {
        oracles::independence_number(g)
    }
}

impl WellCoveredTester for ExactOracle {
    fn is_well_covered(&self, g: &Graph) -> Result<bool> {
        oracles::is_well_covered(g)
    }
}

pub fn independent_domination_claw_2p3_free(g: &Graph) -> Result<usize> {
    independent_domination_with(g, &ExactOracle, &ExactOracle)
}

pub fn independent_domination_with(
    g: &Graph,
    alpha: &dyn IndependenceNumberSolver,
    well_covered: &dyn WellCoveredTester,
) -> Result<usize> {
    match find_claw_or_two_p3(g) {
        Some(ClawOr2P3::Claw(s)) => {
            return Err(Error::Domain(format!("graph contains an induced claw on {s:?}")));
        }
        Some(ClawOr2P3::TwoP3(s)) => {
            return Err(Error::Domain(format!("graph contains an induced 2P3 on {s:?}")));
        }
        None => {}
    }
    let a = alpha.independence_number(g)?;
    if well_covered.is_well_covered(g)? {
        Ok(a)
    } else {
        Ok(a - 1)
    }
}
