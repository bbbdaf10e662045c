//! Named graph families with fixed canonical labelings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A named graph together with its size parameters.
///
/// Labeling: paths and cycles in traversal order, star and claw centers at
/// vertex 0, `CompleteBipartite(m, n)` with the `m`-side first, and `mP3`
/// as consecutive triples with the middle vertex second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,k}`.
    Star(usize),
    Cycle(usize),
    CopiesOfP3(usize),
    Claw,
    Empty(usize),
}

impl GraphFamily {
    fn order(&self) -> usize {
        match *self {
            GraphFamily::Path(n)
            | GraphFamily::Complete(n)
            | GraphFamily::Cycle(n)
            | GraphFamily::Empty(n) => n,
            GraphFamily::CompleteBipartite(a, b) => a.saturating_add(b),
            GraphFamily::Star(k) => k.saturating_add(1),
            GraphFamily::CopiesOfP3(m) => m.saturating_mul(3),
            GraphFamily::Claw => 4,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        let edges: Vec<(usize, usize)> = match *self {
            GraphFamily::Path(n) => (1..n).map(|v| (v - 1, v)).collect(),
            GraphFamily::Complete(n) => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
            GraphFamily::CompleteBipartite(a, b) => {
                (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect()
            }
            GraphFamily::Star(k) => (1..=k).map(|v| (0, v)).collect(),
            GraphFamily::Cycle(n) => {
                if n < 3 {
                    return Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
                }
                (0..n).map(|v| (v, (v + 1) % n)).collect()
            }
            GraphFamily::CopiesOfP3(m) => {
                (0..m).flat_map(|c| [(3 * c, 3 * c + 1), (3 * c + 1, 3 * c + 2)]).collect()
            }
            GraphFamily::Claw => vec![(0, 1), (0, 2), (0, 3)],
            GraphFamily::Empty(_) => Vec::new(),
        };
        Graph::from_edges(n, edges)
    }
}

/// Shorthand for [`GraphFamily::build`].
pub fn build_named(family: GraphFamily) -> Result<Graph> {
    family.build()
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Path(n) => write!(f, "path:{n}"),
            GraphFamily::Complete(n) => write!(f, "complete:{n}"),
            GraphFamily::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            GraphFamily::Star(k) => write!(f, "star:{k}"),
            GraphFamily::Cycle(n) => write!(f, "cycle:{n}"),
            GraphFamily::CopiesOfP3(m) => write!(f, "p3-copies:{m}"),
            GraphFamily::Claw => write!(f, "claw"),
            GraphFamily::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

/// Parses `name[:a[,b]]`, e.g. `path:4`, `complete-bipartite:2,3`, `claw`.
impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parameter(format!("non-negative integer expected, got {a:?}")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Parameter(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let fam = match name.trim() {
            "path" => arity(1).map(|_| GraphFamily::Path(params[0]))?,
            "complete" => arity(1).map(|_| GraphFamily::Complete(params[0]))?,
            "complete-bipartite" => arity(2).map(|_| GraphFamily::CompleteBipartite(params[0], params[1]))?,
            "star" => arity(1).map(|_| GraphFamily::Star(params[0]))?,
            "cycle" => arity(1).map(|_| GraphFamily::Cycle(params[0]))?,
            "p3-copies" => arity(1).map(|_| GraphFamily::CopiesOfP3(params[0]))?,
            "claw" => arity(0).map(|_| GraphFamily::Claw)?,
            "empty" => arity(1).map(|_| GraphFamily::Empty(params[0]))?,
            other => return Err(Error::Parameter(format!("unknown graph family {other:?}"))),
        };
        Ok(fam)
    }
}
