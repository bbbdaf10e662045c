//! Hereditary independence gap: forbidden induced subgraphs, catalog mining
//! and the independent-domination pipeline for {claw, 2P3}-free graphs.

pub mod canon;
pub mod catalog;
pub mod domination;
pub mod generate;
pub mod induced;
pub mod lemmas;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use catalog::{mine_forbidden_catalog, recognize_hereditary_gap_at_most, ForbiddenCatalog, Recognition};
pub use domination::{independent_domination_claw_2p3_free, ExactOracle};
pub use induced::{contains_induced, find_claw, find_claw_or_two_p3, has_hereditary_gap_at_most_1};
