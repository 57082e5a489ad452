//! Homotopy theory of finite undirected graphs built on the categorical
//! product: homotopy of walks and morphisms by spider moves and prunes,
//! covers and homotopy covers with walk/homotopy lifting, truncated
//! universal homotopy covers, deck-transformation groups, quotient covers,
//! fold/pleat reduction, and enumeration of connected homotopy covers.
//!
//! The `gph` binary exposes every operation on the command line; see the
//! repository README for file formats and examples.

pub mod covering;
pub mod deck;
pub mod error;
pub mod families;
pub mod graph;
pub mod iso;
pub mod morphism;
pub mod universal;
pub mod walk;

pub use covering::{check_cover, lift_homotopy, lift_walk, CoverReport, NeighborhoodDefect};
pub use deck::{
    deck_group, detect_shift, enumerate_covers, fundamental_group, identify_group,
    quotient, quotient_by_shift_power, subgroups, DeckGroup, EnumeratedCover,
    EnumerationOutcome, FundamentalGroup, GroupDescription, GroupTable, ShiftEvidence, Subgroup,
};
pub use error::{Error, Result};
pub use families::{generate, paper_cover_morphism, FamilySpec};
pub use graph::{load_graph, Diamond, Graph, VertexId};
pub use iso::are_isomorphic;
pub use morphism::{
    find_fold, homotopic, load_morphism, morphism_spider_moves, parse_morphism_body, pleat,
    HomVerdict, Morphism, MorphismSpiderMove,
};
pub use universal::{build_folded_cover, homotopic_rel_endpoints, ClassId, FoldedCover, LiftVerdict};
pub use walk::{
    oracle_homotopic_rel_endpoints, prune_free_walks, OracleBounds, OracleVerdict, Walk,
    WalkSpiderMove,
};
