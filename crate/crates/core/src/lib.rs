//! Bruhat order on sects of `(p,q)`-clans.
//!
//! A sect is the set of clans sharing a base clan; it is isomorphic to the
//! rook placements in a partition shape under the rank-tableau order. This
//! crate builds those posets, labels their covering relations with the
//! standard labelling, computes minimal covering clans, and checks the
//! EL-labelling property by exhaustive enumeration.

pub mod clan;
pub mod cover;
pub mod error;
pub mod export;
pub mod involution;
pub mod mcc;
pub mod partition;
pub mod phi;
pub mod poset;
pub mod rook;
pub mod sect;
pub mod verify;

pub use clan::{all_clans, Clan, Symbol};
pub use cover::{cover_label, full_covers, sect_covers, Cover, CoverLabel, CoverMove, MoveKind};
pub use error::{Error, Result};
pub use export::{from_json, to_dot, to_json, PosetDocument};
pub use involution::{
    clan_length, involution_length, rises, underlying_involution, Involution, PointKind, Rise,
};
pub use mcc::{increasing_chain, interval_context, mcc, mcc_cover, sect_leq, IntervalContext};
pub use partition::{matchless_to_partition, partition_to_matchless, Partition};
pub use phi::{hidden_rooks, partial_permutation, HiddenRook, PartialPermutation};
pub use poset::{Chain, Edge, MaximalChains, SectPoset};
pub use rook::{clan_to_rooks, rank_leq, rooks_to_clan, Corner, RankTableau, RookPlacement};
pub use sect::{enumerate_sect, sect_of};
pub use verify::{
    verify_el_interval, verify_el_sect, ELReport, ELSummary, IntervalOutcome, Limits,
    DEFAULT_CHAIN_LIMIT,
};
