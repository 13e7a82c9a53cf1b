//! Finite subgroups of SU(2), their character tables, the McKay matrix and
//! the Slodowy generalization to pairs `H ◁ G`.

mod chartable;
mod group;
mod slodowy;

pub use chartable::{character_table, orthogonality_residual, CharacterTable, MAX_RETRIES};
pub use group::{det, mul, quaternion, round_multiplicity, trace, FiniteGroup, GroupName, CLOSURE_CAP, M2};
pub use slodowy::{
    build_group, build_group_seeded, build_pair, build_pair_seeded, folded_match, match_with_marked,
    mckay_matrix, slodowy_matrices, two_minus, FoldedMatch, GroupPair, McKayData, PairName,
    SU2Group, SlodowyData, DEFAULT_SEED,
};
