//! Finite abelian groups, their paired permutation-diagonal matrices, and
//! the fixed-point certificates built from them.

mod checks;
mod group;
mod sn;

pub use checks::{
    basis_check, charpoly_poly, commutation_check, endgame_solutions, paired_charpoly_check,
    thm3_certificate, thm3a_root_condition_check, DEFAULT_TUPLE_CAP,
};
pub use group::{diag_matrix, perm_matrix, AbelianGroup, Character, Element, PairedElement};
pub use sn::{
    block_group, character_decomposition_check, cyclic_counterexample_check,
    sn_fixed_point_certificate,
};
