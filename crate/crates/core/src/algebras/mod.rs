//! Exact matrix models of symbol algebras and their tensor products, generic
//! matrices, and the general field extension, with `σ^(i)` computed in each.

mod checks;
mod generic;
mod search;
mod symbol;

pub use checks::{centrality_check, model_relations_check};
pub use generic::{
    companion_matrix, eval_at_matrix, eval_ud_word, general_coeff_names, general_ext_matrix,
    general_ext_sigma, generic_matrix, inverse_identity_check, remark38_consistency, ud_sigma,
};
pub use search::{evidence_search, sample_element, Predicate, SearchConfig};
pub use symbol::{
    model_matrix, radicals_to_center, sigma_all_in_algebra, sigma_in_algebra, sigma_of_model,
    symbol_matrix_model, tensor_model, AlgebraElement, SymbolSpec, TensorSpec,
};
