//! Exact Cayley–Dickson octonion arithmetic, the `(Z/2)^3` sign
//! automorphisms, and the octonion fixed-point certificate.

mod arith;
mod checks;

pub use arith::{
    oct_conj, oct_mul, oct_norm, oct_trace, tau_action, Octonion, OctonionSpec, BASIS,
};
pub use checks::{
    automorphism_check, character_table_check, composition_check, quadratic_identity_check,
    thm_oct_certificate, thm_oct_certificate_capped, OctExpr,
};
