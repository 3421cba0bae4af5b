//! Sparse multivariate polynomials, rational functions, and dense matrices
//! over them.

mod matrix;
mod poly;
mod ratfunc;

use std::collections::BTreeMap;

pub use matrix::Matrix;
pub use poly::{var_cmp, Monomial, MultiPoly};
pub use ratfunc::RatFunc;

use crate::error::Result;

pub type PolyMatrix = Matrix<MultiPoly>;
pub type RatMatrix = Matrix<RatFunc>;

pub fn char_poly<T: crate::ring::Ring>(m: &Matrix<T>) -> Vec<T> {
    m.char_poly()
}

pub fn determinant<T: crate::ring::ExactDiv>(m: &Matrix<T>) -> T {
    m.determinant()
}

pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    f.resultant(g, var)
}

pub fn substitute(f: &MultiPoly, bindings: &BTreeMap<String, MultiPoly>) -> MultiPoly {
    f.substitute(bindings)
}

/// Resultant decision for two homogeneous forms in `(a, b)`: returns whether
/// they have a common projective zero over the algebraic closure. The line
/// `b = 0` is checked separately; elsewhere the forms are dehomogenized at
/// `b = 1` and the resultant in `a` decides.
pub fn homogeneous_common_zero(f: &MultiPoly, g: &MultiPoly, a: &str, b: &str) -> Result<bool> {
    let at = |p: &MultiPoly, name: &str, v: i64| {
        p.substitute(&BTreeMap::from([(
            name.to_string(),
            MultiPoly::from_int(v),
        )]))
    };
    if at(f, b, 0)
        .substitute(&BTreeMap::from([(a.to_string(), MultiPoly::one())]))
        .is_zero()
        && at(g, b, 0)
            .substitute(&BTreeMap::from([(a.to_string(), MultiPoly::one())]))
            .is_zero()
    {
        return Ok(true);
    }
    let fd = at(f, b, 1);
    let gd = at(g, b, 1);
    if fd.is_zero() || gd.is_zero() {
        return Ok(true);
    }
    Ok(fd.resultant(&gd, a)?.is_zero())
}
