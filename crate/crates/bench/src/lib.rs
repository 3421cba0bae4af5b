//! Deterministic inputs shared by the kernel benchmarks.

use sigma_core::expr::parse_poly;
use sigma_core::{CycloNum, Matrix, MultiPoly};

/// An `n×n` matrix over `Q(ζ_12)` with small, fixed entries.
pub fn cyclotomic_matrix(n: usize) -> Matrix<CycloNum> {
    Matrix::from_fn(n, n, |i, j| {
        let k = (3 * i + 5 * j + 1) as i64;
        CycloNum::from_int(k % 7 - 3) + CycloNum::zeta(12, k)
    })
}

/// An `n×n` matrix whose entries are distinct indeterminates `m{i}{j}`.
pub fn symbolic_matrix(n: usize) -> Matrix<MultiPoly> {
    Matrix::from_fn(n, n, |i, j| MultiPoly::var(&format!("m{}{}", i + 1, j + 1)))
}

/// A pair of univariate polynomials in `x` with symbolic coefficients.
pub fn resultant_pair(deg: u32) -> (MultiPoly, MultiPoly) {
    let f = (0..=deg)
        .map(|k| format!("a{k}*x^{k}"))
        .collect::<Vec<_>>()
        .join(" + ");
    let g = format!("x^{deg} + b*x + 1");
    (parse_poly(&f).unwrap(), parse_poly(&g).unwrap())
}

/// A dense element of `Q(ζ_n)`.
pub fn dense_cyclotomic(n: u32) -> CycloNum {
    (0..n as i64).fold(CycloNum::from_int(0), |acc, k| {
        acc + CycloNum::from_int((k * k + 1) % 7 - 3) * CycloNum::zeta(n, k)
    })
}
