use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expr::{Expr, ExprKind};
use crate::polymat::{Matrix, MultiPoly, PolyMatrix, RatFunc};
use crate::report::{Step, VerificationReport};
use crate::ring::{Field, Ring};

fn check_degree(n: usize) -> Result<()> {
    if !(1..=9).contains(&n) {
        return Err(Error::invalid(format!(
            "degree must be between 1 and 9, got {n}"
        )));
    }
    Ok(())
}

/// The generic matrix with entries `{prefix}{i}{j}` (1-based).
pub fn generic_matrix(n: usize, prefix: &str) -> PolyMatrix {
    Matrix::from_fn(n, n, |i, j| {
        MultiPoly::var(&format!("{prefix}{}{}", i + 1, j + 1))
    })
}

/// Evaluates a word over the generic matrices `X = (s_ij)`, `Y = (t_ij)`.
/// Scalars stand for scalar matrices; division is by scalars only.
pub fn eval_ud_word(n: usize, word: &Expr) -> Result<PolyMatrix> {
    check_degree(n)?;
    let x = generic_matrix(n, "s");
    let y = generic_matrix(n, "t");
    eval_word(word, &x, &y, n)
}

fn eval_word(e: &Expr, x: &PolyMatrix, y: &PolyMatrix, n: usize) -> Result<PolyMatrix> {
    let rec = |e: &Expr| eval_word(e, x, y, n);
    Ok(match &e.kind {
        ExprKind::Var(name) => match name.as_str() {
            "X" => x.clone(),
            "Y" => y.clone(),
            _ => {
                return Err(Error::parse(
                    e.pos,
                    format!("unknown generic matrix '{name}'"),
                ))
            }
        },
        ExprKind::Int(_) | ExprKind::Zeta(_) => {
            Matrix::scalar(n, MultiPoly::constant(e.to_scalar()?))
        }
        ExprKind::Neg(a) => rec(a)?.scale(&MultiPoly::from_int(-1)),
        ExprKind::Add(a, b) => rec(a)?.add(&rec(b)?),
        ExprKind::Sub(a, b) => rec(a)?.sub(&rec(b)?),
        ExprKind::Mul(a, b) => rec(a)?.mul(&rec(b)?),
        ExprKind::Div(a, b) => {
            let c = b
                .to_scalar()
                .map_err(|_| Error::parse(b.pos, "division by a non-scalar"))?;
            let inv = c
                .inverse()
                .map_err(|_| Error::parse(b.pos, "division by zero"))?;
            rec(a)?.scale(&MultiPoly::constant(inv))
        }
        ExprKind::Pow(a, k) => {
            if *k < 0 {
                return Err(Error::parse(e.pos, "negative powers of generic matrices"));
            }
            rec(a)?.pow(*k as u64)
        }
        ExprKind::Group(a) => rec(a)?,
    })
}

/// `σ^(i)` of a word in two generic `n×n` matrices, in the variables
/// `s_ij`, `t_ij`.
pub fn ud_sigma(n: usize, word: &Expr, i: usize) -> Result<MultiPoly> {
    if i > n {
        return Err(Error::invalid(format!(
            "sigma index {i} exceeds degree {n}"
        )));
    }
    let m = eval_ud_word(n, word)?;
    Ok(m.sigma(i))
}

/// Variables `a1 … an` of the general polynomial.
pub fn general_coeff_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("a{k}")).collect()
}

/// Companion matrix of `x^n + a_1 x^(n−1) + ⋯ + a_n`.
pub fn companion_matrix(n: usize) -> PolyMatrix {
    let a = general_coeff_names(n);
    Matrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -MultiPoly::var(&a[n - 1 - i])
        } else if i == j + 1 {
            MultiPoly::one()
        } else {
            MultiPoly::zero()
        }
    })
}

/// `g(M)` for `g` a polynomial in `x`, whose coefficients may involve other
/// variables (treated as scalars).
pub fn eval_at_matrix(g: &MultiPoly, m: &PolyMatrix) -> PolyMatrix {
    m.eval_poly(&g.coeffs_in("x"))
}

/// Representing matrix of `g(x) ∈ L_n = K_n[x]/(x^n + a_1 x^(n−1) + ⋯ + a_n)`.
pub fn general_ext_matrix(n: usize, g: &MultiPoly) -> Result<PolyMatrix> {
    check_degree(n)?;
    Ok(eval_at_matrix(g, &companion_matrix(n)))
}

/// `σ^(i)` of `g(x)` in the general extension of degree `n`.
pub fn general_ext_sigma(n: usize, g: &MultiPoly, i: usize) -> Result<RatFunc> {
    if i > n {
        return Err(Error::invalid(format!(
            "sigma index {i} exceeds degree {n}"
        )));
    }
    Ok(RatFunc::from_poly(general_ext_matrix(n, g)?.sigma(i)))
}

/// Checks `σ^(n−i)(g^(-1)) = σ^(i)(g)/σ^(n)(g)` for `i = 1 … n−1`, both sides
/// computed independently (the left from the inverse matrix over `K_n`).
pub fn inverse_identity_check(n: usize, g: &MultiPoly) -> Result<VerificationReport> {
    let m = general_ext_matrix(n, g)?;
    let s: Vec<RatFunc> = std::iter::once(MultiPoly::one())
        .chain(m.char_poly())
        .map(RatFunc::from_poly)
        .collect();
    if s[n].is_zero() {
        return Err(Error::invalid(format!("{g} is not invertible in L_{n}")));
    }
    let inv = m
        .map(|p| RatFunc::from_poly(p.clone()))
        .inverse()
        .ok_or_else(|| Error::Internal("nonzero norm but singular matrix".into()))?;
    let t: Vec<RatFunc> = std::iter::once(RatFunc::one())
        .chain(inv.char_poly())
        .collect();
    let mut report = VerificationReport::new("remark-5.2")
        .param("n", n)
        .param("g", g);
    report.push(Step::new("sigma^(n)(g) is nonzero").output("sigma^(n)(g)", &s[n]));
    let norm_inv = s[n].inv().expect("nonzero");
    for i in 1..n {
        let lhs = &t[n - i];
        let rhs = s[i].mul_ref(&norm_inv);
        report.push(
            Step::new("sigma^(n-i)(g^-1) = sigma^(i)(g)/sigma^(n)(g)")
                .input("i", i)
                .output("lhs", lhs)
                .output("rhs", &rhs)
                .ok(*lhs == rhs),
        );
    }
    Ok(report.conclude())
}

/// Checks that `σ^(i)_(L_n/K_n)(g(x))`, after `a_t ↦ σ^(t)(X)` for a generic
/// matrix `X`, equals `σ^(i)(g(X))` in `UD(n)`.
pub fn remark38_consistency(n: usize, g: &MultiPoly) -> Result<VerificationReport> {
    check_degree(n)?;
    let x = generic_matrix(n, "s");
    let sx = x.char_poly();
    let subst: BTreeMap<String, MultiPoly> = general_coeff_names(n).into_iter().zip(sx).collect();
    let ext = general_ext_matrix(n, &g.substitute(&subst))?.char_poly();
    let ud = eval_at_matrix(&g.substitute(&subst), &x).char_poly();
    let mut report = VerificationReport::new("remark-3.8")
        .param("n", n)
        .param("g", g);
    for i in 1..=n {
        let lhs = ext[i - 1].substitute(&subst);
        let rhs = &ud[i - 1];
        report.push(
            Step::new("sigma^(i)(g(x)) with a_t -> sigma^(t)(X) equals sigma^(i)(g(X))")
                .input("i", i)
                .output("terms", rhs.num_terms())
                .ok(lhs == *rhs),
        );
    }
    Ok(report.conclude())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::report::Status;

    fn poly(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn ud_examples() {
        let x = Expr::parse("X").unwrap();
        assert_eq!(ud_sigma(2, &x, 1).unwrap(), poly("-s11 - s22"));
        assert_eq!(ud_sigma(2, &x, 2).unwrap(), poly("s11*s22 - s12*s21"));
        let xy = Expr::parse("X*Y").unwrap();
        let det = |p: &str| poly(&format!("{p}11*{p}22 - {p}12*{p}21"));
        assert_eq!(ud_sigma(2, &xy, 2).unwrap(), &det("s") * &det("t"));
        assert!(ud_sigma(2, &Expr::parse("Z").unwrap(), 1).is_err());
    }

    #[test]
    fn general_ext_examples() {
        for n in 1..=6 {
            for i in 1..=n {
                let s = general_ext_sigma(n, &poly("x"), i).unwrap();
                assert_eq!(s, RatFunc::var(&format!("a{i}")));
            }
        }
        let s = general_ext_sigma(2, &poly("x^2"), 1).unwrap();
        assert_eq!(s, RatFunc::from_poly(poly("-a1^2 + 2*a2")));
        assert_eq!(
            general_ext_sigma(2, &poly("5"), 1).unwrap(),
            RatFunc::from_poly(poly("-10"))
        );
        assert_eq!(
            general_ext_sigma(2, &poly("5"), 2).unwrap(),
            RatFunc::from_poly(poly("25"))
        );
    }

    #[test]
    fn inverse_identity() {
        for n in [2, 3] {
            for g in ["x", "1", "x + 2"] {
                let r = inverse_identity_check(n, &poly(g)).unwrap();
                assert_eq!(r.status, Status::Verified, "{}", r.to_text());
            }
        }
        let r = inverse_identity_check(2, &poly("x")).unwrap();
        assert_eq!(r.steps[1].outputs["lhs"], "a1/a2");
        assert!(inverse_identity_check(2, &poly("0")).is_err());
    }

    #[test]
    fn substitution_consistency() {
        for n in [2, 3] {
            for g in ["x", "x^2"] {
                let r = remark38_consistency(n, &poly(g)).unwrap();
                assert_eq!(r.status, Status::Verified, "{}", r.to_text());
            }
        }
    }
}
