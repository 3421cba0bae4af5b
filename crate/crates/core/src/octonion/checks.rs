use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expr::{Expr, ExprKind};
use crate::groupfix::DEFAULT_TUPLE_CAP;
use crate::polymat::MultiPoly;
use crate::report::{Status, Step, VerificationReport};
use crate::ring::Ring;
use crate::scalars::CycloNum;

use super::arith::{
    oct_conj, oct_mul, oct_norm, oct_trace, tau_action, Octonion, OctonionSpec, BASIS,
};

/// Verifies `x² − tr(x)·x + n(x) = 0`.
pub fn quadratic_identity_check(spec: &OctonionSpec, x: &Octonion) -> Result<VerificationReport> {
    let sq = oct_mul(spec, x, x);
    let tr = oct_trace(x);
    let n = oct_norm(spec, x)?;
    let lhs = sq.sub(&x.scale(&tr)).add(&Octonion::scalar(n.clone()));
    let mut report = VerificationReport::new("oct-quadratic")
        .param("spec", spec)
        .param("x", x);
    report.push(
        Step::new("tr(x) = x + conj(x)")
            .output("tr", &tr)
            .ok(x.add(&oct_conj(x)) == Octonion::scalar(tr.clone())),
    );
    report.push(Step::new("n(x) = x conj(x) is scalar").output("n", &n));
    report.push(
        Step::new("x^2 - tr(x) x + n(x) = 0")
            .output(
                "nonzero_coordinates",
                lhs.coords.iter().filter(|c| !c.is_zero()).count(),
            )
            .ok(lhs.is_zero()),
    );
    Ok(report.conclude())
}

/// On the split algebra: each `τ_k` is multiplicative on all 64 basis pairs,
/// the `τ_k` commute pairwise and are involutions.
pub fn automorphism_check() -> VerificationReport {
    let spec = OctonionSpec::split();
    let tau = |k: u32, x: &Octonion| tau_action(k, x).expect("valid index");
    let mut report = VerificationReport::new("eq-7.2").param("spec", &spec);
    for k in 1..=3 {
        let mut bad = Vec::new();
        for p in 0..8 {
            for q in 0..8 {
                let (x, y) = (Octonion::basis(p), Octonion::basis(q));
                if tau(k, &oct_mul(&spec, &x, &y)) != oct_mul(&spec, &tau(k, &x), &tau(k, &y)) {
                    bad.push(format!("{}*{}", BASIS[p], BASIS[q]));
                }
            }
        }
        report.push(
            Step::new("tau_k(xy) = tau_k(x) tau_k(y) on all basis pairs")
                .input("k", k)
                .output("pairs", 64)
                .output(
                    "failures",
                    if bad.is_empty() {
                        "none".to_string()
                    } else {
                        bad.join(" ")
                    },
                )
                .ok(bad.is_empty()),
        );
    }
    let g = Octonion::generic("x");
    for k in 1..=3 {
        report.push(
            Step::new("tau_k is an involution")
                .input("k", k)
                .ok(tau(k, &tau(k, &g)) == g),
        );
        for m in k + 1..=3 {
            report.push(
                Step::new("tau_k and tau_m commute")
                    .input("k", k)
                    .input("m", m)
                    .ok(tau(k, &tau(m, &g)) == tau(m, &tau(k, &g))),
            );
        }
    }
    report.conclude()
}

fn sign(b: bool) -> char {
    if b {
        '-'
    } else {
        '+'
    }
}

/// The `(Z/2)^3`-character of every basis line, computed by applying the
/// `τ_k`, and the check that the eight characters are distinct.
pub fn character_table_check() -> VerificationReport {
    let mut report = VerificationReport::new("oct-characters");
    let mut seen = BTreeSet::new();
    for (idx, label) in BASIS.iter().enumerate() {
        let e = Octonion::basis(idx);
        let mut chars = Vec::new();
        let mut eigen = true;
        for k in 1..=3 {
            let t = tau_action(k, &e).expect("valid index");
            if t == e {
                chars.push(sign(false));
            } else if t == e.scale(&MultiPoly::from_int(-1)) {
                chars.push(sign(true));
            } else {
                eigen = false;
            }
        }
        let triple: String = chars.iter().collect();
        seen.insert(triple.clone());
        report.push(
            Step::new("basis line is an H-eigenline")
                .input("basis", label)
                .output(
                    "character",
                    format!(
                        "({})",
                        triple
                            .chars()
                            .map(String::from)
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                )
                .ok(eigen),
        );
    }
    report.push(
        Step::new("the 8 characters are pairwise distinct")
            .output("distinct", seen.len())
            .ok(seen.len() == 8),
    );
    report.conclude()
}

/// A homogeneous non-associative expression in `x1 … xm`, kept as a tree.
#[derive(Clone, Debug, PartialEq)]
pub enum OctExpr {
    Var(usize),
    Scalar(CycloNum),
    Add(Box<OctExpr>, Box<OctExpr>),
    Sub(Box<OctExpr>, Box<OctExpr>),
    Neg(Box<OctExpr>),
    /// Scalar multiple.
    Scale(CycloNum, Box<OctExpr>),
    Mul(Box<OctExpr>, Box<OctExpr>),
}

impl OctExpr {
    /// Parses fully parenthesized products over `x1 … xm` (`x` for `x1`).
    /// A product whose factor is itself an unparenthesized product is
    /// rejected, so no associativity is ever assumed.
    pub fn parse(src: &str, m: usize) -> Result<OctExpr> {
        let e = Expr::parse(src)?;
        Self::from_expr(&e, m)
    }

    fn from_expr(e: &Expr, m: usize) -> Result<OctExpr> {
        let rec = |x: &Expr| Self::from_expr(x, m);
        Ok(match &e.kind {
            ExprKind::Var(name) => {
                let idx = if name == "x" {
                    Some(1)
                } else {
                    name.strip_prefix('x').and_then(|s| s.parse::<usize>().ok())
                };
                match idx {
                    Some(k) if (1..=m).contains(&k) => OctExpr::Var(k - 1),
                    _ => {
                        return Err(Error::parse(
                            e.pos,
                            format!("unknown variable '{name}' (expected x1..x{m})"),
                        ))
                    }
                }
            }
            ExprKind::Int(_) | ExprKind::Zeta(_) => OctExpr::Scalar(e.to_scalar()?),
            ExprKind::Group(inner) => rec(inner)?,
            ExprKind::Neg(a) => OctExpr::Neg(Box::new(rec(a)?)),
            ExprKind::Add(a, b) => OctExpr::Add(Box::new(rec(a)?), Box::new(rec(b)?)),
            ExprKind::Sub(a, b) => OctExpr::Sub(Box::new(rec(a)?), Box::new(rec(b)?)),
            ExprKind::Mul(a, b) => {
                let (ta, tb) = (rec(a)?, rec(b)?);
                match (&ta, &tb) {
                    (OctExpr::Scalar(c), _) => OctExpr::Scale(c.clone(), Box::new(tb)),
                    (_, OctExpr::Scalar(c)) => OctExpr::Scale(c.clone(), Box::new(ta)),
                    _ => {
                        if matches!(a.kind, ExprKind::Mul(..)) && !a.kind_is_scalar() {
                            return Err(Error::parse(
                                a.pos,
                                "nested products need explicit parentheses",
                            ));
                        }
                        OctExpr::Mul(Box::new(ta), Box::new(tb))
                    }
                }
            }
            ExprKind::Div(..) | ExprKind::Pow(..) => {
                return Err(Error::parse(
                    e.pos,
                    "only '+', '-' and parenthesized '*' are allowed",
                ))
            }
        })
    }

    /// Total degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        match self {
            OctExpr::Var(_) => Ok(1),
            OctExpr::Scalar(_) => Ok(0),
            OctExpr::Neg(a) | OctExpr::Scale(_, a) => a.homogeneous_degree(),
            OctExpr::Mul(a, b) => Ok(a.homogeneous_degree()? + b.homogeneous_degree()?),
            OctExpr::Add(a, b) | OctExpr::Sub(a, b) => {
                let (da, db) = (a.homogeneous_degree()?, b.homogeneous_degree()?);
                if da != db {
                    return Err(Error::invalid(format!(
                        "expression is not homogeneous (degrees {da} and {db})"
                    )));
                }
                Ok(da)
            }
        }
    }

    pub fn eval_octonion(&self, spec: &OctonionSpec, xs: &[Octonion]) -> Octonion {
        match self {
            OctExpr::Var(k) => xs[*k].clone(),
            OctExpr::Scalar(c) => Octonion::scalar(MultiPoly::constant(c.clone())),
            OctExpr::Neg(a) => a.eval_octonion(spec, xs).scale(&MultiPoly::from_int(-1)),
            OctExpr::Scale(c, a) => a
                .eval_octonion(spec, xs)
                .scale(&MultiPoly::constant(c.clone())),
            OctExpr::Add(a, b) => a.eval_octonion(spec, xs).add(&b.eval_octonion(spec, xs)),
            OctExpr::Sub(a, b) => a.eval_octonion(spec, xs).sub(&b.eval_octonion(spec, xs)),
            OctExpr::Mul(a, b) => {
                oct_mul(spec, &a.eval_octonion(spec, xs), &b.eval_octonion(spec, xs))
            }
        }
    }

    /// Evaluation at scalars, where the product is commutative and associative.
    pub fn eval_scalar(&self, xs: &[CycloNum]) -> CycloNum {
        match self {
            OctExpr::Var(k) => xs[*k].clone(),
            OctExpr::Scalar(c) => c.clone(),
            OctExpr::Neg(a) => -a.eval_scalar(xs),
            OctExpr::Scale(c, a) => c * &a.eval_scalar(xs),
            OctExpr::Add(a, b) => a.eval_scalar(xs) + b.eval_scalar(xs),
            OctExpr::Sub(a, b) => a.eval_scalar(xs) - b.eval_scalar(xs),
            OctExpr::Mul(a, b) => a.eval_scalar(xs) * b.eval_scalar(xs),
        }
    }
}

trait ScalarKind {
    fn kind_is_scalar(&self) -> bool;
}

impl ScalarKind for Expr {
    fn kind_is_scalar(&self) -> bool {
        match &self.kind {
            ExprKind::Int(_) | ExprKind::Zeta(_) => true,
            ExprKind::Mul(a, b) => a.kind_is_scalar() && b.kind_is_scalar(),
            ExprKind::Group(a) | ExprKind::Neg(a) => a.kind_is_scalar(),
            _ => false,
        }
    }
}

/// Certificate for the octonion fixed-point argument with `m` elements,
/// exponent `2s` and relation `Q`: the eight H-characters are distinct, the
/// square of every basis element is scalar, and `Q` does not vanish at any
/// tuple of `(2s)`-th roots of unity.
pub fn thm_oct_certificate(m: usize, s: u32, q: &OctExpr) -> Result<VerificationReport> {
    thm_oct_certificate_capped(m, s, q, DEFAULT_TUPLE_CAP)
}

pub fn thm_oct_certificate_capped(
    m: usize,
    s: u32,
    q: &OctExpr,
    cap: u64,
) -> Result<VerificationReport> {
    if m == 0 || s == 0 {
        return Err(Error::invalid("m and s must be positive"));
    }
    let deg = q.homogeneous_degree()?;
    if deg == 0 || deg % 2 == 1 {
        return Err(Error::invalid(format!(
            "Q must have positive even degree, got {deg}"
        )));
    }
    let mut report = VerificationReport::new("thm-7.4")
        .param("m", m)
        .param("s", s)
        .param("Q_degree", deg);
    let chars = character_table_check();
    report.push(
        Step::new("character table: 8 distinct characters on the basis lines")
            .output("certificate", chars.status)
            .ok(chars.status == Status::Verified),
    );
    let spec = OctonionSpec::generic();
    for (idx, label) in BASIS.iter().enumerate().skip(1) {
        let e = Octonion::basis(idx);
        let sq = oct_mul(&spec, &e, &e);
        report.push(
            Step::new("zeta^2 is scalar, so zeta^(2s) is scalar")
                .input("zeta", label)
                .output(
                    "zeta^2",
                    sq.as_scalar()
                        .map_or("not scalar".to_string(), |c| c.to_string()),
                )
                .ok(sq.as_scalar().is_some()),
        );
    }
    let r = 2 * s;
    let count = (r as u64).checked_pow(m as u32).filter(|&c| c <= cap);
    let Some(count) = count else {
        report.push(
            Step::new("root-of-unity tuples exceed the enumeration cap")
                .input("cap", cap)
                .ok(false),
        );
        return Ok(report.finish(Status::NotChecked));
    };
    let roots: Vec<CycloNum> = (0..r as i64).map(|k| CycloNum::zeta(r, k)).collect();
    let zero_at: Option<Vec<usize>> = (0..count)
        .into_par_iter()
        .map(|mut code| {
            let mut idx = vec![0usize; m];
            for slot in idx.iter_mut().rev() {
                *slot = (code % r as u64) as usize;
                code /= r as u64;
            }
            idx
        })
        .find_first(|idx| {
            let xs: Vec<CycloNum> = idx.iter().map(|&k| roots[k].clone()).collect();
            q.eval_scalar(&xs).is_zero()
        });
    report.push(
        Step::new("Q(eps_1, ..., eps_m) != 0 for all (2s)-th roots of unity")
            .input("tuples", count)
            .ok(zero_at.is_none()),
    );
    if let Some(idx) = zero_at {
        let mut w = Step::new("witness").ok(false);
        for (t, &k) in idx.iter().enumerate() {
            w = w.output(&format!("eps_{}", t + 1), &roots[k]);
        }
        report.push(w);
        return Ok(report.finish(Status::Refuted));
    }
    report.push(Step::new(
        "candidate fixed points U_r = u_r zeta reduce to u_1^(2s) = ... = u_m^(2s), Q(u) = 0: only the trivial solution",
    ));
    Ok(report.finish(Status::Verified))
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    Octonion {
        coords: std::array::from_fn(|_| MultiPoly::from_int(rng.random_range(-3..=3))),
    }
}

/// `n(xy) = n(x) n(y)` on `trials` pseudo-random pairs (integer coordinates,
/// parameters as given), plus the pair `x = y = l`.
pub fn composition_check(
    spec: &OctonionSpec,
    trials: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("oct-composition")
        .param("spec", spec)
        .param("trials", trials);
    report.seed = Some(seed);
    let l = Octonion::basis(4);
    let nl2 = oct_norm(spec, &oct_mul(spec, &l, &l))?;
    let nl = oct_norm(spec, &l)?;
    report.push(
        Step::new("n(l^2) = n(l)^2")
            .output("n(l^2)", &nl2)
            .output("n(l)", &nl)
            .ok(nl2 == &nl * &nl),
    );
    let results: Vec<Result<bool>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let x = random_octonion(&mut rng);
            let y = random_octonion(&mut rng);
            let lhs = oct_norm(spec, &oct_mul(spec, &x, &y))?;
            Ok(lhs == &oct_norm(spec, &x)? * &oct_norm(spec, &y)?)
        })
        .collect();
    let mut failures = 0;
    for r in results {
        if !r? {
            failures += 1;
        }
    }
    report.push(
        Step::new("n(xy) = n(x) n(y) on random pairs")
            .output("pairs", trials)
            .output("failures", failures)
            .ok(failures == 0),
    );
    Ok(report.conclude())
}
