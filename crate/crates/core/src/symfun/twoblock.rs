use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polymat::MultiPoly;
use crate::report::Step;
use crate::ring::Ring;
use crate::scalars::{binomial, divisors, CycloNum, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// `n1·a^m + n2·b^m`, the power-trace forms.
    Trace,
    /// Two-block specializations of the elementary symmetric polynomials.
    Sigma,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemKind::Trace => "trace",
            SystemKind::Sigma => "sigma",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoBlockSystem {
    pub n1: u32,
    pub n2: u32,
    pub m1: u32,
    pub m2: u32,
    pub kind: SystemKind,
}

impl TwoBlockSystem {
    pub fn new(n1: u32, n2: u32, m1: u32, m2: u32, kind: SystemKind) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::invalid("block sizes must be positive"));
        }
        if !(1 <= m1 && m1 < m2 && m2 <= n1 + n2) {
            return Err(Error::invalid(format!(
                "indices must satisfy 1 <= m1 < m2 <= n1 + n2, got m1={m1}, m2={m2}"
            )));
        }
        Ok(TwoBlockSystem {
            n1,
            n2,
            m1,
            m2,
            kind,
        })
    }

    pub fn n(&self) -> u32 {
        self.n1 + self.n2
    }

    fn form(&self, m: u32) -> MultiPoly {
        match self.kind {
            SystemKind::Sigma => specialize_two_block(m, self.n1, self.n2),
            SystemKind::Trace => trace_form(m, self.n1, self.n2),
        }
    }

    /// The two homogeneous forms in `(a, b)` whose common zeros are decided.
    pub fn forms(&self) -> (MultiPoly, MultiPoly) {
        (self.form(self.m1), self.form(self.m2))
    }
}

fn trace_form(m: u32, n1: u32, n2: u32) -> MultiPoly {
    let a = MultiPoly::var("a").pow(m as u64);
    let b = MultiPoly::var("b").pow(m as u64);
    &a.scale(&CycloNum::from_int(n1 as i64)) + &b.scale(&CycloNum::from_int(n2 as i64))
}

/// `s_i(a,…,a, b,…,b)` with `n1` copies of `a` and `n2` copies of `b`:
/// `Σ_k C(n1,k)·C(n2,i−k)·a^k·b^(i−k)`.
pub fn specialize_two_block(i: u32, n1: u32, n2: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for k in 0..=i.min(n1) {
        if i - k > n2 {
            continue;
        }
        let c = binomial(n1 as u64, k as u64) * binomial(n2 as u64, (i - k) as u64);
        acc = &acc + &MultiPoly::monomial(CycloNum::from_bigint(c), &[("a", k), ("b", i - k)]);
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub enum TwoBlockDecision {
    OnlyTrivial,
    /// A nontrivial common zero exists over the algebraic closure. The
    /// witness `(a, b)` is present when one was found among rational numbers
    /// and roots of unity.
    NontrivialExists {
        witness: Option<(CycloNum, CycloNum)>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoBlockOutcome {
    pub system: TwoBlockSystem,
    pub decision: TwoBlockDecision,
    pub forms: (MultiPoly, MultiPoly),
    pub steps: Vec<Step>,
}

impl TwoBlockOutcome {
    pub fn only_trivial(&self) -> bool {
        self.decision == TwoBlockDecision::OnlyTrivial
    }
}

fn eval_ab(f: &MultiPoly, a: &CycloNum, b: &CycloNum) -> CycloNum {
    let vals = BTreeMap::from([("a".to_string(), a.clone()), ("b".to_string(), b.clone())]);
    f.eval(&vals).expect("forms in a, b only")
}

fn is_common_zero(f: &MultiPoly, g: &MultiPoly, a: &CycloNum, b: &CycloNum) -> bool {
    eval_ab(f, a, b).is_zero() && eval_ab(g, a, b).is_zero()
}

/// Decides whether the system has a common zero `(a, b) ≠ (0, 0)` over the
/// algebraic closure of the ground field.
pub fn decide_two_block(system: &TwoBlockSystem) -> TwoBlockOutcome {
    let forms = system.forms();
    let (decision, steps) = match system.kind {
        SystemKind::Trace => decide_trace(system, &forms),
        SystemKind::Sigma => decide_sigma(system, &forms),
    };
    TwoBlockOutcome {
        system: *system,
        decision,
        forms,
        steps,
    }
}

fn decide_trace(
    sys: &TwoBlockSystem,
    forms: &(MultiPoly, MultiPoly),
) -> (TwoBlockDecision, Vec<Step>) {
    let mut steps = vec![Step::new("trace system forms")
        .output("f1", &forms.0)
        .output("f2", &forms.1)];
    steps.push(
        Step::new("branch b = 0 forces a = 0")
            .input("n1", sys.n1)
            .output("f1(a,0)", format!("{}*a^{}", sys.n1, sys.m1)),
    );
    steps.push(
        Step::new("branch a = 0 forces b = 0")
            .input("n2", sys.n2)
            .output("f1(0,b)", format!("{}*b^{}", sys.n2, sys.m1)),
    );
    // With a, b both nonzero, t = a/b satisfies t^m1 = t^m2 = q.
    let q = CycloNum::from_rational(&Rational::new(-BigInt::from(sys.n2), BigInt::from(sys.n1)));
    let d = sys.m2 - sys.m1;
    let criterion_value = q.pow(d as i64).expect("q nonzero");
    let g = num_integer::gcd(d, sys.m1);
    let order = q.root_of_unity_order();
    let reachable = order.is_some_and(|o| ((d / g) as u64).is_multiple_of(o));
    steps.push(
        Step::new("branch ab != 0: t = a/b with t^m1 = q and t^(m2-m1) = 1")
            .input("q", &q)
            .input("m2-m1", d)
            .output("q^(m2-m1)", &criterion_value)
            .output(
                "root_of_unity_order(q)",
                order.map_or("none".to_string(), |o| o.to_string()),
            )
            .output("solvable", reachable),
    );
    if !reachable {
        return (TwoBlockDecision::OnlyTrivial, steps);
    }
    let t = (0..d as i64)
        .map(|k| CycloNum::zeta(d, k))
        .find(|t| t.pow(sys.m1 as i64).expect("unit") == q)
        .expect("a d-th root of unity reaches q");
    let (f, g2) = forms;
    assert!(is_common_zero(f, g2, &t, &CycloNum::one()));
    steps.push(
        Step::new("witness")
            .output("a", &t)
            .output("b", 1)
            .output("f1(a,b)", 0)
            .output("f2(a,b)", 0),
    );
    (
        TwoBlockDecision::NontrivialExists {
            witness: Some((t, CycloNum::one())),
        },
        steps,
    )
}

fn decide_sigma(
    sys: &TwoBlockSystem,
    forms: &(MultiPoly, MultiPoly),
) -> (TwoBlockDecision, Vec<Step>) {
    let (f, g) = forms;
    let mut steps = vec![Step::new("specialized forms")
        .output("f1", f)
        .output("f2", g)];
    let one = CycloNum::one();
    let zero = CycloNum::zero();
    let axis_a = is_common_zero(f, g, &one, &zero);
    let axis_b = is_common_zero(f, g, &zero, &one);
    steps.push(
        Step::new("axis point (1:0)")
            .output("f1", eval_ab(f, &one, &zero))
            .output("f2", eval_ab(g, &one, &zero))
            .output("common_zero", axis_a),
    );
    steps.push(
        Step::new("axis point (0:1)")
            .output("f1", eval_ab(f, &zero, &one))
            .output("f2", eval_ab(g, &zero, &one))
            .output("common_zero", axis_b),
    );
    if axis_a || axis_b {
        let w = if axis_a { (one, zero) } else { (zero, one) };
        steps.push(Step::new("witness").output("a", &w.0).output("b", &w.1));
        return (
            TwoBlockDecision::NontrivialExists { witness: Some(w) },
            steps,
        );
    }
    let bind_b = BTreeMap::from([("b".to_string(), MultiPoly::one())]);
    let fd = f.substitute(&bind_b);
    let gd = g.substitute(&bind_b);
    let res = fd.resultant(&gd, "a").expect("nonzero dehomogenized forms");
    steps.push(
        Step::new("resultant of dehomogenized forms at b = 1")
            .input("f1(a,1)", &fd)
            .input("f2(a,1)", &gd)
            .output("res_a", &res),
    );
    if !res.is_zero() {
        return (TwoBlockDecision::OnlyTrivial, steps);
    }
    let witness = search_witness(&fd, &gd, 2 * sys.n());
    match &witness {
        Some(t) => steps.push(Step::new("witness").output("a", t).output("b", 1)),
        None => steps.push(
            Step::new("no rational or root-of-unity witness found").input("max_order", 2 * sys.n()),
        ),
    }
    (
        TwoBlockDecision::NontrivialExists {
            witness: witness.map(|t| (t, CycloNum::one())),
        },
        steps,
    )
}

/// Searches for a common root `t` of two univariate polynomials in `a`
/// among rational roots of the first and roots of unity of order ≤ `max_order`.
fn search_witness(f: &MultiPoly, g: &MultiPoly, max_order: u32) -> Option<CycloNum> {
    let at = |p: &MultiPoly, t: &CycloNum| {
        p.eval(&BTreeMap::from([("a".to_string(), t.clone())]))
            .expect("univariate")
    };
    let common = |t: &CycloNum| at(f, t).is_zero() && at(g, t).is_zero();
    rational_roots(f)
        .into_iter()
        .chain((1..=max_order).flat_map(|d| {
            (0..d as i64)
                .filter(move |&k| num_integer::gcd(k as u32, d) == 1)
                .map(move |k| CycloNum::zeta(d, k))
        }))
        .find(common)
}

/// Rational roots of a univariate polynomial in `a` with rational coefficients.
fn rational_roots(f: &MultiPoly) -> Vec<CycloNum> {
    let coeffs: Option<Vec<Rational>> = f
        .coeffs_in("a")
        .iter()
        .map(|c| c.as_constant().and_then(|x| x.to_rational()))
        .collect();
    let Some(mut coeffs) = coeffs else {
        return Vec::new();
    };
    let mut roots = Vec::new();
    let lead = coeffs.iter().position(|c| !c.is_zero());
    let Some(lead) = lead else {
        return roots;
    };
    if lead > 0 {
        roots.push(CycloNum::zero());
        coeffs.drain(..lead);
    }
    let den_lcm = coeffs.iter().fold(BigInt::from(1), |acc, c| {
        num_integer::lcm(acc, c.denom().clone())
    });
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let (Some(c0), Some(cn)) = (
        ints.first().and_then(|x| x.abs().to_u64()),
        ints.last().and_then(|x| x.abs().to_u64()),
    ) else {
        return roots;
    };
    if ints.len() == 1 {
        return roots;
    }
    for p in divisors(c0) {
        for q in divisors(cn) {
            for s in [1i64, -1] {
                let r =
                    CycloNum::from_rational(&Rational::new(BigInt::from(p) * s, BigInt::from(q)));
                let val = f.eval(&BTreeMap::from([("a".to_string(), r.clone())]));
                if val.is_ok_and(|v| v.is_zero()) && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}
