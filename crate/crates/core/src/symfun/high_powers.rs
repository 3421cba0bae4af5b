use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polymat::{Matrix, MultiPoly};
#[cfg(test)]
use crate::report::Status;
use crate::report::{Step, VerificationReport};
use crate::ring::Ring;
use crate::scalars::{is_prime, CycloNum};

use super::elem_sym_all;

fn factorial(n: u32) -> CycloNum {
    (1..=n as i64).fold(CycloNum::one(), |acc, k| acc * CycloNum::from_int(k))
}

/// `Σ_{i=1}^{n−1} s_i^n s_n^(n−1−i)`, evaluated on a list of values of `s_0 … s_n`.
fn initial_form_value(s: &[CycloNum], n: usize) -> CycloNum {
    (1..n).fold(CycloNum::zero(), |acc, i| {
        acc + s[i].pow_u(n as u64) * s[n].pow_u((n - 1 - i) as u64)
    })
}

fn checks_at_root(n: usize, k: i64) -> Vec<Step> {
    let zeta = CycloNum::zeta(n as u32, k);
    let q: Vec<CycloNum> = (0..n).map(|j| zeta.pow_u(j as u64)).collect();
    let s = elem_sym_all(&q);
    let mut steps = Vec::new();
    let vanish = (1..n).all(|i| s[i].is_zero());
    steps.push(
        Step::new("s_i(q_zeta) = 0 for 0 < i < n")
            .input("zeta", &zeta)
            .output(
                "values",
                (1..n)
                    .map(|i| s[i].to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            )
            .output("s_n", &s[n])
            .ok(vanish),
    );
    let init = initial_form_value(&s, n);
    steps.push(
        Step::new("initial form vanishes at q_zeta")
            .input("zeta", &zeta)
            .output("value", &init)
            .ok(init.is_zero()),
    );
    let fact = factorial((n - 1) as u32);
    for l in 0..n {
        let cols: Vec<usize> = (0..n).filter(|&j| j != l).collect();
        // ∂s_i/∂x_j is s_(i−1) of the values with x_j removed.
        let minors: Vec<Vec<CycloNum>> = cols
            .iter()
            .map(|&j| {
                let rest: Vec<CycloNum> =
                    (0..n).filter(|&t| t != j).map(|t| q[t].clone()).collect();
                elem_sym_all(&rest)
            })
            .collect();
        let js = Matrix::from_fn(n - 1, n - 1, |i, c| minors[c][i].clone());
        let jp = Matrix::from_fn(n - 1, n - 1, |i, c| {
            CycloNum::from_int(i as i64 + 1) * q[cols[c]].pow_u(i as u64)
        });
        let ds = js.determinant();
        let dp = jp.determinant();
        let mut vdm = fact.clone();
        for a in 0..cols.len() {
            for b in a + 1..cols.len() {
                vdm = vdm * (&q[cols[b]] - &q[cols[a]]);
            }
        }
        let ok = !ds.is_zero() && !dp.is_zero() && dp == vdm;
        let mut step = Step::new("Jacobian minors at q_zeta are nonzero")
            .input("zeta", &zeta)
            .input("l", l + 1)
            .output("det_ds", &ds)
            .output("det_dp", &dp)
            .output("vandermonde_times_factorial", &vdm);
        if !ds.is_zero() {
            step = step.output("ratio_dp_over_ds", &dp / &ds);
        }
        steps.push(step.ok(ok));
    }
    steps
}

fn weighted_degrees(p: &MultiPoly) -> Vec<u32> {
    let weights: Vec<u32> = p
        .vars()
        .iter()
        .map(|v| v.trim_start_matches('s').parse().unwrap_or(0))
        .collect();
    let mut out: Vec<u32> = p
        .terms()
        .map(|(m, _)| m.0.iter().zip(&weights).map(|(e, w)| e * w).sum())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn c_term_steps(n: usize) -> Vec<Step> {
    let s: Vec<MultiPoly> = (0..=n)
        .map(|i| {
            if i == 0 {
                MultiPoly::one()
            } else {
                MultiPoly::var(&format!("s{i}"))
            }
        })
        .collect();
    let sigma: Vec<MultiPoly> = s
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { -x } else { x.clone() })
        .collect();
    let c = MultiPoly::var("c");
    let build = |v: &[MultiPoly]| {
        let head = (1..n).fold(MultiPoly::zero(), |acc, i| {
            &acc + &(&v[i].pow(n as u64) * &v[n].pow((n - 1 - i) as u64))
        });
        let tail = &c * &v[n].pow(2 * n as u64 - 2);
        (head, tail)
    };
    let (head_sigma, tail_sigma) = build(&sigma);
    let (head, tail) = build(&s);
    let from_sigma = &head_sigma + &tail_sigma;
    let p1 = &head + &tail;
    let init_deg = weighted_degrees(&head);
    let tail_deg = weighted_degrees(&tail);
    let nn = (n * (n - 1)) as u32;
    vec![
        Step::new("substituting sigma_i -> (-1)^i s_i gives P_1")
            .output("P_1", &p1)
            .ok(from_sigma == p1),
        Step::new("initial form has the lowest weighted degree")
            .output("initial_weights", format!("{init_deg:?}"))
            .output("c_term_weights", format!("{tail_deg:?}"))
            .ok(init_deg == vec![nn] && tail_deg == vec![2 * nn]),
    ]
}

/// Checks the computable fragment behind the high-powers example for a
/// prime `n`. At each `q_ζ = (1, ζ, …, ζ^(n−1))` it checks that `s_i`
/// vanishes for `i < n` and that the initial form vanishes. It also checks
/// that all `(n−1)×(n−1)` Jacobian minors of the `s_i` and of the power sums
/// are nonzero, the latter equal to `(n−1)!` times a Vandermonde product.
pub fn high_powers_check(n: u32, include_c: bool) -> Result<VerificationReport> {
    if n < 3 || !is_prime(n as u64) {
        return Err(Error::invalid(format!("n must be an odd prime, got {n}")));
    }
    let nu = n as usize;
    let mut report = VerificationReport::new("example-6.4")
        .param("n", n)
        .param("include_c", include_c);
    let per_root: Vec<Vec<Step>> = (1..n as i64)
        .into_par_iter()
        .map(|k| checks_at_root(nu, k))
        .collect();
    report.extend(per_root.into_iter().flatten());
    if include_c {
        report.extend(c_term_steps(nu));
    }
    Ok(report.conclude())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_and_n5_pass() {
        for n in [3, 5] {
            let r = high_powers_check(n, true).unwrap();
            assert_eq!(r.status, Status::Verified, "{}", r.to_text());
        }
    }

    #[test]
    fn composite_rejected() {
        assert!(high_powers_check(4, false).is_err());
        assert!(high_powers_check(2, false).is_err());
    }
}
