use crate::error::{Error, Result};
use crate::polymat::Matrix;
use crate::report::{Status, Step, VerificationReport};
use crate::ring::Ring;
use crate::scalars::{prime_factors, sqf, CycloNum};
use crate::symfun::{decide_two_block, SystemKind, TwoBlockSystem};

use super::group::{AbelianGroup, Character};

/// `Z/p_1 × … × Z/p_s` for `n = p_1⋯p_s` (primes with multiplicity); the
/// trivial group for `n = 1`.
pub fn block_group(n: u32) -> AbelianGroup {
    if n <= 1 {
        return AbelianGroup::trivial();
    }
    let orders = prime_factors(n as u64)
        .into_iter()
        .map(|p| p as u32)
        .collect();
    AbelianGroup::new(orders).expect("prime factors are at least 2")
}

fn type_ii_iii_steps(label: &str, h: &AbelianGroup, m1: u32, m2: u32) -> (Vec<Step>, bool) {
    let els = h.elements();
    let mut steps = Vec::new();
    let mut excluded = true;
    for chi in h.characters() {
        let sum = |m: u32| {
            els.iter().fold(CycloNum::zero(), |acc, g| {
                acc + chi.value(h, g).pow_u(m as u64)
            })
        };
        let (s1, s2) = (sum(m1), sum(m2));
        let on_y = s1.is_zero() && s2.is_zero();
        excluded &= !on_y;
        steps.push(
            Step::new(format!("type {label}: point (R_chi) not on Y"))
                .input("group", h)
                .input("chi", h.fmt_element(&chi.exponents))
                .output("sum chi^m1", &s1)
                .output("sum chi^m2", &s2)
                .ok(!on_y),
        );
    }
    (steps, excluded)
}

/// Fixed-point certificate for `tr(x^m1) = tr(x^m2) = 0` in the general
/// extension of degree `n1 + n2`, by excluding each of the three types of
/// candidate fixed points.
pub fn sn_fixed_point_certificate(
    n1: u32,
    n2: u32,
    m1: u32,
    m2: u32,
) -> Result<VerificationReport> {
    if m1 == 0 || m1 >= m2 {
        return Err(Error::invalid(format!(
            "need 1 <= m1 < m2, got m1={m1}, m2={m2}"
        )));
    }
    if n1 == 0 || n2 == 0 {
        return Err(Error::invalid("block sizes must be positive"));
    }
    let sys = TwoBlockSystem {
        n1,
        n2,
        m1,
        m2,
        kind: SystemKind::Trace,
    };
    let mut report = VerificationReport::new("thm-1.7")
        .param("n1", n1)
        .param("n2", n2)
        .param("m1", m1)
        .param("m2", m2);
    let cond_ii = [n1, n2].iter().all(|&n| {
        let q = sqf(n as u64);
        (m1 as u64).is_multiple_of(q) || (m2 as u64).is_multiple_of(q)
    });
    report.push(
        Step::new("condition (ii): sqf(n_i) divides m1 or m2")
            .input("sqf(n1)", sqf(n1 as u64))
            .input("sqf(n2)", sqf(n2 as u64))
            .output("holds", cond_ii),
    );
    let outcome = decide_two_block(&sys);
    let type_i_excluded = outcome.only_trivial();
    report.extend(outcome.steps.iter().filter(|s| !s.is_witness()).cloned());
    report.push(
        Step::new("type I: R_(a,b) not on Y")
            .output("excluded", type_i_excluded)
            .ok(type_i_excluded),
    );
    let (h1, h2) = (block_group(n1), block_group(n2));
    let (s2, ex2) = type_ii_iii_steps("II", &h1, m1, m2);
    let (s3, ex3) = type_ii_iii_steps("III", &h2, m1, m2);
    report.extend(s2);
    report.extend(s3);
    if type_i_excluded && ex2 && ex3 {
        report.push(Step::new("conclusion: H acts on Y without fixed points"));
        return Ok(report.finish(Status::Verified));
    }
    let mut w = Step::new("witness").ok(false);
    if let Some(ws) = outcome.steps.iter().find(|s| s.is_witness()) {
        w = w.input("type", "I");
        for (k, v) in &ws.outputs {
            w = w.output(k, v);
        }
    } else {
        let bad = report
            .steps
            .iter()
            .find(|s| !s.ok)
            .cloned()
            .expect("failing step");
        w = w.input("type", &bad.description);
        for (k, v) in bad.inputs.iter().chain(&bad.outputs) {
            w = w.output(k, v);
        }
    }
    report.push(w);
    Ok(report.finish(Status::Refuted))
}

/// Permutation action of `H_1 × H_2` on `k^(n1+n2)` (regular action on each
/// block) for a group element given blockwise.
fn block_action(h1: &AbelianGroup, h2: &AbelianGroup, g1: &[u32], g2: &[u32]) -> Matrix<CycloNum> {
    let (n1, n2) = (h1.order(), h2.order());
    let mut m = Matrix::zeros(n1 + n2, n1 + n2);
    for a in h1.elements() {
        m.set(
            h1.index_of(&h1.add(g1, &a)),
            h1.index_of(&a),
            CycloNum::one(),
        );
    }
    for b in h2.elements() {
        m.set(
            n1 + h2.index_of(&h2.add(g2, &b)),
            n1 + h2.index_of(&b),
            CycloNum::one(),
        );
    }
    m
}

/// Decomposes `k^(n1+n2)` under `H_1 × H_2` into simultaneous eigenspaces and
/// checks the expected shape: a 2-dimensional trivial summand spanned by the
/// block indicators plus `n − 2` lines `(R_χ, 0)`, `(0, R_η)` carrying
/// pairwise distinct nontrivial characters.
pub fn character_decomposition_check(n1: u32, n2: u32) -> Result<VerificationReport> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::invalid("block sizes must be positive"));
    }
    let (h1, h2) = (block_group(n1), block_group(n2));
    let n = (n1 + n2) as usize;
    let mut report = VerificationReport::new("lemma-2.1")
        .param("n1", n1)
        .param("n2", n2)
        .param("H1", &h1)
        .param("H2", &h2);
    let gens: Vec<Matrix<CycloNum>> = (0..h1.orders().len())
        .map(|t| {
            let mut g = h1.identity();
            g[t] = 1;
            block_action(&h1, &h2, &g, &h2.identity())
        })
        .chain((0..h2.orders().len()).map(|t| {
            let mut g = h2.identity();
            g[t] = 1;
            block_action(&h1, &h2, &h1.identity(), &g)
        }))
        .collect();
    let gen_orders: Vec<u32> = h1.orders().iter().chain(h2.orders()).copied().collect();
    let product = AbelianGroup::new(gen_orders.clone()).unwrap_or_else(|_| AbelianGroup::trivial());
    let mut total_dim = 0;
    let mut lines = Vec::new();
    for psi in product.characters() {
        // Simultaneous eigenspace: kernel of the stacked (g − ψ(g)) blocks.
        let mut rows = Vec::new();
        for (t, g) in gens.iter().enumerate() {
            let mut e = vec![0; gen_orders.len()];
            e[t] = 1;
            let val = psi.value(&product, &e);
            let shifted = g.sub(&Matrix::scalar(n, val));
            for i in 0..n {
                rows.push(shifted.row(i).to_vec());
            }
        }
        let dim = if rows.is_empty() {
            n
        } else {
            n - Matrix::from_rows(rows).expect("rectangular").rank()
        };
        total_dim += dim;
        if dim == 0 {
            continue;
        }
        let label = product.fmt_element(&psi.exponents);
        if psi.is_trivial() {
            report.push(
                Step::new("trivial summand V_0 has dimension 2")
                    .input("character", &label)
                    .output("dim", dim)
                    .ok(dim == 2),
            );
        } else {
            lines.push(label.clone());
            report.push(
                Step::new("nontrivial summand is a line")
                    .input("character", &label)
                    .output("dim", dim)
                    .ok(dim == 1),
            );
        }
    }
    report.push(
        Step::new("summands span the whole space")
            .output("total_dim", total_dim)
            .output("n", n)
            .ok(total_dim == n),
    );
    report.push(
        Step::new("number of one-dimensional nontrivial summands is n - 2")
            .output("count", lines.len())
            .ok(lines.len() == n - 2),
    );
    // Block indicators are invariant; each R_χ spans the χ^(-1) line.
    let indicator = |first: bool| -> Vec<CycloNum> {
        (0..n)
            .map(|k| {
                if (k < n1 as usize) == first {
                    CycloNum::one()
                } else {
                    CycloNum::zero()
                }
            })
            .collect()
    };
    let apply = |m: &Matrix<CycloNum>, v: &[CycloNum]| -> Vec<CycloNum> {
        (0..n)
            .map(|i| (0..n).fold(CycloNum::zero(), |acc, j| acc + m.get(i, j) * &v[j]))
            .collect()
    };
    let invariant = [true, false]
        .iter()
        .all(|&f| gens.iter().all(|g| apply(g, &indicator(f)) == indicator(f)));
    report.push(Step::new("block indicators span V_0").ok(invariant));
    let mut block_lines = |h: &AbelianGroup, offset: usize, first_block: bool| {
        for chi in h.characters().into_iter().filter(|c| !c.is_trivial()) {
            let mut v = vec![CycloNum::zero(); n];
            for a in h.elements() {
                v[offset + h.index_of(&a)] = chi.value(h, &a);
            }
            let inv = Character {
                exponents: h.neg(&chi.exponents),
            };
            let ok = gens.iter().enumerate().all(|(t, g)| {
                let local = if first_block {
                    t < h.orders().len()
                } else {
                    t >= gens.len() - h.orders().len()
                };
                let scale = if local {
                    let k = if first_block {
                        t
                    } else {
                        t - (gens.len() - h.orders().len())
                    };
                    let mut e = h.identity();
                    e[k] = 1;
                    inv.value(h, &e)
                } else {
                    CycloNum::one()
                };
                apply(g, &v) == v.iter().map(|x| x * &scale).collect::<Vec<_>>()
            });
            report.push(
                Step::new(if first_block {
                    "(R_chi, 0) spans the line of character chi^(-1)"
                } else {
                    "(0, R_eta) spans the line of character eta^(-1)"
                })
                .input("chi", h.fmt_element(&chi.exponents))
                .ok(ok),
            );
        }
    };
    block_lines(&h1, 0, true);
    block_lines(&h2, n1 as usize, false);
    Ok(report.conclude())
}

/// Matrix-level witness for the cyclic counterexample: with
/// `D = diag(1, ζ_3, ζ_3²)` and the 3-cycle `P`, `P D P^(-1)` is a
/// root-of-unity multiple of `D` while `tr D = tr D² = 0`.
pub fn cyclic_counterexample_check() -> VerificationReport {
    let z = CycloNum::zeta(3, 1);
    let d = Matrix::diagonal(vec![CycloNum::one(), z.clone(), &z * &z]);
    let mut p = Matrix::zeros(3, 3);
    for k in 0..3 {
        p.set((k + 1) % 3, k, CycloNum::one());
    }
    let p_inv = p.inverse().expect("permutation matrices are invertible");
    let conj = p.mul(&d).mul(&p_inv);
    let factor = [z.clone(), &z * &z]
        .into_iter()
        .find(|f| conj == d.scale(f));
    let mut report = VerificationReport::new("remark-4.2");
    report.push(
        Step::new("P D P^(-1) = zeta_3^(+-1) D")
            .output("P D P^(-1)", &conj)
            .output(
                "factor",
                factor
                    .as_ref()
                    .map_or("none".to_string(), |f| f.to_string()),
            )
            .ok(factor.is_some()),
    );
    if let Some(f) = &factor {
        // x = ζ_3 y x y^(-1) with x = D, y = P^(-1) or P.
        let y = if *f == z { p_inv.clone() } else { p.clone() };
        let y_inv = y.inverse().expect("invertible");
        let ok = d == y.mul(&d).mul(&y_inv).scale(&z);
        report.push(
            Step::new("x = zeta_3 y x y^(-1) with x = D")
                .output("y", &y)
                .ok(ok),
        );
    }
    let tr1 = d.trace();
    let tr2 = d.mul(&d).trace();
    let det = d.determinant();
    report.push(
        Step::new("tr(D) = 0")
            .output("value", &tr1)
            .ok(tr1.is_zero()),
    );
    report.push(
        Step::new("tr(D^2) = 0")
            .output("value", &tr2)
            .ok(tr2.is_zero()),
    );
    report.push(
        Step::new("det(D) = 1")
            .output("value", &det)
            .ok(det.is_one()),
    );
    report.conclude()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_groups() {
        assert_eq!(block_group(1).order(), 1);
        assert_eq!(block_group(4).orders(), &[2, 2]);
        assert_eq!(block_group(6).orders(), &[2, 3]);
    }

    #[test]
    fn two_block_trace_examples() {
        for (n1, n2, m1, m2) in [(1, 4, 1, 2), (2, 4, 1, 2), (1, 5, 1, 5)] {
            let r = sn_fixed_point_certificate(n1, n2, m1, m2).unwrap();
            assert_eq!(r.status, Status::Verified, "{}", r.to_text());
        }
        let r = sn_fixed_point_certificate(2, 2, 1, 3).unwrap();
        assert_eq!(r.status, Status::Refuted);
        assert_eq!(r.witness().unwrap().inputs["type"], "I");
    }

    #[test]
    fn decomposition_examples() {
        for (n1, n2) in [(1, 2), (2, 2), (1, 1), (2, 3), (4, 2)] {
            let r = character_decomposition_check(n1, n2).unwrap();
            assert_eq!(r.status, Status::Verified, "{}", r.to_text());
        }
    }

    #[test]
    fn cyclic_remark() {
        let r = cyclic_counterexample_check();
        assert_eq!(r.status, Status::Verified, "{}", r.to_text());
    }
}
