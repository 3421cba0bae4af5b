use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polymat::{Matrix, MultiPoly};
use crate::report::{Status, Step, VerificationReport};
use crate::ring::Ring;
use crate::scalars::{binomial, CycloNum};

use super::group::{diag_matrix, perm_matrix, AbelianGroup, PairedElement};

/// Default cap on enumerated root-of-unity tuples.
pub const DEFAULT_TUPLE_CAP: u64 = 1_000_000;

/// `t^n + σ1 t^(n−1) + … + σn` as a polynomial in `t`.
pub fn charpoly_poly(sigmas: &[CycloNum]) -> MultiPoly {
    let n = sigmas.len();
    let t = MultiPoly::var("t");
    let mut acc = t.pow(n as u64);
    for (i, s) in sigmas.iter().enumerate() {
        acc = &acc + &t.pow((n - i - 1) as u64).scale(s);
    }
    acc
}

/// Checks `D_χ P_a = χ(a) P_a D_χ` for every pair.
pub fn commutation_check(group: &AbelianGroup) -> VerificationReport {
    let mut report = VerificationReport::new("eq-3.1").param("group", group);
    let pairs = PairedElement::all(group);
    let steps: Vec<Step> = pairs
        .par_iter()
        .map(|pe| {
            let p = perm_matrix(group, &pe.a);
            let d = diag_matrix(group, &pe.chi);
            let chi_a = pe.chi.value(group, &pe.a);
            let ok = d.mul(&p) == p.mul(&d).scale(&chi_a);
            Step::new("D_chi P_a = chi(a) P_a D_chi")
                .input("pair", pe.label(group))
                .output("chi(a)", &chi_a)
                .ok(ok)
        })
        .collect();
    report.extend(steps);
    report.push(Step::new("pairs checked").output("count", pairs.len()));
    report.conclude()
}

fn expanded_closed_form(n: usize, c: u64, eps: &CycloNum) -> MultiPoly {
    let t = MultiPoly::var("t");
    let base = &t.pow(c) - &MultiPoly::constant(eps.clone());
    base.pow(n as u64 / c)
}

/// Checks `char_poly(P_a D_χ) = (t^c − ε)^(n/c)` and `(P_a D_χ)^c = ε I`
/// for every pair.
pub fn paired_charpoly_check(group: &AbelianGroup) -> VerificationReport {
    let n = group.order();
    let mut report = VerificationReport::new("lemma-3.1b").param("group", group);
    let pairs = PairedElement::all(group);
    let steps: Vec<Vec<Step>> = pairs
        .par_iter()
        .map(|pe| {
            let m = pe.matrix(group);
            let cp = charpoly_poly(&m.char_poly());
            let expect = expanded_closed_form(n, pe.c, &pe.epsilon);
            let power = m.pow(pe.c);
            let scalar = Matrix::scalar(n, pe.epsilon.clone());
            vec![
                Step::new("char_poly(P_a D_chi) = (t^c - eps)^(n/c)")
                    .input("pair", pe.label(group))
                    .input("c", pe.c)
                    .input("eps", &pe.epsilon)
                    .output("char_poly", &cp)
                    .ok(cp == expect),
                Step::new("(P_a D_chi)^c = eps I")
                    .input("pair", pe.label(group))
                    .ok(power == scalar),
            ]
        })
        .collect();
    report.extend(steps.into_iter().flatten());
    report.push(Step::new("pairs checked").output("count", pairs.len()));
    report.conclude()
}

/// Checks that the `n²` matrices `P_a D_χ` are linearly independent.
pub fn basis_check(group: &AbelianGroup) -> VerificationReport {
    let n = group.order();
    let pairs = PairedElement::all(group);
    let rows: Vec<Vec<CycloNum>> = pairs
        .iter()
        .map(|pe| pe.matrix(group).entries().to_vec())
        .collect();
    let coords = Matrix::from_rows(rows).expect("rectangular");
    let rank = coords.rank();
    let mut report = VerificationReport::new("lemma-3.2").param("group", group);
    report.push(
        Step::new("rank of the coordinate matrix of all P_a D_chi")
            .input("matrices", pairs.len())
            .output("rank", rank)
            .output("expected", n * n)
            .ok(rank == n * n),
    );
    report.conclude()
}

/// Enumerates tuples over `{0} ∪ μ_i` of length `m` and returns those with
/// `t_1^i = … = t_m^i` and `t_1⋯t_m = 0`.
pub fn endgame_solutions(i: u64, m: u64) -> Vec<Vec<Option<u64>>> {
    let choices = i + 1;
    let total = choices.pow(m as u32);
    let zeta = CycloNum::zeta(i as u32, 1);
    let roots: Vec<CycloNum> = (0..i).map(|k| zeta.pow_u(k)).collect();
    (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut tuple = Vec::with_capacity(m as usize);
            for _ in 0..m {
                let c = idx % choices;
                idx /= choices;
                tuple.push(if c == 0 { None } else { Some(c - 1) });
            }
            let val = |t: &Option<u64>| match t {
                None => CycloNum::zero(),
                Some(k) => roots[*k as usize].pow_u(i),
            };
            let first = val(&tuple[0]);
            let equal = tuple.iter().all(|t| val(t) == first);
            let product_zero = tuple.iter().any(Option::is_none);
            (equal && product_zero).then_some(tuple)
        })
        .collect()
}

/// Fixed-point certificate for the system
/// `σ^(i)(x_1) = … = σ^(i)(x_m)`, `σ^(j)(x_1⋯x_m) = 0`.
pub fn thm3_certificate(
    group: &AbelianGroup,
    m: u64,
    i: u64,
    j: u64,
) -> Result<VerificationReport> {
    let n = group.order() as u64;
    if m == 0 || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::invalid(format!(
            "need m >= 1 and 1 <= i, j <= n = {n}; got m={m}, i={i}, j={j}"
        )));
    }
    let e = group.exponent();
    let mut report = VerificationReport::new("thm-1.5")
        .param("group", group)
        .param("m", m)
        .param("i", i)
        .param("j", j);
    let hyp_m = m.is_multiple_of(e);
    let hyp_i = i.is_multiple_of(e);
    report.push(
        Step::new("hypothesis: exp(A) divides m and i")
            .input("exp(A)", e)
            .output("exp | m", hyp_m)
            .output("exp | i", hyp_i)
            .ok(hyp_m && hyp_i),
    );
    if !(hyp_m && hyp_i) {
        return Ok(report.finish(Status::HypothesesNotMet));
    }
    let pairs = PairedElement::all(group);
    let steps: Vec<Vec<Step>> = pairs
        .par_iter()
        .map(|pe| {
            let mat = pe.matrix(group);
            let sig_i = mat.sigma(i as usize);
            let pm = mat.pow(m);
            let sign = pe.epsilon.pow_u(m / pe.c);
            let is_scalar = pm == Matrix::scalar(n as usize, sign.clone());
            let sig_j = pm.sigma(j as usize);
            let closed_j = CycloNum::from_bigint(binomial(n, j)) * (-&sign).pow_u(j);
            vec![
                Step::new("c divides m and i")
                    .input("pair", pe.label(group))
                    .input("c", pe.c)
                    .ok(m.is_multiple_of(pe.c) && i.is_multiple_of(pe.c)),
                Step::new("sigma^(i)(P_a D_chi) != 0")
                    .input("pair", pe.label(group))
                    .output("value", &sig_i)
                    .ok(!sig_i.is_zero()),
                Step::new("(P_a D_chi)^m = +-I and sigma^(j) of it != 0")
                    .input("pair", pe.label(group))
                    .output("sign", &sign)
                    .output("sigma_j", &sig_j)
                    .ok(is_scalar && !sig_j.is_zero() && sig_j == closed_j),
            ]
        })
        .collect();
    report.extend(steps.into_iter().flatten());
    // The scalar system t_1^i = … = t_m^i, t_1⋯t_m = 0.
    let tuples = (i + 1).checked_pow(m as u32);
    match tuples {
        Some(total) if total <= DEFAULT_TUPLE_CAP => {
            let sols = endgame_solutions(i, m);
            let only_zero = sols.len() == 1 && sols[0].iter().all(Option::is_none);
            report.push(
                Step::new("scalar endgame: only t = 0 solves t_1^i = ... = t_m^i, t_1...t_m = 0")
                    .input("tuples_enumerated", total)
                    .output("solutions", sols.len())
                    .ok(only_zero),
            );
        }
        _ => report.push(
            Step::new("scalar endgame: some t_r = 0 forces every t_r^i = 0")
                .input("tuples", "exceeds enumeration cap"),
        ),
    }
    report.push(
        Step::new("conclusion: H acts on Y without fixed points").output("pairs", pairs.len()),
    );
    Ok(report.conclude())
}

/// Root condition of the generalized theorem: `P(ζ_1, …, ζ_v) ≠ 0` for all
/// `ij`-th roots of unity, after checking `exp(A) | iu` and `exp(A) | jd`.
pub fn thm3a_root_condition_check(
    p: &MultiPoly,
    i: u64,
    j: u64,
    u: u64,
    group: &AbelianGroup,
    cap: u64,
) -> Result<VerificationReport> {
    if p.is_zero() {
        return Err(Error::invalid("P must be nonzero"));
    }
    if !p.is_homogeneous() {
        return Err(Error::invalid(format!("P must be homogeneous: {p}")));
    }
    if i == 0 || j == 0 {
        return Err(Error::invalid("i and j must be positive"));
    }
    let p = p.pruned();
    let d = p.total_degree().unwrap_or(0) as u64;
    let e = group.exponent();
    let mut report = VerificationReport::new("thm-3.5a")
        .param("P", &p)
        .param("i", i)
        .param("j", j)
        .param("u", u)
        .param("d", d)
        .param("group", group);
    let h1 = (i * u).is_multiple_of(e);
    let h2 = (j * d).is_multiple_of(e);
    report.push(
        Step::new("condition (i): exp(A) divides iu and jd")
            .input("exp(A)", e)
            .output("exp | iu", h1)
            .output("exp | jd", h2)
            .ok(h1 && h2),
    );
    if !(h1 && h2) {
        return Ok(report.finish(Status::HypothesesNotMet));
    }
    let order = i * j;
    let v = p.vars().len() as u32;
    let total = order.checked_pow(v).filter(|&t| t <= cap);
    let Some(total) = total else {
        report.push(
            Step::new("root-tuple enumeration")
                .input("order", order)
                .input("variables", v)
                .input("cap", cap)
                .output("result", "cap exceeded"),
        );
        return Ok(report.finish(Status::NotChecked));
    };
    let zeta = CycloNum::zeta(order as u32, 1);
    let powers: Vec<CycloNum> = (0..order).map(|k| zeta.pow_u(k)).collect();
    let terms: Vec<(Vec<u64>, CycloNum)> = p
        .terms()
        .map(|(m, c)| (m.0.iter().map(|&x| x as u64).collect(), c.clone()))
        .collect();
    let eval = |ks: &[u64]| -> CycloNum {
        terms.iter().fold(CycloNum::zero(), |acc, (exps, c)| {
            let k: u64 = exps.iter().zip(ks).map(|(e, k)| e * k).sum::<u64>() % order;
            acc + c * &powers[k as usize]
        })
    };
    let decode = |mut idx: u64| -> Vec<u64> {
        let mut ks = vec![0; v as usize];
        for slot in ks.iter_mut().rev() {
            *slot = idx % order;
            idx /= order;
        }
        ks
    };
    let bad = (0..total)
        .into_par_iter()
        .find_first(|&idx| eval(&decode(idx)).is_zero());
    report.push(
        Step::new("P nonzero at every tuple of ij-th roots of unity")
            .input("tuples", total)
            .output("zeros_found", bad.is_some())
            .ok(bad.is_none()),
    );
    if let Some(idx) = bad {
        let ks = decode(idx);
        let mut w = Step::new("witness");
        for (name, k) in p.vars().iter().zip(&ks) {
            w = w.output(name, &powers[*k as usize]);
        }
        report.push(w.output("P", 0).ok(false));
        return Ok(report.finish(Status::Refuted));
    }
    Ok(report.finish(Status::Verified))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn g(s: &str) -> AbelianGroup {
        AbelianGroup::parse(s).unwrap()
    }

    #[test]
    fn small_groups() {
        assert_eq!(commutation_check(&g("2")).status, Status::Verified);
        assert_eq!(commutation_check(&g("1")).steps.len(), 2);
        assert_eq!(paired_charpoly_check(&g("4")).status, Status::Verified);
        let b = basis_check(&g("2x2"));
        assert_eq!(b.status, Status::Verified);
        assert_eq!(b.steps[0].outputs["rank"], "16");
    }

    #[test]
    fn z2_charpoly_is_t2_plus_1() {
        let r = paired_charpoly_check(&g("2"));
        let step = r
            .steps
            .iter()
            .find(|s| s.inputs.get("pair").is_some_and(|p| p == "a=(1) chi=(1)"))
            .unwrap();
        assert_eq!(step.outputs["char_poly"], "t^2 + 1");
    }

    #[test]
    fn product_system_examples() {
        let r = thm3_certificate(&g("2x2"), 2, 2, 1).unwrap();
        assert_eq!(r.status, Status::Verified, "{}", r.to_text());
        let r = thm3_certificate(&g("2"), 1, 2, 1).unwrap();
        assert_eq!(r.status, Status::HypothesesNotMet);
    }

    #[test]
    fn endgame_only_zero() {
        for (i, m) in [(2, 2), (3, 3), (6, 2), (4, 3), (2, 5)] {
            let sols = endgame_solutions(i, m);
            assert_eq!(sols, vec![vec![None; m as usize]]);
        }
    }

    #[test]
    fn root_condition_examples() {
        let z2 = g("2");
        let r = thm3a_root_condition_check(
            &parse_poly("z1*z2").unwrap(),
            2,
            1,
            1,
            &z2,
            DEFAULT_TUPLE_CAP,
        )
        .unwrap();
        assert_eq!(r.status, Status::Verified);
        let r = thm3a_root_condition_check(
            &parse_poly("z1 + z2").unwrap(),
            1,
            2,
            2,
            &z2,
            DEFAULT_TUPLE_CAP,
        )
        .unwrap();
        assert_eq!(r.status, Status::Refuted);
        let w = r.witness().unwrap();
        assert_eq!(
            (w.outputs["z1"].as_str(), w.outputs["z2"].as_str()),
            ("1", "-1")
        );
        let r = thm3a_root_condition_check(
            &parse_poly("z1^2 + z1*z2 + z2^2").unwrap(),
            2,
            1,
            1,
            &z2,
            DEFAULT_TUPLE_CAP,
        )
        .unwrap();
        assert_eq!(r.status, Status::Verified);
        let r = thm3a_root_condition_check(&parse_poly("z1*z2").unwrap(), 2, 1, 1, &z2, 3).unwrap();
        assert_eq!(r.status, Status::NotChecked);
    }
}
