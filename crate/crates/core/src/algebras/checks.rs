use std::collections::BTreeMap;

use crate::error::Result;
use crate::polymat::{Matrix, MultiPoly};
use crate::report::{Step, VerificationReport};

use super::search::{sample_element, SearchConfig};
use super::symbol::{model_matrix, radicals_to_center, tensor_model, TensorSpec};

/// Checks `x_t^(r_t) = z_t`, `y_t^(r_t) = w_t`, `y_t x_t = ζ x_t y_t` in the
/// model, and that generators of distinct factors commute.
pub fn model_relations_check(spec: &TensorSpec) -> VerificationReport {
    let n = spec.degree();
    let gens = tensor_model(spec);
    let mut report = VerificationReport::new("eq-1.2").param("algebra", spec);
    for (t, (f, (x, y))) in spec.factors.iter().zip(&gens).enumerate() {
        let r = f.r as u64;
        let z = Matrix::scalar(n, MultiPoly::var(&f.u_name()).pow(r));
        let w = Matrix::scalar(n, MultiPoly::var(&f.v_name()).pow(r));
        let zeta = MultiPoly::constant(f.zeta());
        report.push(
            Step::new("x^r = z")
                .input("factor", t + 1)
                .ok(x.pow(r) == z),
        );
        report.push(
            Step::new("y^r = w")
                .input("factor", t + 1)
                .ok(y.pow(r) == w),
        );
        report.push(
            Step::new("yx = zeta_r xy")
                .input("factor", t + 1)
                .ok(y.mul(x) == x.mul(y).scale(&zeta)),
        );
        for (s, (x2, y2)) in gens.iter().enumerate().skip(t + 1) {
            let ok = [(x, x2), (x, y2), (y, x2), (y, y2)]
                .iter()
                .all(|(a, b)| a.mul(b) == b.mul(a));
            report.push(
                Step::new("generators of distinct factors commute")
                    .input("factors", format!("{},{}", t + 1, s + 1))
                    .ok(ok),
            );
        }
    }
    report.conclude()
}

/// For random elements, every `σ^(i)` of the model matrix is fixed by
/// `u_t ↦ ζ u_t` and `v_t ↦ ζ v_t` and rewrites into the center variables.
pub fn centrality_check(spec: &TensorSpec, trials: u64, seed: u64) -> Result<VerificationReport> {
    let config = SearchConfig::new(trials, seed, 1);
    let mut report = VerificationReport::new("lemma-2.3")
        .param("algebra", spec)
        .param("trials", trials);
    report.seed = Some(seed);
    let twists: Vec<(String, BTreeMap<String, MultiPoly>)> = spec
        .factors
        .iter()
        .flat_map(|f| {
            let zeta = MultiPoly::constant(f.zeta());
            [f.u_name(), f.v_name()].map(|name| {
                let m = BTreeMap::from([(name.clone(), &zeta * &MultiPoly::var(&name))]);
                (name, m)
            })
        })
        .collect();
    let mut failures = 0;
    for t in 0..trials {
        let e = sample_element(spec, &config, t);
        let sigma = model_matrix(spec, &e).char_poly();
        let invariant = twists
            .iter()
            .all(|(_, m)| sigma.iter().all(|s| s.substitute(m) == *s));
        let central = sigma.iter().all(|s| radicals_to_center(spec, s).is_ok());
        if !(invariant && central) {
            failures += 1;
            report.push(
                Step::new("sigma is central")
                    .input("trial", t)
                    .output("element", e.display(spec))
                    .ok(false),
            );
        }
    }
    report.push(
        Step::new("all sigma^(i) invariant under the radical twists")
            .input(
                "twists",
                twists
                    .iter()
                    .map(|t| t.0.clone())
                    .collect::<Vec<_>>()
                    .join(", "),
            )
            .output("failures", failures)
            .ok(failures == 0),
    );
    Ok(report.conclude())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn relations_and_centrality() {
        for src in [
            "symbol 2 z w",
            "symbol 3 z w",
            "symbol 2 z1 w1, symbol 2 z2 w2",
        ] {
            let spec = TensorSpec::parse(src).unwrap();
            assert_eq!(model_relations_check(&spec).status, Status::Verified);
            let r = centrality_check(&spec, 5, 3).unwrap();
            assert_eq!(r.status, Status::Verified, "{}", r.to_text());
        }
    }
}
