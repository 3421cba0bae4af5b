use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polymat::MultiPoly;
use crate::report::{Status, Step, VerificationReport};
use crate::scalars::CycloNum;

use super::symbol::{sigma_all_in_algebra, AlgebraElement, TensorSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// Reduced trace 0 and reduced norm 1.
    Trace0Norm1,
    /// `σ^(i)(x) = 0`.
    SigmaZero(usize),
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Trace0Norm1 => write!(f, "trace0-norm1"),
            Predicate::SigmaZero(i) => write!(f, "sigma{i}-zero"),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    /// `trace0-norm1` or `sigma<i>-zero`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "trace0-norm1" {
            return Ok(Predicate::Trace0Norm1);
        }
        s.strip_prefix("sigma")
            .and_then(|r| r.strip_suffix("-zero"))
            .and_then(|i| i.parse().ok())
            .filter(|&i| i >= 1)
            .map(Predicate::SigmaZero)
            .ok_or_else(|| {
                Error::parse(
                    0,
                    format!("unknown predicate '{s}' (expected trace0-norm1 or sigma<i>-zero)"),
                )
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub trials: u64,
    pub seed: u64,
    pub degree_bound: u32,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
}

impl SearchConfig {
    pub fn new(trials: u64, seed: u64, degree_bound: u32) -> Self {
        SearchConfig {
            trials,
            seed,
            degree_bound,
            coeff_bound: 3,
        }
    }
}

fn random_coeff(
    rng: &mut ChaCha8Rng,
    centers: &[String],
    degree_bound: u32,
    bound: i64,
) -> MultiPoly {
    let mut p = MultiPoly::zero();
    let k = centers.len();
    // Enumerate exponent vectors of total degree <= degree_bound.
    let mut stack = vec![Vec::<u32>::new()];
    while let Some(e) = stack.pop() {
        if e.len() == k {
            let c = rng.random_range(-bound..=bound);
            if c != 0 {
                let powers: Vec<(&str, u32)> = centers
                    .iter()
                    .map(String::as_str)
                    .zip(e.iter().copied())
                    .collect();
                p = &p + &MultiPoly::monomial(CycloNum::from_int(c), &powers);
            }
            continue;
        }
        let used: u32 = e.iter().sum();
        for d in (0..=degree_bound - used).rev() {
            let mut next = e.clone();
            next.push(d);
            stack.push(next);
        }
    }
    p
}

/// A pseudo-random nonzero element for trial `index`. Each trial draws
/// from its own ChaCha stream, so the sample does not depend on scheduling.
pub fn sample_element(spec: &TensorSpec, config: &SearchConfig, index: u64) -> AlgebraElement {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    let centers = spec.center_vars();
    loop {
        let mut e = AlgebraElement::zero();
        for b in spec.basis() {
            e.add_term(
                b,
                random_coeff(&mut rng, &centers, config.degree_bound, config.coeff_bound),
            );
        }
        if !e.is_zero() {
            return e;
        }
    }
}

fn holds(spec: &TensorSpec, predicate: Predicate, sigma: &[MultiPoly]) -> bool {
    let n = spec.degree();
    match predicate {
        Predicate::Trace0Norm1 => {
            // Nrd(x) = (−1)^n σ^(n)(x).
            let norm = if n.is_multiple_of(2) {
                sigma[n - 1].clone()
            } else {
                -&sigma[n - 1]
            };
            sigma[0].is_zero() && norm == MultiPoly::one()
        }
        Predicate::SigmaZero(i) => sigma[i - 1].is_zero(),
    }
}

/// Samples random nonzero elements and tests the predicate exactly. Zero
/// hits yield status `evidence`; any hit is reported as a refutation with
/// the offending element as witness.
pub fn evidence_search(
    spec: &TensorSpec,
    predicate: Predicate,
    config: &SearchConfig,
) -> Result<VerificationReport> {
    if config.trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if let Predicate::SigmaZero(i) = predicate {
        if i > spec.degree() {
            return Err(Error::invalid(format!(
                "sigma index {i} exceeds degree {}",
                spec.degree()
            )));
        }
    }
    let outcomes: Vec<(u64, bool, Option<String>)> = (0..config.trials)
        .into_par_iter()
        .map(|t| -> Result<_> {
            let e = sample_element(spec, config, t);
            let sigma = sigma_all_in_algebra(spec, &e)?;
            let hit = holds(spec, predicate, &sigma);
            let shown = (hit || t < 3).then(|| e.display(spec));
            Ok((t, hit, shown))
        })
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new("cor-1.6")
        .param("algebra", spec)
        .param("predicate", predicate)
        .param("trials", config.trials)
        .param("degree_bound", config.degree_bound)
        .param("coeff_bound", config.coeff_bound);
    report.seed = Some(config.seed);
    for (t, _, shown) in outcomes.iter().filter(|o| o.0 < 3) {
        report.push(
            Step::new("sample")
                .input("trial", t)
                .output("element", shown.as_deref().unwrap_or("")),
        );
    }
    let hits: Vec<&(u64, bool, Option<String>)> = outcomes.iter().filter(|o| o.1).collect();
    report.push(
        Step::new("exact predicate evaluation on all samples")
            .output("hits", hits.len())
            .output("samples", outcomes.len())
            .ok(hits.is_empty()),
    );
    if let Some((t, _, shown)) = hits.first() {
        report.push(
            Step::new("witness")
                .input("trial", t)
                .output("element", shown.as_deref().unwrap_or(""))
                .ok(false),
        );
        return Ok(report.finish(Status::Refuted));
    }
    report.push(Step::new(
        "zero hits is consistent with the theorem; sampling cannot verify it",
    ));
    Ok(report.finish(Status::Evidence))
}
