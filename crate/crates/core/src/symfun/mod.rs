//! Symmetric functions: elementary symmetric polynomials, power sums,
//! Newton's identities, two-block specializations and the decision
//! procedures built on them.

mod high_powers;
mod tables;
mod twoblock;

pub use high_powers::high_powers_check;
pub use tables::{table_cases, table_deg, TableCase, TableRoute};
pub use twoblock::{
    decide_two_block, specialize_two_block, SystemKind, TwoBlockDecision, TwoBlockOutcome,
    TwoBlockSystem,
};

use crate::error::{Error, Result};
use crate::polymat::MultiPoly;
use crate::ring::Ring;
use crate::scalars::CycloNum;

/// All elementary symmetric polynomials `e_0 … e_len` of `values`.
pub fn elem_sym_all<T: Ring>(values: &[T]) -> Vec<T> {
    let mut e = vec![T::zero(); values.len() + 1];
    e[0] = T::one();
    for (k, v) in values.iter().enumerate() {
        for i in (1..=k + 1).rev() {
            let t = e[i - 1].mul_ref(v);
            e[i] = e[i].add_ref(&t);
        }
    }
    e
}

/// The `i`-th elementary symmetric polynomial of `values`.
pub fn elem_sym<T: Ring>(i: usize, values: &[T]) -> Result<T> {
    if i > values.len() {
        return Err(Error::invalid(format!(
            "elementary symmetric index {i} exceeds {} values",
            values.len()
        )));
    }
    Ok(elem_sym_all(values).swap_remove(i))
}

/// Sum of `i`-th powers.
pub fn power_sum<T: Ring>(i: usize, values: &[T]) -> Result<T> {
    if i == 0 {
        return Err(Error::invalid("power sum index must be at least 1"));
    }
    Ok(values
        .iter()
        .fold(T::zero(), |acc, v| acc.add_ref(&v.pow_u(i as u64))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonDirection {
    PowersToElementary,
    ElementaryToPowers,
}

/// Converts `(p_1 … p_n)` to `(s_1 … s_n)` or back via Newton's identities
///
/// `p_k = Σ_{j<k} (−1)^(j−1) s_j p_(k−j) + (−1)^(k−1) k s_k`.
pub fn newton_convert(
    direction: NewtonDirection,
    input: &[MultiPoly],
    n: usize,
) -> Result<Vec<MultiPoly>> {
    if input.len() < n {
        return Err(Error::invalid(format!(
            "Newton conversion needs {n} inputs, got {}",
            input.len()
        )));
    }
    let sign = |j: usize| if j % 2 == 1 { 1 } else { -1 };
    let mut out: Vec<MultiPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        match direction {
            NewtonDirection::ElementaryToPowers => {
                let s = &input[..n];
                let mut acc = s[k - 1].scale(&CycloNum::from_int(sign(k) * k as i64));
                for j in 1..k {
                    let t = &s[j - 1] * &out[k - j - 1];
                    acc = &acc + &t.scale(&CycloNum::from_int(sign(j)));
                }
                out.push(acc);
            }
            NewtonDirection::PowersToElementary => {
                let p = &input[..n];
                // k s_k = (−1)^(k−1) (p_k − Σ_{j<k} (−1)^(j−1) s_j p_(k−j))
                let mut acc = p[k - 1].clone();
                for j in 1..k {
                    let t = &out[j - 1] * &p[k - j - 1];
                    acc = &acc - &t.scale(&CycloNum::from_int(sign(j)));
                }
                let f = CycloNum::from_int(sign(k)) / CycloNum::from_int(k as i64);
                out.push(acc.scale(&f));
            }
        }
    }
    Ok(out)
}
