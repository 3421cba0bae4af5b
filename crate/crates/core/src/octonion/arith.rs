use std::fmt;

use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::polymat::MultiPoly;

/// Basis labels in coordinate order; bit 0 of the index is `i`, bit 1 is
/// `j`, bit 2 is `l`.
pub const BASIS: [&str; 8] = ["1", "i", "j", "ij", "l", "il", "jl", "ijl"];

/// Structure constants `(a, b, c)` of `O(a, b, c)`: `i² = a`, `j² = b`,
/// `l² = c`.
#[derive(Clone, Debug, PartialEq)]
pub struct OctonionSpec {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
}

impl OctonionSpec {
    pub fn new(a: MultiPoly, b: MultiPoly, c: MultiPoly) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::invalid("octonion parameters must be nonzero"));
        }
        Ok(OctonionSpec { a, b, c })
    }

    /// Indeterminate parameters `a`, `b`, `c`.
    pub fn generic() -> Self {
        OctonionSpec {
            a: MultiPoly::var("a"),
            b: MultiPoly::var("b"),
            c: MultiPoly::var("c"),
        }
    }

    pub fn split() -> Self {
        OctonionSpec {
            a: MultiPoly::one(),
            b: MultiPoly::one(),
            c: MultiPoly::one(),
        }
    }

    fn gammas(&self) -> [&MultiPoly; 3] {
        [&self.a, &self.b, &self.c]
    }
}

impl fmt::Display for OctonionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({}, {}, {})", self.a, self.b, self.c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Octonion {
    pub coords: [MultiPoly; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion {
            coords: std::array::from_fn(|_| MultiPoly::zero()),
        }
    }

    pub fn scalar(c: MultiPoly) -> Self {
        let mut x = Self::zero();
        x.coords[0] = c;
        x
    }

    pub fn one() -> Self {
        Self::scalar(MultiPoly::one())
    }

    pub fn basis(k: usize) -> Self {
        let mut x = Self::zero();
        x.coords[k] = MultiPoly::one();
        x
    }

    /// The element with indeterminate coordinates `{prefix}0 … {prefix}7`.
    pub fn generic(prefix: &str) -> Self {
        Octonion {
            coords: std::array::from_fn(|k| MultiPoly::var(&format!("{prefix}{k}"))),
        }
    }

    /// Parses an 8-tuple `(x0, …, x7)` of polynomial literals.
    pub fn parse(src: &str) -> Result<Self> {
        let t = src.trim();
        let open = src.len() - src.trim_start().len();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(open, "expected a parenthesized 8-tuple"))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 8 {
            return Err(Error::parse(
                open,
                format!("expected 8 coordinates, found {}", parts.len()),
            ));
        }
        let mut x = Self::zero();
        let mut pos = open + 1;
        for (k, part) in parts.iter().enumerate() {
            x.coords[k] = parse_poly(part).map_err(|e| match e {
                Error::Parse { pos: p, message } => Error::parse(pos + p, message),
                other => other,
            })?;
            pos += part.len() + 1;
        }
        Ok(x)
    }

    pub fn add(&self, other: &Self) -> Self {
        Octonion {
            coords: std::array::from_fn(|k| &self.coords[k] + &other.coords[k]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Octonion {
            coords: std::array::from_fn(|k| &self.coords[k] - &other.coords[k]),
        }
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        Octonion {
            coords: std::array::from_fn(|k| c * &self.coords[k]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(MultiPoly::is_zero)
    }

    pub fn as_scalar(&self) -> Option<&MultiPoly> {
        self.coords[1..]
            .iter()
            .all(MultiPoly::is_zero)
            .then_some(&self.coords[0])
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn conj_slice(x: &[MultiPoly]) -> Vec<MultiPoly> {
    if x.len() == 1 {
        return x.to_vec();
    }
    let h = x.len() / 2;
    let mut out = conj_slice(&x[..h]);
    out.extend(x[h..].iter().map(|c| -c));
    out
}

fn add_slice(x: &[MultiPoly], y: &[MultiPoly]) -> Vec<MultiPoly> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// `(x + y e)(z + w e) = (xz + γ·w̄y) + (wx + yz̄)e` one doubling level at a
/// time, with `γ = a, b, c` at the three levels.
fn mul_slice(x: &[MultiPoly], y: &[MultiPoly], gammas: &[&MultiPoly]) -> Vec<MultiPoly> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let inner = &gammas[..gammas.len() - 1];
    let gamma = gammas[gammas.len() - 1];
    let (x0, x1) = x.split_at(h);
    let (z0, z1) = y.split_at(h);
    let lo = add_slice(
        &mul_slice(x0, z0, inner),
        &mul_slice(&conj_slice(z1), x1, inner)
            .iter()
            .map(|c| gamma * c)
            .collect::<Vec<_>>(),
    );
    let hi = add_slice(
        &mul_slice(z1, x0, inner),
        &mul_slice(x1, &conj_slice(z0), inner),
    );
    let mut out = lo;
    out.extend(hi);
    out
}

pub fn oct_mul(spec: &OctonionSpec, x: &Octonion, y: &Octonion) -> Octonion {
    let v = mul_slice(&x.coords, &y.coords, &spec.gammas());
    Octonion {
        coords: v.try_into().expect("eight coordinates"),
    }
}

pub fn oct_conj(x: &Octonion) -> Octonion {
    Octonion {
        coords: conj_slice(&x.coords).try_into().expect("eight coordinates"),
    }
}

/// `tr(x) = x + x̄ = 2 x_0`.
pub fn oct_trace(x: &Octonion) -> MultiPoly {
    x.coords[0].scale(&crate::scalars::CycloNum::from_int(2))
}

/// `n(x) = x x̄`, checked to be a scalar.
pub fn oct_norm(spec: &OctonionSpec, x: &Octonion) -> Result<MultiPoly> {
    let p = oct_mul(spec, x, &oct_conj(x));
    p.as_scalar()
        .cloned()
        .ok_or_else(|| Error::Internal(format!("x * conj(x) is not scalar: {p}")))
}

/// `τ_k` for `k ∈ {1, 2, 3}`: negates `i`, `j` or `l` respectively, hence
/// every coordinate whose basis word contains that letter.
pub fn tau_action(k: u32, x: &Octonion) -> Result<Octonion> {
    if !(1..=3).contains(&k) {
        return Err(Error::invalid(format!(
            "tau index must be 1, 2 or 3, got {k}"
        )));
    }
    let bit = 1 << (k - 1);
    Ok(Octonion {
        coords: std::array::from_fn(|idx| {
            if idx & bit != 0 {
                -&x.coords[idx]
            } else {
                x.coords[idx].clone()
            }
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn basic_products() {
        let s = OctonionSpec::generic();
        let i = Octonion::basis(1);
        let j = Octonion::basis(2);
        let l = Octonion::basis(4);
        assert_eq!(oct_mul(&s, &l, &l), Octonion::scalar(poly("c")));
        assert_eq!(oct_mul(&s, &i, &i), Octonion::scalar(poly("a")));
        assert_eq!(oct_mul(&s, &j, &j), Octonion::scalar(poly("b")));
        assert_eq!(oct_mul(&s, &i, &j), Octonion::basis(3));
        assert_eq!(oct_mul(&s, &j, &i), Octonion::basis(3).scale(&poly("-1")));
        assert_eq!(oct_mul(&s, &i, &l), Octonion::basis(5));
        assert_eq!(oct_mul(&s, &j, &l), Octonion::basis(6));
        assert_eq!(oct_mul(&s, &Octonion::basis(3), &l), Octonion::basis(7));
        let x = Octonion::generic("x");
        assert_eq!(oct_mul(&s, &Octonion::one(), &x), x);
    }

    #[test]
    fn trace_and_norm() {
        let s = OctonionSpec::generic();
        assert_eq!(oct_trace(&Octonion::one()), poly("2"));
        assert!(oct_trace(&Octonion::basis(1)).is_zero());
        assert_eq!(oct_norm(&s, &Octonion::basis(1)).unwrap(), poly("-a"));
        let x = Octonion::parse("(x0, x1, 0, 0, 0, 0, 0, 0)").unwrap();
        assert_eq!(oct_norm(&s, &x).unwrap(), poly("x0^2 - a*x1^2"));
    }

    #[test]
    fn non_associative() {
        let s = OctonionSpec::generic();
        let (i, j, l) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
        let left = oct_mul(&s, &oct_mul(&s, &i, &j), &l);
        let right = oct_mul(&s, &i, &oct_mul(&s, &j, &l));
        assert_eq!(left, right.scale(&poly("-1")));
    }

    #[test]
    fn tau_examples() {
        let ij = Octonion::basis(3);
        assert_eq!(tau_action(1, &ij).unwrap(), ij.scale(&poly("-1")));
        let il = Octonion::basis(5);
        assert_eq!(tau_action(3, &il).unwrap(), il.scale(&poly("-1")));
        for k in 1..=3 {
            assert_eq!(tau_action(k, &Octonion::one()).unwrap(), Octonion::one());
        }
        assert!(tau_action(4, &ij).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(Octonion::parse("(1, 2)").is_err());
        assert!(Octonion::parse("1, 2, 3, 4, 5, 6, 7, 8").is_err());
        match Octonion::parse("(1, 2, 3, 4, 5, 6, 7, $)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 22),
            other => panic!("unexpected {other:?}"),
        }
    }
}
