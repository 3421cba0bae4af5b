use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::polymat::{Matrix, MultiPoly, PolyMatrix};
use crate::scalars::CycloNum;

/// The symbol algebra `(z, w)_r` generated by `x, y` with `x^r = z`,
/// `y^r = w`, `yx = ζ_r xy`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolSpec {
    pub r: u32,
    pub z: String,
    pub w: String,
}

impl SymbolSpec {
    pub fn new(r: u32, z: &str, w: &str) -> Result<Self> {
        if r < 2 {
            return Err(Error::invalid(format!(
                "symbol degree must be at least 2, got {r}"
            )));
        }
        if z == w {
            return Err(Error::invalid("symbol center variables must differ"));
        }
        Ok(SymbolSpec {
            r,
            z: z.to_string(),
            w: w.to_string(),
        })
    }

    pub fn zeta(&self) -> CycloNum {
        CycloNum::zeta(self.r, 1)
    }

    /// Adjoined radical with `u^r = z`.
    pub fn u_name(&self) -> String {
        format!("u_{}", self.z)
    }

    /// Adjoined radical with `v^r = w`.
    pub fn v_name(&self) -> String {
        format!("v_{}", self.w)
    }
}

impl fmt::Display for SymbolSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "symbol {} {} {}", self.r, self.z, self.w)
    }
}

/// `(x, y)` as `r×r` matrices: `x = u·diag(1, ζ, …, ζ^(r−1))` and `y = v·P`
/// with `P e_k = e_(k−1)` (indices mod `r`), so that `yx = ζ xy`.
pub fn symbol_matrix_model(spec: &SymbolSpec) -> (PolyMatrix, PolyMatrix) {
    let r = spec.r as usize;
    let u = MultiPoly::var(&spec.u_name());
    let v = MultiPoly::var(&spec.v_name());
    let x = Matrix::diagonal(
        (0..r)
            .map(|k| u.scale(&CycloNum::zeta(spec.r, k as i64)))
            .collect(),
    );
    let mut y = Matrix::zeros(r, r);
    for k in 0..r {
        y.set((k + r - 1) % r, k, v.clone());
    }
    (x, y)
}

/// A tensor product of symbol algebras with pairwise distinct center
/// variables; a single factor is a symbol algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpec {
    pub factors: Vec<SymbolSpec>,
}

impl TensorSpec {
    pub fn new(factors: Vec<SymbolSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid("a tensor product needs at least one factor"));
        }
        let mut names = BTreeSet::new();
        for f in &factors {
            for name in [&f.z, &f.w] {
                if !names.insert(name.clone()) {
                    return Err(Error::invalid(format!("center variable '{name}' repeated")));
                }
            }
        }
        let spec = TensorSpec { factors };
        for name in &names {
            if spec.generator_index(name).is_some() {
                return Err(Error::invalid(format!(
                    "center variable '{name}' clashes with a generator name"
                )));
            }
        }
        Ok(spec)
    }

    pub fn symbol(r: u32, z: &str, w: &str) -> Result<Self> {
        Self::new(vec![SymbolSpec::new(r, z, w)?])
    }

    /// Parses `symbol 2 z w` or a comma-separated list of such factors.
    pub fn parse(src: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut offset = 0;
        for part in src.split(',') {
            let words: Vec<&str> = part.split_whitespace().collect();
            let lead = offset + part.len() - part.trim_start().len();
            match words.as_slice() {
                ["symbol", r, z, w] => {
                    let r: u32 = r.parse().map_err(|_| {
                        Error::parse(lead, format!("expected a symbol degree, found '{r}'"))
                    })?;
                    for name in [z, w] {
                        let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                        if !ok {
                            return Err(Error::parse(
                                lead,
                                format!("invalid variable name '{name}'"),
                            ));
                        }
                    }
                    factors.push(
                        SymbolSpec::new(r, z, w).map_err(|e| Error::parse(lead, e.to_string()))?,
                    );
                }
                _ => {
                    return Err(Error::parse(
                        lead,
                        "expected 'symbol <r> <z> <w>' (factors separated by ',')",
                    ))
                }
            }
            offset += part.len() + 1;
        }
        Self::new(factors)
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.r as usize).product()
    }

    pub fn center_vars(&self) -> Vec<String> {
        self.factors
            .iter()
            .flat_map(|f| [f.z.clone(), f.w.clone()])
            .collect()
    }

    /// The names accepted for the generators of factor `t`: `x{t+1}`,
    /// `y{t+1}`, and plain `x`, `y` for a single factor.
    fn generator_index(&self, name: &str) -> Option<(usize, bool)> {
        let (is_x, rest) = match name.as_bytes().first() {
            Some(b'x') => (true, &name[1..]),
            Some(b'y') => (false, &name[1..]),
            _ => return None,
        };
        if rest.is_empty() {
            return (self.factors.len() == 1).then_some((0, is_x));
        }
        let t: usize = rest.parse().ok()?;
        (1..=self.factors.len())
            .contains(&t)
            .then_some((t - 1, is_x))
    }

    /// Basis monomials `Π x_t^(i_t) y_t^(j_t)` as exponent lists.
    pub fn basis(&self) -> Vec<Vec<(u32, u32)>> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            out = out
                .into_iter()
                .flat_map(|b: Vec<(u32, u32)>| {
                    (0..f.r).flat_map(move |i| {
                        let b = b.clone();
                        (0..f.r).map(move |j| {
                            let mut c = b.clone();
                            c.push((i, j));
                            c
                        })
                    })
                })
                .collect();
        }
        out
    }

    pub fn basis_label(&self, b: &[(u32, u32)]) -> String {
        let single = self.factors.len() == 1;
        let mut parts = Vec::new();
        for (t, &(i, j)) in b.iter().enumerate() {
            let suffix = if single {
                String::new()
            } else {
                (t + 1).to_string()
            };
            for (g, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(format!("{g}{suffix}")),
                    _ => parts.push(format!("{g}{suffix}^{e}")),
                }
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for TensorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Generators `(x_t, y_t)` of each factor in the `n×n` model: Kronecker
/// products with the factor's model in slot `t` and identities elsewhere.
pub fn tensor_model(spec: &TensorSpec) -> Vec<(PolyMatrix, PolyMatrix)> {
    let models: Vec<(PolyMatrix, PolyMatrix)> =
        spec.factors.iter().map(symbol_matrix_model).collect();
    let place = |t: usize, m: &PolyMatrix| {
        spec.factors
            .iter()
            .enumerate()
            .fold(Matrix::identity(1), |acc: PolyMatrix, (s, f)| {
                let slot = if s == t {
                    m.clone()
                } else {
                    Matrix::identity(f.r as usize)
                };
                acc.kronecker(&slot)
            })
    };
    models
        .iter()
        .enumerate()
        .map(|(t, (x, y))| (place(t, x), place(t, y)))
        .collect()
}

/// An element `Σ c_b · b` over the monomial basis, with coefficients
/// polynomials in the center variables.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    pub coords: BTreeMap<Vec<(u32, u32)>, MultiPoly>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement {
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(b: Vec<(u32, u32)>) -> Self {
        Self::term(b, MultiPoly::one())
    }

    pub fn term(b: Vec<(u32, u32)>, c: MultiPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(b, c);
        e
    }

    pub fn add_term(&mut self, b: Vec<(u32, u32)>, c: MultiPoly) {
        let sum = match self.coords.remove(&b) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coords.insert(b, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Parses a combination of basis monomials such as
    /// `1 + z*x - 3*x1*y2^2`. Each monomial is read in the normal order
    /// `Π x_t^i y_t^j`; exponents at or above `r_t` are reduced with
    /// `x_t^(r_t) = z_t`, `y_t^(r_t) = w_t`.
    pub fn parse(spec: &TensorSpec, src: &str) -> Result<Self> {
        let p = parse_poly(src)?;
        let vars = p.vars().to_vec();
        let centers: BTreeSet<String> = spec.center_vars().into_iter().collect();
        for name in &vars {
            if spec.generator_index(name).is_none() && !centers.contains(name) {
                let pos = src.find(name.as_str()).unwrap_or(0);
                return Err(Error::parse(pos, format!("unknown symbol '{name}'")));
            }
        }
        let mut elem = Self::zero();
        for (m, c) in p.terms() {
            let mut b = vec![(0u32, 0u32); spec.factors.len()];
            let mut coef = MultiPoly::constant(c.clone());
            for (name, &e) in vars.iter().zip(&m.0) {
                if e == 0 {
                    continue;
                }
                match spec.generator_index(name) {
                    Some((t, is_x)) => {
                        let f = &spec.factors[t];
                        let center = if is_x { &f.z } else { &f.w };
                        coef = &coef * &MultiPoly::var(center).pow((e / f.r) as u64);
                        if is_x {
                            b[t].0 = e % f.r;
                        } else {
                            b[t].1 = e % f.r;
                        }
                    }
                    None => coef = &coef * &MultiPoly::var(name).pow(e as u64),
                }
            }
            elem.add_term(b, coef);
        }
        Ok(elem)
    }

    pub fn display(&self, spec: &TensorSpec) -> String {
        if self.coords.is_empty() {
            return "0".to_string();
        }
        self.coords
            .iter()
            .map(|(b, c)| format!("({c})*{}", spec.basis_label(b)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Substitution `z_t ↦ u_t^(r_t)`, `w_t ↦ v_t^(r_t)`.
fn center_to_radicals(spec: &TensorSpec) -> BTreeMap<String, MultiPoly> {
    spec.factors
        .iter()
        .flat_map(|f| {
            [
                (f.z.clone(), MultiPoly::var(&f.u_name()).pow(f.r as u64)),
                (f.w.clone(), MultiPoly::var(&f.v_name()).pow(f.r as u64)),
            ]
        })
        .collect()
}

/// The `n×n` model matrix of an element, with entries in `k(ζ)[u_t, v_t]`.
pub fn model_matrix(spec: &TensorSpec, elem: &AlgebraElement) -> PolyMatrix {
    let n = spec.degree();
    let gens = tensor_model(spec);
    let subst = center_to_radicals(spec);
    let mut acc = Matrix::zeros(n, n);
    for (b, c) in &elem.coords {
        let mono = b
            .iter()
            .zip(&gens)
            .fold(Matrix::identity(n), |m: PolyMatrix, (&(i, j), (x, y))| {
                m.mul(&x.pow(i as u64)).mul(&y.pow(j as u64))
            });
        acc = acc.add(&mono.scale(&c.substitute(&subst)));
    }
    acc
}

/// Rewrites a polynomial in the radicals `u_t, v_t` in terms of the center
/// variables, failing if some exponent is not a multiple of `r_t`.
pub fn radicals_to_center(spec: &TensorSpec, p: &MultiPoly) -> Result<MultiPoly> {
    let mut lookup: BTreeMap<String, (String, u32)> = BTreeMap::new();
    for f in &spec.factors {
        lookup.insert(f.u_name(), (f.z.clone(), f.r));
        lookup.insert(f.v_name(), (f.w.clone(), f.r));
    }
    let vars = p.vars().to_vec();
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let mut term = MultiPoly::constant(c.clone());
        for (name, &e) in vars.iter().zip(&m.0) {
            if e == 0 {
                continue;
            }
            match lookup.get(name) {
                Some((center, r)) if e % r == 0 => {
                    term = &term * &MultiPoly::var(center).pow((e / r) as u64);
                }
                Some(_) => {
                    return Err(Error::Internal(format!(
                        "coefficient is not central: {name}^{e} in {p}"
                    )))
                }
                None => term = &term * &MultiPoly::var(name).pow(e as u64),
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

/// All `σ^(1) … σ^(n)` of a model matrix, rewritten in the center variables.
pub fn sigma_of_model(spec: &TensorSpec, m: &PolyMatrix) -> Result<Vec<MultiPoly>> {
    m.char_poly()
        .iter()
        .map(|s| radicals_to_center(spec, s))
        .collect()
}

/// `σ^(1) … σ^(n)` of an element (reduced characteristic polynomial), as
/// polynomials in the center variables.
pub fn sigma_all_in_algebra(spec: &TensorSpec, elem: &AlgebraElement) -> Result<Vec<MultiPoly>> {
    sigma_of_model(spec, &model_matrix(spec, elem))
}

pub fn sigma_in_algebra(spec: &TensorSpec, elem: &AlgebraElement, i: usize) -> Result<MultiPoly> {
    let n = spec.degree();
    if i > n {
        return Err(Error::invalid(format!(
            "sigma index {i} exceeds degree {n}"
        )));
    }
    if i == 0 {
        return Ok(MultiPoly::one());
    }
    Ok(sigma_all_in_algebra(spec, elem)?.swap_remove(i - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn r2_model_matches_closed_form() {
        let spec = SymbolSpec::new(2, "z", "w").unwrap();
        let (x, y) = symbol_matrix_model(&spec);
        let u = poly("u_z");
        let v = poly("v_w");
        assert_eq!(x, Matrix::diagonal(vec![u.clone(), -&u]));
        let zero = MultiPoly::zero();
        assert_eq!(
            y,
            Matrix::from_rows(vec![vec![zero.clone(), v.clone()], vec![v, zero]]).unwrap()
        );
        assert_eq!(y.mul(&x), x.mul(&y).scale(&MultiPoly::from_int(-1)));
    }

    #[test]
    fn relations_hold_for_small_r() {
        for r in 2..=5 {
            let spec = SymbolSpec::new(r, "z", "w").unwrap();
            let (x, y) = symbol_matrix_model(&spec);
            let n = r as usize;
            let z = MultiPoly::var("u_z").pow(r as u64);
            let w = MultiPoly::var("v_w").pow(r as u64);
            assert_eq!(x.pow(r as u64), Matrix::scalar(n, z));
            assert_eq!(y.pow(r as u64), Matrix::scalar(n, w));
            let zeta = MultiPoly::constant(spec.zeta());
            assert_eq!(y.mul(&x), x.mul(&y).scale(&zeta));
        }
    }

    #[test]
    fn sigma_examples() {
        let t = TensorSpec::symbol(2, "z", "w").unwrap();
        let x = AlgebraElement::parse(&t, "x").unwrap();
        assert_eq!(
            sigma_all_in_algebra(&t, &x).unwrap(),
            vec![MultiPoly::zero(), poly("-z")]
        );
        let one = AlgebraElement::parse(&t, "1").unwrap();
        assert_eq!(
            sigma_all_in_algebra(&t, &one).unwrap(),
            vec![poly("-2"), poly("1")]
        );
        let t3 = TensorSpec::symbol(3, "z", "w").unwrap();
        let x = AlgebraElement::parse(&t3, "x").unwrap();
        assert_eq!(
            sigma_all_in_algebra(&t3, &x).unwrap(),
            vec![MultiPoly::zero(), MultiPoly::zero(), poly("-z")]
        );
        // Quaternion norm form: Nrd(a + bx + cy + dxy) = a^2 - z b^2 - w c^2 + z w d^2.
        let q = AlgebraElement::parse(&t, "2 + 3*x + 5*y + 7*x*y").unwrap();
        assert_eq!(
            sigma_in_algebra(&t, &q, 2).unwrap(),
            poly("4 - 9*z - 25*w + 49*z*w")
        );
    }

    #[test]
    fn exponent_reduction_in_parser() {
        let t = TensorSpec::symbol(2, "z", "w").unwrap();
        let e = AlgebraElement::parse(&t, "x^3*y^2").unwrap();
        assert_eq!(e, AlgebraElement::term(vec![(1, 0)], poly("z*w")));
        assert!(AlgebraElement::parse(&t, "q*x").is_err());
    }

    #[test]
    fn tensor_generators_commute_across_factors() {
        let spec = TensorSpec::parse("symbol 2 z1 w1, symbol 3 z2 w2").unwrap();
        assert_eq!(spec.degree(), 6);
        let g = tensor_model(&spec);
        let (x1, y1) = &g[0];
        let (x2, y2) = &g[1];
        assert_eq!(x1.rows(), 6);
        assert_eq!(x1.mul(y2), y2.mul(x1));
        assert_eq!(y1.mul(x2), x2.mul(y1));
        assert_eq!(x1.mul(x2), x2.mul(x1));
    }

    #[test]
    fn spec_parsing_errors() {
        assert!(TensorSpec::parse("symbol 2 z z").is_err());
        assert!(TensorSpec::parse("symbol two z w").is_err());
        assert!(TensorSpec::parse("symbol 2 z w, symbol 2 z v").is_err());
        assert!(TensorSpec::parse("symbol 2 x1 w").is_err());
        match TensorSpec::parse("symbol 2 z w, quat") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 14),
            other => panic!("unexpected {other:?}"),
        }
    }
}
