use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{ExactDiv, Ring};
use crate::scalars::CycloNum;

/// Orders variable names "naturally": digit runs compare numerically, so
/// `a2 < a10` and `s1_2 < s1_10`.
pub fn var_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let bytes = s.as_bytes();
        let mut start = 0;
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(&cb) {
        let ord = if *da && *db {
            let ta = sa.trim_start_matches('0');
            let tb = sb.trim_start_matches('0');
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
        } else {
            sa.cmp(sb)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

/// Exponent vector over a polynomial's variable context. Ordered graded
/// lexicographically: total degree first, then the earliest variable in the
/// context is the most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over cyclotomic scalars.
///
/// Each polynomial carries its own sorted variable context; binary operations
/// merge contexts, so polynomials built independently combine freely.
/// Zero coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, CycloNum>,
}

fn merge_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
    if Arc::ptr_eq(a, b) || a[..] == b[..] || b.is_empty() {
        return a.clone();
    }
    if a.is_empty() {
        return b.clone();
    }
    let mut out: Vec<String> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() {
            out.push(b[j].clone());
            j += 1;
        } else {
            match var_cmp(&a[i], &b[j]) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out.into()
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Arc::from(Vec::<String>::new()),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(CycloNum::one())
    }

    pub fn constant(c: CycloNum) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly {
            vars: Arc::from(Vec::<String>::new()),
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(CycloNum::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), CycloNum::one());
        MultiPoly {
            vars: Arc::from(vec![name.to_string()]),
            terms,
        }
    }

    /// `coef * prod name^exp`.
    pub fn monomial(coef: CycloNum, powers: &[(&str, u32)]) -> Self {
        powers.iter().fold(Self::constant(coef), |acc, (v, e)| {
            &acc * &Self::var(v).pow(*e as u64)
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Variables that actually occur with positive exponent.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&k| self.terms.keys().any(|m| m.0[k] > 0))
            .map(|k| self.vars[k].clone())
            .collect()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycloNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The polynomial's value if it has no nonconstant terms.
    pub fn as_constant(&self) -> Option<CycloNum> {
        match self.terms.len() {
            0 => Some(CycloNum::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.var_index(name)
            .map(|k| self.degree_in_idx(k))
            .unwrap_or(0)
    }

    fn degree_in_idx(&self, k: usize) -> u32 {
        self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0)
    }

    /// Leading coefficient under the graded-lex order.
    pub fn leading_coeff(&self) -> Option<&CycloNum> {
        self.terms.values().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous components keyed by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, BTreeMap<Monomial, CycloNum>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_default()
                .insert(m.clone(), c.clone());
        }
        out.into_iter()
            .map(|(d, terms)| {
                (
                    d,
                    MultiPoly {
                        vars: self.vars.clone(),
                        terms,
                    },
                )
            })
            .collect()
    }

    fn remapped(&self, target: &Arc<[String]>) -> BTreeMap<Monomial, CycloNum> {
        if Arc::ptr_eq(&self.vars, target) || self.vars[..] == target[..] {
            return self.terms.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .expect("target context contains source variables")
            })
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.len()];
                for (k, &p) in pos.iter().enumerate() {
                    e[p] = m.0[k];
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    /// Re-expresses `self` over `vars` (which must include every used variable).
    pub fn with_vars(&self, vars: &Arc<[String]>) -> MultiPoly {
        let full = merge_vars(vars, &self.vars);
        MultiPoly {
            terms: self.remapped(&full),
            vars: full,
        }
    }

    fn aligned(a: &MultiPoly, b: &MultiPoly) -> (Arc<[String]>, MultiPoly, MultiPoly) {
        let vars = merge_vars(&a.vars, &b.vars);
        let a2 = MultiPoly {
            terms: a.remapped(&vars),
            vars: vars.clone(),
        };
        let b2 = MultiPoly {
            terms: b.remapped(&vars),
            vars: vars.clone(),
        };
        (vars, a2, b2)
    }

    fn combine(&self, rhs: &MultiPoly, negate: bool) -> MultiPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { rhs.neg_ref() } else { rhs.clone() };
        }
        let vars = merge_vars(&self.vars, &rhs.vars);
        let mut terms = self.remapped(&vars);
        for (m, c) in rhs.remapped(&vars) {
            match terms.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(if negate { -c } else { c });
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let v = if negate { e.get() - &c } else { e.get() + &c };
                    if v.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = v;
                    }
                }
            }
        }
        MultiPoly { vars, terms }
    }

    fn mul_impl(&self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let vars = merge_vars(&self.vars, &rhs.vars);
        let a = self.remapped(&vars);
        let b = rhs.remapped(&vars);
        let mut terms: BTreeMap<Monomial, CycloNum> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m = ma.mul(mb);
                let p = ca * cb;
                match terms.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get() + &p;
                        *e.get_mut() = v;
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms }
    }

    pub fn scale(&self, c: &CycloNum) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> MultiPoly {
        self.pow_u(e)
    }

    /// Simultaneous substitution of variables by polynomials; unbound
    /// variables stay symbolic.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .get(v)
                    .cloned()
                    .unwrap_or_else(|| MultiPoly::var(v))
            })
            .collect();
        let mut cache: Vec<BTreeMap<u32, MultiPoly>> = vec![BTreeMap::new(); images.len()];
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache[k]
                    .entry(e)
                    .or_insert_with(|| images[k].pow(e as u64))
                    .clone();
                t = &t * &p;
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes scalars for some variables.
    pub fn eval_partial(&self, values: &BTreeMap<String, CycloNum>) -> MultiPoly {
        let bindings = values
            .iter()
            .map(|(k, v)| (k.clone(), MultiPoly::constant(v.clone())))
            .collect();
        self.substitute(&bindings)
    }

    /// Substitutes scalars for all variables.
    pub fn eval(&self, values: &BTreeMap<String, CycloNum>) -> Result<CycloNum> {
        self.eval_partial(values)
            .as_constant()
            .ok_or_else(|| Error::invalid(format!("unbound variables in evaluation of {self}")))
    }

    /// Coefficients with respect to `name`: entry k multiplies `name^k`.
    pub fn coeffs_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(k) = self.var_index(name) else {
            return vec![self.clone()];
        };
        self.coeffs_in_idx(k)
    }

    fn coeffs_in_idx(&self, k: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in_idx(k) as usize;
        let mut out: Vec<BTreeMap<Monomial, CycloNum>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let d = std::mem::replace(&mut e[k], 0) as usize;
            out[d].insert(Monomial(e), c.clone());
        }
        out.into_iter()
            .map(|terms| MultiPoly {
                vars: self.vars.clone(),
                terms,
            })
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(name: &str, coeffs: &[MultiPoly]) -> MultiPoly {
        let x = MultiPoly::var(name);
        coeffs
            .iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| &(&acc * &x) + c)
    }

    pub fn derivative(&self, name: &str) -> MultiPoly {
        let Some(k) = self.var_index(name) else {
            return MultiPoly::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[k] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let d = e[k];
                e[k] -= 1;
                (Monomial(e), c * &CycloNum::from_int(d as i64))
            })
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Divides by the leading coefficient (graded-lex), giving the unique
    /// monic associate. Zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn div_exact_poly(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.inverse().ok()?));
        }
        let (vars, mut rem, d) = MultiPoly::aligned(self, divisor);
        let (lm, lc) = d
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))?;
        let lc_inv = lc.inverse().ok()?;
        let mut quot: BTreeMap<Monomial, CycloNum> = BTreeMap::new();
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            if !lm.divides(rm) {
                return None;
            }
            let qm = rm.div(&lm);
            let qc = rc * &lc_inv;
            let t = MultiPoly {
                vars: vars.clone(),
                terms: BTreeMap::from([(qm.clone(), qc.clone())]),
            };
            rem = &rem - &(&t * &d);
            quot.insert(qm, qc);
        }
        Some(MultiPoly { vars, terms: quot })
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &MultiPoly) -> MultiPoly {
        let (_, a, b) = MultiPoly::aligned(self, other);
        gcd_rec(&a, &b)
    }

    /// Drops variables that no longer occur.
    pub fn pruned(&self) -> MultiPoly {
        let used = self.used_vars();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&k| self.terms.keys().any(|m| m.0[k] > 0))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|&k| m.0[k]).collect()), c.clone()))
            .collect();
        MultiPoly {
            vars: Arc::from(used),
            terms,
        }
    }

    /// Resultant with respect to `name`, as the determinant of the Sylvester
    /// matrix whose entries are polynomials in the remaining variables.
    /// If exactly one input is zero the resultant is zero.
    pub fn resultant(&self, other: &MultiPoly, name: &str) -> Result<MultiPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::invalid("resultant of two zero polynomials"));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero());
        }
        let f = self.coeffs_in(name);
        let g = other.coeffs_in(name);
        let m = f.len() - 1;
        let n = g.len() - 1;
        let size = m + n;
        let mut rows = Vec::with_capacity(size);
        for shift in 0..n {
            let mut row = vec![MultiPoly::zero(); size];
            for (k, c) in f.iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
        for shift in 0..m {
            let mut row = vec![MultiPoly::zero(); size];
            for (k, c) in g.iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
        Ok(super::Matrix::from_rows(rows)?.determinant())
    }
}

fn content_in(p: &MultiPoly, k: usize) -> MultiPoly {
    p.coeffs_in_idx(k)
        .iter()
        .fold(MultiPoly::zero(), |acc, c| gcd_rec(&acc, c))
}

fn primitive_in(p: &MultiPoly, k: usize) -> MultiPoly {
    let c = content_in(p, k);
    p.div_exact_poly(&c).expect("content divides")
}

fn lead_in(p: &MultiPoly, k: usize) -> (u32, MultiPoly) {
    let cs = p.coeffs_in_idx(k);
    let d = cs.len() - 1;
    (d as u32, cs.into_iter().last().expect("nonempty"))
}

/// Pseudo-remainder of `a` by `b` in the variable with index `k`.
fn prem(a: &MultiPoly, b: &MultiPoly, k: usize) -> MultiPoly {
    let (db, lb) = lead_in(b, k);
    let mut r = a.clone();
    let x = MultiPoly {
        vars: a.vars.clone(),
        terms: BTreeMap::from([(
            Monomial((0..a.vars.len()).map(|i| (i == k) as u32).collect()),
            CycloNum::one(),
        )]),
    };
    while !r.is_zero() {
        let (dr, lr) = lead_in(&r, k);
        if dr < db {
            break;
        }
        let shift = x.pow((dr - db) as u64);
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let nvars = a.vars.len().max(b.vars.len());
    let (a, b) = if a.vars[..] == b.vars[..] {
        (a.clone(), b.clone())
    } else {
        let (_, a, b) = MultiPoly::aligned(a, b);
        (a, b)
    };
    let k = (0..nvars)
        .find(|&k| a.degree_in_idx(k) > 0 || b.degree_in_idx(k) > 0)
        .expect("nonconstant input has a variable");
    if a.degree_in_idx(k) == 0 {
        return gcd_rec(&a, &content_in(&b, k));
    }
    if b.degree_in_idx(k) == 0 {
        return gcd_rec(&content_in(&a, k), &b);
    }
    let ca = content_in(&a, k);
    let cb = content_in(&b, k);
    let c = gcd_rec(&ca, &cb);
    let mut p = a.div_exact_poly(&ca).expect("content divides");
    let mut q = b.div_exact_poly(&cb).expect("content divides");
    if p.degree_in_idx(k) < q.degree_in_idx(k) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        let r = prem(&p, &q, k);
        if r.is_zero() {
            break primitive_in(&q, k);
        }
        if r.degree_in_idx(k) == 0 {
            break MultiPoly::one();
        }
        p = q;
        q = primitive_in(&r, k);
    };
    (&c * &g).monic()
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg_ref(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn from_int(n: i64) -> Self {
        MultiPoly::from_int(n)
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.div_exact_poly(divisor)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        if self.vars[..] == other.vars[..] {
            return self.terms == other.terms;
        }
        let (_, a, b) = MultiPoly::aligned(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl From<CycloNum> for MultiPoly {
    fn from(c: CycloNum) -> Self {
        MultiPoly::constant(c)
    }
}

/// Splits a scalar's canonical text into (negative?, body) for use as a
/// coefficient; multi-term scalars are parenthesized.
pub(crate) fn coeff_parts(c: &CycloNum) -> (bool, String, bool) {
    let s = c.to_string();
    let compound = |t: &str| t.contains(" + ") || t.contains(" - ");
    if let Some(rest) = s.strip_prefix('-') {
        if !compound(rest) {
            return (true, rest.to_string(), rest == "1");
        }
    }
    if compound(&s) {
        return (false, format!("({s})"), false);
    }
    let unit = s == "1";
    (false, s, unit)
}

impl fmt::Display for MultiPoly {
    /// Canonical text: terms in descending graded-lex order, re-parsable by
    /// the polynomial grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.pruned();
        for (idx, (m, c)) in p.terms.iter().rev().enumerate() {
            let (neg, body, unit) = coeff_parts(c);
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| {
                        if e == 1 {
                            p.vars[k].clone()
                        } else {
                            format!("{}^{e}", p.vars[k])
                        }
                    })
                    .collect();
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if unit {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{body}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                Ring::$impl(self, rhs)
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                Ring::$impl(&self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_ref);
poly_binop!(Sub, sub, sub_ref);
poly_binop!(Mul, mul, mul_ref);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn natural_variable_order() {
        assert_eq!(var_cmp("a2", "a10"), Ordering::Less);
        assert_eq!(var_cmp("s1_2", "s1_10"), Ordering::Less);
        assert_eq!(var_cmp("a", "b"), Ordering::Less);
        assert_eq!(var_cmp("x", "x1"), Ordering::Less);
    }

    #[test]
    fn display_is_canonical_and_reparses() {
        let f = p("3*b^2 + a^2 + 6*a*b");
        assert_eq!(f.to_string(), "a^2 + 6*a*b + 3*b^2");
        let g = p("zeta(3)*x - (1 + zeta(4))*y^2 + 2");
        assert_eq!(p(&g.to_string()), g);
        assert_eq!(p("-x + 1").to_string(), "-x + 1");
    }

    #[test]
    fn substitute_examples() {
        let bind = |v: &str, e: &str| BTreeMap::from([(v.to_string(), p(e))]);
        assert!(p("a + 4*b").substitute(&bind("a", "-4*b")).is_zero());
        assert_eq!(
            p("b^4 + 4*a*b^3").substitute(&bind("a", "-4*b")),
            p("-15*b^4")
        );
        let mut both = bind("a", "1");
        both.insert("b".into(), p("0"));
        assert_eq!(p("a^2 + 6*a*b + 3*b^2").substitute(&both), MultiPoly::one());
        // Unbound variables stay symbolic.
        assert_eq!(p("a*c").substitute(&bind("a", "2")), p("2*c"));
    }

    #[test]
    fn resultant_examples() {
        assert!(p("t").resultant(&p("t"), "t").unwrap().is_zero());
        assert_eq!(p("t + 4").resultant(&p("1 + 4*t"), "t").unwrap(), p("-15"));
        let r = p("t^2 + 6*t + 3")
            .resultant(&p("3*t^2 + 6*t + 1"), "t")
            .unwrap();
        assert!(!r.is_zero());
        assert!(p("0").resultant(&p("0"), "t").is_err());
        // Constant against degree-2: c^2.
        assert_eq!(p("3").resultant(&p("t^2 + 1"), "t").unwrap(), p("9"));
    }

    #[test]
    fn resultant_with_parameters() {
        // Res_x(x^2 - y, x - 1) = 1 - y
        assert_eq!(
            p("x^2 - y").resultant(&p("x - 1"), "x").unwrap(),
            p("1 - y")
        );
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p("x^2 - y^2");
        let b = p("x + y");
        assert_eq!(a.div_exact_poly(&b).unwrap(), p("x - y"));
        assert!(p("x^2 + 1").div_exact_poly(&b).is_none());
        let g = p("(x + y)*(x - 2*z)").gcd(&p("(x + y)*(y + z)^2"));
        assert_eq!(g, p("x + y"));
        assert_eq!(p("2*x + 2").gcd(&p("4")), MultiPoly::one());
        assert_eq!(p("x*y").gcd(&p("x^2*z")), p("x"));
        assert_eq!(p("0").gcd(&p("3*x + 6")), p("x + 2"));
    }

    #[test]
    fn derivative_and_coeffs() {
        let f = p("x^3*y + 2*x*y^2 + 5");
        assert_eq!(f.derivative("x"), p("3*x^2*y + 2*y^2"));
        assert_eq!(f.derivative("z"), MultiPoly::zero());
        let cs = f.coeffs_in("x");
        assert_eq!(cs.len(), 4);
        assert_eq!(MultiPoly::from_coeffs_in("x", &cs), f);
    }

    #[test]
    fn homogeneity() {
        assert!(p("a^2 + a*b").is_homogeneous());
        assert!(!p("a^2 + b").is_homogeneous());
        let comps = p("a^2 + b + 1").homogeneous_components();
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
    }
}
