use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{divisors, lcm, totient};
use crate::error::{Error, Result};
use crate::ring::{ExactDiv, Field, Ring};

/// Reduction data for one level N: the N-th cyclotomic polynomial, monic,
/// coefficients listed from the constant term upward.
struct LevelData {
    phi: usize,
    modulus: Vec<i64>,
}

fn level_cache() -> &'static RwLock<HashMap<u32, Arc<LevelData>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<LevelData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn level_data(n: u32) -> Arc<LevelData> {
    if let Some(d) = level_cache().read().expect("level cache poisoned").get(&n) {
        return d.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n as u64) {
        if d as u32 == n {
            continue;
        }
        let q = level_data(d as u32);
        p = div_monic_int(&p, &q.modulus);
    }
    let data = Arc::new(LevelData {
        phi: totient(n as u64) as usize,
        modulus: p,
    });
    debug_assert_eq!(data.modulus.len(), data.phi + 1);
    level_cache()
        .write()
        .expect("level cache poisoned")
        .insert(n, data.clone());
    data
}

fn div_monic_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

/// Reduces an integer polynomial in zeta_N modulo Phi_N, in place, and
/// truncates it to phi(N) coefficients.
fn reduce_mod(level: &LevelData, mut p: Vec<BigInt>) -> Vec<BigInt> {
    let phi = level.phi;
    if p.len() > phi {
        for k in (phi..p.len()).rev() {
            if p[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut p[k]);
            for (j, &mj) in level.modulus[..phi].iter().enumerate() {
                if mj != 0 {
                    p[k - phi + j] -= &c * mj;
                }
            }
        }
        p.truncate(phi);
    }
    p.resize(phi, BigInt::zero());
    p
}

/// The arithmetic operations of [`CycloNum::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact element of the cyclotomic field Q(zeta_N), stored in the power
/// basis 1, zeta_N, ..., zeta_N^(phi(N)-1) with a common positive denominator.
///
/// Values that happen to be rational are always stored at level 1, so the
/// level of a rational number is 1 regardless of how it was produced.
/// Equality lifts both operands to a common level.
#[derive(Clone)]
pub struct CycloNum {
    level: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    pub fn from_int(n: i64) -> Self {
        CycloNum {
            level: 1,
            num: vec![BigInt::from(n)],
            den: BigInt::one(),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        CycloNum {
            level: 1,
            num: vec![n],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        CycloNum {
            level: 1,
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        }
    }

    /// zeta_N^k, reduced modulo Phi_N.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "cyclotomic level must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        let data = level_data(n);
        let mut p = vec![BigInt::zero(); k.max(data.phi) + 1];
        p[k] = BigInt::one();
        Self::normalized(n, reduce_mod(&data, p), BigInt::one())
    }

    /// Builds an element from its power-basis coordinates at level `n`.
    pub fn from_coords(n: u32, coords: &[BigRational]) -> Result<Self> {
        let data = level_data(n);
        if coords.len() != data.phi {
            return Err(Error::invalid(format!(
                "level {n} needs {} coordinates, got {}",
                data.phi,
                coords.len()
            )));
        }
        let den = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::normalized(n, num, den))
    }

    fn normalized(level: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in &num {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && !g.is_zero() {
            den /= &g;
            for c in num.iter_mut() {
                *c /= &g;
            }
        }
        if num.iter().skip(1).all(|c| c.is_zero()) {
            let c0 = num.into_iter().next().unwrap_or_default();
            let den = if c0.is_zero() { BigInt::one() } else { den };
            return CycloNum {
                level: 1,
                num: vec![c0],
                den,
            };
        }
        CycloNum { level, num, den }
    }

    /// The level N this value is currently stored at (not necessarily minimal,
    /// except that rational values always sit at level 1).
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Power-basis coordinates at the stored level.
    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_rational(&self) -> bool {
        self.level == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Numerators at level `target` (which must be a multiple of the current level).
    fn lifted(&self, target: u32) -> Vec<BigInt> {
        if target == self.level {
            return self.num.clone();
        }
        debug_assert_eq!(target % self.level, 0);
        let data = level_data(target);
        let step = (target / self.level) as usize;
        let mut p = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (k, c) in self.num.iter().enumerate() {
            p[k * step] = c.clone();
        }
        reduce_mod(&data, p)
    }

    fn scale_rational(&self, num: &BigInt, den: &BigInt) -> Self {
        let n = self.num.iter().map(|c| c * num).collect();
        Self::normalized(self.level, n, &self.den * den)
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let level = lcm(self.level as u64, rhs.level as u64) as u32;
        let a = self.lifted(level);
        let b = rhs.lifted(level);
        let (num, den) = if self.den == rhs.den {
            let num = a
                .into_iter()
                .zip(b)
                .map(|(x, y)| if negate_rhs { x - y } else { x + y })
                .collect();
            (num, self.den.clone())
        } else {
            let num = a
                .into_iter()
                .zip(b)
                .map(|(x, y)| {
                    let l = x * &rhs.den;
                    let r = y * &self.den;
                    if negate_rhs {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect();
            (num, &self.den * &rhs.den)
        };
        Self::normalized(level, num, den)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.level == 1 {
            return rhs.scale_rational(&self.num[0], &self.den);
        }
        if rhs.level == 1 {
            return self.scale_rational(&rhs.num[0], &rhs.den);
        }
        let level = lcm(self.level as u64, rhs.level as u64) as u32;
        let a = self.lifted(level);
        let b = rhs.lifted(level);
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let data = level_data(level);
        Self::normalized(level, reduce_mod(&data, prod), &self.den * &rhs.den)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.level == 1 {
            return Ok(Self::normalized(
                1,
                vec![self.den.clone()],
                self.num[0].clone(),
            ));
        }
        let data = level_data(self.level);
        let to_q = |v: &[BigInt]| -> Vec<BigRational> {
            v.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect()
        };
        let modulus: Vec<BigInt> = data.modulus.iter().map(|&c| BigInt::from(c)).collect();
        let mut r0 = to_q(&modulus);
        let mut r1 = trim(to_q(&self.num));
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return Err(Error::Internal(format!(
                "cyclotomic polynomial of level {} not coprime to operand",
                self.level
            )));
        }
        let c = r0[0].clone();
        let den = BigRational::from_integer(self.den.clone());
        let mut coords: Vec<BigRational> = s0.into_iter().map(|s| s * &den / &c).collect();
        coords.resize(data.phi, BigRational::zero());
        Self::from_coords(self.level, &coords)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_impl(&rhs.inverse()?))
    }

    /// Exact `x op y`; division by zero is reported as an error.
    pub fn arith(op: ArithOp, x: &Self, y: &Self) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => x + y,
            ArithOp::Sub => x - y,
            ArithOp::Mul => x * y,
            ArithOp::Div => x.checked_div(y)?,
        })
    }

    /// Exact integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return Ok(self.inverse()?.pow_u(e.unsigned_abs()));
        }
        Ok(self.pow_u(e as u64))
    }

    /// Least d >= 1 with x^d = 1, if x is a root of unity. A root of unity in
    /// Q(zeta_N) has order dividing lcm(2, N), so only those divisors are tried.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        // Roots of unity are algebraic integers: a denominator rules them out.
        if !self.den.is_one() {
            return None;
        }
        let bound = lcm(2, self.level as u64);
        let one = CycloNum::one();
        divisors(bound).into_iter().find(|&d| self.pow_u(d) == one)
    }

    /// Minimal level M (with M not congruent to 2 mod 4) whose field contains
    /// this value, together with the coordinates there.
    pub fn canonical(&self) -> (u32, Vec<BigRational>) {
        if self.level == 1 {
            return (1, self.coords());
        }
        let target = self.coords();
        for m in divisors(self.level as u64) {
            let m = m as u32;
            if m == 1 || m % 4 == 2 {
                continue;
            }
            if m == self.level {
                return (m, target);
            }
            let phi_m = totient(m as u64) as usize;
            let basis: Vec<Vec<BigRational>> = (0..phi_m)
                .map(|k| {
                    CycloNum::zeta(m, k as i64)
                        .lifted(self.level)
                        .into_iter()
                        .map(BigRational::from_integer)
                        .collect()
                })
                .collect();
            if let Some(c) = solve_columns(&basis, &target) {
                return (m, c);
            }
        }
        (self.level, target)
    }
}

/// Solves sum_k c_k * cols[k] = rhs over Q, if consistent.
fn solve_columns(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=ncols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut out = vec![BigRational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = m[i][ncols].clone();
    }
    Some(out)
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn qpoly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let mut q = vec![BigRational::zero(); rem.len() - db];
    let lead = b[db].clone();
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &c * bj;
            }
        }
        q[k] = c;
    }
    (trim(q), trim(rem))
}

impl Ring for CycloNum {
    fn zero() -> Self {
        CycloNum::from_int(0)
    }
    fn one() -> Self {
        CycloNum::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, false)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, true)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg_ref(&self) -> Self {
        CycloNum {
            level: self.level,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
    fn from_int(n: i64) -> Self {
        CycloNum::from_int(n)
    }
}

impl ExactDiv for CycloNum {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(divisor).ok()
    }
}

impl Field for CycloNum {
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.den == other.den && self.num == other.num;
        }
        let level = lcm(self.level as u64, other.level as u64) as u32;
        let a = self.lifted(level);
        let b = other.lifted(level);
        a.iter()
            .zip(&b)
            .all(|(x, y)| x * &other.den == y * &self.den)
    }
}

impl Eq for CycloNum {}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        CycloNum::from_int(n)
    }
}

impl From<BigRational> for CycloNum {
    fn from(r: BigRational) -> Self {
        CycloNum::from_rational(&r)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycloNum {
    /// Canonical form at the minimal level, in the scalar literal grammar,
    /// e.g. `-1/2 + 3*zeta(5)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (level, coords) = self.canonical();
        let mut first = true;
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let z = match k {
                0 => None,
                1 => Some(format!("zeta({level})")),
                _ => Some(format!("zeta({level})^{k}")),
            };
            match z {
                None => write!(f, "{}", fmt_rational(&a))?,
                Some(z) if a.is_one() => write!(f, "{z}")?,
                Some(z) => write!(f, "{}*{z}", fmt_rational(&a))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                Ring::$impl(self, rhs)
            }
        }
        impl $trait<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                Ring::$impl(&self, &rhs)
            }
        }
        impl $trait<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                Ring::$impl(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    /// Panics on division by zero; use [`CycloNum::checked_div`] to handle it.
    fn div(self, rhs: &CycloNum) -> CycloNum {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<CycloNum> for CycloNum {
    type Output = CycloNum;
    fn div(self, rhs: CycloNum) -> CycloNum {
        &self / &rhs
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.neg_ref()
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNum {
        CycloNum::zeta(n, k)
    }

    #[test]
    fn make_examples() {
        assert_eq!(z(1, 0), CycloNum::one());
        let i = z(4, 1);
        assert_eq!(&i * &i, CycloNum::from_int(-1));
        assert_eq!(&z(3, 1) + &z(3, 2), CycloNum::from_int(-1));
        assert_eq!(z(2, 1), CycloNum::from_int(-1));
        assert_eq!(z(2, 1).level(), 1);
    }

    #[test]
    fn arith_examples() {
        let x = z(5, 2);
        assert_eq!(
            CycloNum::arith(ArithOp::Add, &CycloNum::zero(), &x).unwrap(),
            x
        );
        assert_eq!(&z(3, 1) * &z(3, 2), CycloNum::one());
        assert_eq!(
            CycloNum::arith(ArithOp::Div, &CycloNum::one(), &z(4, 1)).unwrap(),
            z(4, 3)
        );
        assert_eq!(
            CycloNum::arith(ArithOp::Div, &x, &CycloNum::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn pow_examples() {
        assert_eq!(z(7, 3).pow(0).unwrap(), CycloNum::one());
        assert_eq!(z(4, 1).pow(6).unwrap(), CycloNum::from_int(-1));
        assert_eq!(
            CycloNum::from_int(-1).pow(-3).unwrap(),
            CycloNum::from_int(-1)
        );
        assert!(CycloNum::zero().pow(-1).is_err());
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(CycloNum::one().root_of_unity_order(), Some(1));
        assert_eq!(z(6, 1).root_of_unity_order(), Some(6));
        assert_eq!(CycloNum::from_int(2).root_of_unity_order(), None);
        assert_eq!(CycloNum::from_int(-1).root_of_unity_order(), Some(2));
        // -zeta_5 has order 10 although it lives at level 5.
        assert_eq!((-z(5, 1)).root_of_unity_order(), Some(10));
        // 1 + zeta_3 = -zeta_3^2 is a 6th root of unity.
        assert_eq!((&CycloNum::one() + &z(3, 1)).root_of_unity_order(), Some(6));
        // (3 + 4i)/5 has absolute value 1 but is not a root of unity.
        let w = (&CycloNum::from_int(3) + &(&CycloNum::from_int(4) * &z(4, 1)))
            .checked_div(&CycloNum::from_int(5))
            .unwrap();
        assert_eq!(w.root_of_unity_order(), None);
    }

    #[test]
    fn zeta_identities_up_to_24() {
        for n in 1..=24u32 {
            let x = z(n, 1);
            assert_eq!(x.pow_u(n as u64), CycloNum::one(), "zeta_{n}^{n}");
            // Phi_N(zeta_N) = 0, evaluated by Horner from the integer coefficients.
            let data = level_data(n);
            let mut acc = CycloNum::zero();
            for &c in data.modulus.iter().rev() {
                acc = &(&acc * &x) + &CycloNum::from_int(c);
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta_{n}) != 0");
        }
    }

    #[test]
    fn mixed_levels_and_display() {
        let s = &z(4, 1) + &z(3, 1);
        assert_eq!(s.level(), 12);
        assert_eq!(&s - &z(3, 1), z(4, 1));
        assert_eq!(z(6, 1).to_string(), "1 + zeta(3)");
        assert_eq!(z(12, 3).to_string(), "zeta(4)");
        assert_eq!(
            CycloNum::from_rational(&BigRational::new(3.into(), (-6).into())).to_string(),
            "-1/2"
        );
        assert_eq!(CycloNum::zero().to_string(), "0");
    }

    #[test]
    fn inverse_with_denominator() {
        let x = &CycloNum::one() - &(&CycloNum::zeta(3, 1) / &CycloNum::from_int(2));
        assert_eq!(&x * &x.inverse().unwrap(), CycloNum::one());
        let y = &CycloNum::zeta(5, 2) / &CycloNum::from_int(6);
        assert_eq!(&y * &y.inverse().unwrap(), CycloNum::one());
    }
}
