use std::fmt;

use crate::error::{Error, Result};
use crate::polymat::Matrix;
use crate::ring::Ring;
use crate::scalars::{lcm, CycloNum};

/// Finite abelian group `Z/d_1 × … × Z/d_s`. Elements are exponent tuples,
/// enumerated lexicographically with the last coordinate varying fastest.
/// The empty factor list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Vec<u32>,
}

pub type Element = Vec<u32>;

impl AbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.iter().any(|&d| d < 2) {
            return Err(Error::invalid("cyclic factor orders must be at least 2"));
        }
        Ok(AbelianGroup { orders })
    }

    pub fn trivial() -> Self {
        AbelianGroup { orders: Vec::new() }
    }

    pub fn cyclic(d: u32) -> Result<Self> {
        Self::new(vec![d])
    }

    /// Parses `2x2x3`; `1` is the trivial group.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::trivial());
        }
        let mut orders = Vec::new();
        let mut pos = 0;
        for part in s.split(['x', 'X']) {
            let d: u32 = part.trim().parse().map_err(|_| {
                Error::parse(pos, format!("expected a cyclic order, found '{part}'"))
            })?;
            if d < 2 {
                return Err(Error::parse(pos, "cyclic factor orders must be at least 2"));
            }
            orders.push(d);
            pos += part.len() + 1;
        }
        Ok(AbelianGroup { orders })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&d| d as usize).product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &d| lcm(acc, d as u64))
    }

    pub fn elements(&self) -> Vec<Element> {
        let mut out = vec![Vec::new()];
        for &d in &self.orders {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |x| {
                        let mut v = e.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn index_of(&self, g: &[u32]) -> usize {
        g.iter()
            .zip(&self.orders)
            .fold(0, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    pub fn identity(&self) -> Element {
        vec![0; self.orders.len()]
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Element {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), d)| (x + y) % d)
            .collect()
    }

    pub fn neg(&self, a: &[u32]) -> Element {
        a.iter()
            .zip(&self.orders)
            .map(|(x, d)| (d - x) % d)
            .collect()
    }

    pub fn element_order(&self, a: &[u32]) -> u64 {
        a.iter().zip(&self.orders).fold(1, |acc, (&x, &d)| {
            lcm(acc, (d / num_integer::gcd(x, d)) as u64)
        })
    }

    /// Characters, indexed by exponent tuples like the elements.
    pub fn characters(&self) -> Vec<Character> {
        self.elements()
            .into_iter()
            .map(|e| Character { exponents: e })
            .collect()
    }

    pub fn fmt_element(&self, g: &[u32]) -> String {
        format!(
            "({})",
            g.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.orders.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Character `g ↦ Π ζ_(d_t)^(e_t g_t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    pub exponents: Vec<u32>,
}

impl Character {
    pub fn value(&self, group: &AbelianGroup, g: &[u32]) -> CycloNum {
        let n = group.exponent().max(1) as u32;
        let k: u64 = self
            .exponents
            .iter()
            .zip(g)
            .zip(group.orders())
            .map(|((&e, &x), &d)| (e as u64 * x as u64 % d as u64) * (n / d) as u64)
            .sum();
        CycloNum::zeta(n, (k % n as u64) as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn order(&self, group: &AbelianGroup) -> u64 {
        group.element_order(&self.exponents)
    }

    pub fn pow(&self, group: &AbelianGroup, m: u64) -> Character {
        Character {
            exponents: self
                .exponents
                .iter()
                .zip(group.orders())
                .map(|(&e, &d)| ((e as u64 * m) % d as u64) as u32)
                .collect(),
        }
    }
}

/// Permutation matrix of `b ↦ a + b` in the element enumeration:
/// `P_a e_b = e_(a+b)`.
pub fn perm_matrix(group: &AbelianGroup, a: &[u32]) -> Matrix<CycloNum> {
    let n = group.order();
    let mut m = Matrix::zeros(n, n);
    for b in group.elements() {
        let ab = group.add(a, &b);
        m.set(group.index_of(&ab), group.index_of(&b), CycloNum::one());
    }
    m
}

/// `D_χ = diag(χ(b))` over the element enumeration.
pub fn diag_matrix(group: &AbelianGroup, chi: &Character) -> Matrix<CycloNum> {
    Matrix::diagonal(
        group
            .elements()
            .iter()
            .map(|b| chi.value(group, b))
            .collect(),
    )
}

/// A pair `(a, χ) ∈ A × A*` with its order `c` and sign `ε = χ(a)^(c(c−1)/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairedElement {
    pub a: Element,
    pub chi: Character,
    pub c: u64,
    pub epsilon: CycloNum,
}

impl PairedElement {
    pub fn new(group: &AbelianGroup, a: Element, chi: Character) -> Self {
        let c = lcm(group.element_order(&a), chi.order(group));
        let epsilon = chi
            .value(group, &a)
            .pow((c * (c - 1) / 2) as i64)
            .expect("root of unity");
        assert!(
            epsilon == CycloNum::one() || epsilon == CycloNum::from_int(-1),
            "epsilon must be +1 or -1, got {epsilon}"
        );
        PairedElement { a, chi, c, epsilon }
    }

    pub fn all(group: &AbelianGroup) -> Vec<PairedElement> {
        let chars = group.characters();
        group
            .elements()
            .into_iter()
            .flat_map(|a| chars.iter().map(move |chi| (a.clone(), chi.clone())))
            .map(|(a, chi)| PairedElement::new(group, a, chi))
            .collect()
    }

    /// `P_a D_χ`.
    pub fn matrix(&self, group: &AbelianGroup) -> Matrix<CycloNum> {
        perm_matrix(group, &self.a).mul(&diag_matrix(group, &self.chi))
    }

    pub fn label(&self, group: &AbelianGroup) -> String {
        format!(
            "a={} chi={}",
            group.fmt_element(&self.a),
            group.fmt_element(&self.chi.exponents)
        )
    }
}
