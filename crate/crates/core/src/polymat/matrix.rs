use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{ExactDiv, Field, Ring};

/// Dense row-major matrix over any commutative ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "matrix data has {} entries, expected {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("ragged matrix rows"));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { T::zero() })
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(k, j);
                if !b.is_zero() {
                    acc = acc.add_ref(&a.mul_ref(b));
                }
            }
            acc
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn kronecker(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols)
                .mul_ref(rhs.get(i % rhs.rows, j % rhs.cols))
        })
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    /// Coefficients `(σ1, …, σn)` with `det(λI − M) = λ^n + σ1 λ^(n−1) + … + σn`,
    /// by Berkowitz's division-free algorithm.
    pub fn char_poly(&self) -> Vec<T> {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut poly = vec![T::one()];
        for r in 0..n {
            // Toeplitz column for the leading (r+1)x(r+1) block.
            let mut t = Vec::with_capacity(r + 2);
            t.push(T::one());
            t.push(self.get(r, r).neg_ref());
            let mut w: Vec<T> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let s = (0..r).fold(T::zero(), |acc, j| {
                    acc.add_ref(&self.get(r, j).mul_ref(&w[j]))
                });
                t.push(s.neg_ref());
                if k + 1 < r {
                    w = (0..r)
                        .map(|i| {
                            (0..r).fold(T::zero(), |acc, j| {
                                acc.add_ref(&self.get(i, j).mul_ref(&w[j]))
                            })
                        })
                        .collect();
                }
            }
            let mut next = vec![T::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for j in 0..=i.min(r) {
                    if !t[i - j].is_zero() && !poly[j].is_zero() {
                        *slot = slot.add_ref(&t[i - j].mul_ref(&poly[j]));
                    }
                }
            }
            poly = next;
        }
        poly.split_off(1)
    }

    /// `σ^(i)`, with `σ^(0) = 1`.
    pub fn sigma(&self, i: usize) -> T {
        if i == 0 {
            return T::one();
        }
        self.char_poly()[i - 1].clone()
    }

    /// Evaluates a polynomial with coefficients `coeffs[k]` of `t^k` at this
    /// matrix by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[T]) -> Self {
        let n = self.rows;
        coeffs.iter().rev().fold(Self::zeros(n, n), |acc, c| {
            acc.mul(self).add(&Self::scalar(n, c.clone()))
        })
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.data.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return T::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = m[k * n + k].clone();
            for i in k + 1..n {
                let lead = m[i * n + k].clone();
                for j in k + 1..n {
                    let v = pivot
                        .mul_ref(&m[i * n + j])
                        .sub_ref(&lead.mul_ref(&m[k * n + j]));
                    m[i * n + j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
                }
                m[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let d = m[n * n - 1].clone();
        if negate {
            d.neg_ref()
        } else {
            d
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Row-reduced echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    m.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = m.get(row, j).mul_ref(&inv);
                m.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in 0..self.cols {
                    let v = m.get(i, j).sub_ref(&f.mul_ref(m.get(row, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_poly, parse_scalar};
    use crate::polymat::MultiPoly;
    use crate::scalars::CycloNum;

    fn pm(rows: &[&[&str]]) -> Matrix<MultiPoly> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_poly(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn polys(v: &[&str]) -> Vec<MultiPoly> {
        v.iter().map(|s| parse_poly(s).unwrap()).collect()
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            Matrix::<MultiPoly>::identity(2).char_poly(),
            polys(&["-2", "1"])
        );
        assert_eq!(
            pm(&[&["0", "z"], &["1", "0"]]).char_poly(),
            polys(&["0", "-z"])
        );
        assert_eq!(
            pm(&[&["0", "-1"], &["1", "0"]]).char_poly(),
            polys(&["0", "1"])
        );
        let m = pm(&[&["a", "b", "c"], &["d", "e", "f"], &["g", "h", "i"]]);
        let cp = m.char_poly();
        assert_eq!(cp[0], parse_poly("-(a + e + i)").unwrap());
        assert_eq!(cp[2], -m.determinant());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            pm(&[&["a", "b"], &["c", "d"]]).determinant(),
            parse_poly("a*d - b*c").unwrap()
        );
        let z = CycloNum::zeta(3, 1);
        let xs = [CycloNum::one(), z.clone(), &z * &z];
        let v = Matrix::from_fn(3, 3, |i, j| xs[i].pow(j as i64).unwrap());
        let expect = (&xs[1] - &xs[0]) * (&xs[2] - &xs[0]) * (&xs[2] - &xs[1]);
        assert_eq!(v.determinant(), expect);
        // Needs a row swap.
        let s = Matrix::from_rows(vec![
            vec![CycloNum::zero(), CycloNum::one()],
            vec![CycloNum::one(), CycloNum::zero()],
        ])
        .unwrap();
        assert_eq!(s.determinant(), CycloNum::from_int(-1));
    }

    #[test]
    fn inverse_and_rank() {
        let m = Matrix::from_rows(vec![
            vec![parse_scalar("2").unwrap(), parse_scalar("zeta(3)").unwrap()],
            vec![parse_scalar("1").unwrap(), parse_scalar("1").unwrap()],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_fn(2, 2, |_, _| CycloNum::one());
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn kronecker_shape() {
        let a = Matrix::<CycloNum>::identity(2);
        let b = Matrix::<CycloNum>::identity(3);
        let k = a.kronecker(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(k, Matrix::identity(6));
    }
}
