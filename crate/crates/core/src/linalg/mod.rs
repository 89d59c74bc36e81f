// SPDX-License-Identifier: Apache-2.0

//! Dense exact linear algebra over ℚ.

mod echelon;
mod subspace;

pub use echelon::{rref, rref_fraction_free, rref_multimodular, Echelon};
pub use subspace::Subspace;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{lcm_of_denominators, rat, Poly, Rat};
use crate::error::{Error, Result};

/// Default bound on ambient dimensions handed to the dense kernels.
pub const DEFAULT_MAX_DIM: usize = 5000;

pub fn check_dim(requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::ResourceGuard { requested, limit })
    } else {
        Ok(())
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
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

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> QMat {
        QMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> QMat {
        let mut m = QMat::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        rref(&self.to_rows(), self.cols).pivots.len()
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for x in self.row(i) {
                write!(f, "{x} ")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Add for &QMat {
    type Output = QMat;
    fn add(self, o: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMat {
    type Output = QMat;
    fn sub(self, o: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &QMat {
    type Output = QMat;
    fn mul(self, o: &QMat) -> QMat {
        assert_eq!(self.cols, o.rows);
        let mut out = QMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Multiplication by `t` on ℚ[t]/(f) in the basis `1, t, …, t^{n-1}`.
pub fn companion(f: &Poly) -> Result<QMat> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::RootAtZero);
    }
    let g = f.monic();
    let n = g.deg();
    let mut m = QMat::zeros(n, n);
    for j in 0..n.saturating_sub(1) {
        m.set(j + 1, j, Rat::one());
    }
    for i in 0..n {
        m.set(i, n - 1, -g.coeff(i));
    }
    Ok(m)
}

/// `A ⊗ B ⊗ C`; the basis vector `(a, b, c)` sits at `a·n_B·n_C + b·n_C + c`.
pub fn kron3(a: &QMat, b: &QMat, c: &QMat) -> QMat {
    kron(&kron(a, b), c)
}

pub fn kron(a: &QMat, b: &QMat) -> QMat {
    let (r, s) = (a.rows * b.rows, a.cols * b.cols);
    let mut out = QMat::zeros(r, s);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.data[(i * b.rows + k) * s + j * b.cols + l] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Increasing `p`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    go(0, n, p, &mut cur, &mut out);
    out
}

/// Matrix of `Λ^p M` on the lexicographically ordered wedge basis.
pub fn wedge_power(m: &QMat, p: usize) -> Result<QMat> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows, got: m.cols });
    }
    let n = m.rows;
    if n < p {
        return Err(Error::DimensionTooSmall { dim: n, power: p });
    }
    let basis = subsets(n, p);
    let mut out = QMat::zeros(basis.len(), basis.len());
    for (a, rows) in basis.iter().enumerate() {
        for (b, cols) in basis.iter().enumerate() {
            let v = small_det(m, rows, cols);
            if !v.is_zero() {
                out.set(a, b, v);
            }
        }
    }
    Ok(out)
}

fn small_det(m: &QMat, rows: &[usize], cols: &[usize]) -> Rat {
    let e = |i: usize, j: usize| m.get(rows[i], cols[j]);
    match rows.len() {
        1 => e(0, 0).clone(),
        2 => e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
        3 => {
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
                - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        }
        _ => determinant(&m.submatrix(rows, cols)),
    }
}

/// Determinant by Bareiss fraction-free elimination on the integer matrix
/// obtained by clearing row denominators.
pub fn determinant(m: &QMat) -> Rat {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Rat::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let d = lcm_of_denominators(m.row(i));
            scale *= &d;
            m.row(i).iter().map(|x| (x * Rat::from_integer(d.clone())).to_integer()).collect()
        })
        .collect();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rat::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if sign { -prev } else { prev };
    debug_assert!(!scale.is_negative());
    Rat::new(det, scale)
}

/// Basis of `{v : M v = 0}`.
pub fn kernel_basis(m: &QMat) -> Subspace {
    let e = rref(&m.to_rows(), m.cols);
    let free: Vec<usize> = (0..m.cols).filter(|c| e.pivots.binary_search(c).is_err()).collect();
    let vectors: Vec<Vec<Rat>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); m.cols];
            v[f] = Rat::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Subspace::span(m.cols, &vectors)
}
