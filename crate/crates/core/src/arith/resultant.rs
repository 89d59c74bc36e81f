// SPDX-License-Identifier: Apache-2.0

//! Sylvester resultants and the two root-multiset combinators built on them.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{rat, Poly, Rat};
use crate::error::{Error, Result};
use crate::linalg::{determinant, QMat};

/// `det` of the Sylvester matrix of `f` and `g`, with the `deg g` shifted rows
/// of `f` first. Coefficients enter each row in descending order.
pub fn resultant(f: &Poly, g: &Poly) -> Result<Rat> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, n) = (f.deg(), g.deg());
    if m + n == 0 {
        return Ok(Rat::one());
    }
    let size = m + n;
    let mut s = QMat::zeros(size, size);
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            s.set(n + i, i + k, c.clone());
        }
    }
    Ok(determinant(&s))
}

/// Monic polynomial whose roots are the products `z·w` with `f(z) = 0` and
/// `g(w) = 0`, counted with multiplicity.
pub fn prodpoly(f: &Poly, g: &Poly) -> Result<Poly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() || g.constant_term().is_zero() {
        return Err(Error::RootAtZero);
    }
    let dg = g.deg();
    let target = f.deg() * dg;
    // x^{deg g}·g(u/x) = Σ g_k u^k x^{deg g - k}
    let at = |u: &Rat| -> Result<Rat> {
        let mut h = Vec::with_capacity(dg + 1);
        let mut upow = Rat::one();
        let mut desc = Vec::with_capacity(dg + 1);
        for c in g.coeffs() {
            desc.push(c * &upow);
            upow *= u;
        }
        h.extend(desc.into_iter().rev());
        resultant(f, &Poly::new(h))
    };
    interpolate_monic(target, at)
}

/// Monic polynomial whose roots are `z^e` for the roots `z` of `f`.
pub fn rootpow(f: &Poly, e: u32) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::RootAtZero);
    }
    let at = |u: &Rat| -> Result<Rat> {
        let mut h = alloc::vec![Rat::zero(); e as usize + 1];
        h[0] = -u.clone();
        h[e as usize] = Rat::one();
        resultant(f, &Poly::new(h))
    };
    interpolate_monic(f.deg(), at)
}

fn interpolate_monic(degree: usize, value: impl Fn(&Rat) -> Result<Rat>) -> Result<Poly> {
    let xs: Vec<Rat> = (0..=degree as i64).map(rat).collect();
    let ys = xs.iter().map(&value).collect::<Result<Vec<_>>>()?;
    let p = newton_interpolate(&xs, &ys);
    if p.deg() != degree || p.is_zero() {
        return Err(Error::Internal(alloc::format!(
            "interpolated degree {} differs from expected {degree}",
            p.deg()
        )));
    }
    Ok(p.monic())
}

/// Unique polynomial of degree `< xs.len()` through the given points.
pub(crate) fn newton_interpolate(xs: &[Rat], ys: &[Rat]) -> Poly {
    let n = xs.len();
    let mut dd: Vec<Rat> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let lin = Poly::new(alloc::vec![-xs[i].clone(), Rat::one()]);
        acc = &(&acc * &lin) + &Poly::constant(dd[i].clone());
    }
    acc
}
