// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{format_rat, mod_inverse, parse_rat, rat, Poly, Rat};
use crate::error::{Error, Result};

/// Laurent polynomial in ℚ[t, t⁻¹]: `Σ coeffs[k]·t^(offset+k)`.
///
/// Canonical form: first and last stored coefficients are nonzero; the zero
/// polynomial has no coefficients and offset 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    offset: i64,
    coeffs: Vec<Rat>,
}

impl LPoly {
    pub fn new(offset: i64, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LPoly {
            offset: offset + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        LPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Rat::one(), 0)
    }

    pub fn monomial(c: Rat, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    pub fn from_ints(offset: i64, c: &[i64]) -> Self {
        Self::new(offset, c.iter().map(|&x| rat(x)).collect())
    }

    pub fn parse(s: &str, offset: i64) -> Result<Self> {
        let coeffs = s
            .split_whitespace()
            .map(parse_rat)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(offset, coeffs))
    }

    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rat).collect();
        parts.join(" ")
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent; `None` for zero.
    pub fn top(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> Rat {
        let idx = k - self.offset;
        if idx < 0 {
            return Rat::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `f(t⁻¹)`.
    pub fn reflect(&self) -> Self {
        match self.top() {
            None => Self::zero(),
            Some(top) => {
                let mut c = self.coeffs.clone();
                c.reverse();
                LPoly {
                    offset: -top,
                    coeffs: c,
                }
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        if self.offset < 0 && x.is_zero() {
            return Err(Error::RootAtZero);
        }
        let body = self
            .coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c);
        Ok(body * pow_i(x, self.offset))
    }

    /// `(p, k)` with `self = t^k·p`, `p ∈ ℚ[t]` and `p(0) ≠ 0` (zero maps to `(0, 0)`).
    pub fn split_monomial(&self) -> (Poly, i64) {
        (Poly::new(self.coeffs.clone()), self.offset)
    }

    /// Class of `self` in ℚ[t]/(f), reducing negative powers through the
    /// inverse of `t` modulo `f`.
    pub fn reduce_mod(&self, f: &Poly) -> Result<Poly> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.constant_term().is_zero() {
            return Err(Error::RootAtZero);
        }
        let (p, k) = self.split_monomial();
        if f.deg() == 0 {
            return Ok(Poly::zero());
        }
        let unit = if k >= 0 {
            Poly::t().pow(k as u32).rem(f)
        } else {
            let tinv = mod_inverse(&Poly::t(), f)?;
            tinv.pow((-k) as u32).rem(f)
        };
        Ok((&p.rem(f) * &unit).rem(f))
    }
}

fn pow_i(x: &Rat, k: i64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl From<Poly> for LPoly {
    fn from(p: Poly) -> Self {
        LPoly::new(0, p.into_coeffs())
    }
}

impl From<&Poly> for LPoly {
    fn from(p: &Poly) -> Self {
        LPoly::new(0, p.coeffs().to_vec())
    }
}

/// Witness of `f(t⁻¹) = r·t^k·f(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub r: Rat,
    pub k: i64,
}

/// Decide whether `f(t⁻¹) = r·t^k·f(t)` for some `r ∈ ℚ*`, `k ∈ ℤ`.
pub fn symmetry_decompose(f: &LPoly) -> Result<Option<Symmetry>> {
    let top = f.top().ok_or(Error::ZeroPolynomial)?;
    // lowest exponent of f(t^-1) is -top, of t^k f is k + offset
    let k = -top - f.offset;
    let c = &f.coeffs;
    let n = c.len();
    let r = &c[n - 1] / &c[0];
    let symmetric = (0..n).all(|j| c[n - 1 - j] == &r * &c[j]);
    Ok(symmetric.then_some(Symmetry { r, k }))
}

/// Normalize an annihilator: `u·t^k·f ∈ ℚ[t]` with nonzero constant term and
/// value 1 at `t = 1`.
pub fn normalize_delta(f: &LPoly) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (p, _) = f.split_monomial();
    let at_one = p.eval(&Rat::one());
    if at_one.is_zero() {
        return Err(Error::ValueAtOneIsZero);
    }
    Ok(p.scale(&at_one.recip()))
}

pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, offset: i64, coeffs: &[Rat]) -> fmt::Result {
    let mut first = true;
    for (idx, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = offset + idx as i64;
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let show_coeff = !mag.is_one() || e == 0;
        if show_coeff {
            write!(f, "{}", format_rat(&mag))?;
        }
        match e {
            0 => {}
            1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
            _ => write!(f, "{}t^{}", if show_coeff { "*" } else { "" }, e)?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LPoly[offset={}; {}]", self.offset, self.to_coeff_string())
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.offset, &self.coeffs)
    }
}

fn combine(a: &LPoly, b: &LPoly, neg: bool) -> LPoly {
    if a.is_zero() {
        return if neg { -b } else { b.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    let lo = a.offset.min(b.offset);
    let hi = a.top().unwrap().max(b.top().unwrap());
    let coeffs = (lo..=hi)
        .map(|k| {
            let y = b.coeff(k);
            a.coeff(k) + if neg { -y } else { y }
        })
        .collect();
    LPoly::new(lo, coeffs)
}

impl Add for &LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        combine(self, rhs, false)
    }
}

impl Sub for &LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        combine(self, rhs, true)
    }
}

impl Mul for &LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let a = Poly::new(self.coeffs.clone());
        let b = Poly::new(rhs.coeffs.clone());
        LPoly::new(self.offset + rhs.offset, (&a * &b).into_coeffs())
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for LPoly {
    type Output = LPoly;
    fn add(self, rhs: LPoly) -> LPoly {
        &self + &rhs
    }
}

impl Sub for LPoly {
    type Output = LPoly;
    fn sub(self, rhs: LPoly) -> LPoly {
        &self - &rhs
    }
}

impl Mul for LPoly {
    type Output = LPoly;
    fn mul(self, rhs: LPoly) -> LPoly {
        &self * &rhs
    }
}

impl Neg for LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn canonical_strips_both_ends() {
        let f = LPoly::from_ints(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(f.offset(), 0);
        assert_eq!(f.coeffs().len(), 2);
        assert_eq!(LPoly::from_ints(3, &[0, 0]), LPoly::zero());
    }

    #[test]
    fn normalize_delta_examples() {
        // t^4 + 1 -> t^4/2 + 1/2
        let f = LPoly::from_ints(0, &[1, 0, 0, 0, 1]);
        assert_eq!(
            normalize_delta(&f).unwrap(),
            Poly::new(alloc::vec![ratio(1, 2), rat(0), rat(0), rat(0), ratio(1, 2)])
        );
        // t + 2 + t^-1 -> t^2/4 + t/2 + 1/4
        let f = LPoly::from_ints(-1, &[1, 2, 1]);
        assert_eq!(
            normalize_delta(&f).unwrap(),
            Poly::new(alloc::vec![ratio(1, 4), ratio(1, 2), ratio(1, 4)])
        );
        assert_eq!(
            normalize_delta(&LPoly::from_ints(0, &[-1, 1])),
            Err(Error::ValueAtOneIsZero)
        );
        assert_eq!(normalize_delta(&LPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn symmetry_examples() {
        let s = symmetry_decompose(&LPoly::from_ints(0, &[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(s, Some(Symmetry { r: rat(1), k: -4 }));
        // t^2 + t - 1 has roots with product -1 that are not closed under inversion
        assert_eq!(symmetry_decompose(&LPoly::from_ints(0, &[-1, 1, 1])).unwrap(), None);
        assert_eq!(symmetry_decompose(&LPoly::from_ints(0, &[2, 1, 1])).unwrap(), None);
        // t - t^-1 is antisymmetric: f(1/t) = -f(t)
        let s = symmetry_decompose(&LPoly::from_ints(-1, &[-1, 0, 1])).unwrap();
        assert_eq!(s, Some(Symmetry { r: rat(-1), k: 0 }));
        assert_eq!(symmetry_decompose(&LPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reflect_and_reduce() {
        let f = LPoly::from_ints(-1, &[3, 0, 5]);
        assert_eq!(f.reflect(), LPoly::from_ints(-1, &[5, 0, 3]));
        // t^-1 mod t^2+1 is -t
        let m = Poly::from_ints(&[1, 0, 1]);
        assert_eq!(LPoly::monomial(rat(1), -1).reduce_mod(&m).unwrap(), Poly::from_ints(&[0, -1]));
        assert_eq!(LPoly::from_ints(-1, &[1, 0, 1]).reduce_mod(&m).unwrap(), Poly::zero());
    }

    #[test]
    fn eval_laurent() {
        let f = LPoly::from_ints(-1, &[1, 2, 1]);
        assert_eq!(f.eval(&rat(1)).unwrap(), rat(4));
        assert_eq!(f.eval(&rat(2)).unwrap(), ratio(9, 2));
    }
}
