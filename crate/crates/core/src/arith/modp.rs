// SPDX-License-Identifier: Apache-2.0

//! Word-size prime-field arithmetic, dense polynomials over 𝔽_p, CRT and
//! rational reconstruction. Shared by the factorization code and the
//! multimodular echelon form.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse in 𝔽_p; `a` must be nonzero.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

pub fn from_bigint(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^31`, descending; products of two residues fit in a `u64`.
pub fn word_primes() -> impl Iterator<Item = u64> {
    let start = (1u64 << 31) - 1;
    (0..).map(move |k| start - 2 * k).filter(|&n| is_prime(n))
}

/// Small odd primes, ascending (used for factorization mod p).
pub fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime(n))
}

/// Chinese remaindering: combine `x mod m` with `r mod p`.
pub fn crt(x: &BigInt, m: &BigInt, r: u64, p: u64) -> BigInt {
    let xm = from_bigint(x, p);
    let minv = inv(from_bigint(m, p), p);
    let t = mul(sub(r, xm, p), minv, p);
    x + m * BigInt::from(t)
}

/// Rational reconstruction of `x mod m` with numerator and denominator below
/// `sqrt(m/2)`.
pub fn reconstruct(x: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = core::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = core::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound {
        return None;
    }
    if !r1.gcd(&s1).is_one() {
        return None;
    }
    let (n, d) = if s1.sign() == Sign::Minus { (-r1, -s1) } else { (r1, s1) };
    Some(Rat::new(n, d))
}

/// Dense polynomial over 𝔽_p, ascending; no trailing zeros.
pub type PolyP = Vec<u64>;

pub fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add(out[i + j], mul(x, y, p), p);
        }
    }
    trim(out)
}

pub fn poly_sub(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|k| sub(*a.get(k).unwrap_or(&0), *b.get(k).unwrap_or(&0), p))
            .collect(),
    )
}

pub fn poly_add(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|k| add(*a.get(k).unwrap_or(&0), *b.get(k).unwrap_or(&0), p))
            .collect(),
    )
}

pub fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial mod p");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let li = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = mul(r[k + db], li, p);
        if c == 0 {
            continue;
        }
        q[k] = c;
        for (j, &bc) in b.iter().enumerate() {
            r[k + j] = sub(r[k + j], mul(c, bc, p), p);
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn poly_rem(a: &[u64], b: &[u64], p: u64) -> PolyP {
    poly_divrem(a, b, p).1
}

pub fn poly_monic(a: &[u64], p: u64) -> PolyP {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&c| mul(c, li, p)).collect()
        }
    }
}

pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    poly_monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn poly_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
    let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        r0 = core::mem::replace(&mut r1, r);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        s0 = core::mem::replace(&mut s1, s);
        let t = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
        t0 = core::mem::replace(&mut t1, t);
    }
    let li = inv(*r0.last().expect("nonzero gcd"), p);
    let sc = |v: &[u64]| trim(v.iter().map(|&c| mul(c, li, p)).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

pub fn poly_derivative(a: &[u64], p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mul(c, k as u64 % p, p))
            .collect(),
    )
}

/// `base^e mod m`.
pub fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> PolyP {
    let mut acc: PolyP = poly_rem(&[1], m, p);
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}


/// In-place reduced row echelon form over 𝔽_p for `p < 2^32`; returns the
/// pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<usize> {
    debug_assert!(p < 1 << 32);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let li = inv(rows[r][c], p);
        for x in rows[r][c..].iter_mut() {
            *x = *x * li % p;
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, tail) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            let f = other[c];
            if f == 0 {
                continue;
            }
            let g = p - f;
            for (x, &y) in other[c..].iter_mut().zip(prow[c..].iter()) {
                if y != 0 {
                    *x = (*x + g * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}
