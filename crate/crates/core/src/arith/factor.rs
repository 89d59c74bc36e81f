// SPDX-License-Identifier: Apache-2.0

//! Factorization over ℚ: squarefree decomposition, Berlekamp factorization
//! modulo a small prime, Hensel lifting and exhaustive factor recombination.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{self, PolyP};
use super::{Poly, Rat};
use crate::error::{Error, Result};

/// Largest squarefree degree the factorizer accepts.
pub const MAX_FACTOR_DEGREE: usize = 24;

/// Number of admissible primes tried before settling on the one with the
/// fewest modular factors.
const PRIME_TRIALS: usize = 5;

/// Yun's algorithm: monic `(g_i, i)` with `f = c·∏ g_i^i`, `g_i` squarefree and
/// pairwise coprime. Constant input yields an empty list.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Complete factorization into monic irreducible factors with multiplicities,
/// sorted by degree then coefficients.
pub fn factor(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        if g.deg() > MAX_FACTOR_DEGREE {
            return Err(Error::UnsupportedDegree(g.deg()));
        }
        let (_, prim) = g.primitive_part();
        for h in factor_squarefree_primitive(&prim) {
            out.push((Poly::from_bigints(&h).monic(), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(out)
}

pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(false);
    }
    let fac = factor(f)?;
    Ok(fac.len() == 1 && fac[0].1 == 1)
}

/// `f = c·p^m` with `p` monic irreducible.
pub fn prime_power_decompose(f: &Poly) -> Result<(Poly, u32)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Err(Error::NotPrimePower);
    }
    let sqf = squarefree_decomposition(f);
    if sqf.len() != 1 {
        return Err(Error::NotPrimePower);
    }
    let (radical, m) = sqf.into_iter().next().unwrap();
    if !is_irreducible(&radical)? {
        return Err(Error::NotPrimePower);
    }
    debug_assert!(f.exact_div(&radical.pow(m)).is_some_and(|q| q.deg() == 0));
    Ok((radical, m))
}

type IntPoly = Vec<BigInt>;

fn int_trim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    int_trim(out)
}

fn int_mod(a: &[BigInt], m: &BigInt) -> IntPoly {
    int_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn to_modp(a: &[BigInt], p: u64) -> PolyP {
    modp::trim(a.iter().map(|c| modp::from_bigint(c, p)).collect())
}

fn from_modp(a: &[u64]) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Factor a primitive squarefree integer polynomial with positive leading
/// coefficient into primitive irreducible factors.
fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].clone();

    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in modp::small_primes() {
        if tried == PRIME_TRIALS {
            break;
        }
        if modp::from_bigint(&lc, p) == 0 {
            continue;
        }
        let fp = to_modp(f, p);
        let g = modp::poly_gcd(&fp, &modp::poly_derivative(&fp, p), p);
        if g.len() != 1 {
            continue;
        }
        tried += 1;
        let facs = berlekamp(&modp::poly_monic(&fp, p), p);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime does not divide the discriminant");
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    // Mignotte-type bound: coefficients of lc·(factor / its lead) are below
    // |lc|·2^n·||f||_2.
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (BigInt::one() << n) * (norm_sq.sqrt() + 1u32);
    let target = bound * 2u32;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut k = 1u32;
    while modulus <= target {
        modulus *= &pb;
        k += 1;
    }

    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f.to_vec(), lifted, &modulus)
}

/// Berlekamp: irreducible monic factors of a squarefree monic `f` over 𝔽_p.
fn berlekamp(f: &[u64], p: u64) -> Vec<PolyP> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // row i: x^{ip} mod f ; kernel of (Q - I)^T gives the Berlekamp subalgebra
    let xp = modp::poly_powmod(&[0, 1], p, f, p);
    let mut rows: Vec<PolyP> = Vec::with_capacity(n);
    let mut cur: PolyP = vec![1];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = modp::poly_rem(&modp::poly_mul(&cur, &xp, p), f, p);
    }
    // columns j of the transposed system: sum_i v_i (Q[i][j] - δ_ij) = 0
    let mut sys: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let q = rows[i].get(j).copied().unwrap_or(0);
                    if i == j {
                        modp::sub(q, 1, p)
                    } else {
                        q
                    }
                })
                .collect()
        })
        .collect();
    let pivots = modp::rref(&mut sys, n, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let r = free.len();
    let basis: Vec<PolyP> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in sys.iter().zip(pivots.iter()) {
                v[pc] = modp::sub(0, row[fc], p);
            }
            modp::trim(v)
        })
        .collect();

    let mut factors: Vec<PolyP> = vec![f.to_vec()];
    for v in basis.iter().filter(|v| v.len() > 1) {
        if factors.len() == r {
            break;
        }
        let mut next = Vec::new();
        for g in factors {
            if g.len() <= 2 {
                next.push(g);
                continue;
            }
            let mut rest = g;
            for s in 0..p {
                if rest.len() <= 2 {
                    break;
                }
                let shifted = modp::poly_sub(v, &[s], p);
                let h = modp::poly_gcd(&rest, &shifted, p);
                if h.len() > 1 && h.len() < rest.len() {
                    rest = modp::poly_divrem(&rest, &h, p).0;
                    next.push(h);
                }
            }
            next.push(modp::poly_monic(&rest, p));
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), r);
    factors
}

/// Lift `f ≡ lc·∏ g_i (mod p)` to monic factors modulo `p^k`.
fn hensel_lift(f: &[BigInt], factors: &[PolyP], p: u64, k: u32) -> Vec<IntPoly> {
    let pk = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let lc_inv = lc
            .extended_gcd(&pk)
            .x
            .mod_floor(&pk);
        let g: IntPoly = f.iter().map(|c| c * &lc_inv).collect();
        return vec![int_mod(&g, &pk)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[PolyP]| fs.iter().fold(vec![1u64], |acc, g| modp::poly_mul(&acc, g, p));
    let a = prod(&factors[..mid]);
    let b = prod(&factors[mid..]);
    let (a_big, b_big) = lift_pair(f, &a, &b, p, k);
    let mut out = hensel_lift(&a_big, &factors[..mid], p, k);
    out.extend(hensel_lift(&b_big, &factors[mid..], p, k));
    out
}

/// Linear Hensel lifting of a coprime pair: returns monic `A, B` with
/// `f ≡ lc(f)·A·B (mod p^k)`.
fn lift_pair(f: &[BigInt], a: &[u64], b: &[u64], p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (g, s, t) = modp::poly_ext_gcd(a, b, p);
    debug_assert_eq!(g, vec![1]);
    let lc = f.last().unwrap().clone();
    let lc_inv = modp::inv(modp::from_bigint(&lc, p), p);
    let pb = BigInt::from(p);
    let mut big_a = from_modp(a);
    let mut big_b = from_modp(b);
    let mut pj = pb.clone();
    for _ in 1..k {
        let prod: IntPoly = int_mul(&int_mul(&big_a, &big_b), &[lc.clone()]);
        let n = f.len().max(prod.len());
        let err: IntPoly = (0..n)
            .map(|i| {
                let x = f.get(i).cloned().unwrap_or_default();
                let y = prod.get(i).cloned().unwrap_or_default();
                let d = x - y;
                debug_assert!((&d % &pj).is_zero());
                d / &pj
            })
            .collect();
        let e = to_modp(&err, p);
        if !e.is_empty() {
            let c: PolyP = modp::trim(e.iter().map(|&x| modp::mul(x, lc_inv, p)).collect());
            let (q, alpha) = modp::poly_divrem(&modp::poly_mul(&c, &s, p), b, p);
            let beta = modp::poly_add(&modp::poly_mul(&c, &t, p), &modp::poly_mul(&q, a, p), p);
            big_a = add_scaled(&big_a, &beta, &pj);
            big_b = add_scaled(&big_b, &alpha, &pj);
        }
        pj *= &pb;
    }
    (big_a, big_b)
}

fn add_scaled(x: &[BigInt], y: &[u64], scale: &BigInt) -> IntPoly {
    let n = x.len().max(y.len());
    int_trim(
        (0..n)
            .map(|i| {
                x.get(i).cloned().unwrap_or_default() + BigInt::from(*y.get(i).unwrap_or(&0)) * scale
            })
            .collect(),
    )
}

fn symmetric(a: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m / 2u32;
    int_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn primitive(a: IntPoly) -> IntPoly {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if a.last().is_some_and(Signed::is_negative) { -1 } else { 1 };
    let g = g * sign;
    a.into_iter().map(|c| c / &g).collect()
}

fn divides_exactly(f: &[BigInt], h: &[BigInt]) -> Option<IntPoly> {
    let fp = Poly::from_bigints(f);
    let hp = Poly::from_bigints(h);
    let q = fp.exact_div(&hp)?;
    if !q.coeffs().iter().all(|c| c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(Rat::to_integer).collect())
}

/// Zassenhaus recombination over subsets of increasing size.
fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut d = 1;
    while 2 * d <= lifted.len() {
        let mut hit = None;
        for subset in Combinations::new(lifted.len(), d) {
            let lc = f.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc], |acc, &i| int_mod(&int_mul(&acc, &lifted[i]), modulus));
            let cand = primitive(symmetric(&prod, modulus));
            if let Some(q) = divides_exactly(&f, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                f = q;
                let mut keep = Vec::new();
                for (i, g) in lifted.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(g);
                    }
                }
                lifted = keep;
            }
            None => d += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive(f));
    }
    found
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn prime_power_examples() {
        let f = p(&[1, 0, 1]).pow(3);
        assert_eq!(prime_power_decompose(&f).unwrap(), (p(&[1, 0, 1]), 3));
        let g = p(&[1, 0, 0, 0, 1]);
        assert_eq!(prime_power_decompose(&g).unwrap(), (g.clone(), 1));
        assert_eq!(prime_power_decompose(&p(&[-1, 0, 1])), Err(Error::NotPrimePower));
        assert_eq!(prime_power_decompose(&p(&[3])), Err(Error::NotPrimePower));
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x^4 - 10x^2 + 1 is irreducible but splits into linear/quadratic
        // factors modulo every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f).unwrap());
    }

    #[test]
    fn products_split() {
        let a = p(&[2, 1, 0, 5]);
        let b = p(&[-7, 0, 1]);
        let c = p(&[1, 1, 1]);
        let f = &(&a * &b) * &c;
        let fac = factor(&f).unwrap();
        let degs: Vec<usize> = fac.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, alloc::vec![2, 2, 3]);
        let back = fac.iter().fold(Poly::one(), |acc, (g, m)| &acc * &g.pow(*m));
        assert_eq!(back, f.monic());
    }

    #[test]
    fn multiplicities() {
        let f = &p(&[1, 1]).pow(3) * &p(&[1, 0, 1]).pow(2);
        let fac = factor(&f).unwrap();
        assert_eq!(fac, alloc::vec![(p(&[1, 1]), 3), (p(&[1, 0, 1]), 2)]);
    }

    #[test]
    fn degree_guard() {
        let f = p(&[1, 1]).pow(1) * p(&[-2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(factor(&f), Err(Error::UnsupportedDegree(26)));
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 0).count(), 1);
    }
}
