// SPDX-License-Identifier: Apache-2.0

//! Reduced row echelon forms over ℚ.
//!
//! Small systems go through fraction-free elimination on integer rows. Larger
//! ones are reduced modulo word-size primes, lifted by Chinese remaindering
//! and rational reconstruction, and then certified against the input: every
//! input row must be the combination of the candidate rows whose coefficients
//! are its own pivot entries. Since the rank modulo a prime never exceeds the
//! rank over ℚ, a candidate passing that check is the exact echelon form.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::modp;
use crate::arith::{lcm_of_denominators, Rat};

/// Entry-count threshold above which the multimodular path is used.
const MODULAR_THRESHOLD: usize = 2500;

/// Reduced row echelon form: nonzero rows only, each with a unit pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vec<Rat>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(rows: &[Vec<Rat>], ncols: usize) -> Echelon {
    let ints = integer_rows(rows);
    if ints.len() * ncols > MODULAR_THRESHOLD {
        multimodular(&ints, ncols)
    } else {
        fraction_free(ints, ncols)
    }
}

pub fn rref_fraction_free(rows: &[Vec<Rat>], ncols: usize) -> Echelon {
    fraction_free(integer_rows(rows), ncols)
}

pub fn rref_multimodular(rows: &[Vec<Rat>], ncols: usize) -> Echelon {
    multimodular(&integer_rows(rows), ncols)
}

/// Clear denominators and drop zero rows.
fn integer_rows(rows: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            let d = Rat::from_integer(lcm_of_denominators(r));
            primitive(r.iter().map(|x| (x * &d).to_integer()).collect())
        })
        .collect()
}

fn primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
    row
}

fn fraction_free(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r);
        let (prow, tail) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            let pv = &prow[c];
            for (x, y) in other.iter_mut().zip(prow.iter()) {
                *x = &*x * pv - &f * y;
            }
            *other = primitive(core::mem::take(other));
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    let rows = a
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let pv = row[c].clone();
            row.into_iter().map(|x| Rat::new(x, pv.clone())).collect()
        })
        .collect();
    Echelon { rows, pivots, ncols }
}

/// Lexicographic preference: larger rank first, then earlier pivots.
fn better(a: &[usize], b: &[usize]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a < b)
}

fn multimodular(a: &[Vec<BigInt>], ncols: usize) -> Echelon {
    let mut best: Vec<usize> = Vec::new();
    let mut free: Vec<usize> = Vec::new();
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut primes_used = 0usize;
    let mut last: Option<Vec<Rat>> = None;

    for p in modp::word_primes() {
        let mut rows: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|x| modp::from_bigint(x, p)).collect()).collect();
        let piv = modp::rref(&mut rows, ncols, p);
        if primes_used == 0 || better(&piv, &best) {
            best = piv;
            free = (0..ncols).filter(|c| best.binary_search(c).is_err()).collect();
            residues = vec![BigInt::zero(); best.len() * free.len()];
            modulus = BigInt::one();
            primes_used = 0;
            last = None;
        } else if piv != best {
            continue;
        }
        let nf = free.len();
        for (k, row) in rows.iter().enumerate() {
            for (fi, &f) in free.iter().enumerate() {
                let x = &mut residues[k * nf + fi];
                *x = modp::crt(x, &modulus, row[f], p);
            }
        }
        modulus *= p;
        primes_used += 1;

        let Some(candidate) = residues
            .iter()
            .map(|x| modp::reconstruct(x, &modulus))
            .collect::<Option<Vec<Rat>>>()
        else {
            continue;
        };
        let stable = last.as_ref() == Some(&candidate);
        last = Some(candidate);
        if !stable {
            continue;
        }
        let candidate = last.as_ref().expect("just set");
        if certify(a, &best, &free, candidate) {
            let rows = (0..best.len())
                .map(|k| {
                    let mut row = vec![Rat::zero(); ncols];
                    row[best[k]] = Rat::one();
                    for (fi, &f) in free.iter().enumerate() {
                        row[f] = candidate[k * nf + fi].clone();
                    }
                    row
                })
                .collect();
            return Echelon { rows, pivots: best, ncols };
        }
    }
    unreachable!("prime supply is unbounded")
}

/// Every input row must equal `Σ_k row[pivot_k] · R_k`, checked on the free
/// columns with all entries scaled to a common denominator.
fn certify(a: &[Vec<BigInt>], pivots: &[usize], free: &[usize], entries: &[Rat]) -> bool {
    let nf = free.len();
    let d = lcm_of_denominators(entries);
    let dr = Rat::from_integer(d.clone());
    let scaled: Vec<BigInt> = entries.iter().map(|x| (x * &dr).to_integer()).collect();
    for row in a {
        for (fi, &f) in free.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (k, &p) in pivots.iter().enumerate() {
                let c = &row[p];
                if c.is_zero() {
                    continue;
                }
                let e = &scaled[k * nf + fi];
                if !e.is_zero() {
                    acc += c * e;
                }
            }
            if acc != &row[f] * &d {
                return false;
            }
        }
    }
    debug_assert!(!d.is_negative());
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn both_routes_agree_on_rank_deficient_input() {
        let rows: Vec<Vec<Rat>> = vec![
            vec![rat(2), rat(4), rat(0), ratio(1, 2)],
            vec![rat(1), rat(2), rat(1), rat(0)],
            vec![rat(3), rat(6), rat(1), ratio(1, 2)],
        ];
        let a = rref_fraction_free(&rows, 4);
        let b = rref_multimodular(&rows, 4);
        assert_eq!(a, b);
        assert_eq!(a.pivots, vec![0, 2]);
        assert_eq!(a.rows[0], vec![rat(1), rat(2), rat(0), ratio(1, 4)]);
        assert_eq!(a.rows[1], vec![rat(0), rat(0), rat(1), ratio(-1, 4)]);
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(rref(&[], 3).rank(), 0);
        assert_eq!(rref(&[vec![rat(0); 3]], 3).rank(), 0);
        assert_eq!(rref_multimodular(&[vec![rat(0); 3]], 3).rank(), 0);
    }
}
