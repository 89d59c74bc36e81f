// SPDX-License-Identifier: Apache-2.0

use alloc::vec::Vec;

use num_traits::Zero;

use super::echelon::rref;
use crate::arith::Rat;
use crate::error::{Error, Result};

/// Subspace of ℚ^n held in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        let e = rref(vectors, ambient);
        let free = (0..ambient).filter(|c| e.pivots.binary_search(c).is_err()).collect();
        Subspace { ambient, rows: e.rows, pivots: e.pivots, free }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, &[])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    /// Echelon basis.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot coordinates; they index a basis of the quotient.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// `v` minus its echelon combination; vanishes on every pivot column.
    pub fn reduce(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (x, y) in out.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).is_ok_and(|r| r.iter().all(Zero::is_zero))
    }

    /// Coordinates of the class of `v` in ℚ^n / self, read off the free
    /// columns of the reduced vector.
    pub fn quotient_coords(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        let r = self.reduce(v)?;
        Ok(self.free.iter().map(|&f| r[f].clone()).collect())
    }

    /// Ambient representative of the quotient basis vector `k`.
    pub fn quotient_representative(&self, k: usize) -> Vec<Rat> {
        let mut v = alloc::vec![Rat::zero(); self.ambient];
        v[self.free[k]] = num_traits::One::one();
        v
    }
}
