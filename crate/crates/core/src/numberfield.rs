// SPDX-License-Identifier: Apache-2.0

//! Arithmetic in ℚ[x]/(p) and the component presentations of `𝔄(i, ℓ)` and
//! `ℋ(i, ℓ)` by generators `[k] = ⊗ (t − z_j)^{k_j} η_j` and the holonomy
//! relations `hol(k)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::arith::{is_irreducible, mod_inverse, Poly, Rat};
use crate::error::{Error, Result};
use crate::holonomy::Pattern;
use crate::linalg::check_dim;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    minpoly: Poly,
    name: String,
}

/// Field element, reduced modulo the minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KElem(Poly);

impl NumberField {
    pub fn new(name: &str, minpoly: &Poly) -> Result<Self> {
        if minpoly.deg() == 0 || !is_irreducible(minpoly)? {
            return Err(Error::NotIrreducible);
        }
        Ok(NumberField { minpoly: minpoly.monic(), name: name.into() })
    }

    /// `gauss` (x²+1), `eisenstein` (x²+x+1) or `zeta8` (x⁴+1).
    pub fn preset(name: &str) -> Result<Self> {
        let coeffs: &[i64] = match name {
            "gauss" => &[1, 0, 1],
            "eisenstein" => &[1, 1, 1],
            "zeta8" => &[1, 0, 0, 0, 1],
            _ => return Err(Error::Parse(format!("unknown field preset `{name}`"))),
        };
        Self::new(name, &Poly::from_ints(coeffs))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn minpoly(&self) -> &Poly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn zero(&self) -> KElem {
        KElem(Poly::zero())
    }

    pub fn one(&self) -> KElem {
        KElem(Poly::one())
    }

    /// The class of `x`.
    pub fn generator(&self) -> KElem {
        self.elem(&Poly::t())
    }

    pub fn elem(&self, p: &Poly) -> KElem {
        KElem(p.rem(&self.minpoly))
    }

    pub fn from_rat(&self, r: Rat) -> KElem {
        KElem(Poly::constant(r))
    }

    pub fn add(&self, a: &KElem, b: &KElem) -> KElem {
        KElem(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &KElem, b: &KElem) -> KElem {
        KElem(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &KElem) -> KElem {
        KElem(-&a.0)
    }

    pub fn mul(&self, a: &KElem, b: &KElem) -> KElem {
        KElem((&a.0 * &b.0).rem(&self.minpoly))
    }

    pub fn inverse(&self, a: &KElem) -> Result<KElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(KElem(mod_inverse(&a.0, &self.minpoly)?))
    }

    /// `f(z)` for `f ∈ ℚ[t]`.
    pub fn eval(&self, f: &Poly, z: &KElem) -> KElem {
        f.coeffs().iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, z), &self.from_rat(c.clone())))
    }
}

impl KElem {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_constant() && self.0.constant_term().is_one()
    }

    /// Coordinates in the power basis, padded to the field degree.
    pub fn coords(&self, k: &NumberField) -> Vec<Rat> {
        (0..k.degree()).map(|i| self.0.coeff(i)).collect()
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }
}

/// A complex component `(i, ℓ)`: one root of each slot's prime, housed in a
/// common field, with the slot multiplicities.
#[derive(Clone, Debug)]
pub struct ComponentSpec {
    pub field: NumberField,
    pub primes: [Poly; 3],
    pub roots: [KElem; 3],
    pub mults: [u32; 3],
}

impl ComponentSpec {
    pub fn new(field: NumberField, primes: [Poly; 3], roots: [KElem; 3], mults: [u32; 3]) -> Result<Self> {
        for j in 0..3 {
            let z = &roots[j];
            if !field.eval(&primes[j], z).is_zero() || z.is_zero() || z.is_one() {
                return Err(Error::InvalidRoot);
            }
            if mults[j] == 0 {
                return Err(Error::InvalidRoot);
            }
        }
        Ok(ComponentSpec { field, primes, roots, mults })
    }

    fn product_is_one(&self) -> bool {
        let k = &self.field;
        k.mul(&k.mul(&self.roots[0], &self.roots[1]), &self.roots[2]).is_one()
    }

    fn slot_equal(&self, a: usize, b: usize) -> bool {
        self.roots[a] == self.roots[b] && self.primes[a] == self.primes[b] && self.mults[a] == self.mults[b]
    }
}

/// Quotient of the span of the box generators by the holonomy relations,
/// held as an echelon form over the field.
#[derive(Clone, Debug)]
pub struct Presentation {
    field: NumberField,
    dims: [usize; 3],
    /// Generator index of each box point, `None` when it vanishes by symmetry.
    slots: Vec<Option<(usize, bool)>>,
    ngens: usize,
    relations: KEchelon,
}

impl Presentation {
    pub fn dim(&self) -> usize {
        self.ngens - self.relations.rows.len()
    }

    fn flat(&self, k: [usize; 3]) -> usize {
        (k[0] * self.dims[1] + k[1]) * self.dims[2] + k[2]
    }

    /// Image of `[k]` as a generator-coordinate vector (zero outside the box).
    pub fn generator_vector(&self, k: [usize; 3]) -> Vec<KElem> {
        let mut v = vec![self.field.zero(); self.ngens];
        if (0..3).all(|j| k[j] < self.dims[j]) {
            if let Some((g, neg)) = self.slots[self.flat(k)] {
                v[g] = if neg { self.field.neg(&self.field.one()) } else { self.field.one() };
            }
        }
        v
    }

    /// Whether the image of `[k]` in the quotient is zero.
    pub fn vanishes(&self, k: [usize; 3]) -> bool {
        let v = self.generator_vector(k);
        self.relations.reduce(&self.field, v).iter().all(KElem::is_zero)
    }

    /// Dimension of the span of the images of the given generators.
    pub fn span_dim(&self, ks: &[[usize; 3]]) -> usize {
        let mut rows = self.relations.rows.clone();
        rows.extend(ks.iter().map(|&k| self.generator_vector(k)));
        k_rref(&self.field, rows, self.ngens).rows.len() - self.relations.rows.len()
    }
}

#[derive(Clone, Debug)]
struct KEchelon {
    rows: Vec<Vec<KElem>>,
    pivots: Vec<usize>,
}

impl KEchelon {
    fn reduce(&self, k: &NumberField, mut v: Vec<KElem>) -> Vec<KElem> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = k.sub(x, &k.mul(&c, y));
                }
            }
        }
        v
    }
}

fn k_rref(k: &NumberField, mut a: Vec<Vec<KElem>>, ncols: usize) -> KEchelon {
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
        let inv = k.inverse(&a[r][c]).expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x = k.mul(x, &inv);
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = k.sub(x, &k.mul(&f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    KEchelon { rows: a, pivots }
}

/// Signed sorting of `k` within the slots that carry the same root;
/// `None` when two such slots hold equal exponents.
fn canonical(k: [usize; 3], pattern: Pattern) -> Option<([usize; 3], bool)> {
    let swap = |k: &mut [usize; 3], a: usize, b: usize, neg: &mut bool| {
        if k[a] > k[b] {
            k.swap(a, b);
            *neg = !*neg;
        }
    };
    let mut k = k;
    let mut neg = false;
    match pattern {
        Pattern::AllDistinct => {}
        Pattern::FirstPair => swap(&mut k, 0, 1, &mut neg),
        Pattern::LastPair => swap(&mut k, 1, 2, &mut neg),
        Pattern::AllEqual => {
            swap(&mut k, 0, 1, &mut neg);
            swap(&mut k, 1, 2, &mut neg);
            swap(&mut k, 0, 1, &mut neg);
        }
    }
    let repeated = match pattern {
        Pattern::AllDistinct => false,
        Pattern::FirstPair => k[0] == k[1],
        Pattern::LastPair => k[1] == k[2],
        Pattern::AllEqual => k[0] == k[1] || k[1] == k[2],
    };
    (!repeated).then_some((k, neg))
}

fn present(spec: &ComponentSpec, pattern: Pattern, limit: usize) -> Result<Presentation> {
    let dims = spec.mults.map(|m| m as usize);
    let total: usize = dims.iter().product();
    check_dim(total, limit)?;
    let k = &spec.field;

    let mut slots = vec![None; total];
    let mut ngens = 0;
    let flat = |k: [usize; 3]| (k[0] * dims[1] + k[1]) * dims[2] + k[2];
    for a in 0..dims[0] {
        for b in 0..dims[1] {
            for c in 0..dims[2] {
                if let Some((ck, _)) = canonical([a, b, c], pattern) {
                    if ck == [a, b, c] {
                        slots[flat(ck)] = Some((ngens, false));
                        ngens += 1;
                    }
                }
            }
        }
    }
    for a in 0..dims[0] {
        for b in 0..dims[1] {
            for c in 0..dims[2] {
                if let Some((ck, neg)) = canonical([a, b, c], pattern) {
                    if ck != [a, b, c] {
                        let (g, _) = slots[flat(ck)].expect("canonical slot assigned");
                        slots[flat([a, b, c])] = Some((g, neg));
                    }
                }
            }
        }
    }

    let mut relations = Vec::new();
    for a in 0..dims[0] {
        for b in 0..dims[1] {
            for c in 0..dims[2] {
                let base = [a, b, c];
                let mut row = vec![k.zero(); ngens];
                let mut add = |point: [usize; 3], coeff: KElem| {
                    if (0..3).any(|j| point[j] >= dims[j]) {
                        return;
                    }
                    if let Some((g, neg)) = slots[flat(point)] {
                        let c = if neg { k.neg(&coeff) } else { coeff };
                        row[g] = k.add(&row[g], &c);
                    }
                };
                add(base, k.one());
                // [k] = Σ_I ∏_{j∉I} z_j [k + δ_I]
                for mask in 0u8..8 {
                    let mut point = base;
                    let mut coeff = k.neg(&k.one());
                    for j in 0..3 {
                        if mask & (1 << j) != 0 {
                            point[j] += 1;
                        } else {
                            coeff = k.mul(&coeff, &spec.roots[j]);
                        }
                    }
                    add(point, coeff);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    relations.push(row);
                }
            }
        }
    }
    let relations = k_rref(k, relations, ngens);
    Ok(Presentation { field: k.clone(), dims, slots, ngens, relations })
}

/// Presentation of `𝔄(i, ℓ)` over the field.
pub fn component_presentation_a(spec: &ComponentSpec, limit: usize) -> Result<Presentation> {
    present(spec, Pattern::AllDistinct, limit)
}

/// Presentation of `ℋ(i, ℓ)` for the given coincidence pattern of roots.
pub fn component_presentation_h(spec: &ComponentSpec, pattern: Pattern, limit: usize) -> Result<Presentation> {
    let consistent = match pattern {
        Pattern::AllDistinct => true,
        Pattern::FirstPair => spec.slot_equal(0, 1),
        Pattern::LastPair => spec.slot_equal(1, 2),
        Pattern::AllEqual => spec.slot_equal(0, 1) && spec.slot_equal(1, 2),
    };
    if !consistent {
        return Err(Error::InvalidRoot);
    }
    present(spec, pattern, limit)
}

pub fn component_dim_a(spec: &ComponentSpec, limit: usize) -> Result<usize> {
    if !spec.product_is_one() {
        return Ok(0);
    }
    Ok(component_presentation_a(spec, limit)?.dim())
}

pub fn component_dim_h(spec: &ComponentSpec, pattern: Pattern, limit: usize) -> Result<usize> {
    if !spec.product_is_one() {
        return Ok(0);
    }
    Ok(component_presentation_h(spec, pattern, limit)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn inverses() {
        let g = NumberField::preset("gauss").unwrap();
        let i = g.generator();
        assert_eq!(g.inverse(&i).unwrap(), g.neg(&i));
        assert_eq!(g.inverse(&g.one()).unwrap(), g.one());
        let e = NumberField::preset("eisenstein").unwrap();
        let j = e.generator();
        assert_eq!(e.inverse(&j).unwrap(), e.elem(&Poly::from_ints(&[-1, -1])));
        assert_eq!(g.inverse(&g.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn trivial_and_unit_components() {
        let g = NumberField::preset("gauss").unwrap();
        let q = Poly::from_ints(&[1, 0, 1]);
        let i = g.generator();
        // i·i·i = -i ≠ 1
        let spec = ComponentSpec::new(g.clone(), [q.clone(), q.clone(), q.clone()], [i.clone(), i.clone(), i.clone()], [2, 2, 2]).unwrap();
        assert_eq!(component_dim_a(&spec, 5000).unwrap(), 0);
        let tp1 = Poly::from_ints(&[1, 1]);
        let minus_one = g.from_rat(rat(-1));
        let spec = ComponentSpec::new(g.clone(), [q.clone(), q.clone(), tp1.clone()], [i.clone(), i.clone(), minus_one.clone()], [1, 1, 1]).unwrap();
        assert_eq!(component_dim_a(&spec, 5000).unwrap(), 1);
        assert_eq!(component_dim_h(&spec, Pattern::FirstPair, 5000).unwrap(), 0);
        assert!(ComponentSpec::new(g.clone(), [q.clone(), q.clone(), q.clone()], [i.clone(), i.clone(), g.one()], [1, 1, 1]).is_err());
    }
}
