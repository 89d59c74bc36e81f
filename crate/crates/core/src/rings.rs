// SPDX-License-Identifier: Apache-2.0

//! The finite-dimensional rings ℚ[t1^±,t2^±,t3^±]/(t1t2t3 − 1, δ1(t1),
//! δ2(t2), δ3(t3)) in a normal form over monomials in `t1, t2`.
//!
//! `t3` is eliminated as `(t1t2)⁻¹`. What remains is the algebra
//! ℚ[t1]/δ1 ⊗ ℚ[t2]/δ2 modulo the ideal generated by `recip(δ3)(t1t2)`,
//! which is the column space of a single multiplication operator.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{rat, recip, LPoly, Poly, Rat};
use crate::error::{Error, Result};
use crate::holonomy::{sign, ClassIndex, HolonomySpace, PERMUTATIONS};
use crate::linalg::{check_dim, companion, kron, QMat, Subspace};
use crate::module::BlanchfieldModule;

/// Laurent polynomial in `t1, t2, t3` keyed by exponent vectors.
pub type TriPoly = BTreeMap<[i64; 3], Rat>;

#[derive(Clone, Debug)]
pub struct TripleRing {
    deltas: [Poly; 3],
    index: Option<ClassIndex>,
    n: [usize; 2],
    /// Column position of each monomial `a·n2 + b` in the elimination order.
    position: Vec<usize>,
    ideal: Subspace,
    /// Normal-form monomials `(a, b)`, ascending in graded-lex order.
    basis: Vec<(usize, usize)>,
    /// Ideal column of each basis element.
    basis_columns: Vec<usize>,
    stabilizer: Vec<[usize; 3]>,
    fingerprint: u64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct TripleRingElement {
    fingerprint: u64,
    coords: Vec<Rat>,
}

/// Graded-lex key: total degree first, then the `t1` exponent.
fn grlex(m: (usize, usize)) -> (usize, usize) {
    (m.0 + m.1, m.0)
}

fn power_vec(delta: &Poly, e: i64) -> Result<Vec<Rat>> {
    let p = LPoly::monomial(Rat::one(), e).reduce_mod(delta)?;
    Ok((0..delta.deg()).map(|k| p.coeff(k)).collect())
}

impl TripleRing {
    /// Ring for the class `i` of the module, with `δ_j = δ_{i_j}`.
    pub fn for_class(module: &BlanchfieldModule, index: ClassIndex, limit: usize) -> Result<Self> {
        let mut d = Vec::with_capacity(3);
        for &i in &index.0 {
            d.push(module.generator(i)?.delta.clone());
        }
        let stabilizer = index.stabilizer();
        Self::build([d[0].clone(), d[1].clone(), d[2].clone()], Some(index), stabilizer, limit)
    }

    /// Ring with all three annihilators equal to the global one.
    pub fn global(module: &BlanchfieldModule, limit: usize) -> Result<Self> {
        let d = module.global_annihilator().clone();
        Self::build([d.clone(), d.clone(), d], None, PERMUTATIONS.to_vec(), limit)
    }

    fn build(deltas: [Poly; 3], index: Option<ClassIndex>, stabilizer: Vec<[usize; 3]>, limit: usize) -> Result<Self> {
        let n = [deltas[0].deg(), deltas[1].deg()];
        let size = n[0] * n[1];
        check_dim(size, limit)?;

        let mut monomials: Vec<(usize, usize)> = (0..n[0]).flat_map(|a| (0..n[1]).map(move |b| (a, b))).collect();
        monomials.sort_by(|x, y| grlex(*y).cmp(&grlex(*x)));
        let mut position = vec![0; size];
        for (col, &(a, b)) in monomials.iter().enumerate() {
            position[a * n[1] + b] = col;
        }

        let mut ring = TripleRing {
            deltas,
            index,
            n,
            position,
            ideal: Subspace::zero(size),
            basis: Vec::new(),
            basis_columns: Vec::new(),
            stabilizer,
            fingerprint: 0,
        };
        if size > 0 && ring.deltas[2].deg() > 0 {
            let e = recip(&ring.deltas[2])?;
            let op = ring.operator_of_product_poly(&e)?;
            let cols: Vec<Vec<Rat>> = (0..size).map(|j| ring.to_internal(&op.column(j))).collect();
            ring.ideal = Subspace::span(size, &cols);
        } else {
            // a constant third annihilator kills everything
            ring.ideal = Subspace::span(size, &(0..size).map(|j| unit(size, j)).collect::<Vec<_>>());
        }
        let mut basis: Vec<(usize, (usize, usize))> = ring
            .ideal
            .free_columns()
            .iter()
            .map(|&c| (c, monomials[c]))
            .collect();
        basis.reverse();
        ring.basis = basis.iter().map(|&(_, m)| m).collect();
        ring.basis_columns = basis.iter().map(|&(c, _)| c).collect();
        ring.fingerprint = ring.compute_fingerprint();
        let expected = holonomy_nullity(&ring.deltas, limit)?;
        if expected != ring.dim() {
            return Err(Error::Internal(alloc::format!(
                "ring dimension {} differs from holonomy quotient dimension {expected}",
                ring.dim()
            )));
        }
        Ok(ring)
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h: u64 = 0x811c_9dc5_0000_0001;
        let mut feed = |bytes: &[u8]| {
            for &b in bytes.iter().chain(core::iter::once(&0xfe)) {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        for d in &self.deltas {
            feed(d.to_coeff_string().as_bytes());
        }
        if let Some(i) = self.index {
            for x in i.0 {
                feed(&(x as u64).to_le_bytes());
            }
        }
        h
    }

    /// Multiplication by `f(t1·t2)` on the tensor algebra.
    fn operator_of_product_poly(&self, f: &Poly) -> Result<QMat> {
        let c1 = companion(&self.deltas[0])?;
        let c2 = companion(&self.deltas[1])?;
        let u = kron(&c1, &c2);
        let size = u.rows();
        let mut acc = QMat::zeros(size, size);
        for c in f.coeffs().iter().rev() {
            acc = &(&acc * &u) + &QMat::identity(size).scale(c);
        }
        Ok(acc)
    }

    fn to_internal(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); v.len()];
        for (k, x) in v.iter().enumerate() {
            out[self.position[k]] = x.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self) -> Option<ClassIndex> {
        self.index
    }

    pub fn deltas(&self) -> &[Poly; 3] {
        &self.deltas
    }

    pub fn basis_monomials(&self) -> &[(usize, usize)] {
        &self.basis
    }

    pub fn stabilizer(&self) -> &[[usize; 3]] {
        &self.stabilizer
    }

    fn check(&self, x: &TripleRingElement) -> Result<()> {
        if x.fingerprint != self.fingerprint || x.coords.len() != self.dim() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn zero(&self) -> TripleRingElement {
        TripleRingElement { fingerprint: self.fingerprint, coords: vec![Rat::zero(); self.dim()] }
    }

    pub fn one(&self) -> TripleRingElement {
        self.monomial([0, 0, 0]).expect("units reduce")
    }

    pub fn from_coords(&self, coords: Vec<Rat>) -> Result<TripleRingElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: coords.len() });
        }
        Ok(TripleRingElement { fingerprint: self.fingerprint, coords })
    }

    /// Normal form of a tensor-algebra vector (index `a·n2 + b`).
    pub fn reduce_tensor(&self, v: &[Rat]) -> Result<TripleRingElement> {
        let r = self.ideal.reduce(&self.to_internal(v))?;
        let coords = self.basis_columns.iter().map(|&c| r[c].clone()).collect();
        Ok(TripleRingElement { fingerprint: self.fingerprint, coords })
    }

    /// Tensor-algebra representative of `x` supported on basis monomials.
    pub fn lift(&self, x: &TripleRingElement) -> Result<Vec<Rat>> {
        self.check(x)?;
        let mut v = vec![Rat::zero(); self.n[0] * self.n[1]];
        for (c, &(a, b)) in x.coords.iter().zip(&self.basis) {
            v[a * self.n[1] + b] = c.clone();
        }
        Ok(v)
    }

    /// Representative of `x` as a polynomial in `t1, t2` (no `t3`).
    pub fn to_tripoly(&self, x: &TripleRingElement) -> Result<TriPoly> {
        self.check(x)?;
        Ok(x.coords
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, &(a, b))| ([a as i64, b as i64, 0], c.clone()))
            .collect())
    }

    fn tensor_of_monomial(&self, e: [i64; 3]) -> Result<Vec<Rat>> {
        let v1 = power_vec(&self.deltas[0], e[0] - e[2])?;
        let v2 = power_vec(&self.deltas[1], e[1] - e[2])?;
        let mut out = Vec::with_capacity(v1.len() * v2.len());
        for x in &v1 {
            for y in &v2 {
                out.push(x * y);
            }
        }
        Ok(out)
    }

    pub fn monomial(&self, e: [i64; 3]) -> Result<TripleRingElement> {
        if self.dim() == 0 {
            return Ok(self.zero());
        }
        self.reduce_tensor(&self.tensor_of_monomial(e)?)
    }

    pub fn from_tripoly(&self, p: &TriPoly) -> Result<TripleRingElement> {
        let size = self.n[0] * self.n[1];
        let mut acc = vec![Rat::zero(); size];
        if self.dim() == 0 {
            return Ok(self.zero());
        }
        for (e, c) in p {
            if c.is_zero() {
                continue;
            }
            for (x, y) in acc.iter_mut().zip(self.tensor_of_monomial(*e)?) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        self.reduce_tensor(&acc)
    }

    /// `P(t_j)` for a univariate Laurent polynomial placed in slot `j`.
    pub fn in_variable(&self, j: usize, p: &LPoly) -> Result<TripleRingElement> {
        let mut tp = TriPoly::new();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut e = [0i64; 3];
                e[j] = p.offset() + k as i64;
                tp.insert(e, c.clone());
            }
        }
        self.from_tripoly(&tp)
    }

    /// Product by bivariate convolution of representatives.
    pub fn mul(&self, x: &TripleRingElement, y: &TripleRingElement) -> Result<TripleRingElement> {
        self.check(x)?;
        self.check(y)?;
        let mut prod: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (c, &(a, b)) in x.coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (d, &(a2, b2)) in y.coords.iter().zip(&self.basis) {
                if !d.is_zero() {
                    *prod.entry((a + a2, b + b2)).or_insert_with(Rat::zero) += c * d;
                }
            }
        }
        let tp: TriPoly = prod.into_iter().map(|((a, b), c)| ([a as i64, b as i64, 0], c)).collect();
        self.from_tripoly(&tp)
    }

    /// Product through the matrix of multiplication by `x` on the tensor
    /// algebra; an independent route used to cross-check [`Self::mul`].
    pub fn mul_via_operator(&self, x: &TripleRingElement, y: &TripleRingElement) -> Result<TripleRingElement> {
        self.check(x)?;
        self.check(y)?;
        let c1 = companion(&self.deltas[0])?;
        let c2 = companion(&self.deltas[1])?;
        let size = self.n[0] * self.n[1];
        let mut op = QMat::zeros(size, size);
        for (c, &(a, b)) in x.coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let m = kron(&matrix_pow(&c1, a), &matrix_pow(&c2, b));
            op = &op + &m.scale(c);
        }
        self.reduce_tensor(&op.mul_vec(&self.lift(y)?)?)
    }

    /// `x(t_{σ(1)}, t_{σ(2)}, t_{σ(3)})`; only defined for `σ` in the
    /// stabilizer.
    pub fn act(&self, sigma: &[usize; 3], x: &TripleRingElement) -> Result<TripleRingElement> {
        if !self.stabilizer.contains(sigma) {
            return Err(Error::NotInStabilizer);
        }
        let p = self.to_tripoly(x)?;
        self.from_tripoly(&permute(sigma, &p))
    }

    /// `(1/|S|) Σ_{σ∈S} ε(σ) σ·x`.
    pub fn antisymmetrize(&self, x: &TripleRingElement) -> Result<TripleRingElement> {
        self.check(x)?;
        let mut acc = self.zero();
        for s in &self.stabilizer {
            let y = self.act(s, x)?;
            acc = acc.add(&y.scale(&rat(sign(s))));
        }
        Ok(acc.scale(&Rat::new(1.into(), (self.stabilizer.len() as i64).into())))
    }

    /// `(ℛ^s, ℛ^a)` as subspaces of ring coordinates: kernel and image of the
    /// antisymmetrizer.
    pub fn split_sym_antisym(&self) -> Result<(Subspace, Subspace)> {
        let n = self.dim();
        let images: Vec<Vec<Rat>> = (0..n)
            .map(|k| Ok(self.antisymmetrize(&self.from_coords(unit(n, k))?)?.coords))
            .collect::<Result<_>>()?;
        let anti = Subspace::span(n, &images);
        let op = QMat::from_rows(images).transpose();
        let sym = crate::linalg::kernel_basis(&if n == 0 { QMat::zeros(0, 0) } else { op });
        Ok((sym, anti))
    }

    /// `t^a η_{i1} ∧ t^b η_{i2} ∧ η_{i3}` summed over the representative,
    /// in the coordinates of `ℋ(i)`.
    pub fn p_map(&self, h: &HolonomySpace, x: &TripleRingElement) -> Result<Vec<Rat>> {
        self.check(x)?;
        if self.index != Some(h.index) {
            return Err(Error::RingMismatch);
        }
        let mut acc = vec![Rat::zero(); h.ambient_dim];
        let third = unit(h.factor_dims[2], 0);
        for (c, &(a, b)) in x.coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let v = h.pure_vector([&unit(self.n[0], a), &unit(self.n[1], b), &third])?;
            for (s, y) in acc.iter_mut().zip(v) {
                if !y.is_zero() {
                    *s += c * y;
                }
            }
        }
        h.quotient_coords(&acc)
    }
}

/// `dim coker(Id − C1⊗C2⊗C3)` for the companions of the three annihilators.
fn holonomy_nullity(deltas: &[Poly; 3], limit: usize) -> Result<usize> {
    if deltas.iter().any(|d| d.deg() == 0) {
        return Ok(0);
    }
    let n: usize = deltas.iter().map(Poly::deg).product();
    check_dim(n, limit)?;
    let t = kron(&kron(&companion(&deltas[0])?, &companion(&deltas[1])?), &companion(&deltas[2])?);
    Ok(n - (&QMat::identity(n) - &t).rank())
}

fn unit(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    if k < n {
        v[k] = Rat::one();
    }
    v
}

fn matrix_pow(m: &QMat, e: usize) -> QMat {
    (0..e).fold(QMat::identity(m.rows()), |acc, _| &acc * m)
}

/// Variable substitution `t_j ↦ t_{σ(j)}`.
pub fn permute(sigma: &[usize; 3], p: &TriPoly) -> TriPoly {
    p.iter()
        .map(|(e, c)| {
            let mut f = [0i64; 3];
            for j in 0..3 {
                f[sigma[j]] = e[j];
            }
            (f, c.clone())
        })
        .collect()
}

impl TripleRingElement {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &TripleRingElement) -> TripleRingElement {
        assert_eq!(self.fingerprint, o.fingerprint, "elements of different rings");
        TripleRingElement {
            fingerprint: self.fingerprint,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &TripleRingElement) -> TripleRingElement {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> TripleRingElement {
        TripleRingElement { fingerprint: self.fingerprint, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn same_ring(&self, o: &TripleRingElement) -> bool {
        self.fingerprint == o.fingerprint
    }
}

impl fmt::Debug for TripleRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TripleRingElement{:?}", self.coords.iter().map(crate::arith::format_rat).collect::<Vec<_>>())
    }
}

/// Human-readable normal form such as `-1/2*t1 + t2^2*t1`.
pub fn format_element(ring: &TripleRing, x: &TripleRingElement) -> alloc::string::String {
    use alloc::string::String;
    use num_traits::Signed;
    let mut out = String::new();
    for (c, &(a, b)) in x.coords.iter().zip(ring.basis_monomials()) {
        if c.is_zero() {
            continue;
        }
        match (out.is_empty(), c.is_negative()) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        let mut factors: Vec<String> = Vec::new();
        if a > 0 {
            factors.push(if a == 1 { "t1".into() } else { alloc::format!("t1^{a}") });
        }
        if b > 0 {
            factors.push(if b == 1 { "t2".into() } else { alloc::format!("t2^{b}") });
        }
        let abs = c.abs();
        let coeff = crate::arith::format_rat(&abs);
        if factors.is_empty() {
            out.push_str(&coeff);
        } else if abs.is_one() {
            out.push_str(&factors.join("*"));
        } else {
            out.push_str(&alloc::format!("{coeff}*{}", factors.join("*")));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomy::build_h_class;
    use crate::module::{validate_module, BlockSpec};

    fn example_a() -> BlanchfieldModule {
        validate_module(&[
            BlockSpec::symmetric(Poly::from_ints(&[1, 0, 0, 0, 1]), 1),
            BlockSpec::symmetric(Poly::from_ints(&[1, 0, 1]), 1),
        ])
        .unwrap()
    }

    #[test]
    fn example_a_class_ring() {
        let m = example_a();
        let i = ClassIndex::new(0, 0, 1);
        let r = TripleRing::for_class(&m, i, 5000).unwrap();
        assert_eq!(r.dim(), 8);
        let one = r.one();
        let t1 = r.monomial([1, 0, 0]).unwrap();
        let t2 = r.monomial([0, 1, 0]).unwrap();
        let t3 = r.monomial([0, 0, 1]).unwrap();
        assert_eq!(r.mul(&r.mul(&t1, &t2).unwrap(), &t3).unwrap(), one);
        assert_eq!(r.act(&[1, 0, 2], &t1).unwrap(), t2);
        assert_eq!(r.act(&[0, 2, 1], &t1).err(), Some(Error::NotInStabilizer));
        let anti = r.antisymmetrize(&t2).unwrap();
        assert_eq!(anti, t2.sub(&t1).scale(&crate::arith::ratio(1, 2)));
        let (s, a) = r.split_sym_antisym().unwrap();
        assert_eq!((s.dim(), a.dim()), (6, 2));
        let h = build_h_class(&m, i, 5000).unwrap();
        assert!(r.p_map(&h, &one).unwrap().iter().all(Zero::is_zero));
        assert_eq!(r.mul_via_operator(&t1, &t2).unwrap(), r.mul(&t1, &t2).unwrap());
        assert_eq!(format_element(&r, &t2.sub(&t1)), "t2 - t1");
        assert_eq!(format_element(&r, &t1.scale(&crate::arith::ratio(-3, 2))), "-3/2*t1");
    }

    #[test]
    fn annihilator_kills() {
        let m = example_a();
        let r = TripleRing::for_class(&m, ClassIndex::new(0, 0, 1), 5000).unwrap();
        let d1 = m.generator(0).unwrap().delta.clone();
        assert!(r.in_variable(0, &LPoly::from(&d1)).unwrap().is_zero());
        let trefoil = validate_module(&[BlockSpec::symmetric(Poly::from_ints(&[1, -1, 1]), 1)]).unwrap();
        assert_eq!(TripleRing::global(&trefoil, 5000).unwrap().dim(), 0);
        let single = validate_module(&[BlockSpec::symmetric(Poly::from_ints(&[1, 0, 1]), 1)]).unwrap();
        assert_eq!(TripleRing::for_class(&single, ClassIndex::new(0, 0, 0), 5000).unwrap().dim(), 0);
    }
}
