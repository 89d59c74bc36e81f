// SPDX-License-Identifier: Apache-2.0

//! The algebraic side of null borromean surgery: the variation of the
//! triple-intersection map, its encoding by sorted-class values in ℛ(i)^a,
//! the injective invariant `𝔥`, and Y-diagram reduction to ℋ.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{mod_inverse, rat, LPoly, Poly, Rat};
use crate::error::{Error, Result};
use crate::holonomy::{build_h_class, sign, sorted_classes, ClassIndex, HolonomySpace, PERMUTATIONS};
use crate::linalg::Subspace;
use crate::module::{BlanchfieldModule, ModuleElement, PairingClass};
use crate::rings::{permute, TriPoly, TripleRing, TripleRingElement};

/// Per-class rings, their antisymmetric parts and the spaces ℋ(i) of one
/// module, built once and shared by every operation below.
#[derive(Clone, Debug)]
pub struct SurgeryContext {
    module: BlanchfieldModule,
    classes: Vec<ClassIndex>,
    rings: Vec<TripleRing>,
    antisym: Vec<Subspace>,
    spaces: Vec<HolonomySpace>,
    offsets: Vec<usize>,
    global: TripleRing,
}

/// The values `φ_i(η_i) ∈ ℛ(i)^a` over the sorted classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiFamily {
    values: Vec<TripleRingElement>,
}

/// Leaves of the surgery graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryDatum {
    pub leaves: [ModuleElement; 3],
}

/// Equivariant linking `f_ij`: its class modulo ℚ[t^{±1}] and an arbitrary
/// integral part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linking {
    pub class: PairingClass,
    pub integral: LPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDiagram {
    pub labels: [ModuleElement; 3],
    /// `f12, f13, f23`.
    pub linkings: [Linking; 3],
}

/// Coordinates over the concatenated ℋ(i) bases, sorted classes in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<Rat>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOneReport {
    pub dim_h: usize,
    pub per_class: Vec<(ClassIndex, usize)>,
    pub rational_homology_note: String,
}

fn tri_mul(a: &TriPoly, b: &TriPoly) -> TriPoly {
    let mut out = TriPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            *out.entry(e).or_insert_with(Rat::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `p(t_j)` as a trivariate polynomial.
fn in_slot(j: usize, p: &Poly) -> TriPoly {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mut e = [0i64; 3];
            e[j] = k as i64;
            (e, c.clone())
        })
        .collect()
}

fn tri_one() -> TriPoly {
    let mut p = TriPoly::new();
    p.insert([0, 0, 0], Rat::one());
    p
}

/// Permutation `τ` with `i'_j = i_{τ(j)}` for `i = sorted(i')`.
fn sorting_permutation(i: &ClassIndex) -> ([usize; 3], ClassIndex) {
    let s = i.sorted();
    let mut used = [false; 3];
    let mut tau = [0usize; 3];
    for j in 0..3 {
        let k = (0..3).find(|&k| !used[k] && s.0[k] == i.0[j]).expect("sorted is a permutation");
        used[k] = true;
        tau[j] = k;
    }
    (tau, s)
}

fn coeff_vec(p: &Poly, n: usize) -> Vec<Rat> {
    (0..n).map(|k| p.coeff(k)).collect()
}

impl SurgeryContext {
    pub fn new(module: &BlanchfieldModule, limit: usize) -> Result<Self> {
        let classes = sorted_classes(module.len());
        let mut rings = Vec::with_capacity(classes.len());
        let mut antisym = Vec::with_capacity(classes.len());
        let mut spaces = Vec::with_capacity(classes.len());
        let mut offsets = Vec::with_capacity(classes.len() + 1);
        offsets.push(0);
        for &i in &classes {
            let ring = TripleRing::for_class(module, i, limit)?;
            let (_, a) = ring.split_sym_antisym()?;
            let h = build_h_class(module, i, limit)?;
            offsets.push(offsets.last().copied().unwrap_or(0) + h.dim());
            rings.push(ring);
            antisym.push(a);
            spaces.push(h);
        }
        let global = TripleRing::global(module, limit)?;
        Ok(SurgeryContext { module: module.clone(), classes, rings, antisym, spaces, offsets, global })
    }

    pub fn module(&self) -> &BlanchfieldModule {
        &self.module
    }

    pub fn classes(&self) -> &[ClassIndex] {
        &self.classes
    }

    fn position(&self, i: ClassIndex) -> Result<usize> {
        self.classes.iter().position(|&c| c == i).ok_or(Error::NotSorted)
    }

    pub fn ring(&self, i: ClassIndex) -> Result<&TripleRing> {
        Ok(&self.rings[self.position(i)?])
    }

    pub fn antisymmetric_part(&self, i: ClassIndex) -> Result<&Subspace> {
        Ok(&self.antisym[self.position(i)?])
    }

    pub fn h_space(&self, i: ClassIndex) -> Result<&HolonomySpace> {
        Ok(&self.spaces[self.position(i)?])
    }

    pub fn global_ring(&self) -> &TripleRing {
        &self.global
    }

    pub fn dim_h(&self) -> usize {
        self.offsets.last().copied().unwrap_or(0)
    }

    pub fn zero_family(&self) -> PhiFamily {
        PhiFamily { values: self.rings.iter().map(TripleRing::zero).collect() }
    }

    /// Family from per-class values; each must lie in ℛ(i)^a.
    pub fn family(&self, values: Vec<TripleRingElement>) -> Result<PhiFamily> {
        if values.len() != self.classes.len() {
            return Err(Error::DimensionMismatch { expected: self.classes.len(), got: values.len() });
        }
        for (k, v) in values.iter().enumerate() {
            if !v.same_ring(&self.rings[k].zero()) {
                return Err(Error::RingMismatch);
            }
            if !self.antisym[k].contains(v.coords()) {
                return Err(Error::InvalidKindCondition(alloc::format!(
                    "value on class {} is not antisymmetric",
                    self.classes[k]
                )));
            }
        }
        Ok(PhiFamily { values })
    }

    pub fn value<'a>(&self, phi: &'a PhiFamily, i: ClassIndex) -> Result<&'a TripleRingElement> {
        Ok(&phi.values[self.position(i)?])
    }

    /// Change of the family under surgery with leaves `γ`.
    pub fn variation(&self, s: &SurgeryDatum) -> Result<PhiFamily> {
        for g in &s.leaves {
            self.module.check(g).map_err(|_| Error::ModuleMismatch)?;
        }
        let mut values = Vec::with_capacity(self.classes.len());
        for (k, i) in self.classes.iter().enumerate() {
            let ring = &self.rings[k];
            // n[j][l] = numerator of 𝔟(η_{i_j}, γ_l)
            let mut n: Vec<Vec<Poly>> = Vec::with_capacity(3);
            for j in 0..3 {
                let row = s
                    .leaves
                    .iter()
                    .map(|g| self.module.block_pairing_numerator(i.0[j], g))
                    .collect::<Result<Vec<_>>>()?;
                n.push(row);
            }
            let mut total = TriPoly::new();
            for sigma in &PERMUTATIONS {
                if (0..3).any(|j| n[j][sigma[j]].is_zero()) {
                    continue;
                }
                let term = (0..3).fold(tri_one(), |acc, j| tri_mul(&acc, &in_slot(j, &n[j][sigma[j]])));
                let sg = rat(sign(sigma));
                for (e, c) in term {
                    *total.entry(e).or_insert_with(Rat::zero) += c * &sg;
                }
            }
            let v = ring.from_tripoly(&total)?;
            if !self.antisym[k].contains(v.coords()) {
                return Err(Error::Internal(alloc::format!("variation on class {i} left ℛ(i)^a")));
            }
            values.push(v);
        }
        Ok(PhiFamily { values })
    }

    /// `r Σ_{σ∈S} ε(σ) ∏_j t_j^{k_{σ(j)}}` in ℛ(i).
    pub fn elementary_variation(&self, i: ClassIndex, k: [i64; 3], r: &Rat) -> Result<TripleRingElement> {
        elementary_variation(self.ring(i)?, k, r)
    }

    /// Leaves `(r·β1, β2, β3)` with `β_j = t^{−k_j}·a_{i_j}(t^{−1})^{−1}·η_{d(i_j)}`,
    /// so that `𝔟(η_{i_j}, β_j) = t^{k_j}/δ_{i_j}`.
    pub fn elementary_leaves(&self, i: ClassIndex, k: [i64; 3], r: &Rat) -> Result<SurgeryDatum> {
        let mut leaves = Vec::with_capacity(3);
        for j in 0..3 {
            let g = self.module.generator(i.0[j])?;
            let dual = self.module.generator(g.dual)?;
            let reflected = LPoly::from(&g.pairing).reflect().reduce_mod(&dual.delta)?;
            let inv = mod_inverse(&reflected, &dual.delta)?;
            let coeff = LPoly::from(&inv).shift(-k[j]);
            leaves.push(self.module.monomial_element(g.dual, &coeff)?);
        }
        leaves[0] = leaves[0].scale(r);
        let [a, b, c]: [ModuleElement; 3] = leaves.try_into().map_err(|_| Error::Internal("leaf count".into()))?;
        Ok(SurgeryDatum { leaves: [a, b, c] })
    }

    /// Whether the elementary variations over the generator box span ℛ(i)^a,
    /// and the dimension of their span.
    pub fn span_ra_check(&self, i: ClassIndex) -> Result<(bool, usize)> {
        let k = self.position(i)?;
        let ring = &self.rings[k];
        let anti = &self.antisym[k];
        if anti.dim() == 0 {
            return Ok((true, 0));
        }
        let n = ring.deltas().each_ref().map(Poly::deg);
        let mut vectors = Vec::with_capacity(n.iter().product());
        for a in 0..n[0] {
            for b in 0..n[1] {
                for c in 0..n[2] {
                    let v = elementary_variation(ring, [a as i64, b as i64, c as i64], &Rat::one())?;
                    vectors.push(v.coords().to_vec());
                }
            }
        }
        let span = Subspace::span(ring.dim(), &vectors);
        let inside = span.basis().iter().all(|v| anti.contains(v));
        Ok((inside && span.dim() == anti.dim(), span.dim()))
    }

    /// `φ(β1⊗β2⊗β3) ∈ ℛ_δ`.
    pub fn phi_evaluate(&self, phi: &PhiFamily, betas: [&ModuleElement; 3]) -> Result<TripleRingElement> {
        for b in betas {
            self.module.check(b).map_err(|_| Error::ModuleMismatch)?;
        }
        if phi.values.len() != self.classes.len() {
            return Err(Error::ModuleMismatch);
        }
        let delta = self.module.global_annihilator();
        let q = self.module.len();
        let mut total = TriPoly::new();
        for g1 in 0..q {
            let p1 = &betas[0].coords()[g1];
            if p1.is_zero() {
                continue;
            }
            for g2 in 0..q {
                let p2 = &betas[1].coords()[g2];
                if p2.is_zero() {
                    continue;
                }
                for g3 in 0..q {
                    let p3 = &betas[2].coords()[g3];
                    if p3.is_zero() {
                        continue;
                    }
                    let unsorted = ClassIndex::new(g1, g2, g3);
                    let (tau, sorted) = sorting_permutation(&unsorted);
                    let k = self.position(sorted)?;
                    let value = self.rings[k].to_tripoly(&phi.values[k])?;
                    // slot τ(j) of the sorted class becomes slot j
                    let mut inv = [0usize; 3];
                    for j in 0..3 {
                        inv[tau[j]] = j;
                    }
                    let renamed = permute(&inv, &value);
                    let mut term = renamed;
                    for (j, (p, g)) in [(p1, g1), (p2, g2), (p3, g3)].into_iter().enumerate() {
                        let local = &self.module.generator(g)?.delta;
                        let cofactor = delta.exact_div(local).ok_or_else(|| Error::Internal("δ_i ∤ δ".into()))?;
                        term = tri_mul(&term, &in_slot(j, &(p * &cofactor)));
                    }
                    let sg = rat(sign(&tau));
                    for (e, c) in term {
                        *total.entry(e).or_insert_with(Rat::zero) += c * &sg;
                    }
                }
            }
        }
        self.global.from_tripoly(&total)
    }

    /// `𝔥(φ) = Σ_i p_i(φ_i(η_i))`.
    pub fn h_of_phi(&self, phi: &PhiFamily) -> Result<HVector> {
        if phi.values.len() != self.classes.len() {
            return Err(Error::ModuleMismatch);
        }
        let mut out = Vec::with_capacity(self.dim_h());
        for (k, v) in phi.values.iter().enumerate() {
            out.extend(self.rings[k].p_map(&self.spaces[k], v)?);
        }
        Ok(HVector(out))
    }

    /// Checks the linking classes of a diagram against the pairing.
    pub fn validate_diagram(&self, d: &YDiagram) -> Result<()> {
        for b in &d.labels {
            self.module.check(b).map_err(|_| Error::ModuleMismatch)?;
        }
        for (slot, (a, b)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            let expected = self.module.pairing_class(&d.labels[a], &d.labels[b])?;
            if d.linkings[slot].class != expected {
                return Err(Error::IncompatibleLinkings(alloc::format!("f{}{}", a + 1, b + 1)));
            }
        }
        Ok(())
    }

    /// Diagram with linkings read off the labels, integral parts zero.
    pub fn diagram(&self, labels: [ModuleElement; 3]) -> Result<YDiagram> {
        let mut linkings = Vec::with_capacity(3);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            linkings.push(Linking { class: self.module.pairing_class(&labels[a], &labels[b])?, integral: LPoly::zero() });
        }
        let [x, y, z]: [Linking; 3] = linkings.try_into().map_err(|_| Error::Internal("linking count".into()))?;
        Ok(YDiagram { labels, linkings: [x, y, z] })
    }

    /// ℋ-coordinates of `β1∧β2∧β3`.
    pub fn diagram_reduce(&self, d: &YDiagram) -> Result<HVector> {
        self.validate_diagram(d)?;
        self.wedge(&d.labels)
    }

    pub fn wedge(&self, betas: &[ModuleElement; 3]) -> Result<HVector> {
        let mut out = vec![Rat::zero(); self.dim_h()];
        let q = self.module.len();
        for g1 in 0..q {
            for g2 in 0..q {
                for g3 in 0..q {
                    let g = [g1, g2, g3];
                    let ps: Vec<&Poly> = (0..3).map(|j| &betas[j].coords()[g[j]]).collect();
                    if ps.iter().any(|p| p.is_zero()) {
                        continue;
                    }
                    let (tau, sorted) = sorting_permutation(&ClassIndex(g));
                    let k = self.position(sorted)?;
                    let h = &self.spaces[k];
                    if h.dim() == 0 {
                        continue;
                    }
                    let mut slots: [Vec<Rat>; 3] = Default::default();
                    for j in 0..3 {
                        slots[tau[j]] = coeff_vec(ps[j], h.factor_dims[tau[j]]);
                    }
                    let v = h.pure_vector([&slots[0], &slots[1], &slots[2]])?;
                    let coords = h.quotient_coords(&v)?;
                    let sg = rat(sign(&tau));
                    for (o, c) in out[self.offsets[k]..self.offsets[k + 1]].iter_mut().zip(coords) {
                        *o += c * &sg;
                    }
                }
            }
        }
        Ok(HVector(out))
    }

    pub fn degree_one_report(&self) -> DegreeOneReport {
        DegreeOneReport {
            dim_h: self.dim_h(),
            per_class: self.classes.iter().zip(&self.spaces).map(|(&i, h)| (i, h.dim())).collect(),
            rational_homology_note: String::from(
                "with rational-homology surgeries allowed, each prime p adds one ℚ summand detected by ν_p = v_p(|H_1(M;ℤ)|)",
            ),
        }
    }
}

/// `r Σ_{σ∈S} ε(σ) ∏_j t_j^{k_{σ(j)}}` in a class ring.
pub fn elementary_variation(ring: &TripleRing, k: [i64; 3], r: &Rat) -> Result<TripleRingElement> {
    let mut p = TriPoly::new();
    for sigma in ring.stabilizer() {
        let e = [k[sigma[0]], k[sigma[1]], k[sigma[2]]];
        *p.entry(e).or_insert_with(Rat::zero) += rat(sign(sigma)) * r;
    }
    ring.from_tripoly(&p)
}

impl PhiFamily {
    pub fn values(&self) -> &[TripleRingElement] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(TripleRingElement::is_zero)
    }

    pub fn add(&self, o: &PhiFamily) -> PhiFamily {
        PhiFamily { values: self.values.iter().zip(&o.values).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> PhiFamily {
        PhiFamily { values: self.values.iter().map(|a| a.scale(c)).collect() }
    }
}

impl HVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &HVector) -> HVector {
        HVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Rat) -> HVector {
        HVector(self.0.iter().map(|a| a * c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::module::{validate_module, BlockSpec};

    fn example_a() -> SurgeryContext {
        let m = validate_module(&[
            BlockSpec::symmetric(Poly::from_ints(&[1, 0, 0, 0, 1]), 1),
            BlockSpec::symmetric(Poly::from_ints(&[1, 0, 1]), 1),
        ])
        .unwrap();
        SurgeryContext::new(&m, 5000).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let ctx = example_a();
        let i = ClassIndex::new(0, 0, 1);
        assert!(ctx.elementary_variation(i, [0, 0, 0], &Rat::one()).unwrap().is_zero());
        let ring = ctx.ring(i).unwrap();
        let t1 = ring.monomial([1, 0, 0]).unwrap();
        let t2 = ring.monomial([0, 1, 0]).unwrap();
        assert_eq!(ctx.elementary_variation(i, [0, 1, 0], &Rat::one()).unwrap(), t2.sub(&t1));
        assert!(ctx.elementary_variation(i, [0, 1, 0], &Rat::zero()).unwrap().is_zero());
        assert_eq!(ctx.span_ra_check(i).unwrap(), (true, 2));
    }

    #[test]
    fn variation_matches_closed_form() {
        let ctx = example_a();
        let i = ClassIndex::new(0, 0, 1);
        for r in [Rat::one(), rat(-2), ratio(1, 3)] {
            let s = ctx.elementary_leaves(i, [0, 1, 0], &r).unwrap();
            let phi = ctx.variation(&s).unwrap();
            for (&c, v) in ctx.classes().iter().zip(phi.values()) {
                if c == i {
                    assert_eq!(v, &ctx.elementary_variation(i, [0, 1, 0], &r).unwrap());
                } else {
                    assert!(v.is_zero(), "class {c}");
                }
            }
            let swapped = SurgeryDatum { leaves: [s.leaves[1].clone(), s.leaves[0].clone(), s.leaves[2].clone()] };
            assert_eq!(ctx.variation(&swapped).unwrap(), phi.scale(&rat(-1)));
        }
        let s = ctx.elementary_leaves(i, [0, 1, 0], &Rat::one()).unwrap();
        let h = ctx.h_of_phi(&ctx.variation(&s).unwrap()).unwrap();
        assert_eq!(h.0.len(), 2);
        assert!(!h.is_zero());
    }

    #[test]
    fn phi_evaluation_examples() {
        let m = validate_module(&[BlockSpec::symmetric(Poly::from_ints(&[1, 1, 1]), 3)]).unwrap();
        let ctx = SurgeryContext::new(&m, 5000).unwrap();
        let i = ClassIndex::new(0, 0, 0);
        let v = ctx.elementary_variation(i, [0, 1, 2], &Rat::one()).unwrap();
        assert!(!v.is_zero());
        let phi = ctx.family(vec![v.clone()]).unwrap();
        let eta = m.generator_element(0).unwrap();
        let t_eta = m.monomial_element(0, &LPoly::from_ints(1, &[1])).unwrap();
        let global = ctx.global_ring();
        let lifted = ctx.ring(i).unwrap().to_tripoly(&v).unwrap();
        let expected = global.mul(&global.monomial([1, 0, 0]).unwrap(), &global.from_tripoly(&lifted).unwrap()).unwrap();
        assert_eq!(ctx.phi_evaluate(&phi, [&t_eta, &eta, &eta]).unwrap(), expected);
        let zero = m.zero();
        assert!(ctx.phi_evaluate(&phi, [&zero, &zero, &zero]).unwrap().is_zero());
        let killed = m.act(&LPoly::from(m.global_annihilator()), &eta).unwrap();
        assert!(ctx.phi_evaluate(&phi, [&killed, &eta, &eta]).unwrap().is_zero());
        assert_eq!(ctx.family(vec![ctx.ring(i).unwrap().one()]).err().map(|e| matches!(e, Error::InvalidKindCondition(_))), Some(true));
    }

    #[test]
    fn phi_reorders_through_antisymmetry() {
        let ctx = example_a();
        let m = ctx.module().clone();
        let s = ctx.elementary_leaves(ClassIndex::new(0, 0, 1), [1, 0, 2], &Rat::one()).unwrap();
        let s2 = ctx.elementary_leaves(ClassIndex::new(0, 1, 1), [0, 1, 1], &ratio(2, 5)).unwrap();
        let phi = ctx.variation(&s).unwrap().add(&ctx.variation(&s2).unwrap());
        let b1 = m.monomial_element(0, &LPoly::from_ints(0, &[1, 1])).unwrap();
        let b2 = &m.generator_element(1).unwrap() + &m.monomial_element(0, &LPoly::from_ints(3, &[2])).unwrap();
        let b3 = m.monomial_element(1, &LPoly::from_ints(-1, &[1])).unwrap();
        let g = ctx.global_ring();
        for sigma in PERMUTATIONS {
            let bs = [&b1, &b2, &b3];
            let permuted = [bs[sigma[0]], bs[sigma[1]], bs[sigma[2]]];
            let lhs = ctx.phi_evaluate(&phi, permuted).unwrap();
            let base = ctx.phi_evaluate(&phi, bs).unwrap();
            // φ(β_{σ(1)}⊗β_{σ(2)}⊗β_{σ(3)})(t1,t2,t3) = ε(σ)·φ(β1⊗β2⊗β3)(t_{σ⁻¹(1)},…)
            let mut inv = [0usize; 3];
            for j in 0..3 {
                inv[sigma[j]] = j;
            }
            let rhs = g.act(&inv, &base).unwrap().scale(&rat(sign(&sigma)));
            assert_eq!(lhs, rhs, "σ = {sigma:?}");
        }
    }

    #[test]
    fn diagram_relations() {
        let ctx = example_a();
        let m = ctx.module().clone();
        let b1 = m.monomial_element(0, &LPoly::from_ints(0, &[1, 2])).unwrap();
        let b2 = m.monomial_element(0, &LPoly::from_ints(2, &[1])).unwrap();
        let b3 = m.generator_element(1).unwrap();
        let d = ctx.diagram([b1.clone(), b2.clone(), b3.clone()]).unwrap();
        let v = ctx.diagram_reduce(&d).unwrap();
        let t = LPoly::from_ints(1, &[1]);
        let tb = |x: &ModuleElement| m.act(&t, x).unwrap();
        let d_t = ctx.diagram([tb(&b1), tb(&b2), tb(&b3)]).unwrap();
        assert_eq!(ctx.diagram_reduce(&d_t).unwrap(), v);
        let d_swap = ctx.diagram([b2.clone(), b1.clone(), b3.clone()]).unwrap();
        assert_eq!(ctx.diagram_reduce(&d_swap).unwrap(), v.scale(&rat(-1)));
        let mut bad = d.clone();
        bad.linkings[0].class = PairingClass { numerator: &bad.linkings[0].class.numerator + &Poly::one() };
        assert!(matches!(ctx.diagram_reduce(&bad), Err(Error::IncompatibleLinkings(_))));
        let z = ctx.diagram([m.zero(), b2, b3]).unwrap();
        assert!(ctx.diagram_reduce(&z).unwrap().is_zero());
        assert_eq!(ctx.degree_one_report().dim_h, 2);
    }
}
