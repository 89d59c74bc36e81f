// SPDX-License-Identifier: Apache-2.0

//! Blanchfield modules in block normal form: validation, the ℚ[t^{±1}]
//! action and the pairing with values in ℚ(t)/ℚ[t^{±1}].

use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{
    is_irreducible, normalize_delta, recip, symmetry_decompose, LPoly, Poly, Rat,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Symmetric,
    Hyperbolic,
}

/// One orthogonal summand as supplied by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub kind: BlockKind,
    pub prime: Poly,
    pub mult: u32,
    /// Symmetric blocks only; defaults to 1.
    pub pairing: Option<LPoly>,
}

impl BlockSpec {
    pub fn symmetric(prime: Poly, mult: u32) -> Self {
        BlockSpec { kind: BlockKind::Symmetric, prime, mult, pairing: None }
    }

    pub fn symmetric_with(prime: Poly, mult: u32, pairing: LPoly) -> Self {
        BlockSpec { kind: BlockKind::Symmetric, prime, mult, pairing: Some(pairing) }
    }

    pub fn hyperbolic(prime: Poly, mult: u32) -> Self {
        BlockSpec { kind: BlockKind::Hyperbolic, prime, mult, pairing: None }
    }
}

/// A cyclic generator `η_i` with annihilator `δ_i = c·π_i^{m_i}` and
/// `𝔟(η_i, η_{d(i)}) = a_i/δ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRecord {
    pub index: usize,
    pub kind: BlockKind,
    /// Input block this generator came from.
    pub block: usize,
    pub delta: Poly,
    /// Monic irreducible with `δ_i = c·prime^mult`.
    pub prime: Poly,
    pub mult: u32,
    pub dual: usize,
    pub pairing: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlanchfieldModule {
    generators: Vec<GeneratorRecord>,
    global_delta: Poly,
    fingerprint: u64,
}

/// Element of the module: one reduced class modulo `δ_i` per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    fingerprint: u64,
    coords: Vec<Poly>,
}

/// Class of `numerator/δ` in ℚ(t)/ℚ[t^{±1}], `deg numerator < deg δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingClass {
    pub numerator: Poly,
}

fn invalid(msg: impl Into<alloc::string::String>) -> Error {
    Error::InvalidKindCondition(msg.into())
}

fn t_plus_one() -> Poly {
    Poly::from_ints(&[1, 1])
}

struct Draft {
    kind: BlockKind,
    block: usize,
    delta: Poly,
    prime: Poly,
    mult: u32,
    pairing: Poly,
    /// Second member of a hyperbolic pair when `Some(true)`.
    partner: Option<bool>,
}

pub fn validate_module(blocks: &[BlockSpec]) -> Result<BlanchfieldModule> {
    let mut drafts: Vec<Draft> = Vec::new();
    for (b, spec) in blocks.iter().enumerate() {
        let prime = check_prime(spec)?;
        let m = spec.mult;
        let d = prime.deg() as u32;
        let is_t1 = prime == t_plus_one();
        let sym = symmetry_decompose(&LPoly::from(&prime))?;
        match spec.kind {
            BlockKind::Symmetric => {
                if sym.is_none() {
                    return Err(invalid(format!("symmetric block {b}: prime {prime} is not symmetric")));
                }
                if is_t1 && m % 2 == 1 {
                    return Err(invalid(format!("symmetric block {b}: prime t+1 needs even multiplicity")));
                }
                let delta = normalize(&prime.pow(m))?;
                let pm = prime.pow(m);
                let user = spec.pairing.clone().unwrap_or_else(LPoly::one);
                let balanced = balance(&user)?;
                let mirror = balanced.reflect().reduce_mod(&pm)?;
                if mirror != balanced.reduce_mod(&pm)? {
                    return Err(invalid(format!("symmetric block {b}: pairing numerator is not symmetric modulo the prime power")));
                }
                // 𝔟(η,η) = a/(t^{-dm/2}π^m) with δ = u·π^m
                let u = delta.lead();
                let half = (d * m / 2) as i64;
                let a = balanced.shift(half).scale(&u).reduce_mod(&delta)?;
                if !a.gcd(&prime).is_constant() || a.is_zero() {
                    return Err(Error::PairingNotCoprime);
                }
                drafts.push(Draft { kind: spec.kind, block: b, delta, prime, mult: m, pairing: a, partner: None });
            }
            BlockKind::Hyperbolic => {
                if spec.pairing.is_some() {
                    return Err(invalid(format!("hyperbolic block {b} carries no pairing numerator")));
                }
                if is_t1 {
                    if m % 2 == 0 {
                        return Err(invalid(format!("hyperbolic block {b}: prime t+1 needs odd multiplicity")));
                    }
                } else if sym.is_some() {
                    return Err(invalid(format!("hyperbolic block {b}: prime {prime} is symmetric")));
                } else if prime.eval(&-Rat::one()).is_zero() {
                    return Err(invalid(format!("hyperbolic block {b}: prime vanishes at -1")));
                }
                let delta = normalize(&prime.pow(m))?;
                let rprime = recip(&prime)?.monic();
                let delta_dual = normalize(&rprime.pow(m))?;
                // 𝔟(η,η') = 1/π^m and 𝔟(η',η) = t^{md}/recip(π)^m, recip(π) = π(0)·rprime
                let a = Poly::constant(delta.lead());
                let scale = delta_dual.lead() / prime.pow(m).constant_term();
                let a_dual = LPoly::monomial(scale, (m * d) as i64).reduce_mod(&delta_dual)?;
                drafts.push(Draft { kind: spec.kind, block: b, delta, prime, mult: m, pairing: a, partner: Some(false) });
                drafts.push(Draft {
                    kind: spec.kind,
                    block: b,
                    delta: delta_dual,
                    prime: rprime,
                    mult: m,
                    pairing: a_dual,
                    partner: Some(true),
                });
            }
        }
    }

    // original position of the dual of each draft
    let dual_raw: Vec<usize> = {
        let mut out = Vec::with_capacity(drafts.len());
        let mut i = 0;
        while i < drafts.len() {
            if drafts[i].partner.is_some() {
                out.push(i + 1);
                out.push(i);
                i += 2;
            } else {
                out.push(i);
                i += 1;
            }
        }
        out
    };
    let mut order: Vec<usize> = (0..drafts.len()).collect();
    order.sort_by(|&x, &y| drafts[y].mult.cmp(&drafts[x].mult));
    let mut position = alloc::vec![0usize; drafts.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let mut slots: Vec<Option<Draft>> = drafts.into_iter().map(Some).collect();
    let generators: Vec<GeneratorRecord> = order
        .iter()
        .enumerate()
        .map(|(new, &old)| {
            let d = slots[old].take().expect("each draft used once");
            GeneratorRecord {
                index: new,
                kind: d.kind,
                block: d.block,
                delta: d.delta,
                prime: d.prime,
                mult: d.mult,
                dual: position[dual_raw[old]],
                pairing: d.pairing,
            }
        })
        .collect();

    let lcm = generators.iter().fold(Poly::one(), |acc, g| acc.lcm(&g.delta));
    let global_delta = normalize(&lcm)?;
    for g in &generators {
        if !global_delta.rem(&g.delta).is_zero() {
            return Err(Error::NormalizationFailure(format!("δ_{} does not divide δ", g.index)));
        }
    }
    let fingerprint = fingerprint(&generators);
    Ok(BlanchfieldModule { generators, global_delta, fingerprint })
}

fn check_prime(spec: &BlockSpec) -> Result<Poly> {
    if spec.prime.is_zero() || spec.prime.deg() == 0 {
        return Err(Error::NotIrreducible);
    }
    if spec.mult == 0 {
        return Err(invalid("multiplicity must be positive"));
    }
    let p = spec.prime.monic();
    if p.constant_term().is_zero() {
        return Err(invalid(format!("prime {p} vanishes at 0")));
    }
    if !is_irreducible(&p)? {
        return Err(Error::NotIrreducible);
    }
    if p.eval(&Rat::one()).is_zero() {
        return Err(Error::NormalizationFailure(format!("prime {p} vanishes at 1")));
    }
    Ok(p)
}

fn normalize(f: &Poly) -> Result<Poly> {
    normalize_delta(&LPoly::from(f)).map_err(|e| Error::NormalizationFailure(format!("{e}")))
}

/// Multiply a symmetric Laurent polynomial by `t^{k/2}` so that it becomes
/// invariant under `t ↦ t⁻¹`; other inputs are returned unchanged.
fn balance(a: &LPoly) -> Result<LPoly> {
    if a.is_zero() {
        return Err(Error::PairingNotCoprime);
    }
    Ok(match symmetry_decompose(a)? {
        Some(s) if s.r.is_one() && s.k % 2 == 0 => a.shift(s.k / 2),
        _ => a.clone(),
    })
}

fn fingerprint(gens: &[GeneratorRecord]) -> u64 {
    // FNV-1a over the canonical text of every record
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |s: &str| {
        for b in s.bytes().chain(core::iter::once(0xff)) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    for g in gens {
        feed(&g.delta.to_coeff_string());
        feed(&g.pairing.to_coeff_string());
        feed(&format!("{}", g.dual));
    }
    h
}

impl BlanchfieldModule {
    /// Stable hash of the generator data; equal modules hash equally.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn generators(&self) -> &[GeneratorRecord] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Result<&GeneratorRecord> {
        self.generators.get(i).ok_or(Error::IndexOutOfRange(i))
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn global_annihilator(&self) -> &Poly {
        &self.global_delta
    }

    /// `ℚ`-dimension of the module.
    pub fn rational_dim(&self) -> usize {
        self.generators.iter().map(|g| g.delta.deg()).sum()
    }

    pub fn zero(&self) -> ModuleElement {
        ModuleElement { fingerprint: self.fingerprint, coords: alloc::vec![Poly::zero(); self.len()] }
    }

    /// `η_i`.
    pub fn generator_element(&self, i: usize) -> Result<ModuleElement> {
        self.generator(i)?;
        let mut x = self.zero();
        x.coords[i] = Poly::one();
        Ok(x)
    }

    /// `P·η_i`.
    pub fn monomial_element(&self, i: usize, p: &LPoly) -> Result<ModuleElement> {
        let g = self.generator(i)?;
        let mut x = self.zero();
        x.coords[i] = p.reduce_mod(&g.delta)?;
        Ok(x)
    }

    /// Element with the given per-generator classes, reduced.
    pub fn element(&self, coords: &[LPoly]) -> Result<ModuleElement> {
        if coords.len() != self.len() {
            return Err(Error::ModuleMismatch);
        }
        let coords = coords
            .iter()
            .zip(&self.generators)
            .map(|(p, g)| p.reduce_mod(&g.delta))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement { fingerprint: self.fingerprint, coords })
    }

    pub fn check(&self, x: &ModuleElement) -> Result<()> {
        if x.fingerprint != self.fingerprint || x.coords.len() != self.len() {
            return Err(Error::ModuleMismatch);
        }
        Ok(())
    }

    /// `P·x`, with `t⁻¹` acting through its inverse modulo each `δ_i`.
    pub fn act(&self, p: &LPoly, x: &ModuleElement) -> Result<ModuleElement> {
        self.check(x)?;
        let coords = x
            .coords
            .iter()
            .zip(&self.generators)
            .map(|(c, g)| Ok((&p.reduce_mod(&g.delta)? * c).rem(&g.delta)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement { fingerprint: self.fingerprint, coords })
    }

    /// Numerator `n` with `𝔟(η_i, y) = n/δ_i`.
    pub fn block_pairing_numerator(&self, i: usize, y: &ModuleElement) -> Result<Poly> {
        self.check(y)?;
        let g = self.generator(i)?;
        let q = LPoly::from(&y.coords[g.dual]).reflect().reduce_mod(&g.delta)?;
        Ok((&q * &g.pairing).rem(&g.delta))
    }

    /// `𝔟(x, y)` as a numerator over the global annihilator.
    pub fn pairing_class(&self, x: &ModuleElement, y: &ModuleElement) -> Result<PairingClass> {
        self.check(x)?;
        let delta = &self.global_delta;
        let mut acc = Poly::zero();
        for (i, g) in self.generators.iter().enumerate() {
            if x.coords[i].is_zero() {
                continue;
            }
            let local = (&x.coords[i] * &self.block_pairing_numerator(i, y)?).rem(&g.delta);
            let cofactor = delta.exact_div(&g.delta).ok_or_else(|| Error::Internal("δ_i ∤ δ".into()))?;
            acc = &acc + &(&local * &cofactor);
        }
        Ok(PairingClass { numerator: acc.rem(delta) })
    }

    /// `c⁻¹·t^D·n(t⁻¹) mod δ` where `recip(δ) = c·δ`: the numerator of the
    /// class `(n/δ)(t⁻¹)`.
    pub fn conjugate_class(&self, n: &PairingClass) -> Result<PairingClass> {
        let delta = &self.global_delta;
        if delta.deg() == 0 {
            return Ok(PairingClass { numerator: Poly::zero() });
        }
        let r = recip(delta)?;
        let c = r.lead() / delta.lead();
        if &r.scale(&c.recip()) != delta {
            return Err(Error::Internal("global annihilator is not symmetric".into()));
        }
        let big_d = delta.deg() as i64;
        let m = LPoly::from(&n.numerator).reflect().shift(big_d).scale(&c.recip());
        Ok(PairingClass { numerator: m.reduce_mod(delta)? })
    }
}

impl ModuleElement {
    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> ModuleElement {
        ModuleElement { fingerprint: self.fingerprint, coords: self.coords.iter().map(|p| p.scale(c)).collect() }
    }

    fn zip_with(&self, o: &ModuleElement, f: impl Fn(&Poly, &Poly) -> Poly) -> ModuleElement {
        assert_eq!(self.fingerprint, o.fingerprint, "elements of different modules");
        ModuleElement {
            fingerprint: self.fingerprint,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Whether both elements live in the same module.
    pub fn same_module(&self, o: &ModuleElement) -> bool {
        self.fingerprint == o.fingerprint
    }
}

impl Add for &ModuleElement {
    type Output = ModuleElement;
    fn add(self, o: &ModuleElement) -> ModuleElement {
        self.zip_with(o, |a, b| a + b)
    }
}

impl Sub for &ModuleElement {
    type Output = ModuleElement;
    fn sub(self, o: &ModuleElement) -> ModuleElement {
        self.zip_with(o, |a, b| a - b)
    }
}

impl Neg for &ModuleElement {
    type Output = ModuleElement;
    fn neg(self) -> ModuleElement {
        ModuleElement { fingerprint: self.fingerprint, coords: self.coords.iter().map(|p| -p).collect() }
    }
}

impl PairingClass {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl Zero for PairingClass {
    fn zero() -> Self {
        PairingClass { numerator: Poly::zero() }
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl Add for PairingClass {
    type Output = PairingClass;
    fn add(self, o: PairingClass) -> PairingClass {
        PairingClass { numerator: &self.numerator + &o.numerator }
    }
}
