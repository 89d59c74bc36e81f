// SPDX-License-Identifier: Apache-2.0

//! Holonomy quotients `𝔄(i)` and `ℋ(i)` as cokernels of `Id − T` on tensor
//! and wedge spaces, together with the root-triple criteria and the
//! dimension bounds per component pattern.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{prodpoly, recip, rootpow, Poly, Rat};
use crate::error::{Error, Result};
use crate::linalg::{check_dim, companion, kron, subsets, wedge_power, QMat, Subspace};
use crate::module::BlanchfieldModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    A,
    H,
}

/// Coincidence pattern of a triple: which slots carry the same generator (or
/// the same root, at component level).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    AllDistinct,
    FirstPair,
    LastPair,
    AllEqual,
}

impl Pattern {
    pub fn name(self) -> &'static str {
        match self {
            Pattern::AllDistinct => "all-distinct",
            Pattern::FirstPair => "first-pair",
            Pattern::LastPair => "last-pair",
            Pattern::AllEqual => "all-equal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassIndex(pub [usize; 3]);

impl ClassIndex {
    pub fn new(i1: usize, i2: usize, i3: usize) -> Self {
        ClassIndex([i1, i2, i3])
    }

    pub fn is_sorted(&self) -> bool {
        self.0[0] <= self.0[1] && self.0[1] <= self.0[2]
    }

    pub fn sorted(&self) -> ClassIndex {
        let mut v = self.0;
        v.sort_unstable();
        ClassIndex(v)
    }

    /// Pattern of a sorted index.
    pub fn pattern(&self) -> Pattern {
        let [a, b, c] = self.0;
        match (a == b, b == c) {
            (true, true) => Pattern::AllEqual,
            (true, false) => Pattern::FirstPair,
            (false, true) => Pattern::LastPair,
            (false, false) => Pattern::AllDistinct,
        }
    }

    /// Permutations `σ` with `i_{σ(j)} = i_j`, as images `[σ(0), σ(1), σ(2)]`.
    pub fn stabilizer(&self) -> Vec<[usize; 3]> {
        PERMUTATIONS
            .iter()
            .copied()
            .filter(|s| (0..3).all(|j| self.0[s[j]] == self.0[j]))
            .collect()
    }

    fn check(&self, module: &BlanchfieldModule) -> Result<()> {
        for &i in &self.0 {
            module.generator(i)?;
        }
        Ok(())
    }
}

impl fmt::Display for ClassIndex {
    /// One-based, as in reports.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0] + 1, self.0[1] + 1, self.0[2] + 1)
    }
}

/// All of `S₃` as image arrays, identity first.
pub const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

pub fn sign(s: &[usize; 3]) -> i64 {
    let inversions = (0..3).flat_map(|a| (a + 1..3).map(move |b| (a, b))).filter(|&(a, b)| s[a] > s[b]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn sorted_classes(q: usize) -> Vec<ClassIndex> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in a..q {
            for c in b..q {
                out.push(ClassIndex::new(a, b, c));
            }
        }
    }
    out
}

pub fn all_classes(q: usize) -> Vec<ClassIndex> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                out.push(ClassIndex::new(a, b, c));
            }
        }
    }
    out
}

/// `𝔄(i)` or `ℋ(i)`: ambient tensor or wedge space modulo `Im(Id − T)`.
#[derive(Clone, Debug)]
pub struct HolonomySpace {
    pub kind: SpaceKind,
    pub index: ClassIndex,
    /// Ambient layout; `AllDistinct` for every `𝔄` space.
    pub layout: Pattern,
    /// `dim 𝔄_{i_j}` for each slot.
    pub factor_dims: [usize; 3],
    pub ambient_dim: usize,
    pub operator: QMat,
    image: Subspace,
}

impl HolonomySpace {
    pub fn dim(&self) -> usize {
        self.image.codim()
    }

    pub fn image(&self) -> &Subspace {
        &self.image
    }

    pub fn quotient_coords(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        self.image.quotient_coords(v)
    }

    /// Ambient representative of quotient basis vector `k`.
    pub fn representative(&self, k: usize) -> Vec<Rat> {
        self.image.quotient_representative(k)
    }

    /// Ambient coordinates of `v1 ⊗ v2 ⊗ v3` (or the corresponding wedge),
    /// each `v_j` given in the power basis of `𝔄_{i_j}`.
    pub fn pure_vector(&self, v: [&[Rat]; 3]) -> Result<Vec<Rat>> {
        for (j, x) in v.iter().enumerate() {
            if x.len() != self.factor_dims[j] {
                return Err(Error::DimensionMismatch { expected: self.factor_dims[j], got: x.len() });
            }
        }
        Ok(match self.layout {
            Pattern::AllDistinct => tensor(&tensor(v[0], v[1]), v[2]),
            Pattern::FirstPair => tensor(&wedge2(v[0], v[1]), v[2]),
            Pattern::LastPair => tensor(v[0], &wedge2(v[1], v[2])),
            Pattern::AllEqual => wedge3(v[0], v[1], v[2]),
        })
    }
}

fn tensor(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() { Rat::zero() } else { x * y });
        }
    }
    out
}

fn wedge2(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    subsets(a.len(), 2).iter().map(|s| &a[s[0]] * &b[s[1]] - &a[s[1]] * &b[s[0]]).collect()
}

fn wedge3(a: &[Rat], b: &[Rat], c: &[Rat]) -> Vec<Rat> {
    let m = QMat::from_rows(alloc::vec![a.to_vec(), b.to_vec(), c.to_vec()]);
    subsets(a.len(), 3)
        .iter()
        .map(|s| crate::linalg::determinant(&m.submatrix(&[0, 1, 2], s)))
        .collect()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn action(module: &BlanchfieldModule, i: usize) -> Result<QMat> {
    companion(&module.generator(i)?.delta)
}

fn finish(kind: SpaceKind, index: ClassIndex, layout: Pattern, dims: [usize; 3], t: QMat) -> HolonomySpace {
    let n = t.rows();
    let operator = &QMat::identity(n) - &t;
    // columns of the operator span the relation subspace
    let image = Subspace::span(n, &operator.transpose().to_rows());
    HolonomySpace { kind, index, layout, factor_dims: dims, ambient_dim: n, operator, image }
}

pub fn build_a_class(module: &BlanchfieldModule, index: ClassIndex, limit: usize) -> Result<HolonomySpace> {
    index.check(module)?;
    let dims = index.0.map(|i| module.generators()[i].delta.deg());
    check_dim(dims.iter().product(), limit)?;
    let [a, b, c] = index.0;
    let t = kron(&kron(&action(module, a)?, &action(module, b)?), &action(module, c)?);
    Ok(finish(SpaceKind::A, index, Pattern::AllDistinct, dims, t))
}

pub fn h_ambient_dim(dims: [usize; 3], pattern: Pattern) -> usize {
    match pattern {
        Pattern::AllDistinct => dims.iter().product(),
        Pattern::FirstPair => binom(dims[0], 2) * dims[2],
        Pattern::LastPair => dims[0] * binom(dims[1], 2),
        Pattern::AllEqual => binom(dims[0], 3),
    }
}

fn wedge_or_empty(m: &QMat, p: usize) -> QMat {
    wedge_power(m, p).unwrap_or_else(|_| QMat::zeros(0, 0))
}

pub fn build_h_class(module: &BlanchfieldModule, index: ClassIndex, limit: usize) -> Result<HolonomySpace> {
    if !index.is_sorted() {
        return Err(Error::NotSorted);
    }
    index.check(module)?;
    let dims = index.0.map(|i| module.generators()[i].delta.deg());
    let layout = index.pattern();
    check_dim(h_ambient_dim(dims, layout), limit)?;
    let [a, b, c] = index.0;
    let t = match layout {
        Pattern::AllDistinct => kron(&kron(&action(module, a)?, &action(module, b)?), &action(module, c)?),
        Pattern::FirstPair => kron(&wedge_or_empty(&action(module, a)?, 2), &action(module, c)?),
        Pattern::LastPair => kron(&action(module, a)?, &wedge_or_empty(&action(module, b)?, 2)),
        Pattern::AllEqual => wedge_or_empty(&action(module, a)?, 3),
    };
    Ok(finish(SpaceKind::H, index, layout, dims, t))
}

pub fn dim_a_total(module: &BlanchfieldModule, limit: usize) -> Result<usize> {
    all_classes(module.len())
        .into_iter()
        .map(|i| build_a_class(module, i, limit).map(|s| s.dim()))
        .sum()
}

fn nonconstant_gcd(f: &Poly, g: &Poly) -> bool {
    f.gcd(g).deg() > 0
}

fn exact(f: &Poly, g: &Poly, what: &str) -> Result<Poly> {
    let (q, r) = f.divrem(g);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: nonzero remainder")));
    }
    Ok(q)
}

/// Roots `z·w` of `π` over ordered pairs of distinct root positions.
fn pair_distinct(p: &Poly) -> Result<Poly> {
    exact(&prodpoly(p, p)?, &rootpow(p, 2)?, "distinct-pair product")
}

/// Roots `z²·w` with `z ≠ w`.
fn square_times_other(p: &Poly) -> Result<Poly> {
    exact(&prodpoly(&rootpow(p, 2)?, p)?, &rootpow(p, 3)?, "square-times-other product")
}

/// Roots `z1·z2·z3` over triples of pairwise distinct root positions.
fn triple_distinct(p: &Poly) -> Result<Poly> {
    let cubes = rootpow(p, 3)?;
    let num = &prodpoly(&prodpoly(p, p)?, p)? * &(&cubes * &cubes);
    exact(&num, &prodpoly(&rootpow(p, 2)?, p)?.pow(3), "distinct-triple product")
}

pub fn a_nontrivial_criterion(module: &BlanchfieldModule, index: ClassIndex) -> Result<bool> {
    index.check(module)?;
    let g = |j: usize| &module.generators()[index.0[j]].prime;
    Ok(nonconstant_gcd(&prodpoly(g(0), g(1))?, &recip(g(2))?))
}

pub fn h_nontrivial_criterion(module: &BlanchfieldModule, index: ClassIndex) -> Result<bool> {
    if !index.is_sorted() {
        return Err(Error::NotSorted);
    }
    index.check(module)?;
    let g = |j: usize| &module.generators()[index.0[j]];
    let one = Rat::one();
    Ok(match index.pattern() {
        Pattern::AllDistinct => a_nontrivial_criterion(module, index)?,
        Pattern::FirstPair => {
            let (pi, other) = (&g(0).prime, recip(&g(2).prime)?);
            nonconstant_gcd(&pair_distinct(pi)?, &other)
                || (g(0).mult >= 2 && nonconstant_gcd(&rootpow(pi, 2)?, &other))
        }
        Pattern::LastPair => {
            let (pi, other) = (&g(1).prime, recip(&g(0).prime)?);
            nonconstant_gcd(&pair_distinct(pi)?, &other)
                || (g(1).mult >= 2 && nonconstant_gcd(&rootpow(pi, 2)?, &other))
        }
        Pattern::AllEqual => {
            let (pi, m) = (&g(0).prime, g(0).mult);
            triple_distinct(pi)?.eval(&one).is_zero()
                || (m >= 2 && square_times_other(pi)?.eval(&one).is_zero())
                || (m >= 3 && rootpow(pi, 3)?.eval(&one).is_zero())
        }
    })
}

/// Contribution of one component pattern to a sorted class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternBounds {
    pub pattern: Pattern,
    /// Number of complex components `(i, ℓ)` of this pattern.
    pub components: usize,
    pub lower: usize,
    pub upper: usize,
}

/// Lower and upper bounds on `dim_ℂ ℋ(i, ℓ)` for a contributing component
/// with multiplicities `m` (non-increasing, as generators are sorted).
pub fn h_dim_bounds(m: [u32; 3], pattern: Pattern) -> (usize, usize) {
    let [m1, m2, m3] = m.map(|x| x as usize);
    match pattern {
        Pattern::AllDistinct => {
            let full = m2 * m3;
            if m2 + m3 <= m1 + 1 {
                (full, full)
            } else {
                let e = m2 + m3 - m1;
                (full - e * (e - 1) / 2, full)
            }
        }
        Pattern::FirstPair => (1, m3 * (m1 - 1)),
        Pattern::LastPair => (1, m2 * (m2 - 1) / 2),
        Pattern::AllEqual => (1, (m1 - 1) * (m1 - 2) / 2),
    }
}

/// Number of roots of `f` (with multiplicity) that are roots of `g`, for
/// squarefree `g`.
fn common_root_count(f: &Poly, g: &Poly) -> usize {
    if f.deg() == 0 {
        return 0;
    }
    f.gcd(&g.pow(f.deg() as u32)).deg()
}

/// Contributing component patterns of a sorted class with their counts and
/// bounds. Components of an all-equal class with two equal roots are
/// reported with the last-pair bound, the tighter of the two orderings.
pub fn component_patterns(module: &BlanchfieldModule, index: ClassIndex) -> Result<Vec<PatternBounds>> {
    if !index.is_sorted() {
        return Err(Error::NotSorted);
    }
    index.check(module)?;
    let gens = module.generators();
    let [a, b, c] = index.0;
    let (pa, pb, pc) = (&gens[a].prime, &gens[b].prime, &gens[c].prime);
    let m = [gens[a].mult, gens[b].mult, gens[c].mult];
    let one = Rat::one();
    let mut out = Vec::new();
    let mut push = |pattern: Pattern, components: usize, mults: [u32; 3]| {
        if components > 0 {
            let (lower, upper) = h_dim_bounds(mults, pattern);
            out.push(PatternBounds { pattern, components, lower, upper });
        }
    };
    match index.pattern() {
        Pattern::AllDistinct => {
            push(Pattern::AllDistinct, common_root_count(&prodpoly(pa, pb)?, &recip(pc)?), m);
        }
        Pattern::FirstPair => {
            let distinct = common_root_count(&pair_distinct(pa)?, &recip(pc)?);
            push(Pattern::AllDistinct, distinct / 2, m);
            if m[0] >= 2 {
                push(Pattern::FirstPair, common_root_count(&rootpow(pa, 2)?, &recip(pc)?), m);
            }
        }
        Pattern::LastPair => {
            let distinct = common_root_count(&pair_distinct(pb)?, &recip(pa)?);
            push(Pattern::AllDistinct, distinct / 2, m);
            if m[1] >= 2 {
                push(Pattern::LastPair, common_root_count(&rootpow(pb, 2)?, &recip(pa)?), m);
            }
        }
        Pattern::AllEqual => {
            let x = Poly::from_ints(&[-1, 1]);
            let distinct = common_root_count(&triple_distinct(pa)?, &x);
            push(Pattern::AllDistinct, distinct / 6, m);
            if m[0] >= 2 {
                let pair = common_root_count(&square_times_other(pa)?, &x);
                push(Pattern::LastPair, pair, m);
            }
            if m[0] >= 3 && rootpow(pa, 3)?.eval(&one).is_zero() {
                push(Pattern::AllEqual, common_root_count(&rootpow(pa, 3)?, &x), m);
            }
        }
    }
    Ok(out)
}

/// `(Σ b, Σ B)` over the complex components of a sorted class.
pub fn class_bounds(module: &BlanchfieldModule, index: ClassIndex) -> Result<(usize, usize)> {
    Ok(component_patterns(module, index)?
        .iter()
        .fold((0, 0), |(lo, hi), p| (lo + p.components * p.lower, hi + p.components * p.upper)))
}
