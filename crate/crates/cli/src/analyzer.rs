// SPDX-License-Identifier: Apache-2.0

//! Memoized per-class dimensions, report assembly and the self-test.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use blanchfield_core::arith::format_rat;
use blanchfield_core::holonomy::{
    a_nontrivial_criterion, all_classes, build_a_class, build_h_class, class_bounds, component_patterns,
    h_nontrivial_criterion, sorted_classes, ClassIndex, Pattern, SpaceKind,
};
use blanchfield_core::linalg::Subspace;
use blanchfield_core::module::{BlanchfieldModule, BlockKind};
use blanchfield_core::surgery::{SurgeryContext, SurgeryDatum};
use blanchfield_core::{Error, Poly, Rat, Result};

use crate::report::{AnalysisReport, BoundReport, ClassReport, GeneratorReport, OrderedClassReport, VariationClass, VariationReport};

/// Deliberate engine defects, used to exercise the cross-checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Every `dim ℋ(i)` comes out one too large.
    InflatedHDims,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Engine {
    pub fault: Option<Fault>,
}

impl Engine {
    pub fn corrupted(fault: Fault) -> Self {
        Engine { fault: Some(fault) }
    }
}

type Key = (u64, SpaceKind, [usize; 3]);

pub struct Analyzer {
    engine: Engine,
    limit: usize,
    cache: RwLock<HashMap<Key, usize>>,
}

pub(crate) fn coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

fn one_based(i: ClassIndex) -> [usize; 3] {
    i.0.map(|x| x + 1)
}

impl Analyzer {
    pub fn new(limit: usize) -> Self {
        Self::with_engine(limit, Engine::default())
    }

    pub fn with_engine(limit: usize, engine: Engine) -> Self {
        Analyzer { engine, limit, cache: RwLock::new(HashMap::new()) }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn memo(&self, key: Key, compute: impl FnOnce() -> Result<usize>) -> Result<usize> {
        if let Some(&d) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(d);
        }
        let d = compute()?;
        self.cache.write().expect("cache lock").insert(key, d);
        Ok(d)
    }

    pub fn dim_a(&self, m: &BlanchfieldModule, i: ClassIndex) -> Result<usize> {
        self.memo((m.fingerprint(), SpaceKind::A, i.0), || Ok(build_a_class(m, i, self.limit)?.dim()))
    }

    pub fn dim_h(&self, m: &BlanchfieldModule, i: ClassIndex) -> Result<usize> {
        let d = self.memo((m.fingerprint(), SpaceKind::H, i.0), || Ok(build_h_class(m, i, self.limit)?.dim()))?;
        Ok(match self.engine.fault {
            Some(Fault::InflatedHDims) => d + 1,
            None => d,
        })
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    pub fn report(&self, name: &str, m: &BlanchfieldModule) -> Result<AnalysisReport> {
        let generators = m
            .generators()
            .iter()
            .map(|g| GeneratorReport {
                index: g.index + 1,
                kind: match g.kind {
                    BlockKind::Symmetric => "symmetric".into(),
                    BlockKind::Hyperbolic => "hyperbolic".into(),
                },
                block: g.block + 1,
                prime: coeff_strings(&g.prime),
                mult: g.mult,
                delta: coeff_strings(&g.delta),
                dual: g.dual + 1,
                pairing: coeff_strings(&g.pairing),
            })
            .collect();
        let mut classes = Vec::new();
        for i in sorted_classes(m.len()) {
            let dim_a = self.dim_a(m, i)?;
            let dim_h = self.dim_h(m, i)?;
            let bounds: Vec<BoundReport> = component_patterns(m, i)?
                .into_iter()
                .map(|b| BoundReport {
                    pattern: b.pattern.name().into(),
                    components: b.components,
                    lower: b.lower,
                    upper: b.upper,
                })
                .collect();
            let (lo, hi) = class_bounds(m, i)?;
            classes.push(ClassReport {
                index: one_based(i),
                pattern: i.pattern().name().into(),
                dim_a,
                dim_h,
                criterion_a: a_nontrivial_criterion(m, i)?,
                criterion_h: h_nontrivial_criterion(m, i)?,
                bounds,
                bounds_total: [lo, hi],
            });
        }
        let mut ordered = Vec::new();
        for i in all_classes(m.len()) {
            ordered.push(OrderedClassReport { index: one_based(i), dim_a: self.dim_a(m, i)? });
        }
        Ok(AnalysisReport {
            module: name.into(),
            delta: coeff_strings(m.global_annihilator()),
            generators,
            dim_a_total: ordered.iter().map(|c| c.dim_a).sum(),
            dim_a_sorted_classes: classes.iter().map(|c| c.dim_a).sum(),
            dim_h_total: classes.iter().map(|c| c.dim_h).sum(),
            classes,
            ordered_classes: ordered,
            checks: BTreeMap::new(),
        })
    }

    /// Named cross-checks; `Err` only for resource guards and input errors.
    pub fn selftest(&self, m: &BlanchfieldModule) -> Result<BTreeMap<String, bool>> {
        let mut checks = BTreeMap::new();
        let mut record = |name: &str, ok: bool| {
            let e = checks.entry(name.to_string()).or_insert(true);
            *e &= ok;
        };

        for i in all_classes(m.len()) {
            let d = self.dim_a(m, i)?;
            record("criterion_A_iff_dim", a_nontrivial_criterion(m, i)? == (d > 0));
            let rotated = ClassIndex::new(i.0[1], i.0[2], i.0[0]);
            record("dim_A_permutation_invariant", self.dim_a(m, rotated)? == d);
        }
        for i in sorted_classes(m.len()) {
            let (a, h) = (self.dim_a(m, i)?, self.dim_h(m, i)?);
            record("criterion_H_iff_dim", h_nontrivial_criterion(m, i)? == (h > 0));
            record("dim_H_le_dim_A", h <= a);
            if i.pattern() == Pattern::AllDistinct {
                record("dim_H_eq_dim_A_distinct", h == a);
            }
            let (lo, hi) = class_bounds(m, i)?;
            record("dim_H_within_bounds", lo <= h && h <= hi);
        }

        let ctx = match SurgeryContext::new(m, self.limit) {
            Ok(ctx) => ctx,
            Err(Error::Internal(_)) => {
                record("ring_dim_eq_dim_A", false);
                return Ok(checks);
            }
            Err(e) => return Err(e),
        };
        for &i in ctx.classes() {
            let ring = ctx.ring(i)?;
            let h = ctx.h_space(i)?;
            let anti = ctx.antisymmetric_part(i)?;
            record("ring_dim_eq_dim_A", ring.dim() == self.dim_a(m, i)?);
            record("antisymmetric_dim_eq_dim_H", anti.dim() == self.dim_h(m, i)?);
            let images = anti
                .basis()
                .iter()
                .map(|v| ring.p_map(h, &ring.from_coords(v.clone())?))
                .collect::<Result<Vec<_>>>()?;
            record("p_map_full_rank", Subspace::span(h.dim(), &images).dim() == self.dim_h(m, i)?);
            record("elementary_variations_span", ctx.span_ra_check(i)?.0);
            let n = ring.deltas().each_ref().map(|d| d.deg() as i64);
            for k in [[0, 1, 0], [n[0] - 1, 0, n[2] - 1]] {
                let r = Rat::from_integer(1.into());
                let phi = ctx.variation(&ctx.elementary_leaves(i, k, &r)?)?;
                let expected = ctx.elementary_variation(i, k, &r)?;
                let ok = ctx
                    .classes()
                    .iter()
                    .zip(phi.values())
                    .all(|(&c, v)| if c == i { *v == expected } else { v.is_zero() });
                record("variation_closed_form", ok);
            }
        }
        Ok(checks)
    }

    pub fn variation(&self, name: &str, m: &BlanchfieldModule, s: &SurgeryDatum) -> Result<VariationReport> {
        let ctx = SurgeryContext::new(m, self.limit)?;
        let phi = ctx.variation(s)?;
        let h = ctx.h_of_phi(&phi)?;
        let classes = ctx
            .classes()
            .iter()
            .zip(phi.values())
            .map(|(&i, v)| {
                let ring = ctx.ring(i)?;
                Ok(VariationClass {
                    index: one_based(i),
                    value: blanchfield_core::rings::format_element(ring, v),
                    coords: v.coords().iter().map(format_rat).collect(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VariationReport {
            module: name.into(),
            classes,
            h: h.0.iter().map(format_rat).collect(),
            dim_h: ctx.dim_h(),
        })
    }
}
