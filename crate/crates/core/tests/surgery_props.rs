// SPDX-License-Identifier: Apache-2.0

mod common;

use blanchfield_core::arith::{rat, ratio};
use blanchfield_core::linalg::Subspace;
use blanchfield_core::module::{BlanchfieldModule, ModuleElement};
use blanchfield_core::surgery::{SurgeryContext, SurgeryDatum};
use blanchfield_core::{LPoly, Rat};
use proptest::prelude::*;

fn lpoly() -> impl Strategy<Value = LPoly> {
    (-3i64..=3, prop::collection::vec(-3i64..=3, 1..=3)).prop_map(|(o, c)| LPoly::from_ints(o, &c))
}

fn labels() -> impl Strategy<Value = Vec<LPoly>> {
    prop::collection::vec(lpoly(), 12)
}

fn element(m: &BlanchfieldModule, c: &[LPoly]) -> ModuleElement {
    m.element(&c[..m.len()]).unwrap()
}

fn triple(m: &BlanchfieldModule, c: &[LPoly]) -> [ModuleElement; 3] {
    [element(m, &c[0..4]), element(m, &c[4..8]), element(m, &c[8..12])]
}

#[test]
fn closed_form_matches_general_formula() {
    for (name, ctx) in common::contexts() {
        for &i in ctx.classes() {
            let n = ctx.ring(i).unwrap().deltas().each_ref().map(|d| d.deg() as i64);
            let ks = [[0, 0, 0], [n[0] - 1, 0, 0], [0, n[1] - 1, n[2] - 1], [1 % n[0], 0, n[2] - 1], [-1, 2, 0]];
            for k in ks {
                for r in [Rat::from_integer(1.into()), rat(-2), ratio(1, 3)] {
                    let s = ctx.elementary_leaves(i, k, &r).unwrap();
                    let phi = ctx.variation(&s).unwrap();
                    for (&c, v) in ctx.classes().iter().zip(phi.values()) {
                        if c == i {
                            assert_eq!(v, &ctx.elementary_variation(i, k, &r).unwrap(), "{name} {i} {k:?}");
                        } else {
                            assert!(v.is_zero(), "{name} {i} {k:?} leaked into {c}");
                        }
                    }
                }
            }
            assert!(ctx.span_ra_check(i).unwrap().0, "{name} {i}");
        }
    }
}

#[test]
fn h_is_injective_on_families() {
    for (name, ctx) in common::contexts() {
        let mut images = Vec::new();
        let mut total = 0;
        for &i in ctx.classes() {
            let anti = ctx.antisymmetric_part(i).unwrap();
            total += anti.dim();
            for v in anti.basis() {
                let mut values: Vec<_> = ctx.classes().iter().map(|&c| ctx.ring(c).unwrap().zero()).collect();
                let pos = ctx.classes().iter().position(|&c| c == i).unwrap();
                values[pos] = ctx.ring(i).unwrap().from_coords(v.clone()).unwrap();
                images.push(ctx.h_of_phi(&ctx.family(values).unwrap()).unwrap().0);
            }
        }
        assert_eq!(total, ctx.dim_h(), "{name}");
        assert_eq!(Subspace::span(ctx.dim_h(), &images).dim(), ctx.dim_h(), "{name}");
        assert!(ctx.h_of_phi(&ctx.zero_family()).unwrap().is_zero());
    }
}

fn example_a() -> &'static SurgeryContext {
    &common::contexts()[0].1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn diagram_relations(c in labels(), d in labels(), f in lpoly(), w in -3i64..=3) {
        let ctx = example_a();
        let m = ctx.module();
        let [b1, b2, b3] = triple(m, &c);
        let dg = ctx.diagram([b1.clone(), b2.clone(), b3.clone()]).unwrap();
        let v = ctx.diagram_reduce(&dg).unwrap();

        let t = LPoly::from_ints(1, &[1]);
        let tb = |x: &ModuleElement| m.act(&t, x).unwrap();
        prop_assert_eq!(&ctx.diagram_reduce(&ctx.diagram([tb(&b1), tb(&b2), tb(&b3)]).unwrap()).unwrap(), &v);

        let swapped = ctx.diagram([b2.clone(), b1.clone(), b3.clone()]).unwrap();
        prop_assert_eq!(swapped.linkings[0].class.clone(), m.conjugate_class(&dg.linkings[0].class).unwrap());
        prop_assert_eq!(ctx.diagram_reduce(&swapped).unwrap(), v.scale(&rat(-1)));

        let mut shifted = dg.clone();
        for l in shifted.linkings.iter_mut() {
            l.integral = &l.integral + &f;
        }
        prop_assert_eq!(&ctx.diagram_reduce(&shifted).unwrap(), &v);

        let x = element(m, &d[0..4]);
        let b1x = &b1 + &x.scale(&rat(w));
        let lhs = ctx.diagram_reduce(&ctx.diagram([b1x, b2.clone(), b3.clone()]).unwrap()).unwrap();
        let rhs = v.add(&ctx.diagram_reduce(&ctx.diagram([x, b2.clone(), b3.clone()]).unwrap()).unwrap().scale(&rat(w)));
        prop_assert_eq!(lhs, rhs);

        let zero = ctx.diagram([b1, m.zero(), b3]).unwrap();
        prop_assert!(ctx.diagram_reduce(&zero).unwrap().is_zero());
    }

    #[test]
    fn variations_add(c in labels(), d in labels()) {
        let ctx = &common::contexts()[1].1;
        let m = ctx.module();
        let s1 = SurgeryDatum { leaves: triple(m, &c) };
        let s2 = SurgeryDatum { leaves: triple(m, &d) };
        let (p1, p2) = (ctx.variation(&s1).unwrap(), ctx.variation(&s2).unwrap());
        prop_assert_eq!(p1.add(&p2), p2.add(&p1));
        for (&i, v) in ctx.classes().iter().zip(p1.values()) {
            prop_assert_eq!(&ctx.ring(i).unwrap().antisymmetrize(v).unwrap(), v);
        }
        let same = SurgeryDatum { leaves: [s1.leaves[0].clone(), s1.leaves[0].clone(), s1.leaves[0].clone()] };
        prop_assert!(ctx.variation(&same).unwrap().is_zero());
        let h = ctx.h_of_phi(&p1.add(&p2)).unwrap();
        prop_assert_eq!(h, ctx.h_of_phi(&p1).unwrap().add(&ctx.h_of_phi(&p2).unwrap()));
    }
}
