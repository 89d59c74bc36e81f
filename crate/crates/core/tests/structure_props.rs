// SPDX-License-Identifier: Apache-2.0

mod common;

use blanchfield_core::holonomy::{
    a_nontrivial_criterion, all_classes, build_a_class, build_h_class, class_bounds, h_dim_bounds,
    h_nontrivial_criterion, sorted_classes, ClassIndex, Pattern,
};
use blanchfield_core::linalg::DEFAULT_MAX_DIM;
use blanchfield_core::numberfield::{
    component_dim_h, component_presentation_a, ComponentSpec, KElem, NumberField,
};
use blanchfield_core::Poly;
use proptest::prelude::*;

#[test]
fn criteria_match_dimensions() {
    for (name, m) in common::corpus() {
        for i in all_classes(m.len()) {
            let dim = build_a_class(&m, i, DEFAULT_MAX_DIM).unwrap().dim();
            assert_eq!(a_nontrivial_criterion(&m, i).unwrap(), dim > 0, "{name} 𝔄{i}");
            assert_eq!(build_a_class(&m, ClassIndex::new(i.0[2], i.0[0], i.0[1]), DEFAULT_MAX_DIM).unwrap().dim(), dim);
        }
        for i in sorted_classes(m.len()) {
            let a = build_a_class(&m, i, DEFAULT_MAX_DIM).unwrap().dim();
            let h = build_h_class(&m, i, DEFAULT_MAX_DIM).unwrap().dim();
            assert_eq!(h_nontrivial_criterion(&m, i).unwrap(), h > 0, "{name} ℋ{i}");
            assert!(h <= a, "{name} {i}");
            if i.pattern() == Pattern::AllDistinct {
                assert_eq!(h, a, "{name} {i}");
            }
            let (lo, hi) = class_bounds(&m, i).unwrap();
            assert!(lo <= h && h <= hi, "{name} {i}: {lo} ≤ {h} ≤ {hi}");
        }
    }
}

struct Family {
    field: NumberField,
    primes: [Poly; 3],
    roots: [KElem; 3],
}

fn families() -> Vec<Family> {
    let g = NumberField::preset("gauss").unwrap();
    let e = NumberField::preset("eisenstein").unwrap();
    let z = NumberField::preset("zeta8").unwrap();
    let x = |k: &NumberField| k.generator();
    let minus_one = |k: &NumberField| k.neg(&k.one());
    vec![
        Family {
            primes: [Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[1, 1])],
            roots: [x(&g), x(&g), minus_one(&g)],
            field: g,
        },
        Family {
            primes: core::array::from_fn(|_| Poly::from_ints(&[1, 1, 1])),
            roots: [x(&e), x(&e), x(&e)],
            field: e,
        },
        Family {
            primes: [Poly::from_ints(&[1, 0, 0, 0, 1]), Poly::from_ints(&[1, 0, 0, 0, 1]), Poly::from_ints(&[1, 1])],
            roots: [x(&z), z.mul(&x(&z), &z.mul(&x(&z), &x(&z))), minus_one(&z)],
            field: z,
        },
    ]
}

fn spec(f: &Family, mut n: [u32; 3]) -> ComponentSpec {
    n.sort_unstable_by(|a, b| b.cmp(a));
    ComponentSpec::new(f.field.clone(), f.primes.clone(), f.roots.clone(), n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn vanishing_generation_and_bounds(k in 0usize..3, n in [1u32..=5, 1u32..=5, 1u32..=5]) {
        let f = &families()[k];
        let s = spec(f, n);
        let [n1, n2, n3] = s.mults.map(|x| x as usize);
        let p = component_presentation_a(&s, DEFAULT_MAX_DIM).unwrap();
        for a in 0..n1 {
            for b in 0..n2 {
                for c in 0..n3 {
                    if a + b + c + 1 >= n2 + n3 {
                        prop_assert!(p.vanishes([a, b, c]), "[{a},{b},{c}] for {:?}", s.mults);
                    }
                }
            }
        }
        let front: Vec<[usize; 3]> = (0..n2).flat_map(|b| (0..n3).map(move |c| [0, b, c])).collect();
        prop_assert_eq!(p.span_dim(&front), p.dim());
        let full = n2 * n3;
        if n2 + n3 <= n1 + 1 {
            prop_assert_eq!(p.dim(), full);
        } else {
            let e = n2 + n3 - n1;
            prop_assert!(full - e * (e - 1) / 2 <= p.dim() && p.dim() <= full);
        }
        prop_assert_eq!(h_dim_bounds(s.mults, Pattern::AllDistinct), if n2 + n3 <= n1 + 1 { (full, full) } else { let e = n2 + n3 - n1; (full - e * (e - 1) / 2, full) });
    }
}

#[test]
fn component_dims_within_bounds() {
    let f = &families()[0];
    for m1 in 2..=5u32 {
        for m3 in 1..=4u32 {
            let s = ComponentSpec::new(f.field.clone(), f.primes.clone(), f.roots.clone(), [m1, m1, m3]).unwrap();
            let d = component_dim_h(&s, Pattern::FirstPair, DEFAULT_MAX_DIM).unwrap();
            let (lo, hi) = h_dim_bounds(s.mults, Pattern::FirstPair);
            assert!(lo <= d && d <= hi, "{m1},{m1},{m3}: {d}");
        }
    }
    let f = &families()[1];
    for m in 3..=7u32 {
        let s = spec(f, [m, m, m]);
        let d = component_dim_h(&s, Pattern::AllEqual, DEFAULT_MAX_DIM).unwrap();
        let (lo, hi) = h_dim_bounds(s.mults, Pattern::AllEqual);
        assert!(lo <= d && d <= hi, "m={m}: {d}");
    }
}

#[test]
fn galois_consistency() {
    let b = common::example_b();
    let i = ClassIndex::new(0, 0, 1);
    let f = &families()[0];
    let s = ComponentSpec::new(f.field.clone(), f.primes.clone(), f.roots.clone(), [3, 3, 2]).unwrap();
    let a_component = component_presentation_a(&s, DEFAULT_MAX_DIM).unwrap().dim();
    let h_component = component_dim_h(&s, Pattern::FirstPair, DEFAULT_MAX_DIM).unwrap();
    assert_eq!((a_component, h_component), (5, 2));
    assert_eq!(build_a_class(&b, i, DEFAULT_MAX_DIM).unwrap().dim(), 2 * a_component);
    assert_eq!(build_h_class(&b, i, DEFAULT_MAX_DIM).unwrap().dim(), 2 * h_component);
}
