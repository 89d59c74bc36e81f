// SPDX-License-Identifier: Apache-2.0

mod common;

use blanchfield_core::module::{BlanchfieldModule, ModuleElement, PairingClass};
use blanchfield_core::LPoly;
use proptest::prelude::*;

fn lpoly() -> impl Strategy<Value = LPoly> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 1..=4)).prop_map(|(o, c)| LPoly::from_ints(o, &c))
}

fn element(m: &BlanchfieldModule, c: &[LPoly]) -> ModuleElement {
    m.element(&c[..m.len()]).unwrap()
}

fn modules() -> Vec<BlanchfieldModule> {
    common::corpus().into_iter().map(|(_, m)| m).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hermitian(k in 0usize..10, xs in prop::collection::vec(lpoly(), 4), ys in prop::collection::vec(lpoly(), 4)) {
        let m = &modules()[k];
        let (x, y) = (element(m, &xs), element(m, &ys));
        let xy = m.pairing_class(&x, &y).unwrap();
        let yx = m.pairing_class(&y, &x).unwrap();
        prop_assert_eq!(xy, m.conjugate_class(&yx).unwrap());
    }

    #[test]
    fn sesquilinear(k in 0usize..10, xs in prop::collection::vec(lpoly(), 4), ys in prop::collection::vec(lpoly(), 4), p in lpoly(), q in lpoly()) {
        let m = &modules()[k];
        let (x, y) = (element(m, &xs), element(m, &ys));
        let lhs = m.pairing_class(&m.act(&p, &x).unwrap(), &m.act(&q, &y).unwrap()).unwrap();
        let base = m.pairing_class(&x, &y).unwrap();
        let twisted = &(&p * &q.reflect()) * &LPoly::from(&base.numerator);
        let rhs = PairingClass { numerator: twisted.reduce_mod(m.global_annihilator()).unwrap() };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_in_first_slot(k in 0usize..10, xs in prop::collection::vec(lpoly(), 4), zs in prop::collection::vec(lpoly(), 4), ys in prop::collection::vec(lpoly(), 4)) {
        let m = &modules()[k];
        let (x, z, y) = (element(m, &xs), element(m, &zs), element(m, &ys));
        let lhs = m.pairing_class(&(&x + &z), &y).unwrap();
        let rhs = m.pairing_class(&x, &y).unwrap() + m.pairing_class(&z, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn dual_pairing_is_a_unit() {
    for (name, m) in common::corpus() {
        for g in m.generators() {
            let dual = m.generator_element(g.dual).unwrap();
            let n = m.block_pairing_numerator(g.index, &dual).unwrap();
            assert_eq!(n.gcd(&g.prime).deg(), 0, "{name}: generator {}", g.index);
            assert_eq!(g.pairing.gcd(&g.delta).deg(), 0, "{name}: generator {}", g.index);
        }
    }
}
