// SPDX-License-Identifier: Apache-2.0

use blanchfield_core::arith::{
    factor, prime_power_decompose, prodpoly, rat, recip, resultant, rootpow, squarefree_decomposition,
};
use blanchfield_core::{LPoly, Poly, Rat};
use num_traits::Zero;
use proptest::prelude::*;

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 1..=max_len)
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    coeffs(max_len).prop_map(|c| Poly::from_ints(&c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn lpoly() -> impl Strategy<Value = LPoly> {
    (-4i64..=4, coeffs(5)).prop_map(|(o, c)| LPoly::from_ints(o, &c))
}

fn roots_poly(roots: &[i64]) -> Poly {
    roots.iter().fold(Poly::one(), |acc, &r| &acc * &Poly::from_ints(&[-r, 1]))
}

proptest! {
    #[test]
    fn lpoly_ring_laws(p in lpoly(), q in lpoly(), r in lpoly()) {
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        let s = &p * &q;
        if !s.is_zero() {
            prop_assert!(!s.coeffs()[0].is_zero());
            prop_assert!(!s.coeffs().last().unwrap().is_zero());
        }
    }

    #[test]
    fn division_identity(a in poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.divrem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn gcd_divides(a in nonzero_poly(5), b in nonzero_poly(5), c in nonzero_poly(3)) {
        let (x, y) = (&a * &c, &b * &c);
        let g = x.gcd(&y);
        prop_assert!(x.rem(&g).is_zero());
        prop_assert!(y.rem(&g).is_zero());
        prop_assert!(g.rem(&c.monic()).is_zero());
        let (g2, s, t) = x.ext_gcd(&y);
        prop_assert_eq!(&(&s * &x) + &(&t * &y), g2);
    }

    #[test]
    fn recip_involution(p in nonzero_poly(6)) {
        prop_assume!(!p.constant_term().is_zero());
        prop_assert_eq!(recip(&recip(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), c in poly(3)) {
        prop_assume!(a.deg() + b.deg() > 0);
        let f = &a * &if c.is_zero() { Poly::one() } else { c.clone() };
        let r = resultant(&f, &b).unwrap();
        prop_assert_eq!(r.is_zero(), f.gcd(&b).deg() >= 1);
    }

    #[test]
    fn prodpoly_vanishes_at_products(zs in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 1..=3), ws in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 1..=3)) {
        let p = prodpoly(&roots_poly(&zs), &roots_poly(&ws)).unwrap();
        for z in &zs {
            for w in &ws {
                prop_assert!(p.eval(&rat(z * w)).is_zero());
            }
        }
        prop_assert_eq!(p.deg(), zs.len() * ws.len());
    }

    #[test]
    fn prodpoly_divisible_by_rootpow(f in nonzero_poly(5)) {
        prop_assume!(f.deg() >= 1 && !f.constant_term().is_zero());
        prop_assume!(f.gcd(&f.derivative()).deg() == 0);
        let pp = prodpoly(&f, &f).unwrap();
        let rp = rootpow(&f, 2).unwrap();
        prop_assert!(pp.rem(&rp).is_zero());
    }

    #[test]
    fn factorization_reconstructs(a in nonzero_poly(4), b in nonzero_poly(4), e in 1u32..=2) {
        let f = &a.pow(e) * &b;
        prop_assume!(f.deg() >= 1);
        let parts = factor(&f).unwrap();
        let product = parts.iter().fold(Poly::one(), |acc, (p, m)| &acc * &p.pow(*m));
        prop_assert_eq!(product, f.monic());
        let sq = squarefree_decomposition(&f);
        let product = sq.iter().fold(Poly::one(), |acc, (p, m)| &acc * &p.pow(*m));
        prop_assert_eq!(product, f.monic());
    }
}

#[test]
fn prime_powers_round_trip() {
    for (c, m) in [(&[1i64, 0, 1][..], 3u32), (&[1, 1, 1][..], 2), (&[1, -3, 1][..], 1), (&[2, 1, 1][..], 4)] {
        let p = Poly::from_ints(c);
        let (q, k) = prime_power_decompose(&p.pow(m).scale(&Rat::from_integer(7.into()))).unwrap();
        assert_eq!((q, k), (p.monic(), m));
    }
}
