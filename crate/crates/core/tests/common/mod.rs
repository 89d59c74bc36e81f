// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use blanchfield_core::module::{validate_module, BlanchfieldModule, BlockSpec};
use blanchfield_core::linalg::DEFAULT_MAX_DIM;
use blanchfield_core::surgery::SurgeryContext;
use blanchfield_core::Poly;
use std::sync::OnceLock;

pub const T2_1: &[i64] = &[1, 0, 1];
pub const T4_1: &[i64] = &[1, 0, 0, 0, 1];
pub const CYC3: &[i64] = &[1, 1, 1];
pub const T_1: &[i64] = &[1, 1];
pub const FIG8: &[i64] = &[1, -3, 1];
pub const HYP: &[i64] = &[2, 1, 1];

pub fn sym(c: &[i64], m: u32) -> BlockSpec {
    BlockSpec::symmetric(Poly::from_ints(c), m)
}

pub fn hyp(c: &[i64], m: u32) -> BlockSpec {
    BlockSpec::hyperbolic(Poly::from_ints(c), m)
}

pub fn example_a() -> BlanchfieldModule {
    validate_module(&[sym(T4_1, 1), sym(T2_1, 1)]).unwrap()
}

pub fn example_b() -> BlanchfieldModule {
    validate_module(&[sym(T2_1, 3), sym(T_1, 2)]).unwrap()
}

/// Modules over the primes t²+1, t⁴+1, t²+t+1, t+1, t²−3t+1 and the
/// hyperbolic t²+t+2, multiplicities at most 4.
pub fn corpus() -> Vec<(&'static str, BlanchfieldModule)> {
    let specs: Vec<(&'static str, Vec<BlockSpec>)> = vec![
        ("example-a", vec![sym(T4_1, 1), sym(T2_1, 1)]),
        ("example-b", vec![sym(T2_1, 3), sym(T_1, 2)]),
        ("cyclotomic-3-4", vec![sym(CYC3, 4)]),
        ("figure-eight", vec![sym(FIG8, 1)]),
        ("mixed-2", vec![sym(T2_1, 2), sym(CYC3, 1)]),
        ("t-plus-one", vec![sym(T_1, 4), sym(T2_1, 1)]),
        ("hyperbolic", vec![hyp(HYP, 1), sym(T_1, 2)]),
        ("three-blocks", vec![sym(CYC3, 2), sym(T2_1, 1), sym(T_1, 2)]),
        ("fig8-square", vec![sym(FIG8, 2), sym(T2_1, 1)]),
        ("octic", vec![sym(T4_1, 1), sym(CYC3, 1), sym(T_1, 2)]),
    ];
    specs.into_iter().map(|(n, s)| (n, validate_module(&s).unwrap())).collect()
}

pub fn contexts() -> &'static [(&'static str, SurgeryContext)] {
    static CACHE: OnceLock<Vec<(&'static str, SurgeryContext)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        corpus().into_iter().map(|(n, m)| (n, SurgeryContext::new(&m, DEFAULT_MAX_DIM).unwrap())).collect()
    })
}
