#![allow(dead_code)]

use gauss_appell::rational::ratio;
use gauss_appell::{AppellFamily, EulerConvention, HypergeomParams, PowerSeries, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

pub fn series(max_order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(rational(), 1..=max_order + 1).prop_map(PowerSeries::from_coeffs)
}

pub fn series_of_order(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(PowerSeries::from_coeffs)
}

/// Triples away from the non-positive integers.
pub fn params() -> impl Strategy<Value = HypergeomParams> {
    let generic = || {
        rational().prop_filter("non-positive integer", |r| {
            !gauss_appell::rational::is_nonpositive_integer(r)
        })
    };
    (generic(), generic(), generic()).prop_map(|(a, b, c)| HypergeomParams::new(a, b, c))
}

pub fn strict_families() -> Vec<AppellFamily> {
    vec![
        AppellFamily::bernoulli(),
        AppellFamily::euler(EulerConvention::Series),
        AppellFamily::euler(EulerConvention::Integer),
        AppellFamily::hermite(),
        AppellFamily::custom(vec![
            ratio(3, 2),
            ratio(-1, 3),
            ratio(5, 7),
            ratio(0, 1),
            ratio(2, 1),
        ]),
    ]
}

pub fn all_families() -> Vec<AppellFamily> {
    let mut v = strict_families();
    v.push(AppellFamily::genocchi());
    v
}

pub const SEED: u64 = 42;
