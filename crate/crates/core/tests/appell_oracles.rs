mod common;

use common::strict_families;
use gauss_appell::rational::{binomial, int, ratio};
use gauss_appell::{
    appell_numbers, beta_coefficients, AppellFamily, EulerConvention, PowerSeries, Rational,
};
use num_traits::Zero;

#[test]
fn log_derivative_reconstructs_derivative() {
    for fam in strict_families() {
        for order in 0..=16 {
            let a = fam.series_gen(order + 1);
            let beta = PowerSeries::from_coeffs(beta_coefficients(&fam, order).unwrap());
            assert_eq!(a.mul(&beta), a.derivative().unwrap(), "{fam} order {order}");
        }
    }
}

/// `B_n(1)` from the independent generator `t e^t / (e^t - 1)`.
fn bernoulli_at_one(order: usize) -> Vec<Rational> {
    let n = order + 1;
    let num = PowerSeries::t(n).mul(&PowerSeries::exp(n));
    let den = PowerSeries::exp(n).sub(&PowerSeries::one(n));
    num.div(&den).unwrap().into_coeffs()
}

#[test]
fn bernoulli_beta_matches_values_at_one() {
    let beta = beta_coefficients(&AppellFamily::bernoulli(), 12).unwrap();
    let b1 = bernoulli_at_one(13);
    for k in 0..=12 {
        assert_eq!(beta[k], -&b1[k + 1] / int(k as i64 + 1), "k = {k}");
    }
    assert_eq!(b1[1], ratio(1, 2));
}

#[test]
fn bernoulli_numbers_satisfy_classical_recurrence() {
    // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, with B_1 = -1/2
    let b = appell_numbers(&AppellFamily::bernoulli(), 20).values;
    for n in 1..20 {
        let s: Rational = (0..=n)
            .map(|k| Rational::from_integer(binomial(n + 1, k)) * &b[k])
            .sum();
        assert!(s.is_zero(), "n = {n}");
    }
}

#[test]
fn euler_integer_numbers_by_brute_force() {
    // sech t * cosh t = 1  =>  sum_{k even} C(n,k) E_{n-k} = [n = 0]
    let n_max = 14;
    let mut oracle: Vec<Rational> = Vec::new();
    for n in 0..=n_max {
        let mut s = if n == 0 { int(1) } else { int(0) };
        for k in (2..=n).step_by(2) {
            s -= Rational::from_integer(binomial(n, k)) * &oracle[n - k];
        }
        oracle.push(s);
    }
    let e = appell_numbers(&AppellFamily::euler(EulerConvention::Integer), n_max).values;
    assert_eq!(e, oracle);
    assert_eq!(e[..7].to_vec(), [1, 0, -1, 0, 5, 0, -61].map(int).to_vec());
}

#[test]
fn euler_conventions_are_related() {
    // integer numbers are 2^n times the series-convention polynomial values at 1/2
    // (E_n = 2^n E_n(1/2)); E_n(1/2) = sum_k C(n,k) (1/2)^{n-k} e_k with e_k the series numbers
    let series = appell_numbers(&AppellFamily::euler(EulerConvention::Series), 12).values;
    let integer = appell_numbers(&AppellFamily::euler(EulerConvention::Integer), 12).values;
    for (n, want) in integer.iter().enumerate() {
        let val: Rational = (0..=n)
            .map(|k| {
                Rational::from_integer(binomial(n, k))
                    * num_traits::pow(ratio(1, 2), n - k)
                    * &series[k]
            })
            .sum();
        assert_eq!(&(val * num_traits::pow(int(2), n)), want, "n = {n}");
    }
}

#[test]
fn genocchi_numbers_are_scaled_euler_series_numbers() {
    // 2t/(e^t+1) = t * 2/(e^t+1)  =>  G_n = n e_{n-1}
    let g = appell_numbers(&AppellFamily::genocchi(), 12).values;
    let e = appell_numbers(&AppellFamily::euler(EulerConvention::Series), 12).values;
    assert!(g[0].is_zero());
    for n in 1..=12 {
        assert_eq!(g[n], int(n as i64) * &e[n - 1]);
    }
}
