//! Gauss-Appell polynomials `2F1A_n(a,b;c;x)`.
//!
//! The polynomial of index `n` is `sum_k C(n,k) phi_k A_{n-k} x^k` where
//! `phi_k = (a)_k (b)_k / (c)_k` and `A_j` are the Appell numbers of the
//! family. It is built here by three independent routes (the explicit sum,
//! the same sum with the index flipped, and coefficient extraction from
//! `A(t) 2F1(a,b;c;xt)`), plus the pure recurrence driven by `beta_k`.

use num_traits::Zero;

use crate::appell::{appell_numbers, beta_coefficients, AppellFamily};
use crate::error::{Error, Result};
use crate::hypergeom::{gauss_coefficients, HypergeomParams};
use crate::polynomial::{BivariatePolynomial, Polynomial};
use crate::rational::{binomial_row, factorial, int, Rational};
use crate::series::PowerSeries;

fn big(b: &num_bigint::BigInt) -> Rational {
    Rational::from_integer(b.clone())
}

/// Explicit sum: the coefficient of `x^k` is `C(n,k) phi_k A_{n-k}`.
pub fn gap_explicit(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
) -> Result<Polynomial> {
    let phi = gauss_coefficients(params, n)?.phi;
    let a = appell_numbers(family, n).values;
    let row = binomial_row(n);
    Ok(Polynomial::new(
        (0..=n)
            .map(|k| big(&row[k]) * &phi[k] * &a[n - k])
            .collect(),
    ))
}

/// Flipped sum: accumulates `C(n,k) phi_{n-k} A_k x^{n-k}` over `k`.
pub fn gap_explicit_flipped(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
) -> Result<Polynomial> {
    let phi = gauss_coefficients(params, n)?.phi;
    let a = appell_numbers(family, n).values;
    let row = binomial_row(n);
    let mut acc = Polynomial::zero();
    for k in 0..=n {
        let c = big(&row[k]) * &phi[n - k] * &a[k];
        acc = acc.add(&Polynomial::monomial(c, n - k));
    }
    Ok(acc)
}

/// The `t^n/n!` coefficient of `A(t) 2F1(a,b;c;xt)`, with `x` kept formal by
/// running the product over polynomial-valued series.
pub fn gap_from_generating(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
) -> Result<Polynomial> {
    let phi = gauss_coefficients(params, n)?.phi;
    let gen: PowerSeries<Polynomial> = family
        .series_gen(n)
        .map(|c| Polynomial::constant(c.clone()));
    let hyp: PowerSeries<Polynomial> =
        PowerSeries::from_fn(n, |k| Polynomial::monomial(phi[k].clone(), k));
    Ok(gen.product_coeff(&hyp, n))
}

/// Builds `2F1A_0..=2F1A_n` bottom-up from
/// `2F1A_{m+1} = (ab x / c) 2F1A_m(a+1,b+1;c+1;x) + sum_k C(m,k) beta_k 2F1A_{m-k}`.
/// Returns the whole table.
pub fn gap_table_by_recurrence(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
) -> Result<Vec<Polynomial>> {
    let beta = beta_coefficients(family, n)?;
    params.validate(n)?;
    let a0 = family.series_gen(0).coeff(0);
    let mut table = vec![Polynomial::constant(a0)];
    if n == 0 {
        return Ok(table);
    }
    let shifted = params.shifted(1)?;
    let phi1 = params.phi(1)?;
    for m in 0..n {
        let lifted = gap_explicit(family, &shifted, m)?.shift_up(1).scale(&phi1);
        let row = binomial_row(m);
        let mut acc = lifted;
        for k in 0..=m {
            if beta[k].is_zero() {
                continue;
            }
            acc = acc.add(&table[m - k].scale(&(big(&row[k]) * &beta[k])));
        }
        table.push(acc);
    }
    Ok(table)
}

pub fn gap_by_recurrence(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
) -> Result<Polynomial> {
    Ok(gap_table_by_recurrence(family, params, n)?
        .pop()
        .expect("table is nonempty"))
}

pub fn gap_evaluate(p: &Polynomial, x: &Rational) -> Rational {
    p.evaluate(x)
}

/// Compares `2F1A_n(x+y)` with `sum_k C(n,k) (1 + x/y)^k phi_k y^k A_{n-k}`.
pub fn gap_argument_shift_check(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
    x: &Rational,
    y: &Rational,
) -> Result<bool> {
    if y.is_zero() {
        return Err(Error::ZeroShiftBase);
    }
    let lhs = gap_explicit(family, params, n)?.evaluate(&(x + y));
    let phi = gauss_coefficients(params, n)?.phi;
    let a = appell_numbers(family, n).values;
    let row = binomial_row(n);
    let ratio = int(1) + x / y;
    let mut rhs = Rational::zero();
    for k in 0..=n {
        rhs += big(&row[k])
            * num_traits::pow(ratio.clone(), k)
            * &phi[k]
            * num_traits::pow(y.clone(), k)
            * &a[n - k];
    }
    Ok(lhs == rhs)
}

pub fn gap_x_derivative(p: &Polynomial) -> Polynomial {
    p.derivative()
}

/// `d/dx 2F1A_n(a,b;c;x) = n (ab/c) 2F1A_{n-1}(a+1,b+1;c+1;x)`.
pub fn derivative_identity_check(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
) -> Result<bool> {
    let lhs = gap_x_derivative(&gap_explicit(family, params, n)?);
    if n == 0 {
        return Ok(lhs.is_zero());
    }
    let rhs =
        gap_explicit(family, &params.shifted(1)?, n - 1)?.scale(&(params.phi(1)? * int(n as i64)));
    Ok(lhs == rhs)
}

/// Left side of the chi-power identity evaluated on the vacuum:
/// `sum_k C(n,k) phi_{k+m} A_{n-k} x^k`.
pub fn chi_shifted_gap(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
    m: usize,
) -> Result<Polynomial> {
    let phi = gauss_coefficients(params, n + m)?.phi;
    let a = appell_numbers(family, n).values;
    let row = binomial_row(n);
    Ok(Polynomial::new(
        (0..=n)
            .map(|k| big(&row[k]) * &phi[k + m] * &a[n - k])
            .collect(),
    ))
}

/// `chi^m (x chi + a)^n phi_0 psi_0 == phi_m 2F1A_n(a+m,b+m;c+m;x)`.
pub fn chi_shift_identity_check(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
    m: usize,
) -> Result<bool> {
    let lhs = chi_shifted_gap(family, params, n, m)?;
    let rhs = gap_explicit(family, &params.shifted(m)?, n)?.scale(&params.phi(m)?);
    Ok(lhs == rhs)
}

/// The `t^n/n!` coefficient of `A(t) e^{xt} 2F1(a,b;c;y t^2)`.
pub fn bivariate_gap(
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
) -> Result<BivariatePolynomial> {
    let half = n / 2;
    let phi = gauss_coefficients(params, half)?.phi;
    let constant = |c: &Rational| {
        let mut b = BivariatePolynomial::zero();
        b.add_term(0, 0, c.clone());
        b
    };
    let gen: PowerSeries<BivariatePolynomial> = family.series_gen(n).map(constant);
    let exp_x = PowerSeries::from_fn(n, |k| {
        let mut b = BivariatePolynomial::zero();
        b.add_term(k, 0, int(1));
        b
    });
    // sum_j phi_j y^j t^{2j} / j!  has  c_{2j} = phi_j y^j (2j)!/j!
    let hyp = PowerSeries::from_fn(n, |k| {
        let mut b = BivariatePolynomial::zero();
        if k % 2 == 0 {
            let j = k / 2;
            b.add_term(0, j, &phi[j] * big(&factorial(k)) / big(&factorial(j)));
        }
        b
    });
    Ok(gen.mul(&exp_x).product_coeff(&hyp, n))
}
