//! Truncated formal power series in the exponential convention.
//!
//! A series of order `N` stores `c_0..=c_N` and stands for
//! `sum_k c_k t^k / k!`. In this convention multiplication is the binomial
//! convolution and differentiation is an index shift. Binary operations
//! truncate to the smaller of the two orders.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial_row, int, Rational};

/// Ring operations a series coefficient must support.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero_coeff() -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add_coeff(&self, other: &Self) -> Self;
    fn mul_coeff(&self, other: &Self) -> Self;
    fn scale_coeff(&self, k: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn zero_coeff() -> Self {
        Rational::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_coeff(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_coeff(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_coeff(&self, k: &Rational) -> Self {
        self * k
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries<C = Rational> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> PowerSeries<C> {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list: every series has at least `c_0`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least c_0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero_coeff(); order + 1],
        }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// `c_k`, or zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero_coeff)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_coeff())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> PowerSeries<D> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k].add_coeff(&other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map(|c| c.scale_coeff(k))
    }

    /// Binomial convolution `c_n = sum_k C(n,k) s_k u_{n-k}`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |m| self.product_coeff(other, m))
    }

    /// The single coefficient `c_m` of `self * other`, zero past either order.
    pub fn product_coeff(&self, other: &Self, m: usize) -> C {
        if m > self.order().min(other.order()) {
            return C::zero_coeff();
        }
        let row = binomial_row(m);
        let mut acc = C::zero_coeff();
        for (k, b) in row.iter().enumerate() {
            let (x, y) = (&self.coeffs[k], &other.coeffs[m - k]);
            if x.is_zero_coeff() || y.is_zero_coeff() {
                continue;
            }
            acc = acc.add_coeff(
                &x.mul_coeff(y)
                    .scale_coeff(&Rational::from_integer(b.clone())),
            );
        }
        acc
    }

    /// Formal `d/dt`; lowers the order by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderUnderflow);
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Divides by `t^v`, lowering the order by `v`. Requires `c_k = 0` for
    /// `k < v` (not checked here). In the exponential convention the
    /// coefficient `c_{j+v}` picks up the factor `j!/(j+v)!`.
    fn shift_down(&self, v: usize) -> Self {
        if v == 0 {
            return self.clone();
        }
        Self::from_fn(self.order() - v, |j| {
            let mut falling = BigInt::one();
            for i in j + 1..=j + v {
                falling *= BigInt::from(i);
            }
            self.coeffs[j + v].scale_coeff(&Rational::new(BigInt::one(), falling))
        })
    }
}

impl PowerSeries<Rational> {
    pub fn constant(value: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(int(1), order)
    }

    /// The series `t`, i.e. `c_1 = 1`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = int(1);
        }
        s
    }

    /// `e^{rate t}`: `c_k = rate^k`.
    pub fn exp_linear(rate: &Rational, order: usize) -> Self {
        let mut c = int(1);
        Self::from_fn(order, |k| {
            if k > 0 {
                c = &c * rate;
            }
            c.clone()
        })
    }

    pub fn exp(order: usize) -> Self {
        Self::exp_linear(&int(1), order)
    }

    /// Quotient `num / den`.
    ///
    /// The common factor `t^v` with `v = valuation(den)` is removed from both
    /// operands first, so the result has order `min(orders) - v`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let order = self.order().min(den.order());
        let (num, den) = (self.truncate(order), den.truncate(order));
        let v = den
            .valuation()
            .ok_or(Error::DivisionByZeroSeries { order })?;
        if let Some(vn) = num.valuation() {
            if vn < v {
                return Err(Error::PoleAtOrigin { num: vn, den: v });
            }
        }
        let num = num.shift_down(v);
        let den = den.shift_down(v);
        let inv_d0 = den.coeffs[0].recip();
        let n = num.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let row = binomial_row(m);
            let mut acc = num.coeffs[m].clone();
            for k in 0..m {
                let d = &den.coeffs[m - k];
                if !d.is_zero() {
                    acc -= Rational::from_integer(row[k].clone()) * &out[k] * d;
                }
            }
            out.push(acc * &inv_d0);
        }
        Ok(Self { coeffs: out })
    }

    /// `e^{-t^2/2}`: `c_{2m} = (2m)! (-1/2)^m / m!`, odd coefficients zero.
    pub fn exp_of_neg_half_t_squared(order: usize) -> Self {
        use crate::rational::factorial;
        Self::from_fn(order, |k| {
            if k % 2 == 1 {
                return int(0);
            }
            let m = k / 2;
            let half = num_traits::pow(crate::rational::ratio(-1, 2), m);
            Rational::from_integer(factorial(k)) * half / Rational::from_integer(factorial(m))
        })
    }
}

pub fn series_add(s: &PowerSeries, u: &PowerSeries) -> PowerSeries {
    s.add(u)
}

pub fn series_mul(s: &PowerSeries, u: &PowerSeries) -> PowerSeries {
    s.mul(u)
}

pub fn series_div(num: &PowerSeries, den: &PowerSeries) -> Result<PowerSeries> {
    num.div(den)
}

pub fn series_derivative(s: &PowerSeries) -> Result<PowerSeries> {
    s.derivative()
}

pub fn series_exp_of_neg_half_t_squared(order: usize) -> PowerSeries {
    PowerSeries::exp_of_neg_half_t_squared(order)
}
