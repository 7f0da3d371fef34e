//! Pochhammer symbols and coefficient streams of the Gauss series
//! `2F1(a,b;c;x) = sum_k (a)_k (b)_k / (c)_k x^k / k!`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};
use crate::series::PowerSeries;

/// Rising factorial `r (r+1) ... (r+k-1)`, with `(r)_0 = 1`.
pub fn pochhammer(r: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = r.clone();
    for _ in 0..k {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HypergeomParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl HypergeomParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Self { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(int(a), int(b), int(c))
    }

    /// Checks that `(c)_k != 0` for every `k <= order`.
    pub fn validate(&self, order: usize) -> Result<()> {
        for j in 0..order {
            if (&self.c + int(j as i64)).is_zero() {
                return Err(Error::InvalidParameterC {
                    c: self.c.clone(),
                    k: j + 1,
                });
            }
        }
        Ok(())
    }

    /// `(a+m, b+m; c+m)`.
    pub fn shifted(&self, m: usize) -> Result<Self> {
        let m = int(m as i64);
        let c = &self.c + &m;
        if c.is_zero() {
            return Err(Error::InvalidParameterC { c, k: 0 });
        }
        Ok(Self::new(&self.a + &m, &self.b + &m, c))
    }

    /// `phi_k = (a)_k (b)_k / (c)_k` for a single `k`.
    pub fn phi(&self, k: usize) -> Result<Rational> {
        self.validate(k)?;
        Ok(pochhammer(&self.a, k) * pochhammer(&self.b, k) / pochhammer(&self.c, k))
    }
}

impl fmt::Display for HypergeomParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{};{}",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c)
        )
    }
}

pub fn shift_params(params: &HypergeomParams, m: usize) -> Result<HypergeomParams> {
    params.shifted(m)
}

/// The values `phi_0..=phi_order` the umbra `chi` takes on its vacuum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussCoefficients {
    pub params: HypergeomParams,
    pub order: usize,
    pub phi: Vec<Rational>,
}

impl GaussCoefficients {
    pub fn get(&self, k: usize) -> &Rational {
        &self.phi[k]
    }
}

pub fn gauss_coefficients(params: &HypergeomParams, order: usize) -> Result<GaussCoefficients> {
    params.validate(order)?;
    let mut phi = Vec::with_capacity(order + 1);
    let mut cur = Rational::one();
    phi.push(cur.clone());
    for k in 0..order {
        let shift = int(k as i64);
        cur = cur * (&params.a + &shift) * (&params.b + &shift) / (&params.c + &shift);
        phi.push(cur.clone());
    }
    Ok(GaussCoefficients {
        params: params.clone(),
        order,
        phi,
    })
}

/// `2F1(a,b;c;x t)` as a series in `t`: `c_k = phi_k x^k`.
pub fn gauss_2f1_series_in_t(
    params: &HypergeomParams,
    x: &Rational,
    order: usize,
) -> Result<PowerSeries> {
    let g = gauss_coefficients(params, order)?;
    let mut xk = Rational::one();
    Ok(PowerSeries::from_fn(order, |k| {
        if k > 0 {
            xk = &xk * x;
        }
        &g.phi[k] * &xk
    }))
}
