//! Appell families: the generator `A(t)`, the Appell numbers `A_n`, and the
//! coefficients `beta_k` of the logarithmic derivative `A'(t)/A(t)`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::series::PowerSeries;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyName {
    Bernoulli,
    Euler,
    Genocchi,
    Hermite,
    Custom,
}

impl FamilyName {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Bernoulli => "bernoulli",
            FamilyName::Euler => "euler",
            FamilyName::Genocchi => "genocchi",
            FamilyName::Hermite => "hermite",
            FamilyName::Custom => "custom",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bernoulli" => Ok(FamilyName::Bernoulli),
            "euler" => Ok(FamilyName::Euler),
            "genocchi" => Ok(FamilyName::Genocchi),
            "hermite" => Ok(FamilyName::Hermite),
            "custom" => Ok(FamilyName::Custom),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// Which numbers the Euler family produces.
///
/// `Series` reads the coefficients of `2/(e^t+1)`; `Integer` reads those of
/// `sech t`, the secant Euler numbers `1, 0, -1, 0, 5, ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum EulerConvention {
    Series,
    #[default]
    Integer,
}

impl EulerConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            EulerConvention::Series => "series",
            EulerConvention::Integer => "integer",
        }
    }
}

impl FromStr for EulerConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "series" => Ok(EulerConvention::Series),
            "integer" => Ok(EulerConvention::Integer),
            _ => Err(format!(
                "unknown Euler convention `{s}` (expected series|integer)"
            )),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Generator {
    Bernoulli,
    Euler(EulerConvention),
    Genocchi,
    Hermite,
    /// Leading coefficients of `A(t)`; zero beyond the list.
    Custom(Vec<Rational>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AppellFamily {
    generator: Generator,
}

impl AppellFamily {
    pub fn bernoulli() -> Self {
        Self {
            generator: Generator::Bernoulli,
        }
    }

    pub fn euler(convention: EulerConvention) -> Self {
        Self {
            generator: Generator::Euler(convention),
        }
    }

    pub fn genocchi() -> Self {
        Self {
            generator: Generator::Genocchi,
        }
    }

    pub fn hermite() -> Self {
        Self {
            generator: Generator::Hermite,
        }
    }

    pub fn custom(coeffs: Vec<Rational>) -> Self {
        Self {
            generator: Generator::Custom(coeffs),
        }
    }

    pub fn name(&self) -> FamilyName {
        match self.generator {
            Generator::Bernoulli => FamilyName::Bernoulli,
            Generator::Euler(_) => FamilyName::Euler,
            Generator::Genocchi => FamilyName::Genocchi,
            Generator::Hermite => FamilyName::Hermite,
            Generator::Custom(_) => FamilyName::Custom,
        }
    }

    pub fn euler_convention(&self) -> Option<EulerConvention> {
        match self.generator {
            Generator::Euler(c) => Some(c),
            _ => None,
        }
    }

    /// `A(t)` truncated at exactly `order`.
    pub fn series_gen(&self, order: usize) -> PowerSeries {
        let one = |n| PowerSeries::one(n);
        let exp = |n| PowerSeries::exp(n);
        let s = match &self.generator {
            // the t-cancellation in division costs one order
            Generator::Bernoulli => {
                PowerSeries::t(order + 1).div(&exp(order + 1).sub(&one(order + 1)))
            }
            Generator::Euler(EulerConvention::Series) => {
                PowerSeries::constant(int(2), order).div(&exp(order).add(&one(order)))
            }
            Generator::Euler(EulerConvention::Integer) => exp(order)
                .scale(&int(2))
                .div(&PowerSeries::exp_linear(&int(2), order).add(&one(order))),
            Generator::Genocchi => PowerSeries::t(order)
                .scale(&int(2))
                .div(&exp(order).add(&one(order))),
            Generator::Hermite => Ok(PowerSeries::exp_of_neg_half_t_squared(order)),
            Generator::Custom(c) => Ok(PowerSeries::from_fn(order, |k| {
                c.get(k).cloned().unwrap_or_else(|| int(0))
            })),
        };
        s.expect("built-in generators have nonzero denominators of matching valuation")
    }

    /// `A_0 != 0`.
    pub fn is_strict(&self) -> bool {
        !self.series_gen(0).coeff(0).is_zero()
    }
}

impl fmt::Display for AppellFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.euler_convention() {
            Some(c) => write!(f, "euler({})", c.as_str()),
            None => f.write_str(self.name().as_str()),
        }
    }
}

/// Looks up one of the built-in families by name. `custom` is not built in;
/// construct it with [`AppellFamily::custom`].
pub fn builtin_family(name: &str, euler_convention: EulerConvention) -> Result<AppellFamily> {
    match name.parse::<FamilyName>()? {
        FamilyName::Bernoulli => Ok(AppellFamily::bernoulli()),
        FamilyName::Euler => Ok(AppellFamily::euler(euler_convention)),
        FamilyName::Genocchi => Ok(AppellFamily::genocchi()),
        FamilyName::Hermite => Ok(AppellFamily::hermite()),
        FamilyName::Custom => Err(Error::UnknownFamily(name.to_string())),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AppellNumbers {
    pub family: AppellFamily,
    pub order: usize,
    pub values: Vec<Rational>,
}

pub fn appell_numbers(family: &AppellFamily, order: usize) -> AppellNumbers {
    AppellNumbers {
        family: family.clone(),
        order,
        values: family.series_gen(order).into_coeffs(),
    }
}

/// `beta_0..=beta_order` with `A'(t)/A(t) = sum_k beta_k t^k/k!`.
pub fn beta_coefficients(family: &AppellFamily, order: usize) -> Result<Vec<Rational>> {
    let a = family.series_gen(order + 1);
    if a.coeff(0).is_zero() {
        return Err(Error::NotStrictAppell(family.to_string()));
    }
    let q = a.derivative()?.div(&a)?;
    Ok(q.into_coeffs())
}
