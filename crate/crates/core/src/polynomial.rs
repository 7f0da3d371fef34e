//! Exact univariate and bivariate polynomials over `Rational`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{format_rational, int, Rational};
use crate::series::Coefficient;

/// Polynomial in `x`, coefficients ascending by degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(int(1), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }
}

impl Coefficient for Polynomial {
    fn zero_coeff() -> Self {
        Polynomial::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_coeff(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_coeff(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale_coeff(&self, k: &Rational) -> Self {
        self.scale(k)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                f.write_str(&format_rational(&mag))?;
            }
            match k {
                0 => {}
                1 => f.write_str(if show_coeff { "*x" } else { "x" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `x` and `y` keyed by exponent pair `(i, j)` for `x^i y^j`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j))
            .sum()
    }

    /// The polynomial in `x` obtained at `y = 0`.
    pub fn at_y_zero(&self) -> Polynomial {
        let mut v = Vec::new();
        for (&(i, j), c) in &self.coeffs {
            if j == 0 {
                if v.len() <= i {
                    v.resize(i + 1, Rational::zero());
                }
                v[i] = c.clone();
            }
        }
        Polynomial::new(v)
    }

    /// The polynomial in `y` obtained at `x = 0`.
    pub fn at_x_zero(&self) -> Polynomial {
        let mut v = Vec::new();
        for (&(i, j), c) in &self.coeffs {
            if i == 0 {
                if v.len() <= j {
                    v.resize(j + 1, Rational::zero());
                }
                v[j] = c.clone();
            }
        }
        Polynomial::new(v)
    }
}

impl Coefficient for BivariatePolynomial {
    fn zero_coeff() -> Self {
        BivariatePolynomial::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_coeff(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, c.clone());
        }
        out
    }
    fn mul_coeff(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.coeffs {
            for (&(i2, j2), c2) in &other.coeffs {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
    fn scale_coeff(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }
}
