//! A finite model of the two-umbra calculus behind Gauss-Appell polynomials.
//!
//! A state is a formal linear combination of monomials
//! `chi^p (x chi)^j a^m`. Operators act on the exponents only; nothing is
//! evaluated until [`project`] applies both vacua, sending `chi^k` to
//! `phi_k = (a)_k (b)_k / (c)_k` and `a^m` to the Appell number `A_m`. The
//! bare `chi` prefix and the `x chi` power share one vacuum, so a term
//! `(p, j, m)` projects to `phi_{p+j} A_m x^j`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::appell::{appell_numbers, beta_coefficients, AppellFamily};
use crate::error::{Error, Result};
use crate::hypergeom::{gauss_coefficients, HypergeomParams};
use crate::polynomial::Polynomial;
use crate::rational::{binomial_row, factorial, int, Rational};

/// Exponents of `chi^chi (x chi)^u a^a`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub chi: usize,
    pub u: usize,
    pub a: usize,
}

impl Monomial {
    pub fn new(chi: usize, u: usize, a: usize) -> Self {
        Self { chi, u, a }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UmbralState {
    terms: BTreeMap<Monomial, Rational>,
}

impl UmbralState {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn term(mono: Monomial, coeff: Rational) -> Self {
        let mut s = Self::empty();
        s.add_term(mono, coeff);
        s
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(mono).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn coeff(&self, mono: Monomial) -> Rational {
        self.terms
            .get(&mono)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::empty();
        }
        Self {
            terms: self.terms.iter().map(|(&m, c)| (m, c * k)).collect(),
        }
    }

    fn map_terms(&self, f: impl Fn(Monomial) -> Option<(Monomial, usize)>) -> Self {
        let mut out = Self::empty();
        for (&m, c) in &self.terms {
            if let Some((to, factor)) = f(m) {
                out.add_term(to, c * int(factor as i64));
            }
        }
        out
    }

    /// Largest `x chi` exponent, or `None` when empty.
    pub fn u_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.u).max()
    }

    pub fn a_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.a).max()
    }
}

/// `(x chi + a)^n = sum_k C(n,k) (x chi)^k a^{n-k}`.
pub fn binomial_state(n: usize) -> UmbralState {
    let row = binomial_row(n);
    let mut s = UmbralState::empty();
    for (k, c) in row.into_iter().enumerate() {
        s.add_term(Monomial::new(0, k, n - k), Rational::from_integer(c));
    }
    s
}

/// Vacuum tables for one family and parameter triple.
#[derive(Clone, Debug)]
pub struct ProjectionContext {
    pub family: AppellFamily,
    pub params: HypergeomParams,
    pub max_order: usize,
    phi: Vec<Rational>,
    numbers: Vec<Rational>,
}

impl ProjectionContext {
    pub fn new(family: &AppellFamily, params: &HypergeomParams, max_order: usize) -> Result<Self> {
        Ok(Self {
            family: family.clone(),
            params: params.clone(),
            max_order,
            phi: gauss_coefficients(params, max_order)?.phi,
            numbers: appell_numbers(family, max_order).values,
        })
    }
}

pub fn project(s: &UmbralState, ctx: &ProjectionContext) -> Result<Polynomial> {
    let mut coeffs: Vec<Rational> = Vec::new();
    for (m, c) in s.terms() {
        let k = m.chi + m.u;
        let needed = k.max(m.a);
        if needed > ctx.max_order {
            return Err(Error::OrderExceeded {
                needed,
                max: ctx.max_order,
            });
        }
        if coeffs.len() <= m.u {
            coeffs.resize(m.u + 1, Rational::zero());
        }
        coeffs[m.u] += c * &ctx.phi[k] * &ctx.numbers[m.a];
    }
    Ok(Polynomial::new(coeffs))
}

/// Derivative with respect to `x chi`.
pub fn op_d_u(s: &UmbralState) -> UmbralState {
    s.map_terms(|m| (m.u > 0).then(|| (Monomial::new(m.chi, m.u - 1, m.a), m.u)))
}

/// Derivative with respect to `a`.
pub fn op_d_v(s: &UmbralState) -> UmbralState {
    s.map_terms(|m| (m.a > 0).then(|| (Monomial::new(m.chi, m.u, m.a - 1), m.a)))
}

/// Multiplication by `x chi`.
pub fn op_mul_u(s: &UmbralState) -> UmbralState {
    s.map_terms(|m| Some((Monomial::new(m.chi, m.u + 1, m.a), 1)))
}

/// Prefix by `chi^power`.
pub fn op_chi(s: &UmbralState, power: usize) -> UmbralState {
    s.map_terms(|m| Some((Monomial::new(m.chi + power, m.u, m.a), 1)))
}

fn iterate(s: &UmbralState, times: usize, op: fn(&UmbralState) -> UmbralState) -> UmbralState {
    (0..times).fold(s.clone(), |acc, _| op(&acc))
}

pub fn op_d_u_pow(s: &UmbralState, times: usize) -> UmbralState {
    iterate(s, times, op_d_u)
}

pub fn op_d_v_pow(s: &UmbralState, times: usize) -> UmbralState {
    iterate(s, times, op_d_v)
}

/// Lowering operator `(1/n) D` in the chosen umbral variable.
pub fn lowering(s: &UmbralState, n: usize, variable: Variable) -> UmbralState {
    assert!(n >= 1, "lowering is defined for n >= 1");
    let d = match variable {
        Variable::U => op_d_u(s),
        Variable::V => op_d_v(s),
    };
    d.scale(&Rational::new(1.into(), n.into()))
}

/// Which umbral variable a derivative acts on: `U` is `x chi`, `V` is `a`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variable {
    U,
    V,
}

/// `sum_{k=0}^{n} beta_k/k! * after(D^k s)` with `D` the derivative in `var`.
fn beta_sum(
    s: &UmbralState,
    beta: &[Rational],
    n: usize,
    var: Variable,
    after: impl Fn(&UmbralState) -> UmbralState,
) -> UmbralState {
    let mut acc = UmbralState::empty();
    let mut cur = s.clone();
    for (k, b) in beta.iter().enumerate().take(n + 1) {
        if cur.is_empty() {
            break;
        }
        if !b.is_zero() {
            let w = b / Rational::from_integer(factorial(k));
            acc = acc.add(&after(&cur).scale(&w));
        }
        cur = match var {
            Variable::U => op_d_u(&cur),
            Variable::V => op_d_v(&cur),
        };
    }
    acc
}

fn raising(
    s: &UmbralState,
    family: &AppellFamily,
    order_n: usize,
    var: Variable,
) -> Result<UmbralState> {
    let beta = beta_coefficients(family, order_n)?;
    Ok(op_mul_u(s).add(&beta_sum(s, &beta, order_n, var, UmbralState::clone)))
}

/// `x chi + sum_{k=0}^{n} beta_k/k! D_u^k`.
pub fn raising_u(s: &UmbralState, family: &AppellFamily, order_n: usize) -> Result<UmbralState> {
    raising(s, family, order_n, Variable::U)
}

/// `x chi + sum_{k=0}^{n} beta_k/k! D_v^k`.
pub fn raising_v(s: &UmbralState, family: &AppellFamily, order_n: usize) -> Result<UmbralState> {
    raising(s, family, order_n, Variable::V)
}

/// The four operator equations obtained by composing a lowering operator
/// with a raising operator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OdeKind {
    /// `1 + x chi D_u + sum beta_k/k! D_u^{k+1}`
    OdeU,
    /// `x chi D_v + sum beta_k/k! D_v^{k+1}`
    OdeV,
    /// `1 + x chi D_u + sum beta_k/k! D_u D_v^k`
    PdeUv,
    /// `x chi D_v + sum beta_k/k! D_v D_u^k`
    PdeVu,
}

impl OdeKind {
    pub const ALL: [OdeKind; 4] = [OdeKind::OdeU, OdeKind::OdeV, OdeKind::PdeUv, OdeKind::PdeVu];

    pub fn as_str(self) -> &'static str {
        match self {
            OdeKind::OdeU => "ode_u",
            OdeKind::OdeV => "ode_v",
            OdeKind::PdeUv => "pde_uv",
            OdeKind::PdeVu => "pde_vu",
        }
    }

    /// Whether the operator carries the standalone identity term.
    pub fn has_identity_term(self) -> bool {
        matches!(self, OdeKind::OdeU | OdeKind::PdeUv)
    }
}

/// Applies the operator of `kind`, minus `constant` times the identity, to
/// `(x chi + a)^n` and projects.
pub fn ode_residual(
    kind: OdeKind,
    family: &AppellFamily,
    params: &HypergeomParams,
    n: usize,
    constant: &Rational,
) -> Result<Polynomial> {
    let beta = beta_coefficients(family, n)?;
    let s = binomial_state(n);
    let body = match kind {
        OdeKind::OdeU => {
            s.add(&op_mul_u(&op_d_u(&s)))
                .add(&beta_sum(&s, &beta, n, Variable::U, op_d_u))
        }
        OdeKind::OdeV => op_mul_u(&op_d_v(&s)).add(&beta_sum(&s, &beta, n, Variable::V, op_d_v)),
        OdeKind::PdeUv => {
            s.add(&op_mul_u(&op_d_u(&s)))
                .add(&beta_sum(&s, &beta, n, Variable::V, op_d_u))
        }
        OdeKind::PdeVu => op_mul_u(&op_d_v(&s)).add(&beta_sum(&s, &beta, n, Variable::U, op_d_v)),
    };
    let residual = body.sub(&s.scale(constant));
    let ctx = ProjectionContext::new(family, params, n + 1)?;
    project(&residual, &ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss_appell::gap_explicit;
    use crate::rational::ratio;

    fn ctx(n: usize) -> ProjectionContext {
        ProjectionContext::new(
            &AppellFamily::bernoulli(),
            &HypergeomParams::from_ints(3, 1, 7),
            n,
        )
        .unwrap()
    }

    #[test]
    fn binomial_states() {
        let s0 = binomial_state(0);
        assert_eq!(s0.len(), 1);
        assert_eq!(s0.coeff(Monomial::new(0, 0, 0)), int(1));
        let s2 = binomial_state(2);
        assert_eq!(s2.coeff(Monomial::new(0, 0, 2)), int(1));
        assert_eq!(s2.coeff(Monomial::new(0, 1, 1)), int(2));
        assert_eq!(s2.coeff(Monomial::new(0, 2, 0)), int(1));
        let c: Vec<Rational> = (0..=5)
            .map(|k| binomial_state(5).coeff(Monomial::new(0, k, 5 - k)))
            .collect();
        assert_eq!(c, [1, 5, 10, 10, 5, 1].map(int).to_vec());
    }

    #[test]
    fn projection_basics() {
        let c = ctx(6);
        assert_eq!(
            project(&UmbralState::empty(), &c).unwrap(),
            Polynomial::zero()
        );
        let chi = UmbralState::term(Monomial::new(1, 0, 0), int(1));
        assert_eq!(
            project(&chi, &c).unwrap(),
            Polynomial::constant(ratio(3, 7))
        );
        let p = HypergeomParams::from_ints(3, 1, 7);
        for n in 0..=6 {
            assert_eq!(
                project(&binomial_state(n), &c).unwrap(),
                gap_explicit(&AppellFamily::bernoulli(), &p, n).unwrap()
            );
        }
        assert_eq!(
            project(&binomial_state(7), &c),
            Err(Error::OrderExceeded { needed: 7, max: 6 })
        );
    }

    #[test]
    fn derivatives() {
        let t = UmbralState::term(Monomial::new(2, 0, 3), int(5));
        assert!(op_d_u(&t).is_empty());
        assert_eq!(
            op_d_v(&t),
            UmbralState::term(Monomial::new(2, 0, 2), int(15))
        );
        assert!(op_d_v(&UmbralState::term(Monomial::new(0, 4, 0), int(1))).is_empty());
        assert!(op_d_u_pow(&binomial_state(4), 5).is_empty());
        // D_u (x chi + a)^n = n (x chi + a)^{n-1} as states
        assert_eq!(op_d_u(&binomial_state(5)), binomial_state(4).scale(&int(5)));
        assert_eq!(op_d_v(&binomial_state(5)), binomial_state(4).scale(&int(5)));
    }

    #[test]
    fn chi_prefix() {
        let s = binomial_state(3);
        assert_eq!(op_chi(&s, 0), s);
        assert_eq!(op_chi(&op_chi(&s, 1), 1), op_chi(&s, 2));
    }

    #[test]
    fn commutator_is_identity() {
        let mut s = UmbralState::empty();
        s.add_term(Monomial::new(1, 0, 2), ratio(2, 3));
        s.add_term(Monomial::new(0, 3, 1), int(-4));
        let lhs = op_d_u(&op_mul_u(&s)).sub(&op_mul_u(&op_d_u(&s)));
        assert_eq!(lhs, s);
        assert!(op_mul_u(&UmbralState::empty()).is_empty());
    }

    #[test]
    fn raising_on_empty() {
        let f = AppellFamily::bernoulli();
        assert!(raising_u(&UmbralState::empty(), &f, 3).unwrap().is_empty());
        assert!(raising_v(&UmbralState::empty(), &f, 3).unwrap().is_empty());
        assert!(matches!(
            raising_u(&binomial_state(2), &AppellFamily::genocchi(), 2),
            Err(Error::NotStrictAppell(_))
        ));
    }

    #[test]
    fn ode_constants() {
        let f = AppellFamily::bernoulli();
        let p = HypergeomParams::from_ints(3, 1, 7);
        for n in 1..=6 {
            let nn = int(n as i64);
            let gap = gap_explicit(&f, &p, n).unwrap();
            assert!(ode_residual(OdeKind::OdeV, &f, &p, n, &nn)
                .unwrap()
                .is_zero());
            assert!(ode_residual(OdeKind::PdeVu, &f, &p, n, &nn)
                .unwrap()
                .is_zero());
            assert!(ode_residual(OdeKind::OdeU, &f, &p, n, &(&nn + int(1)))
                .unwrap()
                .is_zero());
            assert_eq!(ode_residual(OdeKind::OdeU, &f, &p, n, &nn).unwrap(), gap);
            assert_eq!(ode_residual(OdeKind::PdeUv, &f, &p, n, &nn).unwrap(), gap);
        }
    }
}
