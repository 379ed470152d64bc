//! Hand-derived formulas for `R(X)`, the three auxiliary inequalities they
//! rest on, and the bounds that drive the limiting behaviour.
//!
//! These are evaluated without the root-system route: every integrand is
//! assembled from binomial expansions of its power factors, so agreement with
//! [`crate::engine`] is a genuine cross-check.

mod stirling;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::Family;
use crate::error::Error;
use crate::exactnum::{factorial, Polynomial, Rational};

pub use stirling::{stirling_upper_bound, STIRLING_DIGITS};

/// Relation claimed between `lhs` and `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `lhs > rhs`
    LowerBound,
    /// `lhs < rhs`
    UpperBound,
    /// `lhs > 0` (`rhs` is zero)
    Positive,
    /// `lhs < 0` (`rhs` is zero)
    Negative,
    Equality,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::LowerBound => "lower-bound",
            Relation::UpperBound => "upper-bound",
            Relation::Positive | Relation::Negative => "sign",
            Relation::Equality => "equality",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::LowerBound | Relation::Positive => ">",
            Relation::UpperBound | Relation::Negative => "<",
            Relation::Equality => "=",
        }
    }

    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::LowerBound | Relation::Positive => lhs > rhs,
            Relation::UpperBound | Relation::Negative => lhs < rhs,
            Relation::Equality => lhs == rhs,
        }
    }
}

/// One instance of a claimed inequality or identity.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub params: Vec<(&'static str, u32)>,
    pub relation: Relation,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    /// Distance of `lhs` from `rhs` in the claimed direction; positive when
    /// the relation holds strictly. For equalities, `|lhs - rhs|`.
    pub margin: Rational,
}

impl BoundCheck {
    pub fn new(
        name: &'static str,
        params: Vec<(&'static str, u32)>,
        relation: Relation,
        lhs: Rational,
        rhs: Rational,
    ) -> Self {
        let holds = relation.holds(&lhs, &rhs);
        let margin = match relation {
            Relation::LowerBound | Relation::Positive => &lhs - &rhs,
            Relation::UpperBound | Relation::Negative => &rhs - &lhs,
            Relation::Equality => (&lhs - &rhs).abs(),
        };
        BoundCheck { name, params, relation, lhs, rhs, holds, margin }
    }

    pub fn param_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}): {:.6e} {} {:.6e} [{}]",
            self.name,
            self.param_string(),
            self.lhs.to_f64(),
            self.relation.symbol(),
            self.rhs.to_f64(),
            if self.holds { "holds" } else { "FAILS" }
        )
    }
}

/// `(c0 + c1 t)^e` expanded term by term with binomial coefficients.
fn binomial_power(c0: i64, c1: i64, e: u32) -> Polynomial {
    let (c0, c1) = (BigInt::from(c0), BigInt::from(c1));
    let mut pow0 = vec![BigInt::one(); e as usize + 1];
    let mut pow1 = vec![BigInt::one(); e as usize + 1];
    for m in 1..=e as usize {
        pow0[m] = &pow0[m - 1] * &c0;
        pow1[m] = &pow1[m - 1] * &c1;
    }
    let mut binom = BigInt::one();
    let mut coeffs = Vec::with_capacity(e as usize + 1);
    for m in 0..=e as usize {
        coeffs.push(Rational::from(&binom * &pow0[e as usize - m] * &pow1[m]));
        binom = binom * BigInt::from(e as usize - m) / BigInt::from(m + 1);
    }
    Polynomial::from_coeffs(coeffs)
}

fn integrand(powers: &[(i64, i64, u32)]) -> Polynomial {
    Polynomial::product(powers.iter().map(|&(c0, c1, e)| binomial_power(c0, c1, e)))
}

fn int(v: u32) -> Rational {
    Rational::from(v)
}

fn check_x1(n: u32) -> Result<(), Error> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("X1 formulas require n ≥ 3, got n = {n}")));
    }
    Ok(())
}

fn check_x3(n: u32, k: u32, strict: bool) -> Result<(), Error> {
    let ok = k >= 2 && if strict { n > k } else { n >= k };
    if !ok {
        let rel = if strict { ">" } else { "≥" };
        return Err(Error::InvalidParameter(format!(
            "X3 formulas require n {rel} k ≥ 2, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// `(2-t)(n+t)^(n-1)(t+2n+2)^(n(n-1)/2)` on `[-n, 2]`.
fn x1_base(n: u32) -> (Polynomial, Rational, Rational) {
    let n64 = i64::from(n);
    let p = integrand(&[(2, -1, 1), (n64, 1, n - 1), (2 * n64 + 2, 1, n * (n - 1) / 2)]);
    (p, -int(n), int(2))
}

/// `(k+t)^(k-1)(B-t)^(2n-2k+1)(C-t)^(k-1)` on `[-k, B]`, with `B = 2n-2k+2`
/// and `C = 4n-3k+4`.
fn x3_base(n: u32, k: u32) -> (Polynomial, Rational, Rational) {
    let (n64, k64) = (i64::from(n), i64::from(k));
    let b = 2 * n64 - 2 * k64 + 2;
    let c = 4 * n64 - 3 * k64 + 4;
    let p = integrand(&[(k64, 1, k - 1), (b, -1, 2 * n - 2 * k + 1), (c, -1, k - 1)]);
    (p, -int(k), Rational::from(b))
}

/// `R(X1(n)) = n ∫(2-t)(n+t)^(n-1)(t+2n+2)^(n(n-1)/2) / ∫(2-t)(n+t)^n(t+2n+2)^(n(n-1)/2)`
/// over `[-n, 2]`.
pub fn r_x1_formula(n: u32) -> Result<Rational, Error> {
    check_x1(n)?;
    let (base, lo, hi) = x1_base(n);
    let num = base.integrate(&lo, &hi)?;
    let den = (&base * &binomial_power(i64::from(n), 1, 1)).integrate(&lo, &hi)?;
    Ok(int(n) * num / den)
}

/// `R(X3(n,k)) = B ∫(k+t)^(k-1)(B-t)^(B-1)(C-t)^(k-1) / ∫(k+t)^(k-1)(B-t)^B(C-t)^(k-1)`
/// over `[-k, B]`.
pub fn r_x3_formula(n: u32, k: u32) -> Result<Rational, Error> {
    check_x3(n, k, false)?;
    let (base, lo, hi) = x3_base(n, k);
    let b = hi.clone();
    let num = base.integrate(&lo, &hi)?;
    let den = (&base * &Polynomial::linear(b.clone(), -Rational::one())).integrate(&lo, &hi)?;
    Ok(b * num / den)
}

/// `R(X3(n,n)) = 2(2n+1)! / ((n+2)(2^n n!)^2)`.
pub fn r_x3nn_closed(n: u32) -> Result<Rational, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("X3(n,n) requires n ≥ 2, got n = {n}")));
    }
    let top = BigInt::from(2) * BigInt::from(factorial(2 * n + 1));
    let f = BigInt::from(factorial(n)) << n;
    let bottom = BigInt::from(n + 2) * &f * &f;
    Ok(Rational::new(top, bottom))
}

/// `a_n = (n+2)(2^n n!)^2 / (2n+1)!`.
pub fn a_sequence(n: u32) -> Rational {
    let f = BigInt::from(factorial(n)) << n;
    Rational::new(BigInt::from(n + 2) * &f * &f, BigInt::from(factorial(2 * n + 1)))
}

/// `a_n = (n+2) ∫_0^1 (1-t^2)^n dt`, the defining integral.
pub fn a_sequence_integral(n: u32) -> Rational {
    let p = binomial_power(1, -1, n);
    // substitute t -> t^2
    let mut coeffs = vec![Rational::zero(); 2 * p.coeffs().len()];
    for (m, c) in p.coeffs().iter().enumerate() {
        coeffs[2 * m] = c.clone();
    }
    let q = Polynomial::from_coeffs(coeffs);
    int(n + 2) * q.integrate(&Rational::zero(), &Rational::one()).expect("0 ≤ 1")
}

/// `a_{n+1} = ((n+3)(2n+2)) / ((n+2)(2n+3)) · a_n`.
pub fn a_recurrence_step(n: u32, a_n: &Rational) -> Rational {
    let factor = Rational::new(BigInt::from((n + 3) * (2 * n + 2)), BigInt::from((n + 2) * (2 * n + 3)));
    factor * a_n
}

/// `∫_{-n}^2 t(2-t)(n+t)^(n-1)(t+2n+2)^(n(n-1)/2) dt`.
pub fn lemma_x1_integral(n: u32) -> Result<Rational, Error> {
    check_x1(n)?;
    let (base, lo, hi) = x1_base(n);
    base.shift(1).integrate(&lo, &hi)
}

/// The inequality behind `t̄ > 0` for `X1(n)`: the first moment above is
/// positive.
pub fn lemma_x1_sign(n: u32) -> Result<BoundCheck, Error> {
    Ok(BoundCheck::new(
        "lemma_x1_sign",
        vec![("n", n)],
        Relation::Positive,
        lemma_x1_integral(n)?,
        Rational::zero(),
    ))
}

/// The comparison integral with the last factor frozen at its value at
/// `t = 0`: `∫_{-n}^2 t(2-t)(n+t)^(n-1)(2n+2)^(n(n-1)/2) dt`, which vanishes.
pub fn lemma_x1_comparison_integral(n: u32) -> Result<Rational, Error> {
    check_x1(n)?;
    let n64 = i64::from(n);
    let p = integrand(&[(0, 1, 1), (2, -1, 1), (n64, 1, n - 1)]);
    let c = Rational::from(BigInt::from(2 * n + 2).pow(n * (n - 1) / 2));
    Ok(c * p.integrate(&-int(n), &int(2))?)
}

pub fn lemma_x1_zero_identity(n: u32) -> Result<BoundCheck, Error> {
    Ok(BoundCheck::new(
        "lemma_x1_zero_identity",
        vec![("n", n)],
        Relation::Equality,
        lemma_x1_comparison_integral(n)?,
        Rational::zero(),
    ))
}

/// `∫_{-k}^B t(k+t)^(k-1)(B-t)^(2n-2k+1)(C-t)^(k-1) dt`.
pub fn lemma_x3nk_integral(n: u32, k: u32) -> Result<Rational, Error> {
    check_x3(n, k, true)?;
    let (base, lo, hi) = x3_base(n, k);
    base.shift(1).integrate(&lo, &hi)
}

/// `∫(k+t)^k(B-t)^(2n-2k+1)(C-t)^(k-1) / ∫(k+t)^(k-1)(B-t)^(2n-2k+1)(C-t)^(k-1) < k`
/// for `n > k ≥ 2`.
pub fn lemma_x3nk_sign(n: u32, k: u32) -> Result<BoundCheck, Error> {
    check_x3(n, k, true)?;
    let (base, lo, hi) = x3_base(n, k);
    let num = (&base * &binomial_power(i64::from(k), 1, 1)).integrate(&lo, &hi)?;
    let den = base.integrate(&lo, &hi)?;
    Ok(BoundCheck::new(
        "lemma_x3nk_sign",
        vec![("n", n), ("k", k)],
        Relation::UpperBound,
        num / den,
        int(k),
    ))
}

/// `a_n > 2`, the inequality behind `t̄ < 0` for `X3(n,n)`.
pub fn lemma_x3n_sign(n: u32) -> BoundCheck {
    BoundCheck::new("lemma_x3n_sign", vec![("n", n)], Relation::LowerBound, a_sequence(n), int(2))
}

/// `R(X1(n)) > n/(n+2)`.
pub fn x1_lower_bound(n: u32) -> Result<BoundCheck, Error> {
    Ok(BoundCheck::new(
        "x1_lower_bound",
        vec![("n", n)],
        Relation::LowerBound,
        r_x1_formula(n)?,
        Rational::new(BigInt::from(n), BigInt::from(n + 2)),
    ))
}

/// `R(X3(n,k)) > (2n-2k+2)/(2n-k+2)`.
pub fn x3_lower_bound(n: u32, k: u32) -> Result<BoundCheck, Error> {
    check_x3(n, k, false)?;
    let r = if k == n { r_x3nn_closed(n)? } else { r_x3_formula(n, k)? };
    Ok(BoundCheck::new(
        "x3_lower_bound",
        vec![("n", n), ("k", k)],
        Relation::LowerBound,
        r,
        Rational::new(BigInt::from(2 * n - 2 * k + 2), BigInt::from(2 * n - k + 2)),
    ))
}

/// The bound driving each limit: `X1` and `X3(n,k)` with `k < n` get their
/// exact lower bound, `X3(n,n)` gets the Stirling upper bound.
pub fn asymptotic_bounds(family: Family, n: u32, k: Option<u32>) -> Result<BoundCheck, Error> {
    match (family, k) {
        (Family::X1, None) => x1_lower_bound(n),
        (Family::X3, Some(k)) if k == n => stirling_upper_bound(n),
        (Family::X3, Some(k)) => x3_lower_bound(n, k),
        _ => Err(Error::InvalidParameter(format!(
            "no asymptotic bound for {family} with the given parameters"
        ))),
    }
}
