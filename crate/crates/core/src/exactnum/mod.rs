//! Exact arithmetic: big rationals, dense rational polynomials, definite
//! integration, factorials and decimal rendering.

mod polynomial;
mod rational;

pub use polynomial::Polynomial;
pub use rational::{rat, Rational};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::Error;

/// Product of all `factors`; the empty product is `1`.
pub fn poly_product<I: IntoIterator<Item = Polynomial>>(factors: I) -> Polynomial {
    Polynomial::product(factors)
}

/// `∫_lo^hi p(t) dt`, exact.
pub fn integrate(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Rational, Error> {
    p.integrate(lo, hi)
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Decimal expansion of `r` with exactly `digits` fractional digits, rounded
/// half to even.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r.numer().abs() * &scale;
    let den = r.denom();
    let (mut q, rem) = scaled.div_rem(den);
    let twice = rem * 2;
    if twice > *den || (twice == *den && q.is_odd()) {
        q += 1;
    }
    let mut s = q.to_string();
    if s.len() <= digits {
        s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
    }
    let (int, frac) = s.split_at(s.len() - digits);
    let negative = r.is_negative() && q.is_positive();
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        // 13! by repeated multiplication
        let mut oracle = 1u64;
        for k in 1..=13u64 {
            oracle *= k;
        }
        assert_eq!(factorial(2 * 6 + 1), BigUint::from(oracle));
        assert_eq!(oracle, 6_227_020_800);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat(56, 67), 4), "0.8358");
        assert_eq!(to_decimal(&rat(1, 2), 1), "0.5");
        assert_eq!(to_decimal(&rat(15, 16), 4), "0.9375");
        assert_eq!(to_decimal(&rat(-11, 28), 3), "-0.393");
        assert_eq!(to_decimal(&rat(123, 1), 2), "123.00");
        assert_eq!(to_decimal(&rat(1, 1000), 2), "0.00");
        assert_eq!(to_decimal(&rat(-1, 1000), 2), "0.00");
    }

    #[test]
    fn decimal_ties_go_to_even() {
        assert_eq!(to_decimal(&rat(1, 8), 2), "0.12");
        assert_eq!(to_decimal(&rat(3, 8), 2), "0.38");
        assert_eq!(to_decimal(&rat(5, 2), 0), "2");
        assert_eq!(to_decimal(&rat(-5, 8), 2), "-0.62");
    }

    #[test]
    fn free_functions_delegate() {
        let p = poly_product([
            Polynomial::from_integers([1, 1]),
            Polynomial::from_integers([-1, 1]),
        ]);
        assert_eq!(p, Polynomial::from_integers([-1, 0, 1]));
        assert_eq!(integrate(&p, &rat(-1, 1), &rat(1, 1)).unwrap(), rat(-4, 3));
    }
}
