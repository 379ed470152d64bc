//! The Stirling upper bound
//!
//! `R(X3(n,n)) ≤ (2√(2n+1) / (π(n+2))) · (1 + 1/(2n))^(2n+1)`
//!
//! involves `π` and a square root, so it cannot be compared exactly. The
//! right-hand side is evaluated in big-integer fixed point with
//! [`STIRLING_DIGITS`] decimal digits and rounded so that the rational value
//! used is never larger than the true bound: a reported pass is rigorous.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{r_x3nn_closed, BoundCheck, Relation};
use crate::error::Error;
use crate::exactnum::Rational;

/// Working precision of the fixed-point evaluation.
pub const STIRLING_DIGITS: u32 = 70;

/// `arctan(1/x) · scale`, truncated, by the alternating Taylor series.
fn arctan_inv(x: u64, scale: &BigInt) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = scale / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// `π · 10^digits` rounded up, via Machin's formula with guard digits.
fn pi_upper(digits: u32) -> BigInt {
    const GUARD: u32 = 10;
    let scale = BigInt::from(10).pow(digits + GUARD);
    let pi = BigInt::from(16) * arctan_inv(5, &scale) - BigInt::from(4) * arctan_inv(239, &scale);
    // each truncated term is off by < 1 ulp; a few hundred terms stay far
    // below the guard digits
    pi / BigInt::from(10).pow(GUARD) + BigInt::one()
}

/// A rational not exceeding `2√(2n+1)(1+1/(2n))^(2n+1) / (π(n+2))`, accurate
/// to about [`STIRLING_DIGITS`] digits.
pub fn stirling_rhs_lower(n: u32) -> Rational {
    let scale = BigInt::from(10).pow(STIRLING_DIGITS);
    // floor(√(2n+1) · 10^d)
    let sqrt = (BigInt::from(2 * n + 1) * &scale * &scale).sqrt();
    let pi = pi_upper(STIRLING_DIGITS);
    let power = Rational::new(BigInt::from(2 * n + 1), BigInt::from(2 * n)).pow(2 * n + 1);
    Rational::new(BigInt::from(2) * sqrt, pi * BigInt::from(n + 2)) * power
}

/// `R(X3(n,n)) < ` the Stirling bound, with the margin reported.
pub fn stirling_upper_bound(n: u32) -> Result<BoundCheck, Error> {
    let lhs = r_x3nn_closed(n)?;
    Ok(BoundCheck::new(
        "x3nn_stirling_upper_bound",
        vec![("n", n), ("k", n)],
        Relation::UpperBound,
        lhs,
        stirling_rhs_lower(n),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::to_decimal;

    #[test]
    fn pi_digits() {
        let pi = Rational::new(pi_upper(50), BigInt::from(10).pow(50));
        assert_eq!(
            to_decimal(&pi, 48),
            "3.141592653589793238462643383279502884197169399375"
        );
    }

    #[test]
    fn bound_values() {
        // 2√5/(4π) · (5/4)^5 = 1.08606...
        assert_eq!(to_decimal(&stirling_rhs_lower(2), 4), "1.0861");
        for n in 2..=30 {
            let c = stirling_upper_bound(n).unwrap();
            assert!(c.holds, "n = {n}");
            assert!(c.margin.is_positive());
        }
    }
}
