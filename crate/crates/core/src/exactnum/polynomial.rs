use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{gcd_bigint, Rational};
use crate::error::Error;

/// Below this many coefficients on the shorter side, schoolbook convolution
/// beats Karatsuba's bookkeeping.
const KARATSUBA_CUTOFF: usize = 32;

/// Dense univariate polynomial with rational coefficients; `coeffs[k]` is the
/// coefficient of `t^k`. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c0 + c1 t`
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::linear(Rational::zero(), Rational::one())
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Coefficients as `nums[k] / den` with a shared positive denominator.
    pub(crate) fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            let d = c.denom();
            if !d.is_one() {
                let g = gcd_bigint(&den, d);
                den = &den / g * d;
            }
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom() == &den {
                    c.numer().clone()
                } else {
                    c.numer() * (&den / c.denom())
                }
            })
            .collect();
        (nums, den)
    }

    fn from_integer_form(nums: Vec<BigInt>, den: &BigInt) -> Self {
        Self::from_coeffs(
            nums.into_iter()
                .map(|n| Rational::new(n, den.clone()))
                .collect(),
        )
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        // Horner over integers: sum nums[k] p^k q^(deg-k) / (den q^deg)
        let (nums, den) = self.integer_form();
        let p = x.numer();
        let q = x.denom();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for (i, n) in nums.iter().rev().enumerate() {
            if i > 0 {
                qpow *= q;
            }
            acc = acc * p + n * &qpow;
        }
        Rational::new(acc, den * qpow)
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&Rational::from(x))
    }

    /// `self^exp`. Linear polynomials expand by the binomial theorem; anything
    /// else goes through repeated squaring.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        match self.degree() {
            None => Self::zero(),
            Some(0) => Self::constant(self.coeffs[0].pow(exp)),
            Some(1) => self.linear_pow(exp),
            Some(_) => {
                let mut base = self.clone();
                let mut acc = Self::one();
                let mut e = exp;
                loop {
                    if e & 1 == 1 {
                        acc = &acc * &base;
                    }
                    e >>= 1;
                    if e == 0 {
                        break acc;
                    }
                    base = &base * &base;
                }
            }
        }
    }

    fn linear_pow(&self, exp: u32) -> Self {
        let (nums, den) = self.integer_form();
        let (c0, c1) = (&nums[0], &nums[1]);
        let e = exp as usize;
        // c0^(e-k) for k = 0..=e, stored low power first
        let mut c0_pows = Vec::with_capacity(e + 1);
        let mut p = BigInt::one();
        for _ in 0..=e {
            c0_pows.push(p.clone());
            p *= c0;
        }
        let mut out = Vec::with_capacity(e + 1);
        let mut binom = BigInt::one();
        let mut c1_pow = BigInt::one();
        for k in 0..=e {
            out.push(&binom * &c0_pows[e - k] * &c1_pow);
            binom = binom * BigInt::from(e - k) / BigInt::from(k + 1);
            c1_pow *= c1;
        }
        Self::from_integer_form(out, &num_traits::pow(den, e))
    }

    /// Exact definite integral over `[lo, hi]`.
    pub fn integrate(&self, lo: &Rational, hi: &Rational) -> Result<Rational, Error> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        let Some(deg) = self.degree() else {
            return Ok(Rational::zero());
        };
        let (nums, den) = self.integer_form();
        // L = lcm(1, ..., deg + 1) clears the 1/(k+1) of the antiderivative
        let mut lcm = BigInt::one();
        for m in 2..=deg + 1 {
            let m = BigInt::from(m);
            let g = gcd_bigint(&lcm, &m);
            lcm *= m / g;
        }
        let (ph, qh) = (hi.numer(), hi.denom());
        let (pl, ql) = (lo.numer(), lo.denom());
        // sum_k nums[k] (L/(k+1)) (ph^(k+1) ql^(k+1) - pl^(k+1) qh^(k+1)) (qh ql)^(deg-k)
        //   / (L den (qh ql)^(deg+1))
        let qq = qh * ql;
        let mut qq_pows = Vec::with_capacity(deg + 1);
        let mut acc = BigInt::one();
        for _ in 0..=deg {
            qq_pows.push(acc.clone());
            acc *= &qq;
        }
        let qq_top = acc; // (qh ql)^(deg+1)
        let hi_step = ph * ql;
        let lo_step = pl * qh;
        let mut hi_pow = hi_step.clone();
        let mut lo_pow = lo_step.clone();
        let mut total = BigInt::zero();
        for (k, n) in nums.iter().enumerate() {
            if !n.is_zero() {
                let weight = &lcm / BigInt::from(k + 1);
                total += n * weight * (&hi_pow - &lo_pow) * &qq_pows[deg - k];
            }
            hi_pow *= &hi_step;
            lo_pow *= &lo_step;
        }
        Ok(Rational::new(total, lcm * den * qq_top))
    }

    /// Product of `factors`. Identical factors are grouped and raised to
    /// their multiplicity first; the distinct powers are then combined
    /// smallest-degree-first so operands stay comparable in size.
    pub fn product<I: IntoIterator<Item = Polynomial>>(factors: I) -> Self {
        let mut groups: Vec<(Polynomial, u32)> = Vec::new();
        let mut index: HashMap<Polynomial, usize> = HashMap::new();
        for f in factors {
            if let Some(&i) = index.get(&f) {
                groups[i].1 += 1;
            } else {
                index.insert(f.clone(), groups.len());
                groups.push((f, 1));
            }
        }
        Self::product_of_powers(groups.iter().map(|(f, m)| (f, *m)))
    }

    /// Product of `base^multiplicity` over the given pairs.
    pub fn product_of_powers<'a, I>(powers: I) -> Self
    where
        I: IntoIterator<Item = (&'a Polynomial, u32)>,
    {
        let parts: Vec<Polynomial> = powers.into_iter().map(|(f, m)| f.pow(m)).collect();
        Self::tree_product(parts)
    }

    fn tree_product(parts: Vec<Polynomial>) -> Self {
        if parts.iter().any(Polynomial::is_zero) {
            return Self::zero();
        }
        // min-heap on length; the sequence number keeps ordering deterministic
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
        let mut slots: Vec<Option<Polynomial>> = Vec::with_capacity(parts.len() * 2);
        for p in parts {
            heap.push(Reverse((p.coeffs.len(), slots.len())));
            slots.push(Some(p));
        }
        while heap.len() > 1 {
            let Reverse((_, a)) = heap.pop().unwrap();
            let Reverse((_, b)) = heap.pop().unwrap();
            let pa = slots[a].take().unwrap();
            let pb = slots[b].take().unwrap();
            let prod = &pa * &pb;
            heap.push(Reverse((prod.coeffs.len(), slots.len())));
            slots.push(Some(prod));
        }
        match heap.pop() {
            Some(Reverse((_, i))) => slots[i].take().unwrap(),
            None => Self::one(),
        }
    }

    /// Writes the polynomial in the variable `var`, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one() && k > 0;
            if !unit {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn add_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

/// Integer polynomial product, Karatsuba above the cutoff.
fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KARATSUBA_CUTOFF {
        return schoolbook(a, b);
    }
    if a.len() != b.len() {
        // unbalanced: cut the longer operand into chunks the size of the shorter
        let (long, short) = if a.len() > b.len() { (a, b) } else { (b, a) };
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (c, chunk) in long.chunks(short.len()).enumerate() {
            let part = convolve(chunk, short);
            add_into(&mut out[c * short.len()..], &part);
        }
        return out;
    }
    let n = a.len();
    let half = n / 2;
    let (a0, a1) = a.split_at(half);
    let (b0, b1) = b.split_at(half);
    let z0 = convolve(a0, b0);
    let z2 = convolve(a1, b1);
    let mut sa: Vec<BigInt> = a1.to_vec();
    add_into(&mut sa, a0);
    let mut sb: Vec<BigInt> = b1.to_vec();
    add_into(&mut sb, b0);
    let mut z1 = convolve(&sa, &sb);
    for (i, v) in z0.iter().enumerate() {
        z1[i] -= v;
    }
    for (i, v) in z2.iter().enumerate() {
        z1[i] -= v;
    }
    let mut out = vec![BigInt::zero(); 2 * n - 1];
    add_into(&mut out, &z0);
    add_into(&mut out[half..], &z1);
    add_into(&mut out[2 * half..], &z2);
    out
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (na, da) = self.integer_form();
        let (nb, db) = rhs.integer_form();
        let nums = convolve(&na, &nb);
        Polynomial::from_integer_form(nums, &(da * db))
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.display_in("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn lin(c0: i64, c1: i64) -> Polynomial {
        Polynomial::from_integers([c0, c1])
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::from_integers([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_integers([0, 0]).degree(), None);
    }

    #[test]
    fn difference_of_squares() {
        let p = Polynomial::product([lin(1, 1), lin(-1, 1)]);
        assert_eq!(p, Polynomial::from_integers([-1, 0, 1]));
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(Polynomial::product(Vec::new()), Polynomial::one());
    }

    #[test]
    fn product_with_zero_factor() {
        let p = Polynomial::product([lin(1, 1), Polynomial::zero()]);
        assert!(p.is_zero());
    }

    #[test]
    fn linear_pow_matches_repeated_multiplication() {
        let f = Polynomial::linear(rat(3, 2), rat(-1, 3));
        let mut naive = Polynomial::one();
        for _ in 0..9 {
            naive = &naive * &f;
        }
        assert_eq!(f.pow(9), naive);
    }

    #[test]
    fn quadratic_pow_by_squaring() {
        let f = Polynomial::from_integers([1, 0, -1]);
        let mut naive = Polynomial::one();
        for _ in 0..5 {
            naive = &naive * &f;
        }
        assert_eq!(f.pow(5), naive);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let a: Vec<BigInt> = (0..77).map(|i| BigInt::from((i * 37 % 19) as i64 - 9)).collect();
        let b: Vec<BigInt> = (0..100).map(|i| BigInt::from((i * 13 % 23) as i64 - 11)).collect();
        assert_eq!(convolve(&a, &b), schoolbook(&a, &b));
        assert_eq!(convolve(&a, &a), schoolbook(&a, &a));
    }

    #[test]
    fn eval_rational_point() {
        let p = Polynomial::from_integers([1, -2, 3]);
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
        assert_eq!(p.eval_i64(-1), rat(6, 1));
        assert_eq!(Polynomial::zero().eval_i64(5), rat(0, 1));
    }

    #[test]
    fn integrate_unit_interval() {
        let one = Polynomial::one();
        assert_eq!(one.integrate(&rat(0, 1), &rat(1, 1)).unwrap(), rat(1, 1));
    }

    #[test]
    fn integrate_one_minus_t_squared_squared() {
        let p = Polynomial::from_integers([1, 0, -1]).pow(2);
        assert_eq!(p.integrate(&rat(0, 1), &rat(1, 1)).unwrap(), rat(8, 15));
    }

    #[test]
    fn integrate_rational_endpoints() {
        // t^2 over [1/3, 1/2] = (1/8 - 1/27)/3
        let p = Polynomial::from_integers([0, 0, 1]);
        let v = p.integrate(&rat(1, 3), &rat(1, 2)).unwrap();
        assert_eq!(v, (rat(1, 8) - rat(1, 27)) / rat(3, 1));
    }

    #[test]
    fn integrate_factored_product() {
        let mut factors = vec![lin(0, 1), lin(2, -1)];
        factors.extend(std::iter::repeat_n(lin(3, 1), 2));
        factors.extend(std::iter::repeat_n(lin(8, 1), 3));
        let p = Polynomial::product(factors);
        assert_eq!(p.degree(), Some(7));
        assert_eq!(p.integrate(&rat(-3, 1), &rat(2, 1)).unwrap(), rat(78125, 8));
    }

    #[test]
    fn integrate_rejects_reversed_interval() {
        let err = Polynomial::one().integrate(&rat(1, 1), &rat(0, 1));
        assert!(matches!(err, Err(Error::InvalidInterval { .. })));
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_integers([-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(
            Polynomial::linear(rat(5, 1), rat(1, 2)).to_string(),
            "1/2t + 5"
        );
    }
}
