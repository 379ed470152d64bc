use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::exactnum::Rational;

/// A weight written in the fundamental-weight basis, `Σ coeff_m ϖ_m`.
/// Indices are 1-based; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeightExpr {
    coords: BTreeMap<usize, Rational>,
}

impl WeightExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The fundamental weight `ϖ_m`.
    pub fn fundamental(m: usize) -> Self {
        Self::from_pairs([(m, Rational::from(1))])
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut w = Self::zero();
        for (m, c) in pairs {
            w.add_term(m, &c);
        }
        w
    }

    pub fn add_term(&mut self, m: usize, c: &Rational) {
        let entry = self.coords.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&m);
        }
    }

    pub fn coeff(&self, m: usize) -> Rational {
        self.coords.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Indices with a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_pairs(self.coords.iter().map(|(m, x)| (*m, x * c)))
    }
}

impl Add<&WeightExpr> for &WeightExpr {
    type Output = WeightExpr;
    fn add(self, rhs: &WeightExpr) -> WeightExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.coords {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&WeightExpr> for &WeightExpr {
    type Output = WeightExpr;
    fn sub(self, rhs: &WeightExpr) -> WeightExpr {
        self + &(-rhs)
    }
}

impl Neg for &WeightExpr {
    type Output = WeightExpr;
    fn neg(self) -> WeightExpr {
        WeightExpr {
            coords: self.coords.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.coords.iter().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            if mag == Rational::from(1) {
                write!(f, "ϖ{m}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}ϖ{m}")?;
            } else {
                write!(f, "({mag})ϖ{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
