//! Positive roots, half-squared-lengths and weight conversions for the root
//! system types `B_n`, `C_n`, `F_4` and `G_2`.
//!
//! Simple roots use the Bourbaki numbering throughout. Root coefficient
//! vectors are 0-based slices (`coeffs[m - 1]` is the coefficient of `α_m`);
//! every public index argument is 1-based.
//!
//! The invariant form is normalized so that the half-squared-lengths are
//!
//! | type  | `d_m = (α_m, α_m) / 2`                     |
//! |-------|--------------------------------------------|
//! | `B_n` | `1` for `m < n`, `1/2` for `m = n`         |
//! | `C_n` | `1` for `m < n`, `2` for `m = n`           |
//! | `F_4` | `1, 1, 1/2, 1/2`                           |
//! | `G_2` | `1/2, 3/2`                                 |
//!
//! With this choice `(α, ϖ_m) = c_m(α) d_m` for a root `α = Σ c_m α_m`.

pub mod classical;
mod weight;

use std::fmt;

use num_traits::One;

pub use weight::WeightExpr;

use crate::error::Error;
use crate::exactnum::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    B,
    C,
    F4,
    G2,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootType::B => "B",
            RootType::C => "C",
            RootType::F4 => "F",
            RootType::G2 => "G",
        })
    }
}

const F4_POSITIVE_ROOTS: [[u32; 4]; 24] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 0, 1, 1],
    [1, 1, 1, 0],
    [0, 1, 2, 0],
    [0, 1, 1, 1],
    [1, 1, 2, 0],
    [1, 1, 1, 1],
    [0, 1, 2, 1],
    [1, 2, 2, 0],
    [1, 1, 2, 1],
    [0, 1, 2, 2],
    [1, 2, 2, 1],
    [1, 1, 2, 2],
    [1, 2, 3, 1],
    [1, 2, 2, 2],
    [1, 2, 3, 2],
    [1, 2, 4, 2],
    [1, 3, 4, 2],
    [2, 3, 4, 2],
];

const G2_POSITIVE_ROOTS: [[u32; 2]; 6] = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    label: RootType,
    rank: usize,
    positive_roots: Vec<Vec<u32>>,
    /// `(α_m, α_l)` on simple roots.
    gram: Vec<Vec<Rational>>,
}

/// Builds the positive roots and invariant form for `(label, rank)`.
///
/// Supported: `B_n` and `C_n` for `n ≥ 2`, `F_4`, `G_2`.
pub fn build_root_system(label: RootType, rank: usize) -> Result<RootSystem, Error> {
    let unsupported = || Error::UnsupportedRootSystem {
        label: label.to_string(),
        rank,
    };
    match label {
        RootType::B | RootType::C => {
            if rank < 2 {
                return Err(unsupported());
            }
            let positive_roots = classical::orthonormal_positive_roots(label, rank)
                .iter()
                .map(|v| {
                    classical::to_simple_coords(label, v)
                        .expect("classical root lies in the root lattice")
                        .into_iter()
                        .map(|c| u32::try_from(c).expect("positive root"))
                        .collect()
                })
                .collect();
            let simple = classical::simple_roots(label, rank);
            let gram = simple
                .iter()
                .map(|a| {
                    simple
                        .iter()
                        .map(|b| Rational::from(classical::dot(a, b)))
                        .collect()
                })
                .collect();
            Ok(RootSystem {
                label,
                rank,
                positive_roots,
                gram,
            })
        }
        RootType::F4 => {
            if rank != 4 {
                return Err(unsupported());
            }
            let gram = vec![
                vec![rat(2, 1), rat(-1, 1), rat(0, 1), rat(0, 1)],
                vec![rat(-1, 1), rat(2, 1), rat(-1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(-1, 1), rat(1, 1), rat(-1, 2)],
                vec![rat(0, 1), rat(0, 1), rat(-1, 2), rat(1, 1)],
            ];
            Ok(RootSystem {
                label,
                rank,
                positive_roots: F4_POSITIVE_ROOTS.iter().map(|r| r.to_vec()).collect(),
                gram,
            })
        }
        RootType::G2 => {
            if rank != 2 {
                return Err(unsupported());
            }
            let gram = vec![
                vec![rat(1, 1), rat(-3, 2)],
                vec![rat(-3, 2), rat(3, 1)],
            ];
            Ok(RootSystem {
                label,
                rank,
                positive_roots: G2_POSITIVE_ROOTS.iter().map(|r| r.to_vec()).collect(),
                gram,
            })
        }
    }
}

impl RootSystem {
    pub fn label(&self) -> RootType {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    pub fn positive_roots(&self) -> &[Vec<u32>] {
        &self.positive_roots
    }

    /// `d_m = (α_m, α_m) / 2` for `m = 1..=rank`, returned 0-based.
    pub fn half_lengths(&self) -> Vec<Rational> {
        (0..self.rank)
            .map(|m| &self.gram[m][m] / rat(2, 1))
            .collect()
    }

    pub fn half_length(&self, m: usize) -> Result<Rational, Error> {
        self.check_index(m)?;
        Ok(&self.gram[m - 1][m - 1] / rat(2, 1))
    }

    /// Same root system with the invariant form multiplied by `lambda`.
    pub fn rescaled(&self, lambda: &Rational) -> RootSystem {
        assert!(lambda.is_positive(), "rescaling factor must be positive");
        RootSystem {
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(|x| x * lambda).collect())
                .collect(),
            ..self.clone()
        }
    }

    /// Cartan integer `⟨α_m^∨, α_l⟩`, 1-based.
    pub fn cartan(&self, m: usize, l: usize) -> Result<Rational, Error> {
        self.check_index(m)?;
        self.check_index(l)?;
        Ok(self.cartan_unchecked(m - 1, l - 1))
    }

    fn cartan_unchecked(&self, m: usize, l: usize) -> Rational {
        &self.gram[m][l] * rat(2, 1) / &self.gram[m][m]
    }

    pub fn check_index(&self, m: usize) -> Result<(), Error> {
        if m == 0 || m > self.rank {
            return Err(Error::IndexOutOfRange {
                index: m,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// Converts `Σ coeffs[l] α_{l+1}` to the fundamental-weight basis using
    /// `α_l = Σ_m ⟨α_m^∨, α_l⟩ ϖ_m`.
    pub fn to_weight(&self, coeffs: &[i64]) -> WeightExpr {
        assert_eq!(coeffs.len(), self.rank, "coefficient vector length");
        WeightExpr::from_pairs((0..self.rank).map(|m| {
            let c: Rational = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(l, c)| self.cartan_unchecked(m, l) * Rational::from(*c))
                .sum();
            (m + 1, c)
        }))
    }

    /// Componentwise sum of the given coefficient vectors.
    pub fn sum_of_roots<'a, I>(&self, roots: I) -> Vec<i64>
    where
        I: IntoIterator<Item = &'a Vec<u32>>,
    {
        let mut acc = vec![0i64; self.rank];
        for r in roots {
            for (a, c) in acc.iter_mut().zip(r) {
                *a += i64::from(*c);
            }
        }
        acc
    }

    /// `(α, w)` for a root given by coefficients and a weight in the
    /// fundamental basis.
    pub fn pairing_with_weight(&self, coeffs: &[u32], w: &WeightExpr) -> Rational {
        w.iter()
            .filter(|(m, _)| coeffs[*m - 1] != 0)
            .map(|(m, c)| {
                Rational::from(coeffs[m - 1]) * &self.gram[m - 1][m - 1] / rat(2, 1) * c
            })
            .sum()
    }
}

/// `ρ_G = Σ_m ϖ_m`.
pub fn rho_g(rs: &RootSystem) -> WeightExpr {
    WeightExpr::from_pairs((1..=rs.rank()).map(|m| (m, Rational::one())))
}

/// `ρ_G` recomputed as half the sum of all positive roots.
pub fn rho_g_from_roots(rs: &RootSystem) -> WeightExpr {
    let total = rs.sum_of_roots(rs.positive_roots());
    rs.to_weight(&total).scale(&rat(1, 2))
}

/// `⟨α_m^∨, w⟩`, the `ϖ_m`-coefficient of `w`.
pub fn coroot_pairing(rs: &RootSystem, m: usize, w: &WeightExpr) -> Result<Rational, Error> {
    rs.check_index(m)?;
    Ok(w.coeff(m))
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}
