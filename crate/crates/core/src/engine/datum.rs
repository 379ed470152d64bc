use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::rootsystems::{build_root_system, RootSystem, RootType};

/// Default ceiling on `n` for exact computation. `X1(100)` multiplies out a
/// DH polynomial of degree ~5000 and takes minutes.
pub const DEFAULT_MAX_N: u32 = 100;

/// The five families of nonhomogeneous horospherical manifolds of Picard
/// number one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X1,
    X2,
    X3,
    X4,
    X5,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::X1, Family::X2, Family::X3, Family::X4, Family::X5];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::X1 => "X1",
            Family::X2 => "X2",
            Family::X3 => "X3",
            Family::X4 => "X4",
            Family::X5 => "X5",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "X1" => Ok(Family::X1),
            "X2" => Ok(Family::X2),
            "X3" => Ok(Family::X3),
            "X4" => Ok(Family::X4),
            "X5" => Ok(Family::X5),
            _ => Err(Error::InvalidDatum(format!(
                "unknown family `{s}` (expected one of X1, X2, X3, X4, X5)"
            ))),
        }
    }
}

/// A family tag together with its integer parameters; constructors enforce
/// the classification constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HorosphericalDatum {
    family: Family,
    n: Option<u32>,
    k: Option<u32>,
}

impl HorosphericalDatum {
    pub fn new(family: Family, n: Option<u32>, k: Option<u32>) -> Result<Self, Error> {
        let invalid = |msg: &str| Err(Error::InvalidDatum(msg.to_string()));
        match family {
            Family::X1 => {
                if k.is_some() {
                    return invalid("X1 takes no parameter k");
                }
                match n {
                    Some(n) if n >= 3 => {}
                    Some(n) => {
                        return Err(Error::InvalidDatum(format!(
                            "X1(n) = (B_n, α_(n-1), α_n) requires n ≥ 3, got n = {n}"
                        )))
                    }
                    None => return invalid("X1(n) = (B_n, α_(n-1), α_n) requires a parameter n ≥ 3"),
                }
            }
            Family::X3 => match (n, k) {
                (Some(n), Some(k)) if n >= k && k >= 2 => {}
                (Some(n), Some(k)) => {
                    return Err(Error::InvalidDatum(format!(
                        "X3(n,k) = (C_n, α_k, α_(k-1)) requires n ≥ k ≥ 2, got n = {n}, k = {k}"
                    )))
                }
                _ => return invalid("X3(n,k) = (C_n, α_k, α_(k-1)) requires parameters n ≥ k ≥ 2"),
            },
            Family::X2 | Family::X4 | Family::X5 => {
                if n.is_some() || k.is_some() {
                    return Err(Error::InvalidDatum(format!(
                        "{family} takes no parameters"
                    )));
                }
            }
        }
        Ok(HorosphericalDatum { family, n, k })
    }

    pub fn x1(n: u32) -> Result<Self, Error> {
        Self::new(Family::X1, Some(n), None)
    }

    pub fn x2() -> Self {
        HorosphericalDatum { family: Family::X2, n: None, k: None }
    }

    pub fn x3(n: u32, k: u32) -> Result<Self, Error> {
        Self::new(Family::X3, Some(n), Some(k))
    }

    pub fn x4() -> Self {
        HorosphericalDatum { family: Family::X4, n: None, k: None }
    }

    pub fn x5() -> Self {
        HorosphericalDatum { family: Family::X5, n: None, k: None }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> Option<u32> {
        self.n
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    /// Rejects data whose `n` exceeds `max_n`.
    pub fn check_ceiling(&self, max_n: u32) -> Result<(), Error> {
        match self.n {
            Some(n) if n > max_n => Err(Error::InvalidDatum(format!(
                "n = {n} exceeds the exact-computation ceiling {max_n}"
            ))),
            _ => Ok(()),
        }
    }

    /// Marked indices `(i, j)` in segment orientation: `γ(t) = (a+t)ϖ_i +
    /// (b-t)ϖ_j`. For every family this puts the smaller index first, which
    /// swaps the classification order for `X3` and `X5`.
    pub fn orientation(&self) -> (usize, usize) {
        match self.family {
            Family::X1 => {
                let n = self.n.unwrap() as usize;
                (n - 1, n)
            }
            Family::X2 => (1, 3),
            Family::X3 => {
                let k = self.k.unwrap() as usize;
                (k - 1, k)
            }
            Family::X4 => (2, 3),
            Family::X5 => (1, 2),
        }
    }
}

impl fmt::Display for HorosphericalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.n, self.k) {
            (Some(n), Some(k)) => write!(f, "{}({n},{k})", self.family),
            (Some(n), None) => write!(f, "{}({n})", self.family),
            _ => write!(f, "{}", self.family),
        }
    }
}

/// The classification triple `(G, α_i, α_j)` as listed: root system, then
/// the two marked simple roots in the listed order.
pub fn resolve(datum: &HorosphericalDatum) -> Result<(RootSystem, usize, usize), Error> {
    // re-validate: a datum can only be built through the checked constructors,
    // but keep resolve total over its input
    let datum = HorosphericalDatum::new(datum.family, datum.n, datum.k)?;
    Ok(match datum.family {
        Family::X1 => {
            let n = datum.n.unwrap() as usize;
            (build_root_system(RootType::B, n)?, n - 1, n)
        }
        Family::X2 => (build_root_system(RootType::B, 3)?, 1, 3),
        Family::X3 => {
            let n = datum.n.unwrap() as usize;
            let k = datum.k.unwrap() as usize;
            (build_root_system(RootType::C, n)?, k, k - 1)
        }
        Family::X4 => (build_root_system(RootType::F4, 4)?, 2, 3),
        Family::X5 => (build_root_system(RootType::G2, 2)?, 2, 1),
    })
}

/// Root system with the marked indices in segment orientation.
pub fn oriented(datum: &HorosphericalDatum) -> Result<(RootSystem, usize, usize), Error> {
    let (rs, _, _) = resolve(datum)?;
    let (i, j) = datum.orientation();
    Ok((rs, i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraints() {
        assert!(HorosphericalDatum::x1(3).is_ok());
        let err = HorosphericalDatum::x1(2).unwrap_err();
        assert!(err.to_string().contains("n ≥ 3"), "{err}");
        assert!(HorosphericalDatum::x3(2, 2).is_ok());
        assert!(HorosphericalDatum::x3(3, 4).is_err());
        assert!(HorosphericalDatum::x3(5, 1).is_err());
        assert!(HorosphericalDatum::new(Family::X2, Some(3), None).is_err());
        assert!(HorosphericalDatum::new(Family::X3, Some(3), None).is_err());
        assert!(HorosphericalDatum::new(Family::X1, Some(4), Some(2)).is_err());
    }

    #[test]
    fn triples() {
        let (rs, i, j) = resolve(&HorosphericalDatum::x5()).unwrap();
        assert_eq!((rs.name().as_str(), i, j), ("G2", 2, 1));
        let (rs, i, j) = resolve(&HorosphericalDatum::x3(7, 4).unwrap()).unwrap();
        assert_eq!((rs.name().as_str(), i, j), ("C7", 4, 3));
        let (rs, i, j) = resolve(&HorosphericalDatum::x1(3).unwrap()).unwrap();
        assert_eq!((rs.name().as_str(), i, j), ("B3", 2, 3));
        let (rs, i, j) = resolve(&HorosphericalDatum::x2()).unwrap();
        assert_eq!((rs.name().as_str(), i, j), ("B3", 1, 3));
        let (rs, i, j) = resolve(&HorosphericalDatum::x4()).unwrap();
        assert_eq!((rs.name().as_str(), i, j), ("F4", 2, 3));
    }

    #[test]
    fn orientation_swaps_x3_and_x5() {
        assert_eq!(HorosphericalDatum::x5().orientation(), (1, 2));
        assert_eq!(HorosphericalDatum::x3(7, 4).unwrap().orientation(), (3, 4));
        assert_eq!(HorosphericalDatum::x1(6).unwrap().orientation(), (5, 6));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("x3".parse::<Family>().unwrap(), Family::X3);
        assert!("X6".parse::<Family>().is_err());
        assert_eq!(HorosphericalDatum::x3(7, 4).unwrap().to_string(), "X3(7,4)");
        assert_eq!(HorosphericalDatum::x1(5).unwrap().to_string(), "X1(5)");
        assert_eq!(HorosphericalDatum::x4().to_string(), "X4");
    }

    #[test]
    fn ceiling() {
        let d = HorosphericalDatum::x1(101).unwrap();
        assert!(d.check_ceiling(DEFAULT_MAX_N).is_err());
        assert!(d.check_ceiling(200).is_ok());
        assert!(HorosphericalDatum::x5().check_ceiling(3).is_ok());
    }
}
