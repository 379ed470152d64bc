//! From a classification datum to `R(X)`: the unipotent roots, `2ρ_P`, the
//! moment segment, the Duistermaat-Heckman density along it, its barycenter
//! and the resulting greatest Ricci lower bound. Everything is exact.
//!
//! The moment polytope of a rank-one horospherical manifold is the segment
//! `γ(t) = (a+t)ϖ_i + (b-t)ϖ_j`, `-a ≤ t ≤ b`, around `2ρ_P = aϖ_i + bϖ_j`.
//! Along it the DH density is `Π_{α ∈ Φ_{P^u}} (α, γ(t))`, a product of
//! linear forms in `t` that only depend on the coefficients of `α` on the two
//! marked simple roots.

mod datum;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use datum::{oriented, resolve, Family, HorosphericalDatum, DEFAULT_MAX_N};

use crate::error::Error;
use crate::exactnum::{Polynomial, Rational};
use crate::rootsystems::{RootSystem, WeightExpr};

/// Roots of the unipotent radical of `P = P^{α_i} ∩ P^{α_j}`: positive roots
/// with a nonzero coefficient on `α_i` or `α_j`.
pub fn phi_pu(rs: &RootSystem, i: usize, j: usize) -> Vec<Vec<u32>> {
    rs.positive_roots()
        .iter()
        .filter(|r| r[i - 1] > 0 || r[j - 1] > 0)
        .cloned()
        .collect()
}

/// Positive roots of the Levi factor: both marked coefficients vanish.
pub fn levi_roots(rs: &RootSystem, i: usize, j: usize) -> Vec<Vec<u32>> {
    rs.positive_roots()
        .iter()
        .filter(|r| r[i - 1] == 0 && r[j - 1] == 0)
        .cloned()
        .collect()
}

/// `2ρ_P = Σ_{α ∈ Φ_{P^u}} α` in the fundamental-weight basis.
pub fn two_rho_p(rs: &RootSystem, i: usize, j: usize) -> WeightExpr {
    let roots = phi_pu(rs, i, j);
    rs.to_weight(&rs.sum_of_roots(&roots))
}

/// `2ρ_L`, the sum of the Levi positive roots.
pub fn two_rho_l(rs: &RootSystem, i: usize, j: usize) -> WeightExpr {
    let roots = levi_roots(rs, i, j);
    rs.to_weight(&rs.sum_of_roots(&roots))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSegment {
    pub two_rho_p: WeightExpr,
    /// Vertex reached at the upper end `t = b`.
    pub i: usize,
    pub j: usize,
    /// `⟨α_i^∨, 2ρ_P⟩`
    pub a: Rational,
    /// `⟨α_j^∨, 2ρ_P⟩`
    pub b: Rational,
}

impl MomentSegment {
    /// Segment through `2ρ_P` in direction `ϖ_i - ϖ_j`.
    pub fn new(rs: &RootSystem, i: usize, j: usize) -> Result<Self, Error> {
        rs.check_index(i)?;
        rs.check_index(j)?;
        if i == j {
            return Err(Error::InvalidDatum("marked roots must differ".into()));
        }
        let two_rho_p = two_rho_p(rs, i, j);
        let a = two_rho_p.coeff(i);
        let b = two_rho_p.coeff(j);
        let supported = two_rho_p.support().all(|m| m == i || m == j);
        if !supported || !a.is_positive() || !b.is_positive() {
            return Err(Error::MarkedSupport { i, j });
        }
        Ok(MomentSegment { two_rho_p, i, j, a, b })
    }

    pub fn lower(&self) -> Rational {
        -&self.a
    }

    pub fn upper(&self) -> Rational {
        self.b.clone()
    }

    /// `γ(t) = (a+t)ϖ_i + (b-t)ϖ_j`
    pub fn point(&self, t: &Rational) -> WeightExpr {
        WeightExpr::from_pairs([(self.i, &self.a + t), (self.j, &self.b - t)])
    }

    /// Same segment traversed the other way (`t ↦ -t`).
    pub fn flipped(&self) -> Self {
        MomentSegment {
            two_rho_p: self.two_rho_p.clone(),
            i: self.j,
            j: self.i,
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn contains_strictly(&self, t: &Rational) -> bool {
        *t > self.lower() && *t < self.upper()
    }
}

/// One distinct linear form of the DH density, `(α, γ(t))`, shared by every
/// root of `Φ_{P^u}` with the same marked coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhFactor {
    pub c_i: u32,
    pub c_j: u32,
    /// `c_i d_i (a+t) + c_j d_j (b-t)`
    pub form: Polynomial,
    pub multiplicity: u32,
}

/// DH linear forms grouped by the marked coefficients `(c_i, c_j)`.
pub fn dh_factors(rs: &RootSystem, seg: &MomentSegment) -> Vec<DhFactor> {
    let d_i = rs.half_length(seg.i).expect("checked index");
    let d_j = rs.half_length(seg.j).expect("checked index");
    let mut groups: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for r in phi_pu(rs, seg.i, seg.j) {
        *groups.entry((r[seg.i - 1], r[seg.j - 1])).or_default() += 1;
    }
    groups
        .into_iter()
        .map(|((c_i, c_j), multiplicity)| {
            let wi = Rational::from(c_i) * &d_i;
            let wj = Rational::from(c_j) * &d_j;
            let form = Polynomial::linear(&wi * &seg.a + &wj * &seg.b, &wi - &wj);
            DhFactor { c_i, c_j, form, multiplicity }
        })
        .collect()
}

/// DH density along the segment, fully expanded.
pub fn dh_polynomial_for(rs: &RootSystem, seg: &MomentSegment) -> Polynomial {
    let factors = dh_factors(rs, seg);
    Polynomial::product_of_powers(factors.iter().map(|f| (&f.form, f.multiplicity)))
}

/// Greatest Ricci lower bound from the barycenter parameter: the ratio
/// `|AQ| / |BQ|` with `A = γ(0)`, `B = γ(t̄)` and `Q` the endpoint hit by the
/// half-line from `B` through `A`.
pub fn ricci_bound_from_barycenter(seg: &MomentSegment, t_bar: &Rational) -> Rational {
    if t_bar.is_positive() {
        &seg.a / (&seg.a + t_bar)
    } else if t_bar.is_negative() {
        &seg.b / (&seg.b - t_bar)
    } else {
        Rational::from(1)
    }
}

/// Everything the engine derives for one oriented marked root system.
#[derive(Debug, Clone)]
pub struct SegmentAnalysis {
    pub segment: MomentSegment,
    pub unipotent_roots: usize,
    pub factors: Vec<DhFactor>,
    pub dh: Polynomial,
    pub volume: Rational,
    pub first_moment: Rational,
    pub barycenter_t: Rational,
    pub ricci_bound: Rational,
}

pub fn analyze(rs: &RootSystem, i: usize, j: usize) -> Result<SegmentAnalysis, Error> {
    let segment = MomentSegment::new(rs, i, j)?;
    analyze_segment(rs, segment)
}

pub fn analyze_segment(rs: &RootSystem, segment: MomentSegment) -> Result<SegmentAnalysis, Error> {
    let factors = dh_factors(rs, &segment);
    let unipotent_roots = factors.iter().map(|f| f.multiplicity as usize).sum();
    let dh = Polynomial::product_of_powers(factors.iter().map(|f| (&f.form, f.multiplicity)));
    let (lo, hi) = (segment.lower(), segment.upper());
    let volume = dh.integrate(&lo, &hi)?;
    if volume.is_zero() {
        return Err(Error::DegenerateMeasure);
    }
    let first_moment = dh.shift(1).integrate(&lo, &hi)?;
    let barycenter_t = &first_moment / &volume;
    let ricci_bound = ricci_bound_from_barycenter(&segment, &barycenter_t);
    Ok(SegmentAnalysis {
        segment,
        unipotent_roots,
        factors,
        dh,
        volume,
        first_moment,
        barycenter_t,
        ricci_bound,
    })
}

pub fn moment_segment(datum: &HorosphericalDatum) -> Result<MomentSegment, Error> {
    let (rs, i, j) = oriented(datum)?;
    MomentSegment::new(&rs, i, j)
}

pub fn dh_polynomial(datum: &HorosphericalDatum) -> Result<Polynomial, Error> {
    let (rs, i, j) = oriented(datum)?;
    let seg = MomentSegment::new(&rs, i, j)?;
    Ok(dh_polynomial_for(&rs, &seg))
}

pub fn barycenter_t(datum: &HorosphericalDatum) -> Result<Rational, Error> {
    let (rs, i, j) = oriented(datum)?;
    Ok(analyze(&rs, i, j)?.barycenter_t)
}

pub fn greatest_ricci_lower_bound(datum: &HorosphericalDatum) -> Result<Rational, Error> {
    let (rs, i, j) = oriented(datum)?;
    Ok(analyze(&rs, i, j)?.ricci_bound)
}

/// `|Φ_{P^u}| + 1`: the open orbit is a `C^*`-bundle over `G/P`.
pub fn dimension(datum: &HorosphericalDatum) -> Result<usize, Error> {
    let (rs, i, j) = resolve(datum)?;
    Ok(phi_pu(&rs, i, j).len() + 1)
}

#[derive(Debug, Clone)]
pub struct ComputationReport {
    pub datum: HorosphericalDatum,
    pub dimension: usize,
    pub segment: MomentSegment,
    pub dh_degree: usize,
    pub volume: Rational,
    pub barycenter_t: Rational,
    pub barycenter_point: WeightExpr,
    pub ricci_bound: Rational,
}

pub fn report(datum: &HorosphericalDatum) -> Result<ComputationReport, Error> {
    let (rs, i, j) = oriented(datum)?;
    let analysis = analyze(&rs, i, j)?;
    let barycenter_point = analysis.segment.point(&analysis.barycenter_t);
    Ok(ComputationReport {
        datum: *datum,
        dimension: analysis.unipotent_roots + 1,
        dh_degree: analysis.dh.degree().unwrap_or(0),
        volume: analysis.volume,
        barycenter_t: analysis.barycenter_t,
        barycenter_point,
        ricci_bound: analysis.ricci_bound,
        segment: analysis.segment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::rootsystems::{build_root_system, RootType};

    fn w(pairs: &[(usize, i64)]) -> WeightExpr {
        WeightExpr::from_pairs(pairs.iter().map(|(m, c)| (*m, rat(*c, 1))))
    }

    #[test]
    fn phi_pu_sizes() {
        let g2 = build_root_system(RootType::G2, 2).unwrap();
        assert_eq!(phi_pu(&g2, 2, 1).len(), 6);
        let b3 = build_root_system(RootType::B, 3).unwrap();
        assert_eq!(phi_pu(&b3, 1, 3).len(), 8);
        let f4 = build_root_system(RootType::F4, 4).unwrap();
        assert_eq!(phi_pu(&f4, 2, 3).len(), 22);
    }

    #[test]
    fn two_rho_p_examples() {
        let b3 = build_root_system(RootType::B, 3).unwrap();
        assert_eq!(two_rho_p(&b3, 1, 3), w(&[(1, 3), (3, 4)]));
        let f4 = build_root_system(RootType::F4, 4).unwrap();
        assert_eq!(two_rho_p(&f4, 2, 3), w(&[(2, 3), (3, 3)]));
        for n in 3..=9 {
            let bn = build_root_system(RootType::B, n).unwrap();
            assert_eq!(two_rho_p(&bn, n - 1, n), w(&[(n - 1, n as i64), (n, 2)]));
        }
        for n in 2..=9 {
            let cn = build_root_system(RootType::C, n).unwrap();
            for k in 2..=n {
                let expect = w(&[(k - 1, k as i64), (k, (2 * n - 2 * k + 2) as i64)]);
                assert_eq!(two_rho_p(&cn, k, k - 1), expect);
            }
        }
    }

    #[test]
    fn segments() {
        let s = moment_segment(&HorosphericalDatum::x5()).unwrap();
        assert_eq!((s.i, s.j, s.a.clone(), s.b.clone()), (1, 2, rat(2, 1), rat(2, 1)));
        assert_eq!(s.point(&s.upper()), w(&[(1, 4)]));
        assert_eq!(s.point(&s.lower()), w(&[(2, 4)]));
        let s = moment_segment(&HorosphericalDatum::x2()).unwrap();
        assert_eq!((s.a.clone(), s.b.clone()), (rat(3, 1), rat(4, 1)));
        assert_eq!(s.point(&s.upper()), w(&[(1, 7)]));
        assert_eq!(s.point(&s.lower()), w(&[(3, 7)]));
        let s = moment_segment(&HorosphericalDatum::x3(9, 4).unwrap()).unwrap();
        assert_eq!((s.a.clone(), s.b.clone()), (rat(4, 1), rat(12, 1)));
    }

    #[test]
    fn segment_rejects_bad_indices() {
        let b3 = build_root_system(RootType::B, 3).unwrap();
        assert!(MomentSegment::new(&b3, 1, 1).is_err());
        assert!(MomentSegment::new(&b3, 1, 4).is_err());
    }

    #[test]
    fn two_rho_p_lives_on_marked_weights() {
        // 2ρ_P is orthogonal to every Levi coroot, for any pair of marked roots
        for rs in [
            build_root_system(RootType::B, 5).unwrap(),
            build_root_system(RootType::C, 4).unwrap(),
            build_root_system(RootType::F4, 4).unwrap(),
        ] {
            for i in 1..=rs.rank() {
                for j in 1..=rs.rank() {
                    if i != j {
                        let s = MomentSegment::new(&rs, i, j).unwrap();
                        assert!(s.two_rho_p.support().all(|m| m == i || m == j));
                    }
                }
            }
        }
    }

    #[test]
    fn x5_density_at_zero() {
        let p = dh_polynomial(&HorosphericalDatum::x5()).unwrap();
        assert_eq!(p.eval_i64(0), rat(3240, 1));
    }

    #[test]
    fn x2_density_matches_displayed_closed_form() {
        let p = dh_polynomial(&HorosphericalDatum::x2()).unwrap();
        let lin = |c0: i64, c1: i64| Polynomial::linear(rat(c0, 1), rat(c1, 1));
        let expected = Polynomial::product([
            lin(3, 1),
            lin(3, 1),
            lin(4, -1),
            lin(4, -1),
            lin(4, -1),
            Polynomial::linear(rat(5, 1), rat(1, 2)),
        ])
        .scale(&rat(49, 4));
        assert_eq!(p, expected);
        assert_eq!(p.degree(), Some(6));
    }

    #[test]
    fn golden_barycenters_and_bounds() {
        let x5 = report(&HorosphericalDatum::x5()).unwrap();
        assert_eq!(x5.barycenter_t, rat(-11, 28));
        assert_eq!(x5.ricci_bound, rat(56, 67));
        assert_eq!(
            x5.barycenter_point,
            WeightExpr::from_pairs([(1, rat(45, 28)), (2, rat(67, 28))])
        );
        let x2 = report(&HorosphericalDatum::x2()).unwrap();
        assert_eq!(x2.barycenter_t, rat(3, 20));
        assert_eq!(x2.ricci_bound, rat(20, 21));
        assert_eq!(
            x2.barycenter_point,
            WeightExpr::from_pairs([(1, rat(63, 20)), (3, rat(77, 20))])
        );
        assert_eq!(x2.dimension, 9);
        assert_eq!(
            barycenter_t(&HorosphericalDatum::x4()).unwrap(),
            rat(64553303, 59664033)
        );
        assert_eq!(
            greatest_ricci_lower_bound(&HorosphericalDatum::x4()).unwrap(),
            rat(178992099, 243545402)
        );
        assert_eq!(
            greatest_ricci_lower_bound(&HorosphericalDatum::x3(2, 2).unwrap()).unwrap(),
            rat(15, 16)
        );
    }

    #[test]
    fn zero_barycenter_gives_one() {
        let b3 = build_root_system(RootType::B, 3).unwrap();
        let seg = MomentSegment::new(&b3, 1, 3).unwrap();
        assert_eq!(ricci_bound_from_barycenter(&seg, &Rational::zero()), rat(1, 1));
        assert_eq!(ricci_bound_from_barycenter(&seg, &rat(3, 20)), rat(20, 21));
        assert_eq!(ricci_bound_from_barycenter(&seg, &rat(-1, 1)), rat(4, 5));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&HorosphericalDatum::x5()).unwrap(), 7);
        assert_eq!(dimension(&HorosphericalDatum::x4()).unwrap(), 23);
        assert_eq!(dimension(&HorosphericalDatum::x1(5).unwrap()).unwrap(), 20);
        assert_eq!(dimension(&HorosphericalDatum::x3(7, 4).unwrap()).unwrap(), 4 * (28 - 12 + 3) / 2);
    }
}
