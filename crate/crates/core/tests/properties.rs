use grlb_core::closedforms::{a_sequence, r_x1_formula, r_x3_formula, r_x3nn_closed};
use grlb_core::engine::{
    analyze, analyze_segment, dh_polynomial_for, dimension, oriented, phi_pu, report,
    two_rho_l, two_rho_p, Family, HorosphericalDatum, MomentSegment,
};
use grlb_core::exactnum::{factorial, integrate, poly_product, rat, to_decimal, Polynomial, Rational};
use grlb_core::oracle::quad;
use grlb_core::rootsystems::rho_g;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_data() -> Vec<HorosphericalDatum> {
    let mut out = vec![HorosphericalDatum::x2(), HorosphericalDatum::x4(), HorosphericalDatum::x5()];
    for n in 3..=6 {
        out.push(HorosphericalDatum::x1(n).unwrap());
    }
    for n in 2..=6 {
        for k in 2..=n {
            out.push(HorosphericalDatum::x3(n, k).unwrap());
        }
    }
    out
}

fn grid_data(max_n: u32) -> Vec<HorosphericalDatum> {
    let mut out = vec![HorosphericalDatum::x2(), HorosphericalDatum::x4(), HorosphericalDatum::x5()];
    for n in 3..=max_n {
        out.push(HorosphericalDatum::x1(n).unwrap());
    }
    for n in 2..=max_n {
        for k in 2..=n {
            out.push(HorosphericalDatum::x3(n, k).unwrap());
        }
    }
    out
}

fn to_big(r: &Rational) -> BigRational {
    BigRational::new(r.numer().clone(), r.denom().clone())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(p, q)| rat(p, q))
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-50i64..50, 1i64..8), 0..=max_degree + 1)
        .prop_map(|cs| Polynomial::from_coeffs(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
}

proptest! {
    #[test]
    fn rational_field_ops_match_reference(a in rational(), b in rational()) {
        let (x, y) = (to_big(&a), to_big(&b));
        prop_assert_eq!(to_big(&(&a + &b)), &x + &y);
        prop_assert_eq!(to_big(&(&a - &b)), &x - &y);
        prop_assert_eq!(to_big(&(&a * &b)), &x * &y);
        if !b.is_zero() {
            prop_assert_eq!(to_big(&(&a / &b)), &x / &y);
        }
        prop_assert_eq!(a.cmp(&b), x.cmp(&y));
    }

    #[test]
    fn rational_in_lowest_terms(p in -100_000i64..100_000, q in 1i64..100_000, s in -50i64..50) {
        prop_assume!(s != 0);
        let r = rat(p * s, q * s);
        prop_assert!(r.denom() > &BigInt::zero());
        prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()) , BigInt::one());
        prop_assert_eq!(r, rat(p, q));
    }

    #[test]
    fn integrate_is_additive(p in polynomial(8), a in rational(), b in rational(), c in rational()) {
        let mut v = [a, b, c];
        v.sort();
        let [a, b, c] = v;
        let lhs = integrate(&p, &a, &b).unwrap() + integrate(&p, &b, &c).unwrap();
        prop_assert_eq!(lhs, integrate(&p, &a, &c).unwrap());
    }

    #[test]
    fn product_commutes_and_associates(p in polynomial(6), q in polynomial(6), r in polynomial(6)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(
            poly_product([p.clone(), q.clone(), r.clone()]),
            &(&p * &q) * &r
        );
    }

    #[test]
    fn product_of_linear_factors_has_full_degree(
        forms in prop::collection::vec((-20i64..20, -20i64..20), 0..40)
    ) {
        let linear: Vec<_> = forms
            .iter()
            .filter(|(_, c1)| *c1 != 0)
            .map(|&(c0, c1)| Polynomial::from_integers([c0, c1]))
            .collect();
        let k = linear.len();
        let p = poly_product(linear);
        prop_assert_eq!(p.degree(), Some(k));
    }

    #[test]
    fn decimal_round_trip(p in -10_000_000i64..10_000_000, q in 1i64..100_000, d in 1usize..12) {
        let r = rat(p, q);
        let s = to_decimal(&r, d);
        let back: Rational = s.parse().unwrap();
        let half_ulp = Rational::new(BigInt::one(), BigInt::from(2) * BigInt::from(10).pow(d as u32));
        prop_assert!((back - &r).abs() <= half_ulp);
        prop_assert_eq!(s.split('.').nth(1).map(str::len), Some(d));
    }

    #[test]
    fn factorial_recurrence(n in 1u32..200) {
        prop_assert_eq!(factorial(n), factorial(n - 1) * n);
    }

    #[test]
    fn quadrature_matches_exact_integration(p in polynomial(60), lo in -3i64..0, hi in 1i64..3) {
        let (lo, hi) = (rat(lo, 1), rat(hi, 1));
        let exact = integrate(&p, &lo, &hi).unwrap().to_f64();
        let coeffs: Vec<f64> = p.coeffs().iter().map(Rational::to_f64).collect();
        let f = |t: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c);
        let tol = 1e-9;
        match quad(f, lo.to_f64(), hi.to_f64(), tol) {
            Ok(q) => {
                // cancellation in ∫p below the size of ∫|p| is beyond double precision
                let l1 = quad(|t| f(t).abs(), lo.to_f64(), hi.to_f64(), 1e-6).map_or(0.0, |r| r.estimate);
                let err = (q.estimate - exact).abs();
                prop_assert!(err <= tol * exact.abs() + 1e-14 * l1,
                    "quad {} exact {}", q.estimate, exact);
            }
            Err(e) => {
                // only the zero polynomial, whose relative criterion is unattainable, may fail
                prop_assert!(exact.abs() < 1e-300 || p.is_zero(), "{e}");
            }
        }
    }

    #[test]
    fn rescaling_half_lengths_leaves_r_fixed(idx in 0usize..27, scale in prop::sample::select(vec![(2, 1), (1, 3), (5, 7), (9, 2)])) {
        let data = small_data();
        let datum = data[idx % data.len()];
        let (rs, i, j) = oriented(&datum).unwrap();
        let lambda = rat(scale.0, scale.1);
        let base = analyze(&rs, i, j).unwrap();
        let scaled_rs = rs.rescaled(&lambda);
        let scaled = analyze(&scaled_rs, i, j).unwrap();
        prop_assert_eq!(&scaled.barycenter_t, &base.barycenter_t);
        prop_assert_eq!(&scaled.ricci_bound, &base.ricci_bound);
        let factor = lambda.pow(base.unipotent_roots as u32);
        prop_assert_eq!(scaled.dh, base.dh.scale(&factor));
    }

    #[test]
    fn flipping_orientation_leaves_r_fixed(idx in 0usize..27) {
        let data = small_data();
        let datum = data[idx % data.len()];
        let (rs, i, j) = oriented(&datum).unwrap();
        let forward = analyze(&rs, i, j).unwrap();
        let backward = analyze(&rs, j, i).unwrap();
        prop_assert_eq!(&backward.barycenter_t, &-forward.barycenter_t.clone());
        prop_assert_eq!(&backward.ricci_bound, &forward.ricci_bound);
        let flipped = analyze_segment(&rs, forward.segment.flipped()).unwrap();
        prop_assert_eq!(flipped.ricci_bound, forward.ricci_bound);
    }

    #[test]
    fn density_positive_inside(idx in 0usize..27, u in 1i64..1000) {
        let data = small_data();
        let datum = data[idx % data.len()];
        let (rs, i, j) = oriented(&datum).unwrap();
        let seg = MomentSegment::new(&rs, i, j).unwrap();
        let p = dh_polynomial_for(&rs, &seg);
        // t = -a + (a+b)·u/1000
        let t = seg.lower() + (&seg.a + &seg.b) * rat(u, 1000);
        prop_assert!(p.eval(&t).is_positive());
    }
}

#[test]
fn density_vanishes_at_endpoints() {
    for datum in grid_data(8) {
        let (rs, i, j) = oriented(&datum).unwrap();
        let seg = MomentSegment::new(&rs, i, j).unwrap();
        let p = dh_polynomial_for(&rs, &seg);
        assert!(p.eval(&seg.lower()).is_zero(), "{datum}");
        assert!(p.eval(&seg.upper()).is_zero(), "{datum}");
        for s in 1..=5 {
            let t = seg.lower() + (&seg.a + &seg.b) * rat(s, 6);
            assert!(p.eval(&t).is_positive(), "{datum} at {t}");
        }
    }
}

#[test]
fn two_rho_p_is_difference_of_rhos() {
    for datum in grid_data(12) {
        let (rs, i, j) = oriented(&datum).unwrap();
        let lhs = two_rho_p(&rs, i, j);
        let rhs = &rho_g(&rs).scale(&rat(2, 1)) - &two_rho_l(&rs, i, j);
        assert_eq!(lhs, rhs, "{datum}");
    }
}

#[test]
fn report_invariants_on_grid() {
    for datum in grid_data(9) {
        let rep = report(&datum).unwrap();
        let seg = &rep.segment;
        assert!(seg.contains_strictly(&rep.barycenter_t), "{datum}");
        assert!(rep.ricci_bound.is_positive() && rep.ricci_bound < rat(1, 1), "{datum}");
        match datum.family() {
            Family::X1 => assert!(rep.barycenter_t.is_positive(), "{datum}"),
            Family::X3 => assert!(rep.barycenter_t.is_negative(), "{datum}"),
            _ => {}
        }
    }
}

#[test]
fn dimension_matches_table() {
    for datum in grid_data(12) {
        let expected = match datum.family() {
            Family::X1 => {
                let n = datum.n().unwrap() as usize;
                n * (n + 3) / 2
            }
            Family::X2 => 9,
            Family::X3 => {
                let (n, k) = (datum.n().unwrap() as usize, datum.k().unwrap() as usize);
                k * (4 * n - 3 * k + 3) / 2
            }
            Family::X4 => 23,
            Family::X5 => 7,
        };
        assert_eq!(dimension(&datum).unwrap(), expected, "{datum}");
        let (rs, i, j) = oriented(&datum).unwrap();
        assert_eq!(phi_pu(&rs, i, j).len() + 1, expected, "{datum}");
    }
}

#[test]
fn engine_equals_closed_forms() {
    use grlb_core::engine::greatest_ricci_lower_bound as r;
    for n in 2..=12 {
        let d = HorosphericalDatum::x3(n, n).unwrap();
        assert_eq!(r(&d).unwrap(), r_x3nn_closed(n).unwrap(), "{d}");
        assert_eq!(r_x3nn_closed(n).unwrap(), rat(2, 1) / a_sequence(n));
        for k in 2..n {
            let d = HorosphericalDatum::x3(n, k).unwrap();
            assert_eq!(r(&d).unwrap(), r_x3_formula(n, k).unwrap(), "{d}");
        }
    }
    for n in 3..=12 {
        let d = HorosphericalDatum::x1(n).unwrap();
        assert_eq!(r(&d).unwrap(), r_x1_formula(n).unwrap(), "{d}");
    }
}

#[test]
fn x3nn_decreases_to_thirty() {
    let values: Vec<Rational> = (2..=30).map(|n| r_x3nn_closed(n).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] < w[0]));
}
