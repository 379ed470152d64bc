//! Floating-point cross-checks.
//!
//! [`quad`] is Romberg integration (trapezoid rule with interval halving and
//! Richardson extrapolation) on a black-box `f64` function, so it shares no
//! code with the exact antiderivative route. [`crosscheck`] uses it on the
//! factored DH density to recompute `t̄` and `R`.

use crate::engine::{analyze, oriented, HorosphericalDatum};
use crate::error::Error;

pub const DEFAULT_REL_TOL: f64 = 1e-9;
pub const MAX_LEVELS: u32 = 30;
/// Levels always performed before convergence is tested, so a coarse grid
/// that happens to hit zeros cannot fake agreement.
const MIN_LEVELS: u32 = 5;
/// Largest `n` accepted by [`crosscheck`].
pub const CROSSCHECK_MAX_N: u32 = 20;
/// Above this many factors the density is accumulated in log space.
const LOG_DOMAIN_THRESHOLD: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub estimate: f64,
    pub error_estimate: f64,
    pub refinement_levels: u32,
}

fn eval<F: Fn(f64) -> f64>(f: &F, t: f64) -> Result<f64, Error> {
    let v = f(t);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::EvaluationFailure { at: t })
    }
}

/// `∫_lo^hi f`, refined until two successive extrapolated estimates agree to
/// `rel_tol` or [`MAX_LEVELS`] halvings have been made.
pub fn quad<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, rel_tol: f64) -> Result<QuadratureResult, Error> {
    quad_capped(f, lo, hi, rel_tol, MAX_LEVELS)
}

fn quad_capped<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    rel_tol: f64,
    max_levels: u32,
) -> Result<QuadratureResult, Error> {
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(Error::InvalidInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    if rel_tol.is_nan() || rel_tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("rel_tol must be positive, got {rel_tol}")));
    }
    let width = hi - lo;
    let mut prev_row = vec![0.5 * width * (eval(&f, lo)? + eval(&f, hi)?)];
    let mut best = prev_row[0];
    for level in 1..=max_levels {
        let pieces = 1u64 << level;
        let h = width / pieces as f64;
        let mut midpoints = 0.0;
        for m in (1..pieces).step_by(2) {
            midpoints += eval(&f, lo + m as f64 * h)?;
        }
        let mut row = Vec::with_capacity(prev_row.len() + 1);
        row.push(0.5 * prev_row[0] + h * midpoints);
        let mut factor = 1.0;
        for c in 1..=prev_row.len() {
            factor *= 4.0;
            let r = row[c - 1] + (row[c - 1] - prev_row[c - 1]) / (factor - 1.0);
            row.push(r);
        }
        let estimate = row[row.len() - 1];
        let diff = (estimate - best).abs();
        best = estimate;
        if level >= MIN_LEVELS && diff <= rel_tol * estimate.abs() {
            return Ok(QuadratureResult {
                estimate,
                error_estimate: diff,
                refinement_levels: level,
            });
        }
        prev_row = row;
    }
    Err(Error::NoConvergence { estimate: best, levels: max_levels })
}

/// The DH density as a product of linear forms `(c0 + c1 t)^m`, evaluated
/// without expanding.
#[derive(Debug, Clone)]
pub struct FactoredDensity {
    factors: Vec<(f64, f64, u32)>,
    /// Subtracted from the log density in log-domain mode.
    log_offset: Option<f64>,
}

impl FactoredDensity {
    pub fn new(factors: Vec<(f64, f64, u32)>, lo: f64, hi: f64) -> Self {
        let count: u32 = factors.iter().map(|f| f.2).sum();
        let mut density = FactoredDensity { factors, log_offset: None };
        if count as usize > LOG_DOMAIN_THRESHOLD {
            const GRID: usize = 64;
            let max = (1..GRID)
                .map(|s| density.log_value(lo + (hi - lo) * s as f64 / GRID as f64))
                .fold(f64::NEG_INFINITY, f64::max);
            density.log_offset = Some(max);
        }
        density
    }

    fn log_value(&self, t: f64) -> f64 {
        self.factors
            .iter()
            .map(|&(c0, c1, m)| f64::from(m) * (c0 + c1 * t).ln())
            .sum()
    }

    /// Density at `t`, rescaled by a fixed positive constant in log-domain
    /// mode. Ratios of integrals are unaffected.
    pub fn value(&self, t: f64) -> f64 {
        match self.log_offset {
            Some(offset) => {
                if self.factors.iter().any(|&(c0, c1, _)| c0 + c1 * t == 0.0) {
                    return 0.0;
                }
                (self.log_value(t) - offset).exp()
            }
            None => self
                .factors
                .iter()
                .map(|&(c0, c1, m)| (c0 + c1 * t).powi(m as i32))
                .product(),
        }
    }

    pub fn is_log_domain(&self) -> bool {
        self.log_offset.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    pub datum: HorosphericalDatum,
    pub t_bar_exact: f64,
    pub t_bar_quad: f64,
    pub r_exact: f64,
    pub r_quad: f64,
    pub t_bar_rel_err: f64,
    pub r_rel_err: f64,
    pub refinement_levels: u32,
    pub log_domain: bool,
    pub rel_tol: f64,
    pub passed: bool,
}

fn rel_err(approx: f64, exact: f64) -> f64 {
    if exact == 0.0 {
        approx.abs()
    } else {
        ((approx - exact) / exact).abs()
    }
}

/// Recomputes `t̄` and `R` by quadrature on the factored density and compares
/// them with the engine's exact values at `rel_tol`.
pub fn crosscheck(datum: &HorosphericalDatum, rel_tol: f64) -> Result<CrosscheckReport, Error> {
    if let Some(n) = datum.n() {
        if n > CROSSCHECK_MAX_N {
            return Err(Error::InvalidParameter(format!(
                "crosscheck supports n ≤ {CROSSCHECK_MAX_N}, got n = {n}"
            )));
        }
    }
    let (rs, i, j) = oriented(datum)?;
    let exact = analyze(&rs, i, j)?;
    let seg = &exact.segment;
    let (a, b) = (seg.a.to_f64(), seg.b.to_f64());
    let factors = exact
        .factors
        .iter()
        .map(|f| (f.form.coeff(0).to_f64(), f.form.coeff(1).to_f64(), f.multiplicity))
        .collect();
    let density = FactoredDensity::new(factors, -a, b);

    // integrate well below rel_tol so the ratio keeps its accuracy
    let inner_tol = (rel_tol * 1e-4).max(1e-13);
    let m0 = quad(|t| density.value(t), -a, b, inner_tol)?;
    let m1 = quad(|t| t * density.value(t), -a, b, inner_tol)?;
    let t_bar_quad = m1.estimate / m0.estimate;
    let r_quad = if t_bar_quad > 0.0 {
        a / (a + t_bar_quad)
    } else if t_bar_quad < 0.0 {
        b / (b - t_bar_quad)
    } else {
        1.0
    };
    let t_bar_exact = exact.barycenter_t.to_f64();
    let r_exact = exact.ricci_bound.to_f64();
    let t_bar_rel_err = rel_err(t_bar_quad, t_bar_exact);
    let r_rel_err = rel_err(r_quad, r_exact);
    Ok(CrosscheckReport {
        datum: *datum,
        t_bar_exact,
        t_bar_quad,
        r_exact,
        r_quad,
        t_bar_rel_err,
        r_rel_err,
        refinement_levels: m0.refinement_levels.max(m1.refinement_levels),
        log_domain: density.is_log_domain(),
        rel_tol,
        passed: t_bar_rel_err <= rel_tol && r_rel_err <= rel_tol,
    })
}
