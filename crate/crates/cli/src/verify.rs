//! Verification suites driven by `grlb verify`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use grlb_core::closedforms::{
    a_recurrence_step, a_sequence, lemma_x1_sign, lemma_x1_zero_identity, lemma_x3n_sign,
    lemma_x3nk_sign, r_x1_formula, r_x3_formula, r_x3nn_closed, stirling_upper_bound,
    x1_lower_bound, x3_lower_bound, BoundCheck, Relation,
};
use grlb_core::engine::{greatest_ricci_lower_bound, HorosphericalDatum};
use grlb_core::oracle::{crosscheck, CROSSCHECK_MAX_N, DEFAULT_REL_TOL};
use grlb_core::Error;

use crate::record::fraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    ClosedForms,
    Oracle,
    Bounds,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::ClosedForms => "closed-forms",
            Suite::Oracle => "oracle",
            Suite::Bounds => "bounds",
        }
    }

    /// Smallest `max_n` for which the suite has anything to check.
    pub fn min_n(self) -> u32 {
        match self {
            Suite::Lemmas | Suite::ClosedForms | Suite::Bounds => 2,
            Suite::Oracle => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "closed-forms" => Ok(Suite::ClosedForms),
            "oracle" => Ok(Suite::Oracle),
            "bounds" => Ok(Suite::Bounds),
            _ => Err(format!(
                "unknown suite `{s}` (expected lemmas, closed-forms, oracle or bounds)"
            )),
        }
    }
}

/// A [`BoundCheck`] or oracle comparison, rendered for output. Exact values
/// are `p/q` strings; oracle errors are decimal.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub params: String,
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub margin: String,
}

impl From<&BoundCheck> for CheckRecord {
    fn from(c: &BoundCheck) -> Self {
        CheckRecord {
            name: c.name.to_string(),
            params: c.param_string(),
            relation: c.relation.as_str().to_string(),
            lhs: fraction(&c.lhs),
            rhs: fraction(&c.rhs),
            holds: c.holds,
            margin: format!("{:.6e}", c.margin.to_f64()),
        }
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}({}) margin {}",
            if self.holds { "ok" } else { "FAIL" },
            self.name,
            self.params,
            self.margin
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: String,
    pub max_n: u32,
    pub passed: bool,
    pub total: usize,
    pub failures: usize,
    pub checks: Vec<CheckRecord>,
}

fn x3_grid(max_n: u32, strict: bool) -> Vec<(u32, u32)> {
    (2..=max_n)
        .flat_map(|n| (2..=n).filter(move |&k| !strict || k < n).map(move |k| (n, k)))
        .collect()
}

fn lemmas(max_n: u32) -> Result<Vec<BoundCheck>, Error> {
    let mut out: Vec<BoundCheck> = (3..=max_n).into_par_iter().map(lemma_x1_sign).collect::<Result<_, _>>()?;
    out.extend(
        x3_grid(max_n, true)
            .into_par_iter()
            .map(|(n, k)| lemma_x3nk_sign(n, k))
            .collect::<Result<Vec<_>, _>>()?,
    );
    out.extend((2..=max_n).map(lemma_x3n_sign));
    out.extend((0..max_n).map(|n| {
        BoundCheck::new(
            "a_recurrence",
            vec![("n", n)],
            Relation::Equality,
            a_recurrence_step(n, &a_sequence(n)),
            a_sequence(n + 1),
        )
    }));
    out.extend((3..=max_n).map(lemma_x1_zero_identity).collect::<Result<Vec<_>, _>>()?);
    Ok(out)
}

fn closed_forms(max_n: u32) -> Result<Vec<BoundCheck>, Error> {
    let mut jobs: Vec<(Option<u32>, u32)> = (3..=max_n).map(|n| (None, n)).collect();
    jobs.extend(x3_grid(max_n, false).into_iter().map(|(n, k)| (Some(k), n)));
    jobs.into_par_iter()
        .map(|(k, n)| match k {
            None => Ok(BoundCheck::new(
                "engine_vs_x1_formula",
                vec![("n", n)],
                Relation::Equality,
                greatest_ricci_lower_bound(&HorosphericalDatum::x1(n)?)?,
                r_x1_formula(n)?,
            )),
            Some(k) => {
                let formula = if k == n { r_x3nn_closed(n)? } else { r_x3_formula(n, k)? };
                Ok(BoundCheck::new(
                    if k == n { "engine_vs_x3nn_closed" } else { "engine_vs_x3_formula" },
                    vec![("n", n), ("k", k)],
                    Relation::Equality,
                    greatest_ricci_lower_bound(&HorosphericalDatum::x3(n, k)?)?,
                    formula,
                ))
            }
        })
        .collect()
}

fn bounds(max_n: u32) -> Result<Vec<BoundCheck>, Error> {
    let mut out: Vec<BoundCheck> = (3..=max_n).into_par_iter().map(x1_lower_bound).collect::<Result<_, _>>()?;
    out.extend(
        x3_grid(max_n, false)
            .into_par_iter()
            .map(|(n, k)| x3_lower_bound(n, k))
            .collect::<Result<Vec<_>, _>>()?,
    );
    out.extend((2..=max_n).map(stirling_upper_bound).collect::<Result<Vec<_>, _>>()?);
    Ok(out)
}

fn oracle(max_n: u32) -> Result<Vec<CheckRecord>, Error> {
    let max_n = max_n.min(CROSSCHECK_MAX_N);
    let mut data = vec![HorosphericalDatum::x2(), HorosphericalDatum::x4(), HorosphericalDatum::x5()];
    for n in 3..=max_n {
        data.push(HorosphericalDatum::x1(n)?);
    }
    for (n, k) in x3_grid(max_n, false) {
        data.push(HorosphericalDatum::x3(n, k)?);
    }
    data.into_par_iter()
        .map(|d| {
            let c = crosscheck(&d, DEFAULT_REL_TOL)?;
            let err = c.t_bar_rel_err.max(c.r_rel_err);
            let params = match (d.n(), d.k()) {
                (Some(n), Some(k)) => format!("n={n}, k={k}"),
                (Some(n), None) => format!("n={n}"),
                _ => String::new(),
            };
            Ok(CheckRecord {
                name: format!("oracle_{}", d.family().as_str().to_lowercase()),
                params,
                relation: "upper-bound".to_string(),
                lhs: format!("{err:.3e}"),
                rhs: format!("{:.0e}", c.rel_tol),
                holds: c.passed,
                margin: format!("{:.6e}", c.rel_tol - err),
            })
        })
        .collect()
}

pub fn run(suite: Suite, max_n: u32) -> Result<VerifyReport, Error> {
    if max_n < suite.min_n() {
        return Err(Error::InvalidParameter(format!(
            "--max-n must be at least {} for suite {suite}",
            suite.min_n()
        )));
    }
    let checks: Vec<CheckRecord> = match suite {
        Suite::Lemmas => lemmas(max_n)?.iter().map(CheckRecord::from).collect(),
        Suite::ClosedForms => closed_forms(max_n)?.iter().map(CheckRecord::from).collect(),
        Suite::Bounds => bounds(max_n)?.iter().map(CheckRecord::from).collect(),
        Suite::Oracle => oracle(max_n)?,
    };
    let failures = checks.iter().filter(|c| !c.holds).count();
    Ok(VerifyReport {
        schema_version: crate::record::SCHEMA_VERSION,
        suite: suite.to_string(),
        max_n,
        passed: failures == 0,
        total: checks.len(),
        failures,
        checks,
    })
}
