//! The serialized result of one computation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use grlb_core::closedforms::{r_x1_formula, r_x3_formula, r_x3nn_closed};
use grlb_core::engine::{report, Family, HorosphericalDatum};
use grlb_core::exactnum::{to_decimal, Rational};
use grlb_core::rootsystems::WeightExpr;
use grlb_core::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Engine,
    ClosedForm,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Engine => "engine",
            Source::ClosedForm => "closed-form",
        }
    }
}

/// Always `p/q`, including `q = 1`, so consumers never need to special-case
/// integers.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTerm {
    pub index: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub family: String,
    pub params: BTreeMap<String, u32>,
    pub dim: usize,
    #[serde(rename = "two_rho_P")]
    pub two_rho_p: Vec<WeightTerm>,
    /// `t` ranges over `[-a, b]`.
    pub interval: Interval,
    pub barycenter_t: String,
    #[serde(rename = "R")]
    pub r: String,
    #[serde(rename = "R_decimal")]
    pub r_decimal: String,
    pub provenance: String,
}

/// Exact values behind an [`OutputRecord`], kept for text rendering.
#[derive(Debug, Clone)]
pub struct Computation {
    pub datum: HorosphericalDatum,
    pub source: Source,
    pub dim: usize,
    pub two_rho_p: WeightExpr,
    pub marked: (usize, usize),
    pub a: Rational,
    pub b: Rational,
    pub barycenter_t: Rational,
    pub barycenter_point: Option<WeightExpr>,
    pub r: Rational,
}

fn params(datum: &HorosphericalDatum) -> BTreeMap<String, u32> {
    let mut p = BTreeMap::new();
    if let Some(n) = datum.n() {
        p.insert("n".to_string(), n);
    }
    if let Some(k) = datum.k() {
        p.insert("k".to_string(), k);
    }
    p
}

pub fn compute(datum: &HorosphericalDatum, source: Source) -> Result<Computation, Error> {
    match source {
        Source::Engine => {
            let rep = report(datum)?;
            Ok(Computation {
                datum: *datum,
                source,
                dim: rep.dimension,
                marked: (rep.segment.i, rep.segment.j),
                two_rho_p: rep.segment.two_rho_p.clone(),
                a: rep.segment.a.clone(),
                b: rep.segment.b.clone(),
                barycenter_t: rep.barycenter_t,
                barycenter_point: Some(rep.barycenter_point),
                r: rep.ricci_bound,
            })
        }
        Source::ClosedForm => closed_form(datum),
    }
}

/// Everything from the per-family formulas: the displayed `2ρ_P`, the
/// dimension column and the integral formula for `R`. The barycenter follows
/// from `R` and the known sign of `t̄`.
fn closed_form(datum: &HorosphericalDatum) -> Result<Computation, Error> {
    let one = Rational::from(1);
    let (dim, (i, j), a, b, r, t_positive) = match datum.family() {
        Family::X1 => {
            let n = datum.n().unwrap();
            let nu = n as usize;
            (nu * (nu + 3) / 2, (nu - 1, nu), Rational::from(n), Rational::from(2), r_x1_formula(n)?, true)
        }
        Family::X3 => {
            let (n, k) = (datum.n().unwrap(), datum.k().unwrap());
            let (nu, ku) = (n as usize, k as usize);
            let r = if n == k { r_x3nn_closed(n)? } else { r_x3_formula(n, k)? };
            let b = Rational::from(2 * n - 2 * k + 2);
            (ku * (4 * nu - 3 * ku + 3) / 2, (ku - 1, ku), Rational::from(k), b, r, false)
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "{other} has no integral formula; use --source engine"
            )))
        }
    };
    let excess = &r.recip()? - &one;
    let barycenter_t = if t_positive { &a * &excess } else { -(&b * &excess) };
    Ok(Computation {
        datum: *datum,
        source: Source::ClosedForm,
        dim,
        two_rho_p: WeightExpr::from_pairs([(i, a.clone()), (j, b.clone())]),
        marked: (i, j),
        a,
        b,
        barycenter_t,
        barycenter_point: None,
        r,
    })
}

impl Computation {
    pub fn record(&self, digits: usize) -> OutputRecord {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            family: self.datum.family().to_string(),
            params: params(&self.datum),
            dim: self.dim,
            two_rho_p: self
                .two_rho_p
                .iter()
                .map(|(index, c)| WeightTerm { index, coeff: fraction(c) })
                .collect(),
            interval: Interval { a: fraction(&self.a), b: fraction(&self.b) },
            barycenter_t: fraction(&self.barycenter_t),
            r: fraction(&self.r),
            r_decimal: to_decimal(&self.r, digits),
            provenance: self.source.as_str().to_string(),
        }
    }

    pub fn text(&self, digits: usize) -> String {
        let (i, j) = self.marked;
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.datum);
        let _ = writeln!(s, "  dim           {}", self.dim);
        let _ = writeln!(s, "  2ρ_P          {}", self.two_rho_p);
        let _ = writeln!(
            s,
            "  segment       γ(t) = ({} + t)ϖ{i} + ({} - t)ϖ{j},  -{} ≤ t ≤ {}",
            self.a, self.b, self.a, self.b
        );
        let _ = writeln!(s, "  barycenter t  {} ≈ {}", self.barycenter_t, to_decimal(&self.barycenter_t, digits));
        if let Some(p) = &self.barycenter_point {
            let _ = writeln!(s, "  barycenter    {p}");
        }
        let _ = writeln!(s, "  R             {} ≈ {}", self.r, to_decimal(&self.r, digits));
        let _ = write!(s, "  source        {}", self.source.as_str());
        s
    }
}

pub const CSV_HEADER: [&str; 7] = ["family", "n", "k", "dim", "barycenter_t", "R", "provenance"];

/// CSV row with decimal renderings only.
pub fn csv_row(c: &Computation, digits: usize) -> Vec<String> {
    vec![
        c.datum.family().to_string(),
        c.datum.n().map_or(String::new(), |n| n.to_string()),
        c.datum.k().map_or(String::new(), |k| k.to_string()),
        c.dim.to_string(),
        to_decimal(&c.barycenter_t, digits),
        to_decimal(&c.r, digits),
        c.source.as_str().to_string(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x5_record() {
        let c = compute(&HorosphericalDatum::x5(), Source::Engine).unwrap();
        let rec = c.record(4);
        assert_eq!(rec.r, "56/67");
        assert_eq!(rec.r_decimal, "0.8358");
        assert_eq!(rec.barycenter_t, "-11/28");
        assert_eq!(rec.interval, Interval { a: "2/1".into(), b: "2/1".into() });
        assert!(rec.params.is_empty());
    }

    #[test]
    fn closed_form_matches_engine() {
        for d in [
            HorosphericalDatum::x1(5).unwrap(),
            HorosphericalDatum::x3(7, 7).unwrap(),
            HorosphericalDatum::x3(6, 3).unwrap(),
        ] {
            let e = compute(&d, Source::Engine).unwrap().record(6);
            let mut c = compute(&d, Source::ClosedForm).unwrap().record(6);
            assert_eq!(c.provenance, "closed-form");
            c.provenance = e.provenance.clone();
            assert_eq!(c, e, "{d}");
        }
        assert!(compute(&HorosphericalDatum::x4(), Source::ClosedForm).is_err());
    }

    #[test]
    fn json_round_trip() {
        let rec = compute(&HorosphericalDatum::x3(7, 4).unwrap(), Source::Engine).unwrap().record(5);
        let json = serde_json::to_string(&rec).unwrap();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.contains("\"two_rho_P\""));
        assert!(json.contains("\"R_decimal\""));
        assert!(json.starts_with("{\"schema_version\":1,"));
    }
}
