//! Regeneration of the three published tables from the engine.

use rayon::prelude::*;
use serde::Serialize;

use grlb_core::engine::{dimension, greatest_ricci_lower_bound, Family, HorosphericalDatum};
use grlb_core::exactnum::{to_decimal, Rational};
use grlb_core::Error;

use crate::record::{compute, fraction, Computation, OutputRecord, Source};

pub const TABLE2_N: [u32; 10] = [3, 4, 5, 6, 7, 10, 20, 30, 50, 70];
pub const TABLE3_N: std::ops::RangeInclusive<u32> = 2..=7;

/// Digit counts used when none is requested: the X1 row of Table 2 is printed
/// to 4 places, the X3 rows to 5.
pub const TABLE2_X1_DIGITS: usize = 4;
pub const TABLE2_X3_DIGITS: usize = 5;

/// Decimal digits of `r` if it terminates within `max` places.
fn terminating_digits(r: &Rational, max: usize) -> Option<usize> {
    (0..=max).find(|&d| {
        let scaled = r * &Rational::from(10u64.pow(d as u32));
        scaled.is_integer()
    })
}

/// Table 3 prints terminating expansions of up to four places in full and
/// everything else to three places.
pub fn table3_digits(r: &Rational) -> usize {
    terminating_digits(r, 4).map_or(3, |d| d.max(1))
}

/// `"15/16 = 0.9375"` or `"105/128 ≈ 0.820"`.
pub fn exact_or_approx(r: &Rational) -> String {
    let sign = if terminating_digits(r, 4).is_some() { "=" } else { "≈" };
    format!("{r} {sign} {}", to_decimal(r, table3_digits(r)))
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Row {
    pub family: &'static str,
    pub dim: String,
    #[serde(rename = "R")]
    pub r: String,
    /// Exact value when the row has no free parameters.
    #[serde(rename = "R_exact", skip_serializing_if = "Option::is_none")]
    pub r_exact: Option<String>,
    #[serde(rename = "R_decimal", skip_serializing_if = "Option::is_none")]
    pub r_decimal: Option<String>,
}

pub fn table1() -> Result<Vec<Table1Row>, Error> {
    let exact = |d: HorosphericalDatum, digits: usize| -> Result<(String, String, String), Error> {
        let r = greatest_ricci_lower_bound(&d)?;
        Ok((dimension(&d)?.to_string(), fraction(&r), to_decimal(&r, digits)))
    };
    let (x2_dim, x2_r, x2_dec) = exact(HorosphericalDatum::x2(), 3)?;
    let (x4_dim, x4_r, x4_dec) = exact(HorosphericalDatum::x4(), 3)?;
    let (x5_dim, x5_r, x5_dec) = exact(HorosphericalDatum::x5(), 4)?;
    let row = |family, dim: &str, r: &str| Table1Row {
        family,
        dim: dim.to_string(),
        r: r.to_string(),
        r_exact: None,
        r_decimal: None,
    };
    let fixed = |family, dim: String, r: String, dec: String| Table1Row {
        family,
        dim,
        r: format!("{r} ≈ {dec}"),
        r_exact: Some(r),
        r_decimal: Some(dec),
    };
    Ok(vec![
        row(
            "X1(n)",
            "n(n+3)/2",
            "n ∫_{-n}^{2} (2-t)(n+t)^(n-1)(t+2n+2)^(n(n-1)/2) dt / ∫_{-n}^{2} (2-t)(n+t)^n(t+2n+2)^(n(n-1)/2) dt",
        ),
        fixed("X2", x2_dim, x2_r, x2_dec),
        row("X3(n,n)", "n(n+3)/2", "2(2n+1)! / ((n+2)(2^n n!)^2)"),
        row(
            "X3(n,k)",
            "k(4n-3k+3)/2",
            "(2n-2k+2) ∫_{-k}^{2n-2k+2} (k+t)^(k-1)(2n-2k+2-t)^(2n-2k+1)(4n-3k+4-t)^(k-1) dt / ∫_{-k}^{2n-2k+2} (k+t)^(k-1)(2n-2k+2-t)^(2n-2k+2)(4n-3k+4-t)^(k-1) dt",
        ),
        fixed("X4", x4_dim, x4_r, x4_dec),
        fixed("X5", x5_dim, x5_r, x5_dec),
    ])
}

/// One Table 2 cell; `value` is `None` where `k > n`.
#[derive(Debug, Clone)]
pub struct Table2Cell {
    pub row: &'static str,
    pub n: u32,
    pub value: Option<Computation>,
}

pub const TABLE2_ROWS: [&str; 4] = ["X1(n)", "X3(n,2)", "X3(n,3)", "X3(n,4)"];

fn table2_datum(row: usize, n: u32) -> Option<HorosphericalDatum> {
    match row {
        0 => HorosphericalDatum::x1(n).ok(),
        r => HorosphericalDatum::x3(n, r as u32 + 1).ok(),
    }
}

pub fn table2() -> Result<Vec<Table2Cell>, Error> {
    let jobs: Vec<(usize, u32)> = (0..TABLE2_ROWS.len())
        .flat_map(|row| TABLE2_N.iter().map(move |&n| (row, n)))
        .collect();
    jobs.into_par_iter()
        .map(|(row, n)| {
            let value = table2_datum(row, n)
                .map(|d| compute(&d, Source::Engine))
                .transpose()?;
            Ok(Table2Cell { row: TABLE2_ROWS[row], n, value })
        })
        .collect()
}

pub fn table2_digits(family: Family, requested: Option<usize>) -> usize {
    requested.unwrap_or(if family == Family::X1 { TABLE2_X1_DIGITS } else { TABLE2_X3_DIGITS })
}

pub fn table3() -> Result<Vec<Computation>, Error> {
    TABLE3_N
        .into_par_iter()
        .map(|n| compute(&HorosphericalDatum::x3(n, n)?, Source::Engine))
        .collect()
}

pub fn render_table1_text(rows: &[Table1Row]) -> String {
    let mut out = String::from("X         dim            R(X)\n");
    for r in rows {
        out.push_str(&format!("{:<9} {:<14} {}\n", r.family, r.dim, r.r));
    }
    out
}

pub fn render_table2_text(cells: &[Table2Cell], digits: Option<usize>) -> String {
    let width = 2 + digits.unwrap_or(TABLE2_X3_DIGITS).max(TABLE2_X1_DIGITS) + 1;
    let mut out = format!("{:<9}", "n");
    for n in TABLE2_N {
        out.push_str(&format!(" {:>width$}", n));
    }
    out.push('\n');
    for row in TABLE2_ROWS {
        out.push_str(&format!("{row:<9}"));
        for cell in cells.iter().filter(|c| c.row == row) {
            let s = match &cell.value {
                Some(c) => to_decimal(&c.r, table2_digits(c.datum.family(), digits)),
                None => "−".to_string(),
            };
            out.push_str(&format!(" {s:>width$}"));
        }
        out.push('\n');
    }
    out
}

pub fn render_table3_text(rows: &[Computation]) -> String {
    let mut out = String::from("n   R(X3(n,n))\n");
    for c in rows {
        out.push_str(&format!("{:<3} {}\n", c.datum.n().unwrap(), exact_or_approx(&c.r)));
    }
    out
}

pub fn table2_records(cells: &[Table2Cell], digits: Option<usize>) -> Vec<OutputRecord> {
    cells
        .iter()
        .filter_map(|cell| cell.value.as_ref())
        .map(|c| c.record(table2_digits(c.datum.family(), digits)))
        .collect()
}
