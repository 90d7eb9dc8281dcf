//! The invariant table over all plat normal forms up to a bound.
//!
//! One row per equivalence class: the trivial knot `F(1, 0)` first, then for
//! each odd `p` every even coprime `q` in `(0, p)` in increasing order.  Those
//! `q` are a full set of class representatives, so no two rows name the same
//! knot.  Rows render as an aligned text table, as CSV, or as JSON.

use crate::report::KnotReport;
use platkit_core::Error;
use serde::Serialize;

/// Classical 1-knots whose doubly slice theory matches the row's invariants,
/// in Rolfsen-style numbering.  Known only for small `p`.
const APPROX: &[((i64, i64), &str)] = &[
    ((1, 0), "0_1"),
    ((3, 2), "2_2"),
    ((5, 2), "4_8"),
    ((5, 4), "4_9"),
    ((7, 2), "6_64"),
    ((7, 4), "6_69"),
    ((7, 6), "6_68"),
];

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    /// Row label `q/p`, e.g. `4/7`.
    pub label: String,
    pub approx: Option<&'static str>,
    pub report: KnotReport,
}

impl TableRow {
    fn new(p: i64, q: i64) -> Result<TableRow, Error> {
        let approx = APPROX
            .iter()
            .find_map(|&(pq, name)| (pq == (p, q)).then_some(name));
        Ok(TableRow {
            label: format!("{q}/{p}"),
            approx,
            report: KnotReport::build(p, q)?,
        })
    }

    fn ribbon_cell(&self) -> String {
        if self.report.p == 1 {
            format!("{} (Trivial 2-knot)", self.report.ribbon_display())
        } else {
            self.report.ribbon_display()
        }
    }
}

/// Builds the rows for all `p <= max_p`.
pub fn table_rows(max_p: i64) -> Result<Vec<TableRow>, Error> {
    let mut rows = vec![TableRow::new(1, 0)?];
    let mut p = 3;
    while p <= max_p {
        for q in (2..p).step_by(2) {
            if num_integer::gcd(p, q) == 1 {
                rows.push(TableRow::new(p, q)?);
            }
        }
        p += 2;
    }
    Ok(rows)
}

/// Aligned four-column text table with a header line.
pub fn render_text(rows: &[TableRow]) -> String {
    let header = ["q/p", "Ribbon type", "Delta(t)", "~ K"];
    let mut cells: Vec<[String; 4]> = vec![header.map(String::from)];
    for row in rows {
        cells.push([
            row.label.clone(),
            row.ribbon_cell(),
            row.report.delta().to_string(),
            row.approx.unwrap_or("").to_string(),
        ]);
    }
    let mut width = [0usize; 4];
    for row in &cells {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &cells {
        let mut line = String::new();
        for (cell, w) in row.iter().zip(width) {
            if !line.is_empty() {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.push_str(&" ".repeat(w - cell.len()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// CSV with one row per knot; coefficients are space-separated, densely
/// listed from `min_exp` upward.
pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("p,q,ribbon_type,delta_coeffs,min_exp,det,a,tau,monic\n");
    for row in rows {
        let r = &row.report;
        let ribbon = if r.ribbon_type.is_empty() {
            "R(0 0)".to_string()
        } else {
            let entries: Vec<String> = r.ribbon_type.iter().map(|e| e.to_string()).collect();
            format!("R({})", entries.join(" "))
        };
        let coeffs: Vec<String> = r
            .alexander_normalized
            .coeffs
            .iter()
            .map(|c| c.to_string())
            .collect();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.p,
            r.q,
            ribbon,
            coeffs.join(" "),
            r.alexander_normalized.min_exp,
            r.determinant,
            r.a,
            r.tau,
            r.monic
        ));
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}
