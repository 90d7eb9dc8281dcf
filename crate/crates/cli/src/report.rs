//! Full invariant report for a single plat normal form.
//!
//! `KnotReport` bundles everything the toolkit can say about one `F(p, q)`:
//! the ribbon type, the normalized Alexander polynomial, and the integer
//! invariants read off from it.  The struct serializes to JSON as-is, and
//! `render_text` / `parse_text` give a line-oriented plain format that
//! round-trips through the same fields.

use num_traits::ToPrimitive;
use platkit_core::{
    a_and_tau, alexander_closed, canonical_even_rep, determinant, ribbon_type, tau_closed_form,
    Error, LaurentPoly, PlatNormalForm, RibbonType,
};
use serde::{Deserialize, Serialize};

/// Dense coefficient view of a Laurent polynomial: `coeffs[k]` multiplies
/// `t^(min_exp + k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyData {
    pub min_exp: i64,
    pub coeffs: Vec<i64>,
}

impl PolyData {
    pub fn from_poly(f: &LaurentPoly) -> Self {
        let (Some(lo), Some(hi)) = (f.min_exp(), f.max_exp()) else {
            return PolyData {
                min_exp: 0,
                coeffs: Vec::new(),
            };
        };
        let coeffs = (lo..=hi)
            .map(|k| f.coeff(k).to_i64().expect("coefficient fits in i64"))
            .collect();
        PolyData {
            min_exp: lo,
            coeffs,
        }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (self.min_exp + k as i64, c)),
        )
    }
}

/// Everything the toolkit computes for one plat normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub p: i64,
    pub q: i64,
    /// The even residue in `[0, 2p)` actually fed to the sign-sequence walk.
    pub canonical_even_q: i64,
    pub ribbon_type: Vec<i64>,
    /// Normalized so the value at 1 is 1 and the derivative there is 0.
    pub alexander_normalized: PolyData,
    pub determinant: u64,
    pub a: u64,
    pub tau: u64,
    pub monic: bool,
    pub invertibility_obstructed: bool,
    pub spun_separated: bool,
}

impl KnotReport {
    /// Computes the full report for `F(p, q)`.
    pub fn build(p: i64, q: i64) -> Result<KnotReport, Error> {
        let knot = PlatNormalForm::new(p, q)?;
        let delta = alexander_closed(p, q)?.normalize()?;
        let rt = ribbon_type(p, q)?;
        let ta = a_and_tau(&delta)?;
        let tau = ta.tau.to_u64().expect("tau fits in u64");
        let report = KnotReport {
            p: knot.p(),
            q: knot.q(),
            canonical_even_q: canonical_even_rep(p, q),
            ribbon_type: rt.entries().to_vec(),
            alexander_normalized: PolyData::from_poly(&delta),
            determinant: determinant(&delta)
                .to_u64()
                .expect("determinant fits in u64"),
            a: ta.a.to_u64().expect("a fits in u64"),
            tau,
            monic: delta.is_monic()?,
            invertibility_obstructed: tau != 0,
            spun_separated: tau != 0,
        };
        debug_assert_eq!(report.determinant, knot.p() as u64);
        debug_assert_eq!(report.a, knot.p() as u64);
        debug_assert_eq!(
            report.tau as i64,
            tau_closed_form(p, report.canonical_even_q).expect("even representative"),
        );
        Ok(report)
    }

    pub fn delta(&self) -> LaurentPoly {
        self.alexander_normalized.to_poly()
    }

    /// Ribbon-type display string, e.g. `R(1, -1)`; `R(0, 0)` for the trivial knot.
    pub fn ribbon_display(&self) -> String {
        RibbonType::new(self.ribbon_type.clone()).to_string()
    }

    /// Line-oriented `key: value` rendering; inverse of `parse_text`.
    pub fn render_text(&self) -> String {
        let coeffs: Vec<String> = self
            .alexander_normalized
            .coeffs
            .iter()
            .map(|c| c.to_string())
            .collect();
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&v);
            out.push('\n');
        };
        line("p", self.p.to_string());
        line("q", self.q.to_string());
        line("canonical_even_q", self.canonical_even_q.to_string());
        line("ribbon_type", self.ribbon_display());
        line("alexander_normalized", self.delta().to_string());
        line(
            "alexander_min_exp",
            self.alexander_normalized.min_exp.to_string(),
        );
        line("alexander_coeffs", coeffs.join(", "));
        line("determinant", self.determinant.to_string());
        line("a", self.a.to_string());
        line("tau", self.tau.to_string());
        line("monic", self.monic.to_string());
        line(
            "invertibility_obstructed",
            self.invertibility_obstructed.to_string(),
        );
        line("spun_separated", self.spun_separated.to_string());
        out
    }

    /// Parses the output of `render_text` back into a report.
    pub fn parse_text(text: &str) -> Option<KnotReport> {
        let get = |key: &str| -> Option<&str> {
            text.lines().find_map(|l| {
                let rest = l.strip_prefix(key)?;
                rest.strip_prefix(": ")
            })
        };
        let ribbon = parse_ribbon(get("ribbon_type")?)?;
        let coeffs_field = get("alexander_coeffs")?;
        let coeffs = coeffs_field
            .split(',')
            .map(|s| s.trim().parse().ok())
            .collect::<Option<Vec<i64>>>()?;
        Some(KnotReport {
            p: get("p")?.parse().ok()?,
            q: get("q")?.parse().ok()?,
            canonical_even_q: get("canonical_even_q")?.parse().ok()?,
            ribbon_type: ribbon,
            alexander_normalized: PolyData {
                min_exp: get("alexander_min_exp")?.parse().ok()?,
                coeffs,
            },
            determinant: get("determinant")?.parse().ok()?,
            a: get("a")?.parse().ok()?,
            tau: get("tau")?.parse().ok()?,
            monic: get("monic")?.parse().ok()?,
            invertibility_obstructed: get("invertibility_obstructed")?.parse().ok()?,
            spun_separated: get("spun_separated")?.parse().ok()?,
        })
    }
}

fn parse_ribbon(s: &str) -> Option<Vec<i64>> {
    let inner = s.strip_prefix("R(")?.strip_suffix(')')?;
    // `R(0, 0)` is the display form of the empty (trivial) type; a genuine
    // report never holds literal zero entries.
    if inner == "0, 0" {
        return Some(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}
