//! Machine-readable witness reports.
//!
//! Fields are declared in lexicographic order so that serializing the typed
//! report and re-serializing a generic JSON value parsed from it produce the
//! same bytes. No floating point appears anywhere.

use serde::{Deserialize, Serialize};

use crate::algebra::SpacePresentation;
use crate::checker::{WitnessReport, GEOMETRIC_RANGE, NO_WITNESS, RANGE_WARNING};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub bz3: usize,
    pub cap: usize,
    pub circles: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: u8,
    pub monomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub alphas: Vec<String>,
    pub n: usize,
    pub pairing_witness: Option<String>,
    pub product_class: Vec<TermJson>,
    pub space: SpaceJson,
    pub verdict: bool,
    pub warnings: Vec<String>,
    pub zeta: Option<String>,
}

impl ReportJson {
    pub fn from_report(space: &SpacePresentation, report: &WitnessReport) -> Result<Self> {
        let alphas = report
            .alphas
            .iter()
            .map(|&id| space.generator(id).map(|g| g.name.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ReportJson {
            alphas,
            n: report.n,
            pairing_witness: report
                .pairing_witness
                .as_ref()
                .map(|m| space.format_monomial(m)),
            product_class: report
                .product_class
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: c.value(),
                    monomial: space.format_monomial(m),
                })
                .collect(),
            space: space_json(space),
            verdict: report.verdict,
            warnings: report.warnings.clone(),
            zeta: Some(space.format_element(&report.zeta)),
        })
    }

    /// Report for a search that found nothing.
    pub fn not_found(space: &SpacePresentation, n: usize) -> Self {
        let mut warnings = Vec::new();
        if !GEOMETRIC_RANGE.contains(&n) {
            warnings.push(RANGE_WARNING.to_string());
        }
        warnings.push(NO_WITNESS.to_string());
        ReportJson {
            alphas: Vec::new(),
            n,
            pairing_witness: None,
            product_class: Vec::new(),
            space: space_json(space),
            verdict: false,
            warnings,
            zeta: None,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn space_json(space: &SpacePresentation) -> SpaceJson {
    SpaceJson {
        bz3: space.meta().bz3_factors,
        cap: space.degree_cap(),
        circles: space.meta().circle_factors,
    }
}

/// Re-renders a JSON document through a generic value, which sorts keys.
pub fn canonicalize(json: &str) -> serde_json::Result<String> {
    let value: serde_json::Value = serde_json::from_str(json)?;
    let mut s = serde_json::to_string_pretty(&value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::search_witness;
    use crate::spaces::{b_gamma, standard};

    #[test]
    fn witness_report_json() {
        let s = b_gamma(5, None).unwrap();
        let report = search_witness(&s, 5).unwrap().unwrap();
        let json = ReportJson::from_report(&s, &report).unwrap();
        assert_eq!(json.alphas, ["a1", "a2", "a3"]);
        assert_eq!(json.zeta.as_deref(), Some("x1*x2"));
        assert_eq!(json.pairing_witness.as_deref(), Some("a1*a2*a3*y1*y2^3"));
        assert_eq!(
            json.product_class,
            [
                TermJson {
                    coeff: 2,
                    monomial: "a1*a2*a3*y1*y2^3".into()
                },
                TermJson {
                    coeff: 1,
                    monomial: "a1*a2*a3*y1^3*y2".into()
                },
            ]
        );
        assert_eq!(
            json.space,
            SpaceJson {
                bz3: 2,
                cap: 11,
                circles: 3
            }
        );

        let text = json.to_json();
        assert_eq!(canonicalize(&text).unwrap(), text);
        let back: ReportJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn not_found_report_json() {
        let s = standard(4, 1, 11).unwrap();
        let json = ReportJson::not_found(&s, 5);
        let text = json.to_json();
        assert_eq!(canonicalize(&text).unwrap(), text);
        assert!(text.contains("\"zeta\": null"));
        assert_eq!(json.warnings, [NO_WITNESS]);
    }
}
