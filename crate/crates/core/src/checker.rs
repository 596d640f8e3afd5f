//! Witnesses for the cohomological criterion
//!
//! ```text
//!     ρ(α₁) ∪ ⋯ ∪ ρ(α_{n−2}) ∪ βQ₁ζ ≠ 0  in H^{n+6}(X; F₃)
//! ```
//!
//! with αᵢ integral degree-1 classes and ζ ∈ H²(X; F₃). A nonzero product
//! pairs nontrivially with some dual monomial y; pushing y through β★, Q₁★
//! and the cap product by the αᵢ produces the homological condition with
//! z = δy, which is what [`explain`] prints.
//!
//! [`search_witness`] only tries ζ from the degree-2 monomial basis and αᵢ
//! from subsets of the integral generators. Both restrictions lose nothing:
//! ζ ↦ product is F₃-linear, so a nonzero value on some ζ is nonzero on a
//! basis monomial in its support; and a product of integral degree-1 classes
//! expands multilinearly into products of distinct integral generators.

use std::ops::RangeInclusive;

use itertools::Itertools;

use crate::algebra::{Element, GeneratorId, Monomial, SpacePresentation};
use crate::error::{Error, Result};
use crate::f3::F3;
use crate::homology::{cap, homology_op, kronecker, HomologyClass};
use crate::steenrod::{beta, q1, OperationKind};

/// Dimensions for which the criterion carries its geometric conclusion.
pub const GEOMETRIC_RANGE: RangeInclusive<usize> = 5..=8;

pub const RANGE_WARNING: &str =
    "algebraic condition only: the geometric conclusion requires 5 <= n <= 8";

pub const NO_WITNESS: &str = "no witness found (cohomological criterion)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub n: usize,
    pub alphas: Vec<GeneratorId>,
    pub zeta: Element,
    /// ρ(α₁)⋯ρ(α_{n−2})·βQ₁ζ, of degree n + 6.
    pub product_class: Element,
    pub verdict: bool,
    /// Lowest monomial of `product_class`; its dual is the homology class y.
    pub pairing_witness: Option<Monomial>,
    pub warnings: Vec<String>,
}

impl WitnessReport {
    /// The criterion implies the homological condition; a false verdict says
    /// nothing about it.
    pub fn homological_condition_holds(&self) -> bool {
        self.verdict
    }

    /// The integral class z = δy, rendered symbolically.
    pub fn z_description(&self, space: &SpacePresentation) -> Option<String> {
        self.pairing_witness
            .as_ref()
            .map(|m| format!("delta(dual({}))", space.format_monomial(m)))
    }
}

fn range_warnings(n: usize) -> Vec<String> {
    if GEOMETRIC_RANGE.contains(&n) {
        Vec::new()
    } else {
        vec![RANGE_WARNING.to_string()]
    }
}

/// Evaluates the criterion for explicit αᵢ and ζ.
pub fn check_condition(
    space: &SpacePresentation,
    n: usize,
    alphas: &[GeneratorId],
    zeta: &Element,
) -> Result<WitnessReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if space.degree_cap() < n + 6 {
        return Err(Error::CapTooSmall {
            cap: space.degree_cap(),
            needed: n + 6,
        });
    }
    if alphas.len() != n - 2 {
        return Err(Error::InvalidWitness(format!(
            "expected {} alpha classes, got {}",
            n - 2,
            alphas.len()
        )));
    }
    if !alphas.iter().all_unique() {
        return Err(Error::InvalidWitness(
            "alpha classes must be distinct".into(),
        ));
    }
    for &id in alphas {
        let g = space.generator(id)?;
        if g.degree != 1 || !g.integral_lift {
            return Err(Error::InvalidWitness(format!(
                "{} is not an integral degree-1 class",
                g.name
            )));
        }
    }
    space.check(zeta)?;
    if !zeta.is_homogeneous_of(2) {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: zeta
                .degree()
                .map_or_else(|| "a mixed-degree element".into(), |d| d.to_string()),
        });
    }

    let alpha_product = alpha_product(space, alphas)?;
    let beta_q1 = beta(space, &q1(space, zeta)?)?;
    let product_class = space.mul(&alpha_product, &beta_q1)?;
    let verdict = !product_class.is_zero();
    let mut warnings = range_warnings(n);
    if !verdict {
        warnings.push(NO_WITNESS.to_string());
    }
    Ok(WitnessReport {
        n,
        alphas: alphas.to_vec(),
        zeta: zeta.clone(),
        pairing_witness: product_class.leading_monomial().cloned(),
        product_class,
        verdict,
        warnings,
    })
}

/// First (ζ, α-subset) in basis order satisfying the criterion, ζ outermost.
pub fn search_witness(space: &SpacePresentation, n: usize) -> Result<Option<WitnessReport>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if space.degree_cap() < n + 6 {
        return Err(Error::CapTooSmall {
            cap: space.degree_cap(),
            needed: n + 6,
        });
    }
    let eligible = space.integral_degree_one();
    if eligible.len() < n - 2 {
        return Err(Error::NotEnoughClasses {
            needed: n - 2,
            available: eligible.len(),
        });
    }
    for m in space.basis(2)? {
        let zeta = Element::from_monomial(m.clone());
        // cheap filter: the criterion needs βQ₁ζ ≠ 0
        if beta(space, &q1(space, &zeta)?)?.is_zero() {
            continue;
        }
        for subset in eligible.iter().copied().combinations(n - 2) {
            let report = check_condition(space, n, &subset, &zeta)?;
            if report.verdict {
                return Ok(Some(report));
            }
        }
    }
    Ok(None)
}

fn alpha_product(space: &SpacePresentation, alphas: &[GeneratorId]) -> Result<Element> {
    let factors = alphas
        .iter()
        .map(|&id| space.generator_element(id))
        .collect::<Result<Vec<_>>>()?;
    space.product(&factors)
}

/// One line of the Kronecker chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub pairing: &'static str,
    pub reason: Option<&'static str>,
    pub value: F3,
    /// The homology class the step pairs against, when it is new.
    pub class: Option<(&'static str, HomologyClass)>,
}

/// The Kronecker chain for a verdict-true report: each step pairs with a
/// nonzero value, ending at ⟨ζ, α ∩ β★P¹★β★y⟩ in degree 2.
pub fn kronecker_chain(
    space: &SpacePresentation,
    report: &WitnessReport,
) -> Result<Option<Vec<ChainStep>>> {
    let Some(witness) = &report.pairing_witness else {
        return Ok(None);
    };
    let a = alpha_product(space, &report.alphas)?;
    let zeta = &report.zeta;
    let q1_zeta = q1(space, zeta)?;
    let beta_q1_zeta = beta(space, &q1_zeta)?;

    let y = HomologyClass::dual(space, witness)?;
    let beta_y = homology_op(space, OperationKind::Beta, &y)?;
    let q1_beta_y = homology_op(space, OperationKind::Q1, &beta_y)?;
    let p1_beta_y = homology_op(space, OperationKind::P1, &beta_y)?;
    let bp_beta_y = homology_op(space, OperationKind::Beta, &p1_beta_y)?;
    let capped = cap(space, &a, &bp_beta_y)?;

    Ok(Some(vec![
        ChainStep {
            pairing: "<rho(alpha) . beta Q1 zeta, y>",
            reason: None,
            value: kronecker(space, &space.mul(&a, &beta_q1_zeta)?, &y)?,
            class: Some(("y", y)),
        },
        ChainStep {
            pairing: "<rho(alpha) . Q1 zeta, beta* y>",
            reason: Some("since beta rho = 0"),
            value: kronecker(space, &space.mul(&a, &q1_zeta)?, &beta_y)?,
            class: Some(("beta* y", beta_y)),
        },
        ChainStep {
            pairing: "<rho(alpha) . zeta, Q1* beta* y>",
            reason: Some("since Q1(H^1) = 0"),
            value: kronecker(space, &space.mul(&a, zeta)?, &q1_beta_y)?,
            class: Some(("Q1* beta* y", q1_beta_y)),
        },
        ChainStep {
            pairing: "<rho(alpha) . zeta, beta* P1* rho(delta y)>",
            reason: Some("since beta beta = 0"),
            value: kronecker(space, &space.mul(&a, zeta)?, &bp_beta_y)?,
            class: Some(("beta* P1* beta* y", bp_beta_y)),
        },
        ChainStep {
            pairing: "<zeta, rho(alpha cap delta P1* rho(delta y))>",
            reason: Some("since beta = rho delta"),
            value: kronecker(space, zeta, &capped)?,
            class: Some(("alpha cap beta* P1* beta* y", capped)),
        },
    ]))
}

/// Human-readable derivation for a report: the cohomology side, then the
/// Kronecker chain for a true verdict or the first vanishing stage for a
/// false one.
pub fn explain(space: &SpacePresentation, report: &WitnessReport) -> Result<String> {
    let mut out = String::new();
    let a = alpha_product(space, &report.alphas)?;
    let q1_zeta = q1(space, &report.zeta)?;
    let beta_q1_zeta = beta(space, &q1_zeta)?;
    let alpha_names = report
        .alphas
        .iter()
        .map(|&id| space.generator(id).map(|g| g.name.clone()))
        .collect::<Result<Vec<_>>>()?;

    out.push_str(&format!(
        "cohomological criterion for n = {} in H^{}(X; Z/3)\n",
        report.n,
        report.n + 6
    ));
    out.push_str(&format!("  space            : {space}\n"));
    out.push_str(&format!(
        "  alphas           : {}\n",
        if alpha_names.is_empty() {
            "(none)".to_string()
        } else {
            alpha_names.join(", ")
        }
    ));

    let stages = [
        ("zeta", &report.zeta),
        ("Q1 zeta", &q1_zeta),
        ("beta Q1 zeta", &beta_q1_zeta),
        ("rho(alpha)", &a),
        ("product class", &report.product_class),
    ];
    let first_zero = stages.iter().position(|(_, e)| e.is_zero());
    for (i, (name, e)) in stages.iter().enumerate() {
        out.push_str(&format!(
            "  {name:<17}: {}{}\n",
            space.format_element_labeled(e),
            if Some(i) == first_zero {
                "    <-- vanishes here"
            } else {
                ""
            }
        ));
    }
    out.push_str(&format!(
        "verdict: {}\n",
        if report.verdict { "nonzero" } else { "zero" }
    ));

    if let Some(steps) = kronecker_chain(space, report)? {
        out.push_str("Kronecker chain:\n");
        for (i, step) in steps.iter().enumerate() {
            out.push_str(&format!("  ({i}) {:<48} = {}", step.pairing, step.value));
            if let Some(reason) = step.reason {
                out.push_str(&format!("    ({reason})"));
            }
            out.push('\n');
            if let Some((name, class)) = &step.class {
                out.push_str(&format!(
                    "        {name} = {}  [H_{}]\n",
                    class.format(space),
                    class.degree()
                ));
            }
        }
        out.push_str(&format!(
            "conclusion: homological condition holds with z = {} in H_{}(X; Z)\n",
            report.z_description(space).unwrap_or_default(),
            report.n + 5
        ));
    } else {
        out.push_str(&format!("conclusion: {NO_WITNESS}\n"));
    }
    for w in report.warnings.iter().filter(|w| w.as_str() != NO_WITNESS) {
        out.push_str(&format!("warning: {w}\n"));
    }
    Ok(out)
}
