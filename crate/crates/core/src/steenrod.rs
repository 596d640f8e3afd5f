//! The Bockstein β, the first reduced power P¹ and the Milnor primitive
//! Q₁ = P¹β − βP¹, extended from the generator tables of a presentation.
//!
//! β and Q₁ are odd derivations and P¹ is an even one on the algebras handled
//! here (P⁰ = 1 and the exterior generators sit in degree 1, so the Cartan
//! formula collapses to a Leibniz rule for P¹). Q₁ is computed from the
//! commutator; [`q1_derivation`] is the second route, used by
//! [`verify_axioms`] to cross-check it.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, GeneratorSpec, Monomial, SpacePresentation};
use crate::error::Result;
use crate::f3::F3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperationKind {
    Beta,
    P1,
    Q1,
}

impl OperationKind {
    pub const ALL: [OperationKind; 3] = [OperationKind::Beta, OperationKind::P1, OperationKind::Q1];

    pub fn degree_shift(self) -> usize {
        match self {
            OperationKind::Beta => 1,
            OperationKind::P1 => 4,
            OperationKind::Q1 => 5,
        }
    }

    pub fn is_odd(self) -> bool {
        self.degree_shift() % 2 == 1
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperationKind::Beta => "beta",
            OperationKind::P1 => "P1",
            OperationKind::Q1 => "Q1",
        })
    }
}

pub fn beta(space: &SpacePresentation, a: &Element) -> Result<Element> {
    space.check(a)?;
    Ok(beta_unchecked(space, a))
}

pub fn p1(space: &SpacePresentation, a: &Element) -> Result<Element> {
    space.check(a)?;
    Ok(p1_unchecked(space, a))
}

/// Q₁ as the commutator P¹β − βP¹.
pub fn q1(space: &SpacePresentation, a: &Element) -> Result<Element> {
    space.check(a)?;
    Ok(q1_unchecked(space, a))
}

/// Q₁ extended as an odd derivation from its values on generators.
pub fn q1_derivation(space: &SpacePresentation, a: &Element) -> Result<Element> {
    space.check(a)?;
    Ok(derive(space, a, true, |g| {
        let generator = space
            .generator_element(g.id)
            .expect("generator of this presentation");
        q1_unchecked(space, &generator)
    }))
}

pub fn apply(space: &SpacePresentation, kind: OperationKind, a: &Element) -> Result<Element> {
    space.check(a)?;
    Ok(apply_unchecked(space, kind, a))
}

pub(crate) fn apply_unchecked(
    space: &SpacePresentation,
    kind: OperationKind,
    a: &Element,
) -> Element {
    match kind {
        OperationKind::Beta => beta_unchecked(space, a),
        OperationKind::P1 => p1_unchecked(space, a),
        OperationKind::Q1 => q1_unchecked(space, a),
    }
}

fn beta_unchecked(space: &SpacePresentation, a: &Element) -> Element {
    derive(space, a, true, |g| g.beta_image.clone())
}

fn p1_unchecked(space: &SpacePresentation, a: &Element) -> Element {
    derive(space, a, false, |g| g.p1_image.clone())
}

fn q1_unchecked(space: &SpacePresentation, a: &Element) -> Element {
    let p1_beta = p1_unchecked(space, &beta_unchecked(space, a));
    let beta_p1 = beta_unchecked(space, &p1_unchecked(space, a));
    p1_beta - beta_p1
}

/// Extends generator values to a derivation of the given parity:
/// D(uv) = D(u)v + (−1)^{odd·|u|} u D(v), and D(y^k) = k y^{k−1} D(y) for the
/// central degree-2 generators.
fn derive(
    space: &SpacePresentation,
    a: &Element,
    odd: bool,
    image: impl Fn(&GeneratorSpec) -> Element,
) -> Element {
    let generators = space.generators();
    let mut out = Element::zero();
    for (m, c) in a.terms() {
        let exterior = m.exterior();
        let powers = m.powers();
        for (i, id) in exterior.iter().enumerate() {
            let img = image(&generators[id.index()]);
            if img.is_zero() {
                continue;
            }
            let prefix = Element::from_monomial(Monomial::from_parts(&exterior[..i], &[]));
            let suffix = Element::from_monomial(Monomial::from_parts(&exterior[i + 1..], powers));
            let sign = if odd { F3::sign(i) } else { F3::ONE };
            let term = space.mul_unchecked(&space.mul_unchecked(&prefix, &img), &suffix);
            out += &term.scale(c * sign);
        }
        for (j, &(id, exponent)) in powers.iter().enumerate() {
            let multiplicity = F3::new(exponent as i64);
            if multiplicity.is_zero() {
                continue;
            }
            let img = image(&generators[id.index()]);
            if img.is_zero() {
                continue;
            }
            let prefix = Element::from_monomial(Monomial::from_parts(exterior, &[]));
            let mut rest: Vec<_> = powers.to_vec();
            if exponent == 1 {
                rest.remove(j);
            } else {
                rest[j].1 -= 1;
            }
            let rest = Element::from_monomial(Monomial::from_parts(&[], &rest));
            let sign = if odd {
                F3::sign(exterior.len())
            } else {
                F3::ONE
            };
            let term = space.mul_unchecked(&space.mul_unchecked(&prefix, &img), &rest);
            out += &term.scale(c * sign * multiplicity);
        }
    }
    out.truncated(space.degree_cap())
}

/// A uniformly random element of degree `k` (each basis coefficient drawn
/// from F₃).
pub fn random_element<R: Rng>(space: &SpacePresentation, k: usize, rng: &mut R) -> Result<Element> {
    let basis = space.basis(k)?;
    Ok(Element::from_terms(
        basis
            .iter()
            .map(|m| (m.clone(), F3::new(rng.random_range(0..3)))),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    BetaSquared,
    Q1Squared,
    Q1Commutator,
    Leibniz(OperationKind),
    Instability,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::BetaSquared => f.write_str("beta o beta = 0"),
            Axiom::Q1Squared => f.write_str("Q1 o Q1 = 0"),
            Axiom::Q1Commutator => {
                f.write_str("Q1 = P1 beta - beta P1 agrees with the odd derivation")
            }
            Axiom::Leibniz(kind) => write!(f, "Leibniz rule for {kind}"),
            Axiom::Instability => f.write_str("P1(u) = u^3 in degree 2"),
        }
    }
}

/// The first violated axiom, with the input that breaks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub degree: usize,
    pub witness: Element,
    /// Second factor for Leibniz failures.
    pub partner: Option<Element>,
    pub lhs: Element,
    pub rhs: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub seed: u64,
    pub max_degree: usize,
    pub trials: usize,
    pub checks: usize,
    pub failure: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn render(&self, space: &SpacePresentation) -> String {
        let mut out = format!(
            "axiom suite: degrees 0..={}, {} random elements per degree, seed {}, {} checks\n",
            self.max_degree, self.trials, self.seed, self.checks
        );
        match &self.failure {
            None => out.push_str("result: PASS\n"),
            Some(f) => {
                out.push_str(&format!("result: FAIL ({})\n", f.axiom));
                out.push_str(&format!("  degree:  {}\n", f.degree));
                out.push_str(&format!(
                    "  witness: {}\n",
                    space.format_element(&f.witness)
                ));
                if let Some(p) = &f.partner {
                    out.push_str(&format!("  partner: {}\n", space.format_element(p)));
                }
                out.push_str(&format!("  lhs:     {}\n", space.format_element(&f.lhs)));
                out.push_str(&format!("  rhs:     {}\n", space.format_element(&f.rhs)));
            }
        }
        out
    }
}

/// Checks the operation table of `space` on every basis monomial (and every
/// pair of basis monomials for the Leibniz rules) up to `max_degree`, then on
/// `trials` seeded random elements per degree. `max_degree` is clamped to the
/// degree cap. Stops at the first failure.
pub fn verify_axioms(
    space: &SpacePresentation,
    max_degree: usize,
    trials: usize,
    seed: u64,
) -> AxiomReport {
    let max_degree = max_degree.min(space.degree_cap());
    let mut report = AxiomReport {
        seed,
        max_degree,
        trials,
        checks: 0,
        failure: None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let basis = |k| -> Vec<Element> {
        space
            .basis(k)
            .expect("degree within cap")
            .iter()
            .cloned()
            .map(Element::from_monomial)
            .collect()
    };

    for k in 0..=max_degree {
        for u in basis(k) {
            if let Some(f) = check_single(space, k, &u, &mut report.checks) {
                report.failure = Some(f);
                return report;
            }
        }
        for i in 0..=k {
            let left = basis(i);
            let right = basis(k - i);
            for u in &left {
                for v in &right {
                    if let Some(f) = check_leibniz(space, i, u, v, &mut report.checks) {
                        report.failure = Some(f);
                        return report;
                    }
                }
            }
        }
    }

    for k in 0..=max_degree {
        for _ in 0..trials {
            let u = random_element(space, k, &mut rng).expect("degree within cap");
            if let Some(f) = check_single(space, k, &u, &mut report.checks) {
                report.failure = Some(f);
                return report;
            }
            let j = rng.random_range(0..=max_degree - k);
            let v = random_element(space, j, &mut rng).expect("degree within cap");
            if let Some(f) = check_leibniz(space, k, &u, &v, &mut report.checks) {
                report.failure = Some(f);
                return report;
            }
        }
    }
    report
}

fn check_single(
    space: &SpacePresentation,
    k: usize,
    u: &Element,
    checks: &mut usize,
) -> Option<AxiomFailure> {
    let fail = |axiom, lhs: Element, rhs: Element| {
        (lhs != rhs).then(|| AxiomFailure {
            axiom,
            degree: k,
            witness: u.clone(),
            partner: None,
            lhs,
            rhs,
        })
    };

    *checks += 1;
    let b = beta_unchecked(space, u);
    if let Some(f) = fail(
        Axiom::BetaSquared,
        beta_unchecked(space, &b),
        Element::zero(),
    ) {
        return Some(f);
    }

    *checks += 1;
    let q = q1_unchecked(space, u);
    if let Some(f) = fail(Axiom::Q1Squared, q1_unchecked(space, &q), Element::zero()) {
        return Some(f);
    }

    *checks += 1;
    let routed = q1_derivation(space, u).expect("element of this presentation");
    if let Some(f) = fail(Axiom::Q1Commutator, q, routed) {
        return Some(f);
    }

    if k == 2 {
        *checks += 1;
        let cube = space.mul_unchecked(u, &space.mul_unchecked(u, u));
        if let Some(f) = fail(Axiom::Instability, p1_unchecked(space, u), cube) {
            return Some(f);
        }
    }
    None
}

fn check_leibniz(
    space: &SpacePresentation,
    u_degree: usize,
    u: &Element,
    v: &Element,
    checks: &mut usize,
) -> Option<AxiomFailure> {
    let uv = space.mul_unchecked(u, v);
    for kind in OperationKind::ALL {
        *checks += 1;
        let lhs = apply_unchecked(space, kind, &uv);
        let sign = if kind.is_odd() {
            F3::sign(u_degree)
        } else {
            F3::ONE
        };
        let rhs = space.mul_unchecked(&apply_unchecked(space, kind, u), v)
            + space
                .mul_unchecked(u, &apply_unchecked(space, kind, v))
                .scale(sign);
        if lhs != rhs {
            return Some(AxiomFailure {
                axiom: Axiom::Leibniz(kind),
                degree: u_degree,
                witness: u.clone(),
                partner: Some(v.clone()),
                lhs,
                rhs,
            });
        }
    }
    None
}
