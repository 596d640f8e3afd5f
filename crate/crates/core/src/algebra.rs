//! Graded-commutative algebras over F₃ generated by exterior classes in
//! degree 1 and polynomial classes in degree 2, truncated above a degree cap.
//!
//! A [`Monomial`] stores its exterior factors in increasing generator order
//! and its polynomial part as a sorted list of `(generator, exponent)` pairs,
//! so every class has exactly one representation and [`Element`] equality is
//! structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::f3::F3;

/// Position of a generator in its presentation's generator list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId(pub usize);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A product of distinct exterior generators times powers of polynomial
/// generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exterior: Vec<GeneratorId>,
    powers: Vec<(GeneratorId, u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a monomial from already-canonical parts: `exterior` strictly
    /// increasing, `powers` strictly increasing in the id with positive
    /// exponents.
    pub fn new(exterior: Vec<GeneratorId>, powers: Vec<(GeneratorId, u32)>) -> Result<Self> {
        if !exterior.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "exterior factors must be strictly increasing".into(),
            ));
        }
        if !powers.windows(2).all(|w| w[0].0 < w[1].0) {
            return Err(Error::InvalidArgument(
                "polynomial factors must be strictly increasing".into(),
            ));
        }
        if powers.iter().any(|&(_, e)| e == 0) {
            return Err(Error::InvalidArgument("exponents must be positive".into()));
        }
        Ok(Monomial { exterior, powers })
    }

    pub(crate) fn from_parts(exterior: &[GeneratorId], powers: &[(GeneratorId, u32)]) -> Self {
        Monomial {
            exterior: exterior.to_vec(),
            powers: powers.to_vec(),
        }
    }

    /// A single exterior generator.
    pub fn exterior_generator(id: GeneratorId) -> Self {
        Monomial {
            exterior: vec![id],
            powers: Vec::new(),
        }
    }

    /// `id^exponent` for a polynomial generator.
    pub fn power(id: GeneratorId, exponent: u32) -> Self {
        if exponent == 0 {
            return Self::one();
        }
        Monomial {
            exterior: Vec::new(),
            powers: vec![(id, exponent)],
        }
    }

    pub fn exterior(&self) -> &[GeneratorId] {
        &self.exterior
    }

    pub fn powers(&self) -> &[(GeneratorId, u32)] {
        &self.powers
    }

    pub fn degree(&self) -> usize {
        self.exterior.len() + 2 * self.powers.iter().map(|&(_, e)| e as usize).sum::<usize>()
    }

    pub fn is_one(&self) -> bool {
        self.exterior.is_empty() && self.powers.is_empty()
    }

    /// Product of two monomials in the graded-commutative algebra. Returns
    /// `None` when an exterior generator repeats, otherwise the canonical
    /// monomial and the Koszul sign of the merge.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, F3)> {
        let mut exterior = Vec::with_capacity(self.exterior.len() + other.exterior.len());
        let mut inversions = 0usize;
        let (mut i, mut j) = (0, 0);
        while i < self.exterior.len() && j < other.exterior.len() {
            match self.exterior[i].cmp(&other.exterior[j]) {
                Ordering::Less => {
                    exterior.push(self.exterior[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // other[j] jumps over every remaining factor of self
                    inversions += self.exterior.len() - i;
                    exterior.push(other.exterior[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        exterior.extend_from_slice(&self.exterior[i..]);
        exterior.extend_from_slice(&other.exterior[j..]);

        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, ea) = self.powers[i];
            let (b, eb) = other.powers[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    powers.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    powers.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    powers.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        powers.extend_from_slice(&self.powers[i..]);
        powers.extend_from_slice(&other.powers[j..]);

        Some((Monomial { exterior, powers }, F3::sign(inversions)))
    }

    /// Exponent of a polynomial generator (0 if absent).
    pub fn exponent(&self, id: GeneratorId) -> u32 {
        self.powers
            .iter()
            .find(|&&(g, _)| g == id)
            .map_or(0, |&(_, e)| e)
    }

    /// The same monomial with every generator id shifted by `offset`.
    pub(crate) fn shifted(&self, offset: usize) -> Monomial {
        Monomial {
            exterior: self
                .exterior
                .iter()
                .map(|g| GeneratorId(g.0 + offset))
                .collect(),
            powers: self
                .powers
                .iter()
                .map(|&(g, e)| (GeneratorId(g.0 + offset), e))
                .collect(),
        }
    }

    fn generator_ids(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.exterior
            .iter()
            .copied()
            .chain(self.powers.iter().map(|&(g, _)| g))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exterior.cmp(&other.exterior))
            .then_with(|| self.powers.cmp(&other.powers))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An F₃-linear combination of monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, F3>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, F3::ONE)
    }

    pub fn term(m: Monomial, c: F3) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    /// Collects an arbitrary list of terms, combining repeats and dropping
    /// zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F3)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: F3) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = *o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in the canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, F3)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> F3 {
        self.terms.get(m).copied().unwrap_or(F3::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, `None` for zero or mixed elements.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// True if zero or homogeneous of degree `k`.
    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn scale(&self, c: F3) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Drops every term of degree above `cap`.
    pub fn truncated(&self, cap: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub(crate) fn shifted(&self, offset: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.shifted(offset), c))
                .collect(),
        }
    }

    /// The lowest monomial with a nonzero coefficient.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next()
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (m, &c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (m, &c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(F3::TWO)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(F3::TWO)
    }
}

/// One generator of a presentation together with its operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub id: GeneratorId,
    /// Identifier used in expressions and reports, e.g. `a1`, `x2`, `y2`.
    pub name: String,
    /// Human-facing label, e.g. `b(x2)` for the Bockstein of `x2`.
    pub label: String,
    pub degree: usize,
    pub beta_image: Element,
    pub p1_image: Element,
    /// The class is the mod-3 reduction of an integral class.
    pub integral_lift: bool,
}

/// How many circle and BZ/3 factors a presentation was built from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpaceMeta {
    pub circle_factors: usize,
    pub bz3_factors: usize,
}

/// A finitely generated graded-commutative F₃-algebra with Steenrod
/// operation data on its generators, truncated above `degree_cap`.
#[derive(Clone, Debug)]
pub struct SpacePresentation {
    generators: Vec<GeneratorSpec>,
    degree_cap: usize,
    meta: SpaceMeta,
    bases: Vec<OnceLock<Vec<Monomial>>>,
}

impl PartialEq for SpacePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.degree_cap == other.degree_cap
            && self.meta == other.meta
    }
}

impl Eq for SpacePresentation {}

impl SpacePresentation {
    pub fn new(generators: Vec<GeneratorSpec>, degree_cap: usize, meta: SpaceMeta) -> Result<Self> {
        if degree_cap < 2 {
            return Err(Error::InvalidPresentation(format!(
                "degree cap must be at least 2, got {degree_cap}"
            )));
        }
        let space = SpacePresentation {
            bases: (0..=degree_cap).map(|_| OnceLock::new()).collect(),
            generators,
            degree_cap,
            meta,
        };
        for (i, g) in space.generators.iter().enumerate() {
            if g.id != GeneratorId(i) {
                return Err(Error::InvalidPresentation(format!(
                    "generator {} sits at position {i} but has id {}",
                    g.name, g.id.0
                )));
            }
            if g.degree != 1 && g.degree != 2 {
                return Err(Error::InvalidPresentation(format!(
                    "generator {} has degree {}, expected 1 or 2",
                    g.name, g.degree
                )));
            }
            for (what, image, shift) in [("beta", &g.beta_image, 1), ("P1", &g.p1_image, 4)] {
                space.check(image).map_err(|e| {
                    Error::InvalidPresentation(format!("{what} image of {}: {e}", g.name))
                })?;
                if !image.is_homogeneous_of(g.degree + shift) {
                    return Err(Error::InvalidPresentation(format!(
                        "{what} image of {} must have degree {}",
                        g.name,
                        g.degree + shift
                    )));
                }
            }
            if g.integral_lift && !g.beta_image.is_zero() {
                return Err(Error::InvalidPresentation(format!(
                    "{} is integral but has a nonzero Bockstein",
                    g.name
                )));
            }
        }
        Ok(space)
    }

    /// The same algebra with a different degree cap.
    pub fn with_cap(&self, degree_cap: usize) -> Result<Self> {
        Self::new(self.generators.clone(), degree_cap, self.meta)
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn generator(&self, id: GeneratorId) -> Result<&GeneratorSpec> {
        self.generators.get(id.0).ok_or_else(|| {
            Error::PresentationMismatch(format!(
                "generator id {} not in a presentation with {} generators",
                id.0,
                self.generators.len()
            ))
        })
    }

    pub fn generator_by_name(&self, name: &str) -> Option<GeneratorId> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .map(|g| g.id)
    }

    /// The generator as an element of the algebra.
    pub fn generator_element(&self, id: GeneratorId) -> Result<Element> {
        let g = self.generator(id)?;
        Ok(Element::from_monomial(if g.degree == 1 {
            Monomial::exterior_generator(id)
        } else {
            Monomial::power(id, 1)
        }))
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn meta(&self) -> SpaceMeta {
        self.meta
    }

    pub fn exterior_generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.generators
            .iter()
            .filter(|g| g.degree == 1)
            .map(|g| g.id)
    }

    pub fn polynomial_generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.generators
            .iter()
            .filter(|g| g.degree == 2)
            .map(|g| g.id)
    }

    /// Degree-1 generators carrying an integral lift.
    pub fn integral_degree_one(&self) -> Vec<GeneratorId> {
        self.generators
            .iter()
            .filter(|g| g.degree == 1 && g.integral_lift)
            .map(|g| g.id)
            .collect()
    }

    /// Checks that every monomial of `a` only uses generators of this
    /// presentation, each in the slot matching its degree.
    pub fn check(&self, a: &Element) -> Result<()> {
        a.terms().try_for_each(|(m, _)| self.check_monomial(m))
    }

    pub fn check_monomial(&self, m: &Monomial) -> Result<()> {
        for id in m.exterior.iter() {
            if self.generator(*id)?.degree != 1 {
                return Err(Error::PresentationMismatch(format!(
                    "{} used as an exterior factor but has degree 2",
                    self.generators[id.0].name
                )));
            }
        }
        for &(id, _) in m.powers.iter() {
            if self.generator(id)?.degree != 2 {
                return Err(Error::PresentationMismatch(format!(
                    "{} used as a polynomial factor but has degree 1",
                    self.generators[id.0].name
                )));
            }
        }
        debug_assert!(m.generator_ids().all(|g| g.0 < self.generators.len()));
        Ok(())
    }

    /// Cup product, truncated above the degree cap.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    /// Product of a list of factors, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a Element>>(&self, factors: I) -> Result<Element> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if ma.degree() + mb.degree() > self.degree_cap {
                    continue;
                }
                if let Some((m, sign)) = ma.mul(mb) {
                    out.add_term(m, ca * cb * sign);
                }
            }
        }
        out
    }

    /// All monomials of degree exactly `k`, in increasing canonical order.
    pub fn basis(&self, k: usize) -> Result<&[Monomial]> {
        let slot = self.bases.get(k).ok_or(Error::DegreeOutOfRange {
            degree: k,
            cap: self.degree_cap,
        })?;
        Ok(slot.get_or_init(|| self.enumerate_basis(k)))
    }

    /// Position of `m` in `basis(m.degree())`.
    pub fn basis_index(&self, m: &Monomial) -> Result<Option<usize>> {
        Ok(self.basis(m.degree())?.binary_search(m).ok())
    }

    fn enumerate_basis(&self, k: usize) -> Vec<Monomial> {
        let exterior: Vec<_> = self.exterior_generators().collect();
        let polynomial: Vec<_> = self.polynomial_generators().collect();
        let mut out = Vec::new();
        for e in 0..=exterior.len().min(k) {
            if !(k - e).is_multiple_of(2) {
                continue;
            }
            let half = (k - e) / 2;
            let power_lists = compositions(half, polynomial.len());
            for subset in exterior.iter().copied().combinations(e) {
                for exps in power_lists.iter() {
                    let powers = polynomial
                        .iter()
                        .zip(exps)
                        .filter(|(_, &x)| x > 0)
                        .map(|(&g, &x)| (g, x))
                        .collect();
                    out.push(Monomial {
                        exterior: subset.clone(),
                        powers,
                    });
                }
            }
        }
        out.sort();
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.render_monomial(m, |g| &g.name)
    }

    /// Renders an element as an expression over generator names, e.g.
    /// `y1^3*y2 - y1*y2^3`.
    pub fn format_element(&self, a: &Element) -> String {
        self.render_element(a, |g| &g.name)
    }

    /// Like [`format_element`](Self::format_element) but with display labels.
    pub fn format_element_labeled(&self, a: &Element) -> String {
        self.render_element(a, |g| &g.label)
    }

    fn render_monomial(&self, m: &Monomial, name: impl Fn(&GeneratorSpec) -> &str) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let label = |id: GeneratorId| {
            self.generators
                .get(id.0)
                .map_or_else(|| format!("g{}", id.0), |g| name(g).to_string())
        };
        m.exterior
            .iter()
            .map(|&id| label(id))
            .chain(m.powers.iter().map(|&(id, e)| match e {
                1 => label(id),
                _ => format!("{}^{e}", label(id)),
            }))
            .join("*")
    }

    fn render_element(&self, a: &Element, name: impl Fn(&GeneratorSpec) -> &str + Copy) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in a.terms().enumerate() {
            let negative = c == F3::TWO;
            match (i, negative) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&self.render_monomial(m, name));
        }
        out
    }
}

impl fmt::Display for SpacePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} circle(s) x {} BZ/3, generators [{}], cap {}",
            self.meta.circle_factors,
            self.meta.bz3_factors,
            self.generators.iter().map(|g| g.name.as_str()).join(", "),
            self.degree_cap
        )
    }
}

/// All ways of writing `total` as an ordered sum of `parts` nonnegative
/// integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{b_gamma, bz3, circle, product};

    fn gen(space: &SpacePresentation, name: &str) -> Element {
        space
            .generator_element(space.generator_by_name(name).unwrap())
            .unwrap()
    }

    #[test]
    fn exterior_square_vanishes() {
        let space = b_gamma(5, None).unwrap();
        let x1 = gen(&space, "x1");
        assert!(space.mul(&x1, &x1).unwrap().is_zero());
    }

    #[test]
    fn odd_classes_anticommute() {
        let space = b_gamma(5, None).unwrap();
        let (a1, a2) = (gen(&space, "a1"), gen(&space, "a2"));
        let ab = space.mul(&a1, &a2).unwrap();
        let ba = space.mul(&a2, &a1).unwrap();
        assert!(!ab.is_zero());
        assert_eq!(ab, -ba);
    }

    #[test]
    fn polynomial_generators_square_freely() {
        let space = b_gamma(5, None).unwrap();
        let y1 = gen(&space, "y1");
        let sq = space.mul(&y1, &y1).unwrap();
        let id = space.generator_by_name("y1").unwrap();
        assert_eq!(sq, Element::from_monomial(Monomial::power(id, 2)));
    }

    #[test]
    fn linear_combinations() {
        let space = b_gamma(5, None).unwrap();
        let x1 = gen(&space, "x1");
        assert!((&x1 + &x1.scale(F3::TWO)).is_zero());
        assert_eq!(&x1 + &Element::zero(), x1);
        assert_eq!(x1.scale(F3::TWO).scale(F3::TWO), x1);
        assert!(x1.scale(F3::ZERO).is_zero());
    }

    #[test]
    fn basis_sizes_of_b_gamma_5() {
        let space = b_gamma(5, None).unwrap();
        assert_eq!(space.basis(0).unwrap(), &[Monomial::one()]);
        let names: Vec<_> = space
            .basis(1)
            .unwrap()
            .iter()
            .map(|m| space.format_monomial(m))
            .collect();
        assert_eq!(names, ["a1", "a2", "a3", "x1", "x2"]);
        assert_eq!(space.basis(2).unwrap().len(), 12);
    }

    #[test]
    fn basis_above_cap_is_an_error() {
        let space = b_gamma(5, None).unwrap();
        assert!(matches!(
            space.basis(12),
            Err(Error::DegreeOutOfRange {
                degree: 12,
                cap: 11
            })
        ));
    }

    #[test]
    fn basis_order_is_degree_then_exterior_then_powers() {
        let space = b_gamma(5, None).unwrap();
        let b = space.basis(2).unwrap();
        assert_eq!(space.format_monomial(&b[0]), "y1");
        assert_eq!(space.format_monomial(&b[1]), "y2");
        assert_eq!(space.format_monomial(&b[2]), "a1*a2");
        assert_eq!(space.format_monomial(&b[11]), "x1*x2");
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn foreign_generator_is_rejected() {
        let space = circle();
        let bad = Element::from_monomial(Monomial::exterior_generator(GeneratorId(3)));
        assert!(matches!(
            space.mul(&bad, &Element::one()),
            Err(Error::PresentationMismatch(_))
        ));
        let wrong_slot = Element::from_monomial(Monomial::power(GeneratorId(0), 1));
        assert!(space.check(&wrong_slot).is_err());
    }

    #[test]
    fn products_above_cap_are_dropped() {
        let space = bz3().with_cap(4).unwrap();
        let y = gen(&space, "y1");
        let y2 = space.mul(&y, &y).unwrap();
        assert!(!y2.is_zero());
        assert!(space.mul(&y2, &y).unwrap().is_zero());
    }

    #[test]
    fn monomial_constructor_rejects_noncanonical_input() {
        assert!(Monomial::new(vec![GeneratorId(1), GeneratorId(0)], vec![]).is_err());
        assert!(Monomial::new(vec![GeneratorId(0), GeneratorId(0)], vec![]).is_err());
        assert!(Monomial::new(vec![], vec![(GeneratorId(2), 0)]).is_err());
        assert!(Monomial::new(vec![], vec![(GeneratorId(2), 1), (GeneratorId(1), 1)]).is_err());
    }

    #[test]
    fn format_uses_minus_for_two() {
        let space = product(&circle(), &circle(), 2).unwrap();
        let a1 = gen(&space, "a1");
        let a2 = gen(&space, "a2");
        let e = &a1 - &a2;
        assert_eq!(space.format_element(&e), "a1 - a2");
        assert_eq!(space.format_element(&-a1), "-a1");
        assert_eq!(space.format_element(&Element::zero()), "0");
        assert_eq!(space.format_element(&Element::one()), "1");
    }

    #[test]
    fn presentation_rejects_bad_images() {
        let space = bz3();
        let mut gens = space.generators().to_vec();
        gens[0].integral_lift = true;
        assert!(SpacePresentation::new(gens, 6, space.meta()).is_err());

        let mut gens = space.generators().to_vec();
        gens[0].beta_image = Element::from_monomial(Monomial::exterior_generator(GeneratorId(0)));
        assert!(SpacePresentation::new(gens, 6, space.meta()).is_err());

        assert!(SpacePresentation::new(space.generators().to_vec(), 1, space.meta()).is_err());
    }
}
