//! Presentations of the circle, BZ/3, and their products.
//!
//! Skeleta are modelled only by the degree cap: nothing above it is ever
//! computed.

use std::collections::HashMap;

use crate::algebra::{Element, GeneratorId, GeneratorSpec, Monomial, SpaceMeta, SpacePresentation};
use crate::error::{Error, Result};

/// Cap used by [`circle`] and [`bz3`] when no other cap is given.
pub const DEFAULT_FACTOR_CAP: usize = 12;

/// H*(S¹; F₃): one integral class `a1` in degree 1.
pub fn circle() -> SpacePresentation {
    let a = GeneratorSpec {
        id: GeneratorId(0),
        name: "a1".into(),
        label: "a1".into(),
        degree: 1,
        beta_image: Element::zero(),
        p1_image: Element::zero(),
        integral_lift: true,
    };
    SpacePresentation::new(
        vec![a],
        DEFAULT_FACTOR_CAP,
        SpaceMeta {
            circle_factors: 1,
            bz3_factors: 0,
        },
    )
    .expect("circle presentation is valid")
}

/// H*(BZ/3; F₃) = Λ(x) ⊗ F₃[y] with β(x) = y and P¹(y) = y³.
pub fn bz3() -> SpacePresentation {
    let x = GeneratorId(0);
    let y = GeneratorId(1);
    let gens = vec![
        GeneratorSpec {
            id: x,
            name: "x1".into(),
            label: "x1".into(),
            degree: 1,
            beta_image: Element::from_monomial(Monomial::power(y, 1)),
            p1_image: Element::zero(),
            integral_lift: false,
        },
        GeneratorSpec {
            id: y,
            name: "y1".into(),
            label: "b(x1)".into(),
            degree: 2,
            beta_image: Element::zero(),
            p1_image: Element::from_monomial(Monomial::power(y, 3)),
            integral_lift: false,
        },
    ];
    SpacePresentation::new(
        gens,
        DEFAULT_FACTOR_CAP,
        SpaceMeta {
            circle_factors: 0,
            bz3_factors: 1,
        },
    )
    .expect("BZ/3 presentation is valid")
}

/// Künneth product: generators of `b` are appended after those of `a` and
/// renumbered per name family (`a`, `x`, `y`, ...), so `a1` of the second
/// factor becomes `a2` when the first factor already has one circle class.
pub fn product(
    a: &SpacePresentation,
    b: &SpacePresentation,
    cap: usize,
) -> Result<SpacePresentation> {
    let offset = a.generators().len();

    let mut family_sizes: HashMap<String, usize> = HashMap::new();
    for g in a.generators() {
        if let Some((prefix, _)) = split_name(&g.name) {
            *family_sizes.entry(prefix.to_string()).or_default() += 1;
        }
    }
    let renamed: HashMap<&str, String> = b
        .generators()
        .iter()
        .map(|g| {
            let new = match split_name(&g.name) {
                Some((prefix, idx)) => {
                    format!(
                        "{prefix}{}",
                        idx + family_sizes.get(prefix).copied().unwrap_or(0)
                    )
                }
                None => g.name.clone(),
            };
            (g.name.as_str(), new)
        })
        .collect();

    let mut generators = a.generators().to_vec();
    generators.extend(b.generators().iter().map(|g| GeneratorSpec {
        id: GeneratorId(g.id.0 + offset),
        name: renamed[g.name.as_str()].clone(),
        label: rename_identifiers(&g.label, &renamed),
        degree: g.degree,
        beta_image: g.beta_image.shifted(offset),
        p1_image: g.p1_image.shifted(offset),
        integral_lift: g.integral_lift,
    }));

    let meta = SpaceMeta {
        circle_factors: a.meta().circle_factors + b.meta().circle_factors,
        bz3_factors: a.meta().bz3_factors + b.meta().bz3_factors,
    };
    SpacePresentation::new(generators, cap, meta)
}

/// `circles` copies of S¹ followed by `bz3_factors` copies of BZ/3.
pub fn standard(circles: usize, bz3_factors: usize, cap: usize) -> Result<SpacePresentation> {
    let mut space = SpacePresentation::new(Vec::new(), cap, SpaceMeta::default())?;
    let factors = std::iter::repeat_with(circle)
        .take(circles)
        .chain(std::iter::repeat_with(bz3).take(bz3_factors));
    for factor in factors {
        space = product(&space, &factor, cap)?;
    }
    Ok(space)
}

/// BΓₙ for Γₙ = Z^{n-2} × (Z/3)², capped at `cap` (default `n + 6`).
pub fn b_gamma(n: usize, cap: Option<usize>) -> Result<SpacePresentation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "b_gamma needs n >= 2, got {n}"
        )));
    }
    standard(n - 2, 2, cap.unwrap_or(n + 6))
}

/// Coefficients of t^0..=t^max_degree in (1+t)^e · (1−t²)^(−m), the
/// Poincaré series of an algebra with `e` exterior degree-1 generators and
/// `m` polynomial degree-2 generators. Computed by series multiplication,
/// independently of basis enumeration.
pub fn poincare_series(exterior: usize, polynomial: usize, max_degree: usize) -> Vec<u64> {
    let mut series = vec![0u64; max_degree + 1];
    series[0] = 1;
    for _ in 0..exterior {
        // multiply by (1 + t)
        for k in (1..=max_degree).rev() {
            series[k] += series[k - 1];
        }
    }
    for _ in 0..polynomial {
        // divide by (1 − t²): running sum with stride 2
        for k in 2..=max_degree {
            series[k] += series[k - 2];
        }
    }
    series
}

fn split_name(name: &str) -> Option<(&str, usize)> {
    let pos = name.find(|c: char| c.is_ascii_digit())?;
    let (prefix, digits) = name.split_at(pos);
    if prefix.is_empty() || !prefix.chars().all(|c| c.is_ascii_alphabetic()) {
        return None;
    }
    Some((prefix, digits.parse().ok()?))
}

fn rename_identifiers(label: &str, renamed: &HashMap<&str, String>) -> String {
    let mut out = String::with_capacity(label.len());
    let mut token = String::new();
    let flush = |token: &mut String, out: &mut String| {
        if !token.is_empty() {
            out.push_str(
                renamed
                    .get(token.as_str())
                    .map_or(token.as_str(), String::as_str),
            );
            token.clear();
        }
    };
    for c in label.chars() {
        if c.is_ascii_alphanumeric() || c == '_' {
            token.push(c);
        } else {
            flush(&mut token, &mut out);
            out.push(c);
        }
    }
    flush(&mut token, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::{beta, p1, q1};

    fn dims(space: &SpacePresentation, max: usize) -> Vec<usize> {
        (0..=max).map(|k| space.basis(k).unwrap().len()).collect()
    }

    #[test]
    fn circle_is_an_exterior_algebra() {
        let s = circle();
        assert_eq!(dims(&s, 3), [1, 1, 0, 0]);
        let a = s.generator_element(GeneratorId(0)).unwrap();
        assert!(beta(&s, &a).unwrap().is_zero());
        assert!(s.mul(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn bz3_has_one_class_per_degree() {
        let s = bz3();
        assert_eq!(dims(&s, 5), [1, 1, 1, 1, 1, 1]);
        let names: Vec<_> = (0..=5)
            .map(|k| s.format_monomial(&s.basis(k).unwrap()[0]))
            .collect();
        assert_eq!(names, ["1", "x1", "y1", "x1*y1", "y1^2", "x1*y1^2"]);
        let x = s.generator_element(GeneratorId(0)).unwrap();
        let y = s.generator_element(GeneratorId(1)).unwrap();
        let y3 = s.product([&y, &y, &y]).unwrap();
        assert_eq!(p1(&s, &y).unwrap(), y3);
        assert_eq!(q1(&s, &x).unwrap(), y3);
    }

    #[test]
    fn torus() {
        let t = product(&circle(), &circle(), 4).unwrap();
        assert_eq!(dims(&t, 2), [1, 2, 1]);
        let names: Vec<_> = t.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["a1", "a2"]);
    }

    #[test]
    fn b_gamma_layout() {
        let s = b_gamma(5, None).unwrap();
        let names: Vec<_> = s.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["a1", "a2", "a3", "x1", "y1", "x2", "y2"]);
        let labels: Vec<_> = s.generators().iter().map(|g| g.label.as_str()).collect();
        assert_eq!(labels, ["a1", "a2", "a3", "x1", "b(x1)", "x2", "b(x2)"]);
        assert_eq!(s.degree_cap(), 11);
        assert_eq!(s.meta().circle_factors, 3);
        assert_eq!(s.meta().bz3_factors, 2);
        assert_eq!(s.integral_degree_one().len(), 3);
        assert_eq!(dims(&s, 2), [1, 5, 12]);

        // β(x2) = y2 after re-indexing
        let x2 = s
            .generator_element(s.generator_by_name("x2").unwrap())
            .unwrap();
        let y2 = s
            .generator_element(s.generator_by_name("y2").unwrap())
            .unwrap();
        assert_eq!(beta(&s, &x2).unwrap(), y2);
    }

    #[test]
    fn b_gamma_boundary_cases() {
        let s = b_gamma(2, None).unwrap();
        assert_eq!(s.meta().circle_factors, 0);
        assert_eq!(s.meta().bz3_factors, 2);
        assert_eq!(s.degree_cap(), 8);
        assert!(matches!(b_gamma(1, None), Err(Error::InvalidArgument(_))));
        assert!(matches!(b_gamma(0, None), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn poincare_series_small_cases() {
        assert_eq!(poincare_series(2, 0, 3), [1, 2, 1, 0]);
        assert_eq!(poincare_series(1, 1, 5), [1, 1, 1, 1, 1, 1]);
        // (1+t)^5 (1-t^2)^-2 by hand: 1, 5, 10+2, 10+10, 5+20+3
        assert_eq!(poincare_series(5, 2, 4), [1, 5, 12, 20, 28]);
    }

    #[test]
    fn integral_flags_survive_products() {
        let s = standard(2, 1, 6).unwrap();
        let flags: Vec<_> = s.generators().iter().map(|g| g.integral_lift).collect();
        assert_eq!(flags, [true, true, false, false]);
    }
}
