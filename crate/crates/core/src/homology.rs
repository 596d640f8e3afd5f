//! Mod-3 homology as the graded dual of the cohomology algebra.
//!
//! A homology class of degree k is a coefficient vector over `basis(k)`,
//! read as a combination of dual basis elements. Homology operations are the
//! plain transposes of the cohomology operation matrices; no sign twist is
//! applied, so only rank and nonvanishing statements are convention free.

use std::fmt;
use std::ops::Mul;

use crate::algebra::{Element, Monomial, SpacePresentation};
use crate::error::{Error, Result};
use crate::f3::F3;
use crate::steenrod::{apply_unchecked, OperationKind};

/// Dense matrix over F₃, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<F3>,
}

impl F3Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F3Matrix {
            rows,
            cols,
            entries: vec![F3::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F3::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F3>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(F3Matrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> F3 {
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: F3) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn apply(&self, v: &[F3]) -> Result<Vec<F3>> {
        if v.len() != self.cols {
            return Err(Error::InvalidArgument(format!(
                "vector of length {} applied to a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).fold(F3::ZERO, |acc, c| acc + self.get(r, c) * v[c]))
            .collect())
    }

    pub fn checked_mul(&self, rhs: &F3Matrix) -> Result<F3Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let idx = r * out.cols + c;
                    out.entries[idx] += a * rhs.get(k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &F3Matrix) -> Result<F3Matrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::InvalidArgument("matrix shapes differ".into()));
        }
        Ok(F3Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    /// Rank by Gaussian elimination over F₃.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            // every nonzero element of F₃ is its own inverse
            let inv = m.get(rank, col);
            for c in col..m.cols {
                let v = m.get(rank, c) * inv;
                m.set(rank, c, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == rank || factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - factor * m.get(rank, c);
                    m.set(r, c, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Mul for &F3Matrix {
    type Output = F3Matrix;
    fn mul(self, rhs: &F3Matrix) -> F3Matrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Display for F3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A class in H_k(−; F₃), as coefficients over the dual of `basis(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    degree: usize,
    coeffs: Vec<F3>,
}

impl HomologyClass {
    pub fn zero(space: &SpacePresentation, degree: usize) -> Result<Self> {
        Ok(HomologyClass {
            degree,
            coeffs: vec![F3::ZERO; space.basis(degree)?.len()],
        })
    }

    /// The dual basis element of a monomial.
    pub fn dual(space: &SpacePresentation, m: &Monomial) -> Result<Self> {
        space.check_monomial(m)?;
        let mut y = Self::zero(space, m.degree())?;
        let idx = space
            .basis_index(m)?
            .expect("checked monomials appear in their degree's basis");
        y.coeffs[idx] = F3::ONE;
        Ok(y)
    }

    pub fn from_coeffs(space: &SpacePresentation, degree: usize, coeffs: Vec<F3>) -> Result<Self> {
        let expected = space.basis(degree)?.len();
        if coeffs.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "degree {degree} homology has dimension {expected}, got {} coefficients",
                coeffs.len()
            )));
        }
        Ok(HomologyClass { degree, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[F3] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: F3) -> Self {
        HomologyClass {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&v| v * c).collect(),
        }
    }

    /// Renders as a combination of dual monomials, e.g. `dual(a1*a2) - dual(x1)`.
    pub fn format(&self, space: &SpacePresentation) -> String {
        let Ok(basis) = space.basis(self.degree) else {
            return "?".into();
        };
        let mut out = String::new();
        for (m, &c) in basis.iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero()) {
            let negative = c == F3::TWO;
            match (out.is_empty(), negative) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(&format!("dual({})", space.format_monomial(m)));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Evaluates `g` on `y` in the dual monomial basis.
pub fn kronecker(space: &SpacePresentation, g: &Element, y: &HomologyClass) -> Result<F3> {
    space.check(g)?;
    if !g.is_homogeneous_of(y.degree) {
        return Err(Error::DegreeMismatch {
            expected: y.degree,
            found: describe_degree(g),
        });
    }
    let basis = space.basis(y.degree)?;
    check_length(basis.len(), y)?;
    let mut total = F3::ZERO;
    for (m, c) in g.terms() {
        let idx = basis
            .binary_search(m)
            .expect("homogeneous monomial lies in the basis");
        total += c * y.coeffs[idx];
    }
    Ok(total)
}

/// Cap product `alpha ∩ y`, the adjoint of left cup multiplication:
/// ⟨g, alpha ∩ y⟩ = ⟨alpha · g, y⟩ for every g of degree |y| − |alpha|.
pub fn cap(space: &SpacePresentation, alpha: &Element, y: &HomologyClass) -> Result<HomologyClass> {
    space.check(alpha)?;
    let m = alpha.degree().ok_or_else(|| {
        Error::InvalidArgument(format!(
            "cap needs a nonzero homogeneous class, got {}",
            space.format_element(alpha)
        ))
    })?;
    if m > y.degree {
        return Err(Error::DegreeMismatch {
            expected: y.degree,
            found: format!("cap by a class of degree {m}"),
        });
    }
    check_length(space.basis(y.degree)?.len(), y)?;
    let target = space.basis(y.degree - m)?;
    let coeffs = target
        .iter()
        .map(|g| {
            let product = space.mul_unchecked(alpha, &Element::from_monomial(g.clone()));
            kronecker(space, &product, y)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyClass {
        degree: y.degree - m,
        coeffs,
    })
}

/// Matrix of a cohomology operation H^k → H^{k+shift} in the monomial
/// bases (columns indexed by `basis(k)`). Degrees above the cap are zero, so
/// the matrix has no rows there.
pub fn operation_matrix(
    space: &SpacePresentation,
    kind: OperationKind,
    k: usize,
) -> Result<F3Matrix> {
    let source = space.basis(k)?;
    let target_degree = k + kind.degree_shift();
    let target: &[Monomial] = if target_degree <= space.degree_cap() {
        space.basis(target_degree)?
    } else {
        &[]
    };
    let mut matrix = F3Matrix::zeros(target.len(), source.len());
    for (col, m) in source.iter().enumerate() {
        let image = apply_unchecked(space, kind, &Element::from_monomial(m.clone()));
        for (t, c) in image.terms() {
            let row = target
                .binary_search(t)
                .expect("image lies in the target basis");
            matrix.set(row, col, c);
        }
    }
    Ok(matrix)
}

/// Matrix of the dual homology operation H_k → H_{k−shift}: the transpose of
/// the cohomology matrix H^{k−shift} → H^k. Below the shift the target is
/// empty and the matrix has no rows.
pub fn transpose_op(space: &SpacePresentation, kind: OperationKind, k: usize) -> Result<F3Matrix> {
    let source_dim = space.basis(k)?.len();
    let shift = kind.degree_shift();
    if k < shift {
        return Ok(F3Matrix::zeros(0, source_dim));
    }
    Ok(operation_matrix(space, kind, k - shift)?.transpose())
}

/// Applies the dual homology operation of `kind` to `y`.
pub fn homology_op(
    space: &SpacePresentation,
    kind: OperationKind,
    y: &HomologyClass,
) -> Result<HomologyClass> {
    let shift = kind.degree_shift();
    if y.degree < shift {
        return Err(Error::DegreeOutOfRange {
            degree: y.degree,
            cap: space.degree_cap(),
        });
    }
    let matrix = transpose_op(space, kind, y.degree)?;
    Ok(HomologyClass {
        degree: y.degree - shift,
        coeffs: matrix.apply(&y.coeffs)?,
    })
}

/// Mod-3 shadow of the d₅ differential δ∘P¹∘ρ: the composite β★∘P¹★ on
/// H_p(−; F₃), landing in degree p − 5.
pub fn d5_shadow(space: &SpacePresentation, z: &HomologyClass) -> Result<HomologyClass> {
    if z.degree < 5 {
        return Err(Error::InvalidArgument(format!(
            "d5 needs a class of degree at least 5, got {}",
            z.degree
        )));
    }
    let p1 = homology_op(space, OperationKind::P1, z)?;
    homology_op(space, OperationKind::Beta, &p1)
}

/// Matrix of [`d5_shadow`] on H_p.
pub fn d5_matrix(space: &SpacePresentation, p: usize) -> Result<F3Matrix> {
    if p < 5 {
        return Err(Error::InvalidArgument(format!(
            "d5 needs a degree of at least 5, got {p}"
        )));
    }
    transpose_op(space, OperationKind::Beta, p - 4)?.checked_mul(&transpose_op(
        space,
        OperationKind::P1,
        p,
    )?)
}

fn check_length(expected: usize, y: &HomologyClass) -> Result<()> {
    if y.coeffs.len() != expected {
        return Err(Error::PresentationMismatch(format!(
            "homology class of degree {} has {} coefficients, basis has {expected}",
            y.degree,
            y.coeffs.len()
        )));
    }
    Ok(())
}

fn describe_degree(g: &Element) -> String {
    match g.degree() {
        Some(d) => d.to_string(),
        None => "a mixed-degree element".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{b_gamma, bz3, circle, product, standard};
    use crate::steenrod::{beta, q1};

    fn named(space: &SpacePresentation, name: &str) -> Element {
        space
            .generator_element(space.generator_by_name(name).unwrap())
            .unwrap()
    }

    fn mono(space: &SpacePresentation, names: &[&str]) -> Monomial {
        let factors: Vec<_> = names.iter().map(|n| named(space, n)).collect();
        let e = space.product(&factors).unwrap();
        assert_eq!(e.len(), 1);
        e.leading_monomial().unwrap().clone()
    }

    #[test]
    fn dual_basis_pairing() {
        let s = b_gamma(5, None).unwrap();
        let x1 = named(&s, "x1");
        let dual_x1 = HomologyClass::dual(&s, &mono(&s, &["x1"])).unwrap();
        let dual_a1 = HomologyClass::dual(&s, &mono(&s, &["a1"])).unwrap();
        assert_eq!(kronecker(&s, &x1, &dual_x1).unwrap(), F3::ONE);
        assert_eq!(kronecker(&s, &x1, &dual_a1).unwrap(), F3::ZERO);
    }

    #[test]
    fn kronecker_degree_mismatch() {
        let s = b_gamma(5, None).unwrap();
        let dual_y1 = HomologyClass::dual(&s, &mono(&s, &["y1"])).unwrap();
        assert!(matches!(
            kronecker(&s, &named(&s, "x1"), &dual_y1),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn kronecker_of_the_witness_product() {
        // ρ(a1)ρ(a2)ρ(a3)·βQ₁(x1x2) = a1a2a3·(y1³y2 − y1y2³)
        let s = b_gamma(5, None).unwrap();
        let zeta = s.mul(&named(&s, "x1"), &named(&s, "x2")).unwrap();
        let bq = beta(&s, &q1(&s, &zeta).unwrap()).unwrap();
        let alphas = s
            .product([&named(&s, "a1"), &named(&s, "a2"), &named(&s, "a3")])
            .unwrap();
        let class = s.mul(&alphas, &bq).unwrap();
        let y = HomologyClass::dual(&s, &mono(&s, &["a1", "a2", "a3", "y1", "y1", "y1", "y2"]))
            .unwrap();
        assert_eq!(kronecker(&s, &class, &y).unwrap(), F3::ONE);
        let y = HomologyClass::dual(&s, &mono(&s, &["a1", "a2", "a3", "y1", "y2", "y2", "y2"]))
            .unwrap();
        assert_eq!(kronecker(&s, &class, &y).unwrap(), F3::TWO);
    }

    #[test]
    fn cap_examples() {
        let s = b_gamma(5, None).unwrap();
        let y = HomologyClass::dual(&s, &mono(&s, &["a1", "a2"])).unwrap();
        assert_eq!(cap(&s, &Element::one(), &y).unwrap(), y);
        let capped = cap(&s, &named(&s, "a1"), &y).unwrap();
        assert_eq!(capped, HomologyClass::dual(&s, &mono(&s, &["a2"])).unwrap());
        // a2 ∩ dual(a1 a2) = −dual(a1) since a2·a1 = −a1a2
        let capped = cap(&s, &named(&s, "a2"), &y).unwrap();
        assert_eq!(
            capped,
            HomologyClass::dual(&s, &mono(&s, &["a1"]))
                .unwrap()
                .scale(F3::TWO)
        );

        let dual_y1 = HomologyClass::dual(&s, &mono(&s, &["y1"])).unwrap();
        assert!(cap(&s, &named(&s, "a1"), &dual_y1).unwrap().is_zero());
    }

    #[test]
    fn cap_errors() {
        let s = b_gamma(5, None).unwrap();
        let y = HomologyClass::dual(&s, &mono(&s, &["a1"])).unwrap();
        let a1a2 = s.mul(&named(&s, "a1"), &named(&s, "a2")).unwrap();
        assert!(matches!(
            cap(&s, &a1a2, &y),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(cap(&s, &Element::zero(), &y).is_err());
    }

    #[test]
    fn beta_transpose_on_bz3() {
        let s = bz3();
        let m = transpose_op(&s, OperationKind::Beta, 2).unwrap();
        assert_eq!(m, F3Matrix::identity(1));
        let y = HomologyClass::dual(&s, &mono(&s, &["y1"])).unwrap();
        let image = homology_op(&s, OperationKind::Beta, &y).unwrap();
        assert_eq!(image, HomologyClass::dual(&s, &mono(&s, &["x1"])).unwrap());
    }

    #[test]
    fn p1_transpose_below_four_is_zero() {
        let s = b_gamma(4, None).unwrap();
        for k in 0..4 {
            let m = transpose_op(&s, OperationKind::P1, k).unwrap();
            assert_eq!(m.rows(), 0);
            assert_eq!(m.cols(), s.basis(k).unwrap().len());
            assert!(m.is_zero());
        }
    }

    #[test]
    fn q1_transpose_in_degree_seven_of_bz3() {
        // Q₁(y) = P¹(0) − β(y³) = −3y²β(y) = 0, so the matrix is zero
        let s = bz3();
        let m = transpose_op(&s, OperationKind::Q1, 7).unwrap();
        assert_eq!(
            m,
            operation_matrix(&s, OperationKind::Q1, 2)
                .unwrap()
                .transpose()
        );
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.is_zero());
    }

    #[test]
    fn transpose_op_out_of_range() {
        let s = bz3();
        assert!(matches!(
            transpose_op(&s, OperationKind::Beta, 13),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn d5_shadow_on_bz3() {
        let s = bz3();
        // P¹β(x) = P¹(y) = y³, so d5(dual(y³)) = dual(x)
        let z = HomologyClass::dual(&s, &mono(&s, &["y1", "y1", "y1"])).unwrap();
        assert_eq!(
            d5_shadow(&s, &z).unwrap(),
            HomologyClass::dual(&s, &mono(&s, &["x1"])).unwrap()
        );
        // P¹β(y) = 0, so dual(x y³) is killed
        let z = HomologyClass::dual(&s, &mono(&s, &["x1", "y1", "y1", "y1"])).unwrap();
        assert!(d5_shadow(&s, &z).unwrap().is_zero());

        let low = HomologyClass::dual(&s, &mono(&s, &["y1", "y1"])).unwrap();
        assert!(d5_shadow(&s, &low).is_err());
        assert!(d5_matrix(&s, 4).is_err());
    }

    #[test]
    fn d5_shadow_vanishes_without_polynomial_generators() {
        let s = standard(4, 0, 12).unwrap();
        for p in 5..=12 {
            assert!(d5_matrix(&s, p).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_examples() {
        let m = F3Matrix::from_rows(&[
            vec![F3::ONE, F3::TWO, F3::ZERO],
            vec![F3::TWO, F3::ONE, F3::ZERO],
            vec![F3::ZERO, F3::ZERO, F3::TWO],
        ])
        .unwrap();
        // row 2 = 2·row 1
        assert_eq!(m.rank(), 2);
        assert_eq!(F3Matrix::identity(4).rank(), 4);
        assert_eq!(F3Matrix::zeros(3, 5).rank(), 0);
        assert_eq!(F3Matrix::zeros(0, 5).rank(), 0);
        assert!(F3Matrix::from_rows(&[vec![F3::ONE], vec![]]).is_err());
    }

    #[test]
    fn format_homology() {
        let s = product(&circle(), &circle(), 2).unwrap();
        let y = HomologyClass::from_coeffs(&s, 1, vec![F3::ONE, F3::TWO]).unwrap();
        assert_eq!(y.format(&s), "dual(a1) - dual(a2)");
        assert_eq!(HomologyClass::zero(&s, 2).unwrap().format(&s), "0");
        assert!(HomologyClass::from_coeffs(&s, 1, vec![F3::ONE]).is_err());
    }
}
