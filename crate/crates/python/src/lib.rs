//! Python bindings. Elements and homology classes carry the space they live
//! in, so operations never need it passed separately.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use steenrod3::algebra::{Element as CoreElement, GeneratorId, SpacePresentation};
use steenrod3::homology::HomologyClass as CoreClass;
use steenrod3::report::ReportJson;
use steenrod3::{checker, homology, parse, spaces, steenrod, F3};

fn py_err(e: steenrod3::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn same_space(a: &Arc<SpacePresentation>, b: &Arc<SpacePresentation>) -> PyResult<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(PyValueError::new_err("operands live in different spaces"))
    }
}

#[pyclass(name = "Space", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Space {
    inner: Arc<SpacePresentation>,
}

impl Space {
    fn wrap(inner: SpacePresentation) -> Self {
        Space {
            inner: Arc::new(inner),
        }
    }

    fn wrap_element(&self, value: CoreElement) -> Element {
        Element {
            space: self.inner.clone(),
            value,
        }
    }
}

#[pymethods]
impl Space {
    #[staticmethod]
    fn circle() -> Self {
        Space::wrap(spaces::circle())
    }

    #[staticmethod]
    fn bz3() -> Self {
        Space::wrap(spaces::bz3())
    }

    #[staticmethod]
    #[pyo3(signature = (n, cap=None))]
    fn b_gamma(n: usize, cap: Option<usize>) -> PyResult<Self> {
        spaces::b_gamma(n, cap).map(Space::wrap).map_err(py_err)
    }

    #[staticmethod]
    fn standard(circles: usize, bz3: usize, cap: usize) -> PyResult<Self> {
        spaces::standard(circles, bz3, cap)
            .map(Space::wrap)
            .map_err(py_err)
    }

    fn product(&self, other: &Space, cap: usize) -> PyResult<Self> {
        spaces::product(&self.inner, &other.inner, cap)
            .map(Space::wrap)
            .map_err(py_err)
    }

    #[getter]
    fn cap(&self) -> usize {
        self.inner.degree_cap()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner
            .generators()
            .iter()
            .map(|g| g.name.clone())
            .collect()
    }

    fn basis(&self, k: usize) -> PyResult<Vec<String>> {
        let basis = self.inner.basis(k).map_err(py_err)?;
        Ok(basis
            .iter()
            .map(|m| self.inner.format_monomial(m))
            .collect())
    }

    #[pyo3(signature = (max_degree=None))]
    fn dims(&self, max_degree: Option<usize>) -> PyResult<Vec<usize>> {
        let max = max_degree.unwrap_or(self.inner.degree_cap());
        (0..=max)
            .map(|k| self.inner.basis(k).map(<[_]>::len).map_err(py_err))
            .collect()
    }

    fn element(&self, expr: &str) -> PyResult<Element> {
        parse::parse_element(&self.inner, expr)
            .map(|v| self.wrap_element(v))
            .map_err(py_err)
    }

    fn dual(&self, monomial: &str) -> PyResult<HomologyClass> {
        let e = parse::parse_element(&self.inner, monomial).map_err(py_err)?;
        let m = match e.terms().collect::<Vec<_>>().as_slice() {
            [(m, c)] if *c == F3::ONE => (*m).clone(),
            _ => {
                return Err(PyValueError::new_err(format!(
                    "{monomial:?} is not a basis monomial"
                )))
            }
        };
        let value = CoreClass::dual(&self.inner, &m).map_err(py_err)?;
        Ok(HomologyClass {
            space: self.inner.clone(),
            value,
        })
    }

    fn check_condition(
        &self,
        n: usize,
        alphas: Vec<String>,
        zeta: &Element,
    ) -> PyResult<WitnessReport> {
        same_space(&self.inner, &zeta.space)?;
        let ids = alphas
            .iter()
            .map(|name| {
                self.inner
                    .generator_by_name(name)
                    .ok_or_else(|| PyValueError::new_err(format!("unknown generator {name:?}")))
            })
            .collect::<PyResult<Vec<GeneratorId>>>()?;
        let report = checker::check_condition(&self.inner, n, &ids, &zeta.value).map_err(py_err)?;
        Ok(WitnessReport {
            space: self.inner.clone(),
            inner: report,
        })
    }

    fn search_witness(&self, n: usize) -> PyResult<Option<WitnessReport>> {
        let found = checker::search_witness(&self.inner, n).map_err(py_err)?;
        Ok(found.map(|inner| WitnessReport {
            space: self.inner.clone(),
            inner,
        }))
    }

    /// Returns `None` when every axiom holds, otherwise the rendered failure.
    #[pyo3(signature = (max_degree=None, trials=100, seed=0))]
    fn verify_axioms(&self, max_degree: Option<usize>, trials: usize, seed: u64) -> Option<String> {
        let max = max_degree.unwrap_or(self.inner.degree_cap());
        let report = steenrod::verify_axioms(&self.inner, max, trials, seed);
        (!report.passed()).then(|| report.render(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!("Space({})", self.inner)
    }
}

#[pyclass(name = "Element", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Element {
    space: Arc<SpacePresentation>,
    value: CoreElement,
}

impl Element {
    fn with(&self, value: CoreElement) -> Element {
        Element {
            space: self.space.clone(),
            value,
        }
    }

    fn op(&self, kind: steenrod::OperationKind) -> PyResult<Element> {
        steenrod::apply(&self.space, kind, &self.value)
            .map(|v| self.with(v))
            .map_err(py_err)
    }
}

#[pymethods]
impl Element {
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.value.degree()
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// (monomial, coefficient in {1, 2}) pairs in canonical order.
    fn terms(&self) -> Vec<(String, u8)> {
        self.value
            .terms()
            .map(|(m, c)| (self.space.format_monomial(m), c.value()))
            .collect()
    }

    fn beta(&self) -> PyResult<Element> {
        self.op(steenrod::OperationKind::Beta)
    }

    fn p1(&self) -> PyResult<Element> {
        self.op(steenrod::OperationKind::P1)
    }

    fn q1(&self) -> PyResult<Element> {
        self.op(steenrod::OperationKind::Q1)
    }

    fn __add__(&self, other: &Element) -> PyResult<Element> {
        same_space(&self.space, &other.space)?;
        Ok(self.with(&self.value + &other.value))
    }

    fn __sub__(&self, other: &Element) -> PyResult<Element> {
        same_space(&self.space, &other.space)?;
        Ok(self.with(&self.value - &other.value))
    }

    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        same_space(&self.space, &other.space)?;
        self.space
            .mul(&self.value, &other.value)
            .map(|v| self.with(v))
            .map_err(py_err)
    }

    fn __neg__(&self) -> Element {
        self.with(-&self.value)
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.space == other.space && self.value == other.value
    }

    fn __bool__(&self) -> bool {
        !self.value.is_zero()
    }

    fn __str__(&self) -> String {
        self.space.format_element(&self.value)
    }

    fn __repr__(&self) -> String {
        format!("Element({:?})", self.space.format_element(&self.value))
    }
}

#[pyclass(name = "HomologyClass", frozen, skip_from_py_object)]
#[derive(Clone)]
struct HomologyClass {
    space: Arc<SpacePresentation>,
    value: CoreClass,
}

impl HomologyClass {
    fn with(&self, value: CoreClass) -> HomologyClass {
        HomologyClass {
            space: self.space.clone(),
            value,
        }
    }
}

#[pymethods]
impl HomologyClass {
    #[getter]
    fn degree(&self) -> usize {
        self.value.degree()
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn coeffs(&self) -> Vec<u8> {
        self.value.coeffs().iter().map(|c| c.value()).collect()
    }

    /// Kronecker pairing with a cohomology class, as an integer in {0, 1, 2}.
    fn pair(&self, g: &Element) -> PyResult<u8> {
        same_space(&self.space, &g.space)?;
        homology::kronecker(&self.space, &g.value, &self.value)
            .map(|c| c.value())
            .map_err(py_err)
    }

    /// alpha ∩ self.
    fn cap(&self, alpha: &Element) -> PyResult<HomologyClass> {
        same_space(&self.space, &alpha.space)?;
        homology::cap(&self.space, &alpha.value, &self.value)
            .map(|v| self.with(v))
            .map_err(py_err)
    }

    fn d5_shadow(&self) -> PyResult<HomologyClass> {
        homology::d5_shadow(&self.space, &self.value)
            .map(|v| self.with(v))
            .map_err(py_err)
    }

    fn __eq__(&self, other: &HomologyClass) -> bool {
        self.space == other.space && self.value == other.value
    }

    fn __str__(&self) -> String {
        self.value.format(&self.space)
    }

    fn __repr__(&self) -> String {
        format!("HomologyClass({:?})", self.value.format(&self.space))
    }
}

#[pyclass(name = "WitnessReport", frozen)]
struct WitnessReport {
    space: Arc<SpacePresentation>,
    inner: checker::WitnessReport,
}

#[pymethods]
impl WitnessReport {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn verdict(&self) -> bool {
        self.inner.verdict
    }

    #[getter]
    fn alphas(&self) -> Vec<String> {
        self.inner
            .alphas
            .iter()
            .map(|&id| self.space.generators()[id.index()].name.clone())
            .collect()
    }

    #[getter]
    fn zeta(&self) -> Element {
        Element {
            space: self.space.clone(),
            value: self.inner.zeta.clone(),
        }
    }

    #[getter]
    fn product_class(&self) -> Element {
        Element {
            space: self.space.clone(),
            value: self.inner.product_class.clone(),
        }
    }

    #[getter]
    fn pairing_witness(&self) -> Option<String> {
        self.inner
            .pairing_witness
            .as_ref()
            .map(|m| self.space.format_monomial(m))
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.inner.warnings.clone()
    }

    fn explain(&self) -> PyResult<String> {
        checker::explain(&self.space, &self.inner).map_err(py_err)
    }

    fn to_json(&self) -> PyResult<String> {
        ReportJson::from_report(&self.space, &self.inner)
            .map(|j| j.to_json())
            .map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "WitnessReport(n={}, verdict={}, zeta={:?})",
            self.inner.n,
            self.inner.verdict,
            self.space.format_element(&self.inner.zeta)
        )
    }
}

#[pymodule(name = "steenrod3")]
fn steenrod3_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Space>()?;
    m.add_class::<Element>()?;
    m.add_class::<HomologyClass>()?;
    m.add_class::<WitnessReport>()?;
    Ok(())
}
