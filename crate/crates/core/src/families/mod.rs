//! Concrete quandle families and the backend interface shared by the
//! Schreier-graph machinery.

mod dihedral;
pub mod free;
mod galex;
mod groups;
pub mod lattice;

use crate::algebra::FiniteQuandle;
use crate::error::{Error, Result};
use crate::repr::{Automorphism, Element};
use crate::schreier::GeneratorSet;

pub use dihedral::{dihedral_quandle, dihedral_table, DihedralInfinite, DihedralOrder, SignedAffine};
pub use free::{fq_normalize, fq_op, free_reduce, FreeQuandle, FreeQuandleElement, ReducedWord};
pub use galex::GAlexFinite;
pub use groups::{conjugation_quandle, CayleyTable};
pub use lattice::{
    component_key, dis_lattice, galex_lattice_op, lattice_symmetry, IntegerLattice, LatticeAffine, LatticeGAlex,
    UnimodularMatrix,
};

/// A quandle together with exact symmetries and canonical element keys.
pub trait QuandleBackend {
    /// Short identifier used in exported headers, e.g. `dihedral(inf)`.
    fn id(&self) -> String;

    /// `x ◁^exponent y`.
    fn operate(&self, x: &Element, y: &Element, exponent: i64) -> Result<Element>;

    /// The point symmetry `s_y`.
    fn symmetry(&self, y: &Element) -> Result<Automorphism>;

    fn parse_element(&self, key: &str) -> Result<Element>;

    fn default_base(&self) -> Element;

    /// The backend's fixed finite generating set of `Inn(X)`.
    fn inner_generators(&self) -> Result<GeneratorSet>;

    /// A finite generating set of `Dis(X)`, when one is available.
    fn displacement_generators(&self) -> Result<Option<GeneratorSet>>;

    /// Canonical label of the connected component containing `x`.
    fn component_key(&self, x: &Element) -> Result<String>;

    /// A finite sample of elements of "size" `radius` around the base.
    fn window(&self, radius: usize) -> Vec<Element>;

    /// Number of elements for finite backends.
    fn finite_size(&self) -> Option<usize> {
        None
    }

    /// Evaluates a generator expression such as `s_1*s_0^-1`: a `*`-separated
    /// product of point symmetries `s_<key>`, each optionally inverted by a
    /// trailing `^-1`.
    fn symmetry_product(&self, expr: &str) -> Result<Automorphism> {
        let mut acc: Option<Automorphism> = None;
        for factor in expr.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix("s_")
                .ok_or_else(|| Error::MalformedExpression(format!("factor `{factor}` must start with `s_`")))?;
            let (key, inverse) = match body.strip_suffix("^-1") {
                Some(key) => (key, true),
                None => (body, false),
            };
            let s = self.symmetry(&self.parse_element(key)?)?;
            let s = if inverse { s.inverse() } else { s };
            acc = Some(match acc {
                None => s,
                Some(a) => a.then(&s)?,
            });
        }
        acc.ok_or_else(|| Error::MalformedExpression("empty generator expression".into()))
    }

    /// A generator set whose names are symmetry expressions.
    fn generators_from_names(&self, names: &[String]) -> Result<GeneratorSet> {
        let gens = names
            .iter()
            .map(|n| Ok((n.clone(), self.symmetry_product(n)?)))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(gens)
    }
}

/// A violation of the quandle axioms found on a finite window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowViolation {
    Idempotence(Element),
    /// `(x ◁ y) ◁^-1 y != x`.
    RightInverse(Element, Element),
    Distributivity(Element, Element, Element),
}

/// Checks the three axioms on every pair and triple drawn from `window`.
pub fn check_backend_axioms(backend: &dyn QuandleBackend, window: &[Element]) -> Result<Option<WindowViolation>> {
    for x in window {
        if backend.operate(x, x, 1)? != *x {
            return Ok(Some(WindowViolation::Idempotence(x.clone())));
        }
    }
    for x in window {
        for y in window {
            let xy = backend.operate(x, y, 1)?;
            if backend.operate(&xy, y, -1)? != *x || backend.operate(&backend.operate(x, y, -1)?, y, 1)? != *x {
                return Ok(Some(WindowViolation::RightInverse(x.clone(), y.clone())));
            }
        }
    }
    for x in window {
        for y in window {
            let xy = backend.operate(x, y, 1)?;
            for z in window {
                let lhs = backend.operate(&xy, z, 1)?;
                let rhs = backend.operate(&backend.operate(x, z, 1)?, &backend.operate(y, z, 1)?, 1)?;
                if lhs != rhs {
                    return Ok(Some(WindowViolation::Distributivity(x.clone(), y.clone(), z.clone())));
                }
            }
        }
    }
    Ok(None)
}

/// Any finite quandle table as a backend; elements are indices.
#[derive(Clone, Debug)]
pub struct FiniteBackend {
    name: String,
    quandle: FiniteQuandle,
    component_of: Vec<usize>,
}

impl FiniteBackend {
    pub fn new(name: impl Into<String>, quandle: FiniteQuandle) -> Self {
        let mut component_of = vec![0; quandle.size()];
        for orbit in quandle.components() {
            for &x in &orbit {
                component_of[x] = orbit[0];
            }
        }
        FiniteBackend {
            name: name.into(),
            quandle,
            component_of,
        }
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    fn index(&self, x: &Element) -> Result<usize> {
        match x {
            Element::Index(i) if *i < self.quandle.size() => Ok(*i),
            other => Err(Error::InvalidInput(format!("{other} is not an element of {}", self.name))),
        }
    }
}

impl QuandleBackend for FiniteBackend {
    fn id(&self) -> String {
        self.name.clone()
    }

    fn operate(&self, x: &Element, y: &Element, exponent: i64) -> Result<Element> {
        Ok(Element::Index(self.quandle.op_pow(self.index(x)?, self.index(y)?, exponent)))
    }

    fn symmetry(&self, y: &Element) -> Result<Automorphism> {
        Ok(Automorphism::Perm(self.quandle.symmetry(self.index(y)?)))
    }

    fn parse_element(&self, key: &str) -> Result<Element> {
        let i: usize = key.trim().parse().map_err(|_| Error::ParseElement(key.to_string()))?;
        let e = Element::Index(i);
        self.index(&e)?;
        Ok(e)
    }

    fn default_base(&self) -> Element {
        Element::Index(0)
    }

    fn inner_generators(&self) -> Result<GeneratorSet> {
        let gens = (0..self.quandle.size())
            .map(|y| (format!("s_{y}"), Automorphism::Perm(self.quandle.symmetry(y))))
            .collect();
        GeneratorSet::new(gens)
    }

    fn displacement_generators(&self) -> Result<Option<GeneratorSet>> {
        let s0_inv = self.quandle.symmetry(0).inverse();
        let gens = (1..self.quandle.size())
            .map(|x| (format!("s_{x}*s_0^-1"), self.quandle.symmetry(x).then(&s0_inv)))
            .filter(|(_, p)| !p.is_identity())
            .map(|(n, p)| (n, Automorphism::Perm(p)))
            .collect();
        GeneratorSet::new(gens).map(Some)
    }

    fn component_key(&self, x: &Element) -> Result<String> {
        Ok(self.component_of[self.index(x)?].to_string())
    }

    fn window(&self, _radius: usize) -> Vec<Element> {
        (0..self.quandle.size()).map(Element::Index).collect()
    }

    fn finite_size(&self) -> Option<usize> {
        Some(self.quandle.size())
    }
}
