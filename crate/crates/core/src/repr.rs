//! Uniform element and automorphism representations across quandle families.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::Permutation;
use crate::error::{Error, Result};
use crate::families::free::{FreeQuandleElement, ReducedWord};
use crate::families::lattice::{format_vector, LatticeAffine};
use crate::families::SignedAffine;

/// An element of one of the supported quandle backends.
///
/// The `Display` form is the canonical key used in graph exports: integers
/// and indices as decimals, vectors as `(a,b,..)`, free-quandle elements as
/// `base^word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Index(usize),
    Int(i64),
    Vector(Vec<BigInt>),
    Free(FreeQuandleElement),
}

impl Element {
    pub fn kind(&self) -> &'static str {
        match self {
            Element::Index(_) => "index",
            Element::Int(_) => "integer",
            Element::Vector(_) => "vector",
            Element::Free(_) => "free",
        }
    }

    pub fn vector<I: Into<BigInt>>(entries: impl IntoIterator<Item = I>) -> Element {
        Element::Vector(entries.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Index(i) => write!(f, "{i}"),
            Element::Int(z) => write!(f, "{z}"),
            Element::Vector(v) => f.write_str(&format_vector(v)),
            Element::Free(e) => write!(f, "{e}"),
        }
    }
}

/// An automorphism in one of the exact representation families.
///
/// Products and inverses are exact; equality is equality of the
/// representation, never of sampled behaviour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Automorphism {
    Perm(Permutation),
    /// `z ↦ εz + c` on `Z`.
    Signed(SignedAffine),
    /// `z ↦ t^k z + c` on `Z^n` for a fixed ambient `t`.
    Lattice(LatticeAffine),
    /// Right multiplication of the free-quandle tail: `a^w ↦ a^{wu}`.
    Free(ReducedWord),
}

impl Automorphism {
    pub fn family(&self) -> &'static str {
        match self {
            Automorphism::Perm(_) => "permutation",
            Automorphism::Signed(_) => "signed-affine",
            Automorphism::Lattice(_) => "lattice-affine",
            Automorphism::Free(_) => "free-word",
        }
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        match (self, x) {
            (Automorphism::Perm(p), Element::Index(i)) => {
                if *i >= p.degree() {
                    return Err(Error::InvalidInput(format!("point {i} outside degree {}", p.degree())));
                }
                Ok(Element::Index(p.apply(*i)))
            }
            (Automorphism::Signed(a), Element::Int(z)) => Ok(Element::Int(a.apply(*z))),
            (Automorphism::Lattice(a), Element::Vector(v)) => Ok(Element::Vector(a.apply(v)?)),
            (Automorphism::Free(u), Element::Free(e)) => Ok(Element::Free(e.right_multiply(u))),
            _ => Err(Error::ElementMismatch {
                automorphism: self.family(),
                element: x.kind(),
            }),
        }
    }

    /// The product `self * other`: apply `self`, then `other`.
    pub fn then(&self, other: &Automorphism) -> Result<Automorphism> {
        match (self, other) {
            (Automorphism::Perm(a), Automorphism::Perm(b)) => {
                if a.degree() != b.degree() {
                    return Err(Error::DimensionMismatch {
                        expected: a.degree(),
                        found: b.degree(),
                    });
                }
                Ok(Automorphism::Perm(a.then(b)))
            }
            (Automorphism::Signed(a), Automorphism::Signed(b)) => Ok(Automorphism::Signed(a.then(b))),
            (Automorphism::Lattice(a), Automorphism::Lattice(b)) => Ok(Automorphism::Lattice(a.then(b)?)),
            (Automorphism::Free(a), Automorphism::Free(b)) => Ok(Automorphism::Free(a.mul(b))),
            _ => Err(Error::MixedRepresentation {
                left: self.family(),
                right: other.family(),
            }),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        match self {
            Automorphism::Perm(p) => Automorphism::Perm(p.inverse()),
            Automorphism::Signed(a) => Automorphism::Signed(a.inverse()),
            Automorphism::Lattice(a) => Automorphism::Lattice(a.inverse()),
            Automorphism::Free(w) => Automorphism::Free(w.inverse()),
        }
    }

    /// The identity in the same family (and ambient) as `self`.
    pub fn identity_like(&self) -> Automorphism {
        match self {
            Automorphism::Perm(p) => Automorphism::Perm(Permutation::identity(p.degree())),
            Automorphism::Signed(_) => Automorphism::Signed(SignedAffine::identity()),
            Automorphism::Lattice(a) => Automorphism::Lattice(a.identity_like()),
            Automorphism::Free(_) => Automorphism::Free(ReducedWord::empty()),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    pub fn pow(&self, exponent: i64) -> Result<Automorphism> {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut acc = self.identity_like();
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.then(&base)?;
        }
        Ok(acc)
    }

    /// True when the automorphism is a pure translation (fixed-point free
    /// unless trivial). Permutations and free words are never reported as
    /// translations.
    pub fn is_translation(&self) -> bool {
        match self {
            Automorphism::Signed(a) => a.sign() == 1,
            Automorphism::Lattice(a) => a.is_translation(),
            _ => false,
        }
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Automorphism::Perm(p) => write!(f, "{p}"),
            Automorphism::Signed(a) => write!(f, "{a}"),
            Automorphism::Lattice(a) => write!(f, "{a}"),
            Automorphism::Free(w) => write!(f, "{w}"),
        }
    }
}
