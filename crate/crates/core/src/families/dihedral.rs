use std::fmt;

use super::{FiniteBackend, QuandleBackend};
use crate::algebra::FiniteQuandle;
use crate::error::{Error, Result};
use crate::repr::{Automorphism, Element};
use crate::schreier::GeneratorSet;

/// The map `z ↦ εz + c` on the integers, `ε = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedAffine {
    sign: i8,
    shift: i64,
}

impl SignedAffine {
    /// Panics unless `sign` is `1` or `-1`.
    pub fn new(sign: i8, shift: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        SignedAffine { sign, shift }
    }

    pub fn identity() -> Self {
        SignedAffine { sign: 1, shift: 0 }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn apply(&self, z: i64) -> i64 {
        i64::from(self.sign) * z + self.shift
    }

    /// `(ε1, c1)(ε2, c2) = (ε1ε2, ε2c1 + c2)`.
    pub fn then(&self, other: &SignedAffine) -> SignedAffine {
        SignedAffine {
            sign: self.sign * other.sign,
            shift: i64::from(other.sign) * self.shift + other.shift,
        }
    }

    pub fn inverse(&self) -> SignedAffine {
        SignedAffine {
            sign: self.sign,
            shift: -i64::from(self.sign) * self.shift,
        }
    }

    pub fn pow(&self, k: i64) -> SignedAffine {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs()).fold(SignedAffine::identity(), |acc, _| acc.then(&base))
    }
}

impl fmt::Display for SignedAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.sign == 1 { "z" } else { "-z" };
        match self.shift {
            0 => write!(f, "z -> {lead}"),
            c if c > 0 => write!(f, "z -> {lead} + {c}"),
            c => write!(f, "z -> {lead} - {}", -c),
        }
    }
}

/// The dihedral table `x ◁ y = 2y - x mod n`.
pub fn dihedral_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralOrder {
    Finite(usize),
    Infinite,
}

/// `R_n` for finite `n >= 1`, or `R_∞` on the integers.
pub fn dihedral_quandle(order: DihedralOrder) -> Result<Box<dyn QuandleBackend>> {
    match order {
        DihedralOrder::Finite(0) => Err(Error::InvalidInput("R_n needs n >= 1".into())),
        DihedralOrder::Finite(n) => {
            let q = FiniteQuandle::from_table(dihedral_table(n))?;
            Ok(Box::new(FiniteBackend::new(format!("dihedral({n})"), q)))
        }
        DihedralOrder::Infinite => Ok(Box::new(DihedralInfinite)),
    }
}

/// The infinite dihedral quandle `R_∞ = (Z, x ◁ y = 2y - x)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DihedralInfinite;

impl DihedralInfinite {
    /// `s_y = (z ↦ 2y - z)`.
    pub fn point_symmetry(y: i64) -> SignedAffine {
        SignedAffine::new(-1, 2 * y)
    }

    /// The displacement generator `s_1 s_0^-1 = (z ↦ z - 2)`.
    pub fn displacement_unit() -> SignedAffine {
        Self::point_symmetry(1).then(&Self::point_symmetry(0).inverse())
    }

    fn int(x: &Element) -> Result<i64> {
        match x {
            Element::Int(z) => Ok(*z),
            other => Err(Error::ElementMismatch {
                automorphism: "signed-affine",
                element: other.kind(),
            }),
        }
    }
}

impl QuandleBackend for DihedralInfinite {
    fn id(&self) -> String {
        "dihedral(inf)".into()
    }

    fn operate(&self, x: &Element, y: &Element, exponent: i64) -> Result<Element> {
        let (x, y) = (Self::int(x)?, Self::int(y)?);
        // s_y is an involution
        Ok(Element::Int(if exponent.rem_euclid(2) == 1 { 2 * y - x } else { x }))
    }

    fn symmetry(&self, y: &Element) -> Result<Automorphism> {
        Ok(Automorphism::Signed(Self::point_symmetry(Self::int(y)?)))
    }

    fn parse_element(&self, key: &str) -> Result<Element> {
        key.trim()
            .parse()
            .map(Element::Int)
            .map_err(|_| Error::ParseElement(key.to_string()))
    }

    fn default_base(&self) -> Element {
        Element::Int(0)
    }

    fn inner_generators(&self) -> Result<GeneratorSet> {
        GeneratorSet::new(vec![
            ("s_0".into(), Automorphism::Signed(Self::point_symmetry(0))),
            ("s_1".into(), Automorphism::Signed(Self::point_symmetry(1))),
        ])
    }

    fn displacement_generators(&self) -> Result<Option<GeneratorSet>> {
        GeneratorSet::new(vec![("s_1*s_0^-1".into(), Automorphism::Signed(Self::displacement_unit()))]).map(Some)
    }

    fn component_key(&self, x: &Element) -> Result<String> {
        Ok(Self::int(x)?.rem_euclid(2).to_string())
    }

    fn window(&self, radius: usize) -> Vec<Element> {
        let r = radius as i64;
        (-r..=r).map(Element::Int).collect()
    }
}
