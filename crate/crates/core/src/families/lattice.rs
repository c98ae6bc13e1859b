//! Generalized Alexander quandles on `Z^n` with a unimodular `t`.
//!
//! All arithmetic is exact over `BigInt`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QuandleBackend;
use crate::error::{Error, Result};
use crate::repr::{Automorphism, Element};
use crate::schreier::GeneratorSet;

/// Longest order searched for when deciding whether `t` has finite order.
const PERIOD_SEARCH_CAP: u64 = 720;

/// `(a,b,..)`.
pub fn format_vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Parses `(a,b,..)`; a bare integer is accepted as a 1-vector.
pub fn parse_vector(text: &str) -> Result<Vec<BigInt>> {
    let t = text.trim();
    let inner = match t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner,
        None if !t.contains(',') => t,
        None => return Err(Error::ParseElement(text.to_string())),
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| p.trim().parse::<BigInt>().map_err(|_| Error::ParseElement(text.to_string())))
        .collect()
}

fn check_dim(v: &[BigInt], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Determinant by fraction-free (Bareiss) elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// A square integer matrix with determinant `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl UnimodularMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("matrix is empty".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::MalformedTable(format!("row of length {} in a {n}x{n} matrix", r.len())));
        }
        let det = bareiss_det(rows.clone());
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular {
                determinant: det.to_string(),
            });
        }
        Ok(UnimodularMatrix { rows })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        UnimodularMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_det(self.rows.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    pub fn mul(&self, other: &UnimodularMatrix) -> UnimodularMatrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigInt::zero(), |acc, k| acc + &self.rows[i][k] * &other.rows[k][j]))
                    .collect()
            })
            .collect();
        UnimodularMatrix { rows }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        check_dim(v, self.dim())?;
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().zip(v).fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    /// Exact inverse: `det · adj(t)`.
    pub fn inverse(&self) -> UnimodularMatrix {
        let n = self.dim();
        let det = self.determinant();
        if n == 1 {
            return UnimodularMatrix {
                rows: vec![vec![det]],
            };
        }
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<BigInt>> = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| (0..n).filter(|&c| c != i).map(|c| self.rows[r][c].clone()).collect())
                    .collect();
                let cofactor = bareiss_det(minor);
                let signed = if (i + j) % 2 == 0 { cofactor } else { -cofactor };
                rows[i][j] = signed * &det;
            }
        }
        UnimodularMatrix { rows }
    }

    pub fn pow(&self, exponent: i64) -> UnimodularMatrix {
        let mut base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::identity(self.dim());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The order of `t` when it is at most the search cap.
    pub fn finite_order(&self) -> Option<u64> {
        let mut p = self.clone();
        for k in 1..=PERIOD_SEARCH_CAP {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// `1 - t^-1` as plain integer rows.
    pub fn one_minus_inverse(&self) -> Vec<Vec<BigInt>> {
        let inv = self.inverse();
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(u8::from(i == j)) - &inv.rows[i][j])
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// A fixed `t` shared by all affine maps over it.
#[derive(Debug)]
pub struct LatticeAmbient {
    t: UnimodularMatrix,
    t_inv: UnimodularMatrix,
    period: Option<u64>,
}

impl LatticeAmbient {
    pub fn new(t: UnimodularMatrix) -> Arc<Self> {
        let period = t.finite_order();
        let t_inv = t.inverse();
        Arc::new(LatticeAmbient { t, t_inv, period })
    }

    pub fn t(&self) -> &UnimodularMatrix {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn period(&self) -> Option<u64> {
        self.period
    }

    fn power_of_t(&self, k: i64) -> UnimodularMatrix {
        match k {
            0 => UnimodularMatrix::identity(self.dim()),
            1 => self.t.clone(),
            -1 => self.t_inv.clone(),
            _ => self.t.pow(k),
        }
    }

    fn apply_power(&self, k: i64, v: &[BigInt]) -> Result<Vec<BigInt>> {
        match k {
            0 => {
                check_dim(v, self.dim())?;
                Ok(v.to_vec())
            }
            1 => self.t.mul_vec(v),
            -1 => self.t_inv.mul_vec(v),
            _ => self.power_of_t(k).mul_vec(v),
        }
    }

    fn normalize_power(&self, k: i64) -> i64 {
        match self.period {
            Some(p) => k.rem_euclid(p as i64),
            None => k,
        }
    }

    /// `s_y : z ↦ t z + (1 - t) y`.
    pub fn symmetry(self: &Arc<Self>, y: &[BigInt]) -> Result<LatticeAffine> {
        let ty = self.t.mul_vec(y)?;
        LatticeAffine::new(self.clone(), 1, sub(y, &ty))
    }
}

/// `z ↦ t^k z + c` over a fixed ambient `t`.
#[derive(Clone, Debug)]
pub struct LatticeAffine {
    ambient: Arc<LatticeAmbient>,
    power: i64,
    shift: Vec<BigInt>,
}

impl PartialEq for LatticeAffine {
    fn eq(&self, other: &Self) -> bool {
        self.power == other.power
            && self.shift == other.shift
            && (Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient.t == other.ambient.t)
    }
}

impl Eq for LatticeAffine {}

impl Hash for LatticeAffine {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.power.hash(state);
        self.shift.hash(state);
    }
}

impl LatticeAffine {
    pub fn new(ambient: Arc<LatticeAmbient>, power: i64, shift: Vec<BigInt>) -> Result<Self> {
        check_dim(&shift, ambient.dim())?;
        let power = ambient.normalize_power(power);
        Ok(LatticeAffine { ambient, power, shift })
    }

    pub fn translation(ambient: Arc<LatticeAmbient>, shift: Vec<BigInt>) -> Result<Self> {
        Self::new(ambient, 0, shift)
    }

    pub fn ambient(&self) -> &Arc<LatticeAmbient> {
        &self.ambient
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn shift(&self) -> &[BigInt] {
        &self.shift
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        Ok(add(&self.ambient.apply_power(self.power, v)?, &self.shift))
    }

    fn same_ambient(&self, other: &LatticeAffine) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient.t == other.ambient.t {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "affine maps over different matrices {} and {}",
                self.ambient.t, other.ambient.t
            )))
        }
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &LatticeAffine) -> Result<LatticeAffine> {
        self.same_ambient(other)?;
        let shift = add(&self.ambient.apply_power(other.power, &self.shift)?, &other.shift);
        LatticeAffine::new(self.ambient.clone(), self.power + other.power, shift)
    }

    pub fn inverse(&self) -> LatticeAffine {
        let back = self
            .ambient
            .apply_power(-self.power, &self.shift)
            .expect("shift has the ambient dimension");
        LatticeAffine {
            ambient: self.ambient.clone(),
            power: self.ambient.normalize_power(-self.power),
            shift: back.into_iter().map(|x| -x).collect(),
        }
    }

    pub fn identity_like(&self) -> LatticeAffine {
        LatticeAffine {
            ambient: self.ambient.clone(),
            power: 0,
            shift: vec![BigInt::zero(); self.ambient.dim()],
        }
    }

    pub fn is_translation(&self) -> bool {
        self.power == 0
    }
}

impl fmt::Display for LatticeAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "z -> z + {}", format_vector(&self.shift)),
            1 => write!(f, "z -> t z + {}", format_vector(&self.shift)),
            k => write!(f, "z -> t^{k} z + {}", format_vector(&self.shift)),
        }
    }
}

/// `s_y` for `GAlex(Z^n, t)`.
pub fn lattice_symmetry(t: &UnimodularMatrix, y: &[BigInt]) -> Result<LatticeAffine> {
    LatticeAmbient::new(t.clone()).symmetry(y)
}

/// `x ◁^k y = t^k (x - y) + y`.
pub fn galex_lattice_op(t: &UnimodularMatrix, x: &[BigInt], y: &[BigInt], exponent: i64) -> Result<Vec<BigInt>> {
    check_dim(x, t.dim())?;
    check_dim(y, t.dim())?;
    let moved = t.pow(exponent).mul_vec(&sub(x, y))?;
    Ok(add(&moved, y))
}

/// A sublattice of `Z^n` in column-style Hermite normal form.
///
/// Basis columns have strictly increasing pivot rows (the first nonzero
/// entry), positive pivots, and every other entry in a pivot row lies in
/// `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    /// The lattice spanned by `generators` (each of length `dim`).
    pub fn span(dim: usize, generators: &[Vec<BigInt>]) -> Result<Self> {
        for g in generators {
            check_dim(g, dim)?;
        }
        let mut pending: Vec<Vec<BigInt>> = generators.iter().filter(|g| !is_zero(g)).cloned().collect();
        let mut basis: Vec<Vec<BigInt>> = Vec::new();
        let mut pivots = Vec::new();
        for row in 0..dim {
            while let Some(best) = (0..pending.len())
                .filter(|&i| !pending[i][row].is_zero())
                .min_by_key(|&i| pending[i][row].abs())
            {
                let pivot_col = pending[best].clone();
                let mut done = true;
                for (i, col) in pending.iter_mut().enumerate() {
                    if i == best || col[row].is_zero() {
                        continue;
                    }
                    let q = col[row].div_floor(&pivot_col[row]);
                    for (c, p) in col.iter_mut().zip(&pivot_col) {
                        *c -= &q * p;
                    }
                    if !col[row].is_zero() {
                        done = false;
                    }
                }
                if done {
                    let mut col = pending.swap_remove(best);
                    if col[row].is_negative() {
                        col.iter_mut().for_each(|c| *c = -c.clone());
                    }
                    for earlier in basis.iter_mut() {
                        let q = earlier[row].div_floor(&col[row]);
                        if !q.is_zero() {
                            for (e, p) in earlier.iter_mut().zip(&col) {
                                *e -= &q * p;
                            }
                        }
                    }
                    basis.push(col);
                    pivots.push(row);
                    pending.retain(|c| !is_zero(c));
                    break;
                }
                pending.retain(|c| !is_zero(c));
            }
        }
        Ok(IntegerLattice { dim, basis, pivots })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Basis columns.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical representative of `v + Λ`.
    pub fn reduce(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        check_dim(v, self.dim)?;
        let mut v = v.to_vec();
        for (col, &row) in self.basis.iter().zip(&self.pivots) {
            let q = v[row].div_floor(&col[row]);
            if !q.is_zero() {
                for (x, c) in v.iter_mut().zip(col) {
                    *x -= &q * c;
                }
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(is_zero(&self.reduce(v)?))
    }

    /// `[Z^n : Λ]` when the rank is full.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.dim).then(|| {
            self.basis
                .iter()
                .zip(&self.pivots)
                .fold(BigInt::one(), |acc, (c, &r)| acc * &c[r])
        })
    }
}

/// `Λ = (1 - t^-1) Z^n`.
pub fn dis_lattice(t: &UnimodularMatrix) -> IntegerLattice {
    let m = t.one_minus_inverse();
    let n = t.dim();
    let columns: Vec<Vec<BigInt>> = (0..n).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect();
    IntegerLattice::span(n, &columns).expect("columns have the ambient dimension")
}

/// Canonical representative of `x` modulo `dis_lattice(t)`.
pub fn component_key(t: &UnimodularMatrix, x: &[BigInt]) -> Result<Vec<BigInt>> {
    dis_lattice(t).reduce(x)
}

/// `GAlex(Z^n, t)` as a backend.
#[derive(Clone, Debug)]
pub struct LatticeGAlex {
    ambient: Arc<LatticeAmbient>,
    lattice: IntegerLattice,
}

impl LatticeGAlex {
    pub fn new(t: UnimodularMatrix) -> Self {
        let lattice = dis_lattice(&t);
        LatticeGAlex {
            ambient: LatticeAmbient::new(t),
            lattice,
        }
    }

    pub fn t(&self) -> &UnimodularMatrix {
        self.ambient.t()
    }

    pub fn ambient(&self) -> &Arc<LatticeAmbient> {
        &self.ambient
    }

    pub fn dis_lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    fn vector<'a>(&self, x: &'a Element) -> Result<&'a [BigInt]> {
        match x {
            Element::Vector(v) => {
                check_dim(v, self.dim())?;
                Ok(v)
            }
            other => Err(Error::ElementMismatch {
                automorphism: "lattice-affine",
                element: other.kind(),
            }),
        }
    }

    fn unit(&self, i: usize) -> Vec<BigInt> {
        (0..self.dim()).map(|j| BigInt::from(u8::from(i == j))).collect()
    }
}

impl QuandleBackend for LatticeGAlex {
    fn id(&self) -> String {
        format!("galex-lattice({})", self.ambient.t())
    }

    fn operate(&self, x: &Element, y: &Element, exponent: i64) -> Result<Element> {
        let (x, y) = (self.vector(x)?, self.vector(y)?);
        let k = self.ambient.normalize_power(exponent);
        let moved = self.ambient.apply_power(k, &sub(x, y))?;
        Ok(Element::Vector(add(&moved, y)))
    }

    fn symmetry(&self, y: &Element) -> Result<Automorphism> {
        Ok(Automorphism::Lattice(self.ambient.symmetry(self.vector(y)?)?))
    }

    fn parse_element(&self, key: &str) -> Result<Element> {
        let v = parse_vector(key)?;
        check_dim(&v, self.dim())?;
        Ok(Element::Vector(v))
    }

    fn default_base(&self) -> Element {
        Element::Vector(vec![BigInt::zero(); self.dim()])
    }

    /// `{s_0, s_{e_1}, .., s_{e_n}}`.
    fn inner_generators(&self) -> Result<GeneratorSet> {
        let zero = vec![BigInt::zero(); self.dim()];
        let mut gens = vec![(
            format!("s_{}", format_vector(&zero)),
            Automorphism::Lattice(self.ambient.symmetry(&zero)?),
        )];
        for i in 0..self.dim() {
            let e = self.unit(i);
            gens.push((
                format!("s_{}", format_vector(&e)),
                Automorphism::Lattice(self.ambient.symmetry(&e)?),
            ));
        }
        GeneratorSet::new(gens)
    }

    /// `{s_{e_i} s_0^-1}`, dropping trivial ones.
    fn displacement_generators(&self) -> Result<Option<GeneratorSet>> {
        let zero = vec![BigInt::zero(); self.dim()];
        let s0_inv = self.ambient.symmetry(&zero)?.inverse();
        let mut gens = Vec::new();
        for i in 0..self.dim() {
            let e = self.unit(i);
            let g = self.ambient.symmetry(&e)?.then(&s0_inv)?;
            if !is_zero(g.shift()) || !g.is_translation() {
                gens.push((
                    format!("s_{}*s_{}^-1", format_vector(&e), format_vector(&zero)),
                    Automorphism::Lattice(g),
                ));
            }
        }
        GeneratorSet::new(gens).map(Some)
    }

    fn component_key(&self, x: &Element) -> Result<String> {
        Ok(format_vector(&self.lattice.reduce(self.vector(x)?)?))
    }

    /// The cube `[-radius, radius]^n`.
    fn window(&self, radius: usize) -> Vec<Element> {
        let r = radius as i64;
        let mut out: Vec<Vec<BigInt>> = vec![Vec::new()];
        for _ in 0..self.dim() {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (-r..=r).map(move |x| {
                        let mut w = v.clone();
                        w.push(BigInt::from(x));
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Element::Vector).collect()
    }
}
