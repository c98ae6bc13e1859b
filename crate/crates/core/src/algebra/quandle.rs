use std::fmt;

use serde::Serialize;

use super::{group::orbits, EnumeratedGroup, Permutation};
use crate::error::{Error, Result};

/// Outcome of checking a table against the three quandle axioms.
///
/// Violations are reported for the first offending index tuple in
/// lexicographic order, checking the axioms in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomReport {
    Pass,
    /// `x ◁ x != x`.
    Idempotence { x: usize },
    /// Column `y` is not a bijection: rows `x1 < x2` share an image.
    RightInvertibility { y: usize, x1: usize, x2: usize },
    /// `(x ◁ y) ◁ z != (x ◁ z) ◁ (y ◁ z)`.
    Distributivity { x: usize, y: usize, z: usize },
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }

    pub fn axiom(&self) -> Option<u8> {
        match self {
            AxiomReport::Pass => None,
            AxiomReport::Idempotence { .. } => Some(1),
            AxiomReport::RightInvertibility { .. } => Some(2),
            AxiomReport::Distributivity { .. } => Some(3),
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomReport::Pass => write!(f, "all axioms hold"),
            AxiomReport::Idempotence { x } => write!(f, "axiom 1 fails at x={x}"),
            AxiomReport::RightInvertibility { y, x1, x2 } => {
                write!(f, "axiom 2 fails at y={y}: rows {x1} and {x2} collide")
            }
            AxiomReport::Distributivity { x, y, z } => {
                write!(f, "axiom 3 fails at (x,y,z)=({x},{y},{z})")
            }
        }
    }
}

fn validate_shape(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::MalformedTable("a quandle is non-empty".into()));
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::MalformedTable(format!("entry [{x}][{y}] = {v} is out of range")));
        }
    }
    Ok(n)
}

/// Checks idempotence, right-invertibility and right self-distributivity of
/// `table`, where `table[x][y] = x ◁ y`.
pub fn check_quandle_axioms(table: &[Vec<usize>]) -> Result<AxiomReport> {
    let n = validate_shape(table)?;
    if let Some(x) = (0..n).find(|&x| table[x][x] != x) {
        return Ok(AxiomReport::Idempotence { x });
    }
    for y in 0..n {
        let mut first_row: Vec<Option<usize>> = vec![None; n];
        for x in 0..n {
            let v = table[x][y];
            if let Some(x1) = first_row[v] {
                return Ok(AxiomReport::RightInvertibility { y, x1, x2: x });
            }
            first_row[v] = Some(x);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[table[x][z]][table[y][z]] {
                    return Ok(AxiomReport::Distributivity { x, y, z });
                }
            }
        }
    }
    Ok(AxiomReport::Pass)
}

/// A finite quandle given by its operation table and the inverse table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    table: Vec<Vec<usize>>,
    inv_table: Vec<Vec<usize>>,
}

impl FiniteQuandle {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        match check_quandle_axioms(&table)? {
            AxiomReport::Pass => {}
            violation => return Err(Error::AxiomViolation(violation)),
        }
        let n = table.len();
        let mut inv_table = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                inv_table[table[x][y]][y] = x;
            }
        }
        Ok(FiniteQuandle { table, inv_table })
    }

    /// The trivial quandle `x ◁ y = x` on `n` points.
    pub fn trivial(n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n).map(|x| vec![x; n]).collect();
        FiniteQuandle { inv_table: table.clone(), table }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inv_table(&self) -> &[Vec<usize>] {
        &self.inv_table
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_table[x][y]
    }

    /// `x ◁^k y`.
    pub fn op_pow(&self, mut x: usize, y: usize, k: i64) -> usize {
        for _ in 0..k.unsigned_abs() {
            x = if k > 0 { self.op(x, y) } else { self.inv_op(x, y) };
        }
        x
    }

    pub fn symmetry(&self, y: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.size()).map(|x| self.table[x][y]).collect())
    }

    pub fn symmetries(&self) -> Vec<Permutation> {
        (0..self.size()).map(|y| self.symmetry(y)).collect()
    }

    /// Distinct products `s_x s_y^-1`, sorted, identity removed.
    pub fn displacement_generators(&self) -> Vec<Permutation> {
        let syms = self.symmetries();
        let mut gens = Vec::new();
        for sx in &syms {
            for sy in &syms {
                gens.push(sx.then(&sy.inverse()));
            }
        }
        gens.sort();
        gens.dedup();
        gens.retain(|g| !g.is_identity());
        gens
    }

    pub fn inner_group(&self, bound: usize) -> Result<EnumeratedGroup> {
        let mut syms = self.symmetries();
        syms.sort();
        syms.dedup();
        EnumeratedGroup::generated_by(self.size(), syms, bound)
    }

    pub fn displacement_group(&self, bound: usize) -> Result<EnumeratedGroup> {
        EnumeratedGroup::generated_by(self.size(), self.displacement_generators(), bound)
    }

    /// Connected components: the orbits of `Inn`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let domain: Vec<usize> = (0..self.size()).collect();
        orbits(&self.symmetries(), &domain)
    }

    /// First pair `(x, y)` with `f(x ◁ y) != f(x) ◁ f(y)`, if any.
    pub fn automorphism_witness(&self, f: &Permutation) -> Option<(usize, usize)> {
        if f.degree() != self.size() {
            return Some((0, 0));
        }
        for x in 0..self.size() {
            for y in 0..self.size() {
                if f.apply(self.op(x, y)) != self.op(f.apply(x), f.apply(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        self.automorphism_witness(f).is_none()
    }
}

/// The point symmetry `s_y : x ↦ x ◁ y`.
pub fn point_symmetry(q: &FiniteQuandle, y: usize) -> Result<Permutation> {
    if y >= q.size() {
        return Err(Error::InvalidInput(format!(
            "element {y} is out of range for a quandle of size {}",
            q.size()
        )));
    }
    Ok(q.symmetry(y))
}
