use super::CayleyTable;
use crate::algebra::{FiniteQuandle, Permutation};
use crate::error::{Error, Result};

/// The generalized Alexander quandle `GAlex(G, σ)`, `x ◁ y = σ(xy^-1)y`,
/// over a finite group given by its Cayley table.
#[derive(Clone, Debug)]
pub struct GAlexFinite {
    group: CayleyTable,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    quandle: FiniteQuandle,
}

impl GAlexFinite {
    pub fn new(group: CayleyTable, sigma: Vec<usize>) -> Result<Self> {
        if let Some((x, y)) = group.automorphism_witness(&sigma) {
            return Err(Error::NotAutomorphism { x, y });
        }
        let mut sigma_inv = vec![0; sigma.len()];
        for (x, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = x;
        }
        let n = group.order();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| group.mul(sigma[group.mul(x, group.inv(y))], y))
                    .collect()
            })
            .collect();
        let quandle = FiniteQuandle::from_table(table)?;
        Ok(GAlexFinite {
            group,
            sigma,
            sigma_inv,
            quandle,
        })
    }

    /// `GAlex(G, x ↦ g^-1 x g)`.
    pub fn inner(group: CayleyTable, g: usize) -> Result<Self> {
        if g >= group.order() {
            return Err(Error::InvalidInput(format!("{g} is not a group element")));
        }
        let sigma = group.conjugation_by(g);
        GAlexFinite::new(group, sigma)
    }

    pub fn group(&self) -> &CayleyTable {
        &self.group
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn into_quandle(self) -> FiniteQuandle {
        self.quandle
    }

    /// `σ^k(x)`.
    pub fn sigma_pow(&self, mut x: usize, k: i64) -> usize {
        let map = if k < 0 { &self.sigma_inv } else { &self.sigma };
        for _ in 0..k.unsigned_abs() {
            x = map[x];
        }
        x
    }

    /// `x ◁^k y = σ^k(xy^-1) y`.
    pub fn op_pow(&self, x: usize, y: usize, k: i64) -> usize {
        let g = &self.group;
        g.mul(self.sigma_pow(g.mul(x, g.inv(y)), k), y)
    }

    /// `P`, the connected component of the identity, sorted.
    pub fn identity_component(&self) -> Vec<usize> {
        let e = self.group.identity();
        self.quandle
            .components()
            .into_iter()
            .find(|c| c.contains(&e))
            .expect("identity lies in some component")
    }

    /// `R_x : y ↦ yx`.
    pub fn right_translation(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.group.order()).map(|y| self.group.mul(y, x)).collect())
    }
}
