use crate::algebra::{EnumeratedGroup, FiniteQuandle, Permutation};
use crate::error::{Error, Result};

/// A finite group given by its multiplication table, `mul[a][b] = ab`.
///
/// For groups coming from permutations the product is the right-action one:
/// `ab` applies `a` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl CayleyTable {
    pub fn new(mul: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidGroup(format!("row {a} is malformed")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(_) => return Err(Error::InvalidGroup("label count differs from order".into())),
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(CayleyTable {
            mul,
            identity,
            inverse,
            labels,
        })
    }

    /// The multiplication table of an enumerated permutation group; element
    /// `i` of the table is `group.elements()[i]`.
    pub fn from_group(group: &EnumeratedGroup) -> Self {
        let elems = group.elements();
        let mul = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| group.position(&a.then(b)).expect("group is closed"))
                    .collect()
            })
            .collect();
        let inverse = elems
            .iter()
            .map(|a| group.position(&a.inverse()).expect("group is closed"))
            .collect();
        CayleyTable {
            mul,
            identity: 0,
            inverse,
            labels: elems.iter().map(|p| p.to_string()).collect(),
        }
    }

    /// `Z/n` written additively.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("Z/0 is not finite".into()));
        }
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        CayleyTable::new(mul, None)
    }

    fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<(Self, EnumeratedGroup)> {
        let group = EnumeratedGroup::generated_by(degree, gens, crate::algebra::DEFAULT_GROUP_CAP)?;
        Ok((CayleyTable::from_group(&group), group))
    }

    /// `S_n` on the points `0..n`, together with its permutation group.
    pub fn symmetric(n: usize) -> Result<(Self, EnumeratedGroup)> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle])?);
        }
        Self::from_generators(n.max(1), gens)
    }

    /// `A_n`, generated by the 3-cycles `(0 1 k)`.
    pub fn alternating(n: usize) -> Result<(Self, EnumeratedGroup)> {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(n.max(1), gens)
    }

    /// The dihedral group of order `2n` acting on the vertices of an `n`-gon.
    /// Generated by the rotation `x ↦ x + 1` and the reflection `x ↦ -x`.
    pub fn dihedral(n: usize) -> Result<(Self, EnumeratedGroup)> {
        if n < 3 {
            return Err(Error::InvalidGroup("dihedral group needs n >= 3".into()));
        }
        let rotation = Permutation::new((0..n).map(|x| (x + 1) % n).collect())?;
        let reflection = Permutation::new((0..n).map(|x| (n - x) % n).collect())?;
        Self::from_generators(n, vec![rotation, reflection])
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`; element `u + 4s` is
    /// `(-1)^s` times the unit `[1, i, j, k][u]`.
    pub fn quaternion() -> Self {
        // unit products as (sign, unit)
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let mul = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (neg, u) = UNIT[a % 4][b % 4];
                        let sign = neg ^ (a >= 4) ^ (b >= 4);
                        u + if sign { 4 } else { 0 }
                    })
                    .collect()
            })
            .collect();
        let labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"].map(String::from).to_vec();
        CayleyTable::new(mul, Some(labels)).expect("quaternion table is a group")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// `g^-1 x g` for every `x`.
    pub fn conjugation_by(&self, g: usize) -> Vec<usize> {
        (0..self.order()).map(|x| self.mul(self.mul(self.inv(g), x), g)).collect()
    }

    /// First pair `(x, y)` with `σ(xy) != σ(x)σ(y)`, or a non-bijective `σ`.
    pub fn automorphism_witness(&self, sigma: &[usize]) -> Option<(usize, usize)> {
        let n = self.order();
        if sigma.len() != n || sigma.iter().any(|&v| v >= n) {
            return Some((0, 0));
        }
        let mut hit: Vec<Option<usize>> = vec![None; n];
        for (x, &v) in sigma.iter().enumerate() {
            if let Some(first) = hit[v] {
                return Some((first, x));
            }
            hit[v] = Some(x);
        }
        for x in 0..n {
            for y in 0..n {
                if sigma[self.mul(x, y)] != self.mul(sigma[x], sigma[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// The right-regular representation `a ↦ R_a`, `R_a(x) = xa`.
    ///
    /// `R_a R_b = R_ab` under the apply-left-first product.
    pub fn right_regular(&self) -> Vec<Permutation> {
        (0..self.order())
            .map(|a| Permutation::from_images_unchecked((0..self.order()).map(|x| self.mul(x, a)).collect()))
            .collect()
    }

    /// The group as an enumerated permutation group via right translations;
    /// element `a` corresponds to the permutation sending the identity to `a`.
    pub fn regular_group(&self) -> EnumeratedGroup {
        EnumeratedGroup::generated_by(self.order(), self.right_regular(), self.order())
            .expect("regular representation has the group's order")
    }

    /// Elements of the group sorted by index, from a group of right
    /// translations.
    pub fn elements_of(&self, translations: &EnumeratedGroup) -> Vec<usize> {
        let mut v: Vec<usize> = translations.elements().iter().map(|p| p.apply(self.identity)).collect();
        v.sort_unstable();
        v
    }

    /// The conjugacy class of `x`, sorted.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.order()).map(|g| self.mul(self.mul(self.inv(g), x), g)).collect();
        class.sort_unstable();
        class.dedup();
        class
    }
}

/// The conjugation quandle on `subset`, `x ◁ y = y^-1 x y`.
///
/// Quandle element `i` is `subset[i]`.
pub fn conjugation_quandle(group: &CayleyTable, subset: &[usize]) -> Result<FiniteQuandle> {
    let mut position = vec![None; group.order()];
    for (i, &x) in subset.iter().enumerate() {
        if x >= group.order() || position[x].is_some() {
            return Err(Error::InvalidInput(format!("bad subset entry {x}")));
        }
        position[x] = Some(i);
    }
    for &x in subset {
        for g in 0..group.order() {
            let c = group.mul(group.mul(group.inv(g), x), g);
            if position[c].is_none() {
                return Err(Error::NotConjugationClosed {
                    element: x,
                    conjugator: g,
                });
            }
        }
    }
    let table = subset
        .iter()
        .map(|&x| {
            subset
                .iter()
                .map(|&y| position[group.mul(group.mul(group.inv(y), x), y)].expect("closed subset"))
                .collect()
        })
        .collect();
    FiniteQuandle::from_table(table)
}
