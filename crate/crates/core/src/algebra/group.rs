use std::collections::{BTreeMap, HashMap, VecDeque};

use super::Permutation;
use crate::error::{Error, Result};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_GROUP_CAP: usize = 200_000;

/// A permutation group given by named generators of a common degree.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<(String, Permutation)>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<(String, Permutation)>) -> Result<Self> {
        for (name, g) in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidInput(format!(
                    "generator {name} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        Ok(PermGroup { degree, generators })
    }

    /// Generators named `g0, g1, ..` in the given order.
    pub fn from_perms(degree: usize, perms: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let generators = perms
            .into_iter()
            .enumerate()
            .map(|(i, p)| (format!("g{i}"), p))
            .collect();
        PermGroup::new(degree, generators)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[(String, Permutation)] {
        &self.generators
    }

    pub fn perms(&self) -> impl Iterator<Item = &Permutation> {
        self.generators.iter().map(|(_, p)| p)
    }
}

/// A fully enumerated finite permutation group.
///
/// Elements are kept in BFS order from the identity (word length, then
/// generator order), so `elements()[0]` is always the identity.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl EnumeratedGroup {
    pub fn trivial(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        EnumeratedGroup {
            degree,
            index: HashMap::from([(id.clone(), 0)]),
            elements: vec![id],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn is_subset_of(&self, other: &EnumeratedGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    pub fn same_elements(&self, other: &EnumeratedGroup) -> bool {
        self.order() == other.order() && self.is_subset_of(other)
    }

    /// First pair `(h, n)` with `h^-1 n h` outside `self`, for `n` in `self`
    /// and `h` among `conjugators`.
    pub fn normality_witness<'a>(
        &self,
        conjugators: impl IntoIterator<Item = &'a Permutation>,
    ) -> Option<(Permutation, Permutation)> {
        for h in conjugators {
            for n in &self.elements {
                if !self.contains(&n.conjugate_by(h)) {
                    return Some((h.clone(), n.clone()));
                }
            }
        }
        None
    }

    /// Closure of `generators` inside the symmetric group of this degree.
    pub fn generated_by(
        degree: usize,
        generators: impl IntoIterator<Item = Permutation>,
        bound: usize,
    ) -> Result<EnumeratedGroup> {
        let group = PermGroup::from_perms(degree, generators)?;
        group_closure(&group, bound)
    }
}

/// BFS enumeration of the group generated by `gens`.
///
/// Each layer extends the previous one by the generators in order, then by
/// their inverses in order. Fails once more than `bound` elements are found.
pub fn group_closure(gens: &PermGroup, bound: usize) -> Result<EnumeratedGroup> {
    let mut steps: Vec<Permutation> = gens.perms().cloned().collect();
    steps.extend(gens.perms().map(Permutation::inverse));

    let mut group = EnumeratedGroup::trivial(gens.degree());
    if bound == 0 {
        return Err(Error::BoundExceeded { bound });
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in &steps {
            let next = group.elements[i].then(s);
            if group.index.contains_key(&next) {
                continue;
            }
            if group.elements.len() >= bound {
                return Err(Error::BoundExceeded { bound });
            }
            group.index.insert(next.clone(), group.elements.len());
            queue.push_back(group.elements.len());
            group.elements.push(next);
        }
    }
    Ok(group)
}

/// Orbits of the group generated by `gens` on `domain`.
///
/// Orbits are sorted internally and listed by their smallest point. Points
/// reached outside `domain` are still followed, so `domain` should be
/// invariant for the output to be a partition of it.
pub fn orbits(gens: &[Permutation], domain: &[usize]) -> Vec<Vec<usize>> {
    let degree = gens
        .iter()
        .map(Permutation::degree)
        .chain(domain.iter().map(|&x| x + 1))
        .max()
        .unwrap_or(0);
    let mut label: Vec<Option<usize>> = vec![None; degree];
    let mut result: Vec<Vec<usize>> = Vec::new();
    let mut sorted_domain = domain.to_vec();
    sorted_domain.sort_unstable();
    sorted_domain.dedup();
    for &start in &sorted_domain {
        if label[start].is_some() {
            continue;
        }
        let id = result.len();
        let mut orbit = vec![start];
        label[start] = Some(id);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                for y in [g.apply(x), g.inverse().apply(x)] {
                    if label[y].is_none() {
                        label[y] = Some(id);
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        orbit.sort_unstable();
        result.push(orbit);
    }
    result
}

/// True iff no non-identity element of `group` fixes a point of `orbit`.
pub fn is_free_action(group: &EnumeratedGroup, orbit: &[usize]) -> bool {
    group
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .all(|g| orbit.iter().all(|&x| !g.fixes(x)))
}

/// The smallest normal subgroup of `group` containing `g`.
pub fn normal_closure(group: &EnumeratedGroup, g: &Permutation, bound: usize) -> Result<EnumeratedGroup> {
    if !group.contains(g) {
        return Err(Error::InvalidInput(format!("{g} is not an element of the group")));
    }
    let mut conjugates: Vec<Permutation> = group.elements().iter().map(|h| g.conjugate_by(h)).collect();
    conjugates.sort();
    conjugates.dedup();
    conjugates.retain(|c| !c.is_identity());
    EnumeratedGroup::generated_by(group.degree(), conjugates, bound)
}

/// `[G, G]`, generated by all commutators of pairs of elements.
pub fn commutator_subgroup(group: &EnumeratedGroup) -> Result<EnumeratedGroup> {
    let mut commutators: Vec<Permutation> = Vec::new();
    for a in group.elements() {
        for b in group.elements() {
            commutators.push(Permutation::commutator(a, b));
        }
    }
    commutators.sort();
    commutators.dedup();
    commutators.retain(|c| !c.is_identity());
    // the commutator subgroup never exceeds the parent group
    EnumeratedGroup::generated_by(group.degree(), commutators, group.order())
}

/// Invariant factors `n_1 | n_2 | ..` of `G / [G, G]`, in increasing order.
///
/// The abelian quotient is enumerated coset by coset; its factors are read
/// off from the sizes of the `p^k`-torsion subgroups.
pub fn abelianization_invariants(group: &EnumeratedGroup) -> Result<Vec<u64>> {
    let derived = commutator_subgroup(group)?;
    let quotient_order = group.order() / derived.order();
    if quotient_order == 1 {
        return Ok(Vec::new());
    }

    // order of each coset gN in the quotient
    let mut coset_of: Vec<Option<usize>> = vec![None; group.order()];
    let mut coset_orders: Vec<u64> = Vec::new();
    for (i, g) in group.elements().iter().enumerate() {
        if coset_of[i].is_some() {
            continue;
        }
        let id = coset_orders.len();
        for n in derived.elements() {
            let member = n.then(g);
            let j = group.position(&member).expect("coset member lies in the group");
            coset_of[j] = Some(id);
        }
        let mut k = 1u64;
        let mut power = g.clone();
        while !derived.contains(&power) {
            power = power.then(g);
            k += 1;
        }
        coset_orders.push(k);
    }
    debug_assert_eq!(coset_orders.len(), quotient_order);

    let torsion = |d: u64| coset_orders.iter().filter(|&&o| d.is_multiple_of(o)).count() as u64;

    let mut primary: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    let mut m = quotient_order as u64;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            // rank[k] = log_p |A[p^k]|
            let mut ranks = vec![0u32];
            for k in 1..=e {
                let size = torsion(p.pow(k));
                ranks.push(ilog(size, p));
            }
            let at_least: Vec<u32> = (1..=e as usize).map(|k| ranks[k] - ranks[k - 1]).collect();
            let mut powers = Vec::new();
            for k in 1..=e as usize {
                let next = at_least.get(k).copied().unwrap_or(0);
                for _ in 0..(at_least[k - 1] - next) {
                    powers.push(p.pow(k as u32));
                }
            }
            powers.sort_unstable_by(|a, b| b.cmp(a));
            primary.insert(p, powers);
        }
        p += 1;
    }

    let count = primary.values().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..count)
        .map(|i| primary.values().map(|powers| powers.get(i).copied().unwrap_or(1)).product())
        .collect();
    factors.sort_unstable();
    Ok(factors)
}

fn ilog(mut value: u64, base: u64) -> u32 {
    let mut k = 0;
    while value > 1 {
        debug_assert_eq!(value % base, 0);
        value /= base;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric3() -> EnumeratedGroup {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        EnumeratedGroup::generated_by(3, [a, b], 100).unwrap()
    }

    fn alternating4() -> EnumeratedGroup {
        let a = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        EnumeratedGroup::generated_by(4, [a, b], 100).unwrap()
    }

    fn klein4() -> EnumeratedGroup {
        let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        EnumeratedGroup::generated_by(4, [a, b], 100).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(symmetric3().order(), 6);
        assert_eq!(alternating4().order(), 12);
        assert_eq!(klein4().order(), 4);
        let trivial = PermGroup::from_perms(5, [Permutation::identity(5)]).unwrap();
        assert_eq!(group_closure(&trivial, 10).unwrap().order(), 1);
    }

    #[test]
    fn closure_is_bfs_ordered() {
        let g = symmetric3();
        assert!(g.elements()[0].is_identity());
        // layer one holds the two generators and the inverse of the 3-cycle
        assert_eq!(g.elements()[1], Permutation::from_cycles(3, &[&[0, 1]]).unwrap());
        assert_eq!(g.elements()[2], Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap());
    }

    #[test]
    fn closure_respects_bound() {
        let a = Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let gens = PermGroup::from_perms(5, [a, b]).unwrap();
        assert_eq!(group_closure(&gens, 119).unwrap_err(), Error::BoundExceeded { bound: 119 });
        assert_eq!(group_closure(&gens, 120).unwrap().order(), 120);
    }

    #[test]
    fn normal_closures() {
        let a4 = alternating4();
        let v = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let n = normal_closure(&a4, &v, 100).unwrap();
        assert!(n.same_elements(&klein4()));

        let s3 = symmetric3();
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert_eq!(normal_closure(&s3, &t, 100).unwrap().order(), 6);
        assert_eq!(normal_closure(&s3, &Permutation::identity(3), 100).unwrap().order(), 1);
    }

    #[test]
    fn commutator_subgroups() {
        assert_eq!(commutator_subgroup(&symmetric3()).unwrap().order(), 3);
        assert_eq!(commutator_subgroup(&klein4()).unwrap().order(), 1);
        let d = commutator_subgroup(&alternating4()).unwrap();
        assert!(d.same_elements(&klein4()));
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelianization_invariants(&symmetric3()).unwrap(), vec![2]);
        assert_eq!(abelianization_invariants(&klein4()).unwrap(), vec![2, 2]);
        assert_eq!(abelianization_invariants(&EnumeratedGroup::trivial(3)).unwrap(), Vec::<u64>::new());
        assert_eq!(abelianization_invariants(&alternating4()).unwrap(), vec![3]);
        // Z/2 x Z/4 generated by disjoint cycles
        let a = Permutation::from_cycles(6, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(6, &[&[2, 3, 4, 5]]).unwrap();
        let g = EnumeratedGroup::generated_by(6, [a.clone(), b.clone()], 100).unwrap();
        assert_eq!(abelianization_invariants(&g).unwrap(), vec![2, 4]);
        // Z/2 x Z/3 is cyclic of order 6
        let c = Permutation::from_cycles(6, &[&[2, 3, 4]]).unwrap();
        let g = EnumeratedGroup::generated_by(6, [a, c], 100).unwrap();
        assert_eq!(abelianization_invariants(&g).unwrap(), vec![6]);
    }

    #[test]
    fn orbit_partition() {
        let r = Permutation::new(vec![2, 3, 0, 1]).unwrap();
        assert_eq!(orbits(&[r], &[0, 1, 2, 3]), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(orbits(&[], &[0, 1]), vec![vec![0], vec![1]]);
    }

    #[test]
    fn free_actions() {
        let plus2 = Permutation::new(vec![2, 3, 0, 1]).unwrap();
        let g = EnumeratedGroup::generated_by(4, [plus2], 10).unwrap();
        assert!(is_free_action(&g, &[0, 2]));
        let s3 = symmetric3();
        assert!(!is_free_action(&s3, &[0, 1, 2]));
        let rot = Permutation::new(vec![1, 2, 0]).unwrap();
        let c3 = EnumeratedGroup::generated_by(3, [rot], 10).unwrap();
        assert!(is_free_action(&c3, &[0, 1, 2]));
    }
}
