//! Labeled balls in Schreier graphs of group actions, with path metrics,
//! end counts, forest checks and bi-Lipschitz comparisons.

mod export;
mod metric;

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::families::QuandleBackend;
use crate::repr::{Automorphism, Element};

pub use export::{parse_json_lines, to_dot, to_json_lines, BallRecord};
pub use metric::{
    bilipschitz_compare, ends_estimate, lipschitz_constant, loopless_forest_check, qi_embedding_check,
    same_component_in_ball, BallDistance, BilipschitzOutcome, Membership, QIWitness, QiOutcome,
};

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

/// A named automorphism with its cached inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub forward: Automorphism,
    pub inverse: Automorphism,
    pub involution: bool,
}

/// Finite generating set, ordered by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<(String, Automorphism)>) -> Result<Self> {
        let mut gens: Vec<Generator> = gens
            .into_iter()
            .map(|(name, forward)| {
                let inverse = forward.inverse();
                let involution = inverse == forward;
                Generator {
                    name,
                    forward,
                    inverse,
                    involution,
                }
            })
            .collect();
        gens.sort_by(|a, b| a.name.cmp(&b.name));
        if let Some(w) = gens.windows(2).find(|w| w[0].name == w[1].name) {
            return Err(Error::DuplicateGenerator(w[0].name.clone()));
        }
        if let Some(first) = gens.first() {
            for g in &gens[1..] {
                first.forward.then(&g.forward)?;
            }
        }
        Ok(GeneratorSet { gens })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.iter()
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Generator> {
        self.gens.iter().find(|g| g.name == name)
    }

    /// `(name, automorphism)` pairs, as consumed by `word_length`.
    pub fn pairs(&self) -> Vec<(String, Automorphism)> {
        self.gens.iter().map(|g| (g.name.clone(), g.forward.clone())).collect()
    }

    /// Traversal steps: each generator, then its inverse unless it is an
    /// involution. Both carry the generator's name.
    pub fn steps(&self) -> Vec<(&str, &Automorphism)> {
        let mut out = Vec::with_capacity(2 * self.gens.len());
        for g in &self.gens {
            out.push((g.name.as_str(), &g.forward));
            if !g.involution {
                out.push((g.name.as_str(), &g.inverse));
            }
        }
        out
    }
}

/// A right action whose points have canonical string keys.
pub trait Action {
    type Point: Clone;

    fn id(&self) -> String;

    fn act(&self, point: &Self::Point, g: &Automorphism) -> Result<Self::Point>;

    fn key(&self, point: &Self::Point) -> String;
}

/// The action of a backend's automorphisms on its elements.
pub struct QuandleAction<'a> {
    pub backend: &'a dyn QuandleBackend,
}

impl<'a> QuandleAction<'a> {
    pub fn new(backend: &'a dyn QuandleBackend) -> Self {
        QuandleAction { backend }
    }
}

impl Action for QuandleAction<'_> {
    type Point = Element;

    fn id(&self) -> String {
        self.backend.id()
    }

    fn act(&self, point: &Element, g: &Automorphism) -> Result<Element> {
        g.apply(point)
    }

    fn key(&self, point: &Element) -> String {
        point.to_string()
    }
}

/// A group acting on itself by right multiplication, giving Cayley graphs.
pub struct CayleyAction;

impl Action for CayleyAction {
    type Point = Automorphism;

    fn id(&self) -> String {
        "cayley".into()
    }

    fn act(&self, point: &Automorphism, g: &Automorphism) -> Result<Automorphism> {
        point.then(g)
    }

    fn key(&self, point: &Automorphism) -> String {
        point.to_string()
    }
}

/// An edge between vertex indices `a <= b`, labeled by a generator name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub generator: String,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

/// The radius-`R` ball around a basepoint in a Schreier graph.
///
/// Vertices are stored in BFS order (generator names break ties), so index 0
/// is the basepoint. Every generator edge between two discovered vertices is
/// present, self-loops included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledBall {
    pub(crate) backend: String,
    pub(crate) radius: usize,
    pub(crate) generators: Vec<String>,
    pub(crate) keys: Vec<String>,
    pub(crate) dist: Vec<usize>,
    pub(crate) index: HashMap<String, usize>,
    pub(crate) edges: Vec<Edge>,
    pub(crate) adjacency: Vec<Vec<usize>>,
    pub(crate) complete: bool,
}

impl LabeledBall {
    pub(crate) fn assemble(
        backend: String,
        radius: usize,
        generators: Vec<String>,
        vertices: Vec<(String, usize)>,
        edges: BTreeSet<Edge>,
        complete: bool,
    ) -> Self {
        let (keys, dist): (Vec<String>, Vec<usize>) = vertices.into_iter().unzip();
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let mut adjacency = vec![Vec::new(); keys.len()];
        for e in edges.iter().filter(|e| !e.is_loop()) {
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        LabeledBall {
            backend,
            radius,
            generators,
            keys,
            dist,
            index,
            edges: edges.into_iter().collect(),
            adjacency,
            complete,
        }
    }

    pub fn backend(&self) -> &str {
        &self.backend
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn basepoint(&self) -> &str {
        &self.keys[0]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// True when exploration exhausted the component, so the ball is the
    /// whole component and every in-ball distance is exact.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn keys(&self) -> &[String] {
        &self.keys
    }

    /// `(key, distance from the basepoint)` in BFS order.
    pub fn vertices(&self) -> impl Iterator<Item = (&str, usize)> {
        self.keys.iter().map(String::as_str).zip(self.dist.iter().copied())
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn key(&self, i: usize) -> &str {
        &self.keys[i]
    }

    pub fn index_of(&self, key: &str) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn depth(&self, key: &str) -> Option<usize> {
        self.index_of(key).map(|i| self.dist[i])
    }

    pub fn depth_of(&self, i: usize) -> usize {
        self.dist[i]
    }

    /// Distinct non-loop neighbours of vertex `i`.
    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Number of vertices at each distance `0..=radius`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.radius + 1];
        for &d in &self.dist {
            out[d] += 1;
        }
        out
    }

    /// In-ball path distances from vertex `i` (loops ignored).
    pub fn distances_from(&self, i: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; self.len()];
        out[i] = Some(0);
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            let du = out[u].expect("queued vertices have distances");
            for &v in &self.adjacency[u] {
                if out[v].is_none() {
                    out[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        out
    }

    /// Whether an in-ball distance `d` between vertices `i` and `j` is the
    /// true graph distance.
    ///
    /// A path of length at most `d` between them never leaves the ball when
    /// `d(i) + d(j) + d <= 2R + 1`, since every vertex on it is within
    /// `floor((d(i) + d(j) + d) / 2)` of the basepoint.
    pub fn certifies(&self, i: usize, j: usize, d: usize) -> bool {
        self.complete || self.dist[i] + self.dist[j] + d <= 2 * self.radius + 1
    }
}

/// Explores the ball of radius `radius` around `base`, also returning the
/// points in vertex order.
pub fn explore<A: Action>(
    action: &A,
    gens: &GeneratorSet,
    base: A::Point,
    radius: usize,
    cap: usize,
) -> Result<(LabeledBall, Vec<A::Point>)> {
    if cap == 0 {
        return Err(Error::VertexCap { cap });
    }
    let steps = gens.steps();
    let mut points = vec![base.clone()];
    let mut vertices = vec![(action.key(&base), 0usize)];
    let mut index: HashMap<String, usize> = HashMap::from([(vertices[0].0.clone(), 0)]);
    let mut edges = BTreeSet::new();
    let mut complete = true;
    let mut head = 0;
    while head < points.len() {
        let u = head;
        head += 1;
        let du = vertices[u].1;
        for &(name, g) in &steps {
            let image = action.act(&points[u], g)?;
            let key = action.key(&image);
            let v = match index.get(&key) {
                Some(&v) => v,
                None if du < radius => {
                    if points.len() >= cap {
                        return Err(Error::VertexCap { cap });
                    }
                    let v = points.len();
                    index.insert(key.clone(), v);
                    vertices.push((key, du + 1));
                    points.push(image);
                    v
                }
                None => {
                    complete = false;
                    continue;
                }
            };
            edges.insert(Edge {
                a: u.min(v),
                b: u.max(v),
                generator: name.to_string(),
            });
        }
    }
    let ball = LabeledBall::assemble(action.id(), radius, gens.names(), vertices, edges, complete);
    Ok((ball, points))
}

/// The labeled ball of radius `radius` around `base`.
pub fn build_ball<A: Action>(
    action: &A,
    gens: &GeneratorSet,
    base: A::Point,
    radius: usize,
    cap: usize,
) -> Result<LabeledBall> {
    explore(action, gens, base, radius, cap).map(|(ball, _)| ball)
}

/// Shorthand for a ball of a backend's own action.
pub fn quandle_ball(
    backend: &dyn QuandleBackend,
    gens: &GeneratorSet,
    base: &Element,
    radius: usize,
    cap: usize,
) -> Result<LabeledBall> {
    build_ball(&QuandleAction::new(backend), gens, base.clone(), radius, cap)
}

/// In-ball distance with its certification status.
pub fn distance(ball: &LabeledBall, x: &str, y: &str) -> BallDistance {
    metric::distance(ball, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{dihedral_quandle, DihedralOrder};

    #[test]
    fn r_inf_inner_radius_two() {
        let r = dihedral_quandle(DihedralOrder::Infinite).unwrap();
        let gens = r.inner_generators().unwrap();
        let ball = quandle_ball(r.as_ref(), &gens, &Element::Int(0), 2, DEFAULT_VERTEX_CAP).unwrap();
        let v: Vec<(&str, usize)> = ball.vertices().collect();
        assert_eq!(v, vec![("0", 0), ("2", 1), ("-2", 2)]);
        assert!(ball.edges().iter().any(|e| e.is_loop() && e.a == 0 && e.generator == "s_0"));
        assert!(!ball.is_complete());
    }

    #[test]
    fn radius_zero() {
        let r = dihedral_quandle(DihedralOrder::Infinite).unwrap();
        let gens = r.inner_generators().unwrap();
        let ball = quandle_ball(r.as_ref(), &gens, &Element::Int(5), 0, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(ball.len(), 1);
        assert_eq!(ball.depth("5"), Some(0));
    }

    #[test]
    fn displacement_line() {
        let r = dihedral_quandle(DihedralOrder::Infinite).unwrap();
        let gens = r.displacement_generators().unwrap().unwrap();
        let ball = quandle_ball(r.as_ref(), &gens, &Element::Int(0), 3, DEFAULT_VERTEX_CAP).unwrap();
        for k in -3i64..=3 {
            assert_eq!(ball.depth(&(2 * k).to_string()), Some(k.unsigned_abs() as usize));
        }
        assert_eq!(ball.len(), 7);
    }

    #[test]
    fn cap_is_enforced() {
        let r = dihedral_quandle(DihedralOrder::Infinite).unwrap();
        let gens = r.inner_generators().unwrap();
        let err = quandle_ball(r.as_ref(), &gens, &Element::Int(0), 10, 5).unwrap_err();
        assert_eq!(err, Error::VertexCap { cap: 5 });
    }

    #[test]
    fn duplicate_names_rejected() {
        let s = Automorphism::Signed(crate::families::SignedAffine::new(-1, 0));
        let err = GeneratorSet::new(vec![("x".into(), s.clone()), ("x".into(), s)]).unwrap_err();
        assert_eq!(err, Error::DuplicateGenerator("x".into()));
    }
}
