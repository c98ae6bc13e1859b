use std::collections::VecDeque;

use serde::Serialize;

use super::{build_ball, Action, GeneratorSet, LabeledBall};
use crate::algebra::word_length;
use crate::error::{Error, Result};

/// A distance read off a finite ball.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BallDistance {
    /// The true graph distance.
    Exact(usize),
    /// The in-ball distance, an upper bound that a geodesic leaving the ball
    /// might beat.
    Uncertified(usize),
    /// An endpoint is undiscovered or not connected inside the ball.
    OutOfBall,
}

impl BallDistance {
    pub fn exact(self) -> Option<usize> {
        match self {
            BallDistance::Exact(d) => Some(d),
            _ => None,
        }
    }
}

pub(super) fn distance(ball: &LabeledBall, x: &str, y: &str) -> BallDistance {
    let (Some(i), Some(j)) = (ball.index_of(x), ball.index_of(y)) else {
        return BallDistance::OutOfBall;
    };
    match ball.distances_from(i)[j] {
        Some(d) if ball.certifies(i, j, d) => BallDistance::Exact(d),
        Some(d) => BallDistance::Uncertified(d),
        None => BallDistance::OutOfBall,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    NoWithinRadius,
}

/// Whether `y` lies in the ball, hence in the basepoint's component.
pub fn same_component_in_ball(ball: &LabeledBall, y: &str) -> Membership {
    if ball.index_of(y).is_some() {
        Membership::Yes
    } else {
        Membership::NoWithinRadius
    }
}

/// Components of the annulus `inner < d <= outer` of the radius-`outer`
/// ball that reach the outer sphere.
pub fn ends_estimate<A: Action>(
    action: &A,
    gens: &GeneratorSet,
    base: A::Point,
    inner: usize,
    outer: usize,
    cap: usize,
) -> Result<usize> {
    if inner >= outer {
        return Err(Error::InvalidInput(format!(
            "inner radius {inner} must be below outer radius {outer}"
        )));
    }
    let ball = build_ball(action, gens, base, outer, cap)?;
    Ok(annulus_ends(&ball, inner))
}

/// The end count of `ball` seen from the annulus outside radius `inner`.
pub fn annulus_ends(ball: &LabeledBall, inner: usize) -> usize {
    let outer = ball.radius();
    let in_annulus = |i: usize| ball.depth_of(i) > inner;
    let mut seen = vec![false; ball.len()];
    let mut count = 0;
    for start in 0..ball.len() {
        if seen[start] || !in_annulus(start) {
            continue;
        }
        seen[start] = true;
        let mut touches = false;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            touches |= ball.depth_of(u) == outer;
            for &v in ball.neighbours(u) {
                if !seen[v] && in_annulus(v) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if touches {
            count += 1;
        }
    }
    count
}

/// After deleting self-loops: no cycles, parallel edges counting as cycles.
pub fn loopless_forest_check(ball: &LabeledBall) -> bool {
    let edges = ball.edges().iter().filter(|e| !e.is_loop()).count();
    let mut seen = vec![false; ball.len()];
    let mut components = 0;
    for start in 0..ball.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in ball.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    edges + components == ball.len()
}

/// `max(1, |s|_T, |t|_S)` over all generators, via word lengths bounded by
/// `max_len`.
pub fn lipschitz_constant(s: &GeneratorSet, t: &GeneratorSet, max_len: usize) -> Result<usize> {
    let mut l = 1;
    for (from, to) in [(s, t), (t, s)] {
        let pairs = to.pairs();
        for g in from.iter() {
            match word_length(&pairs, &g.forward, max_len)? {
                Some(n) => l = l.max(n),
                None => {
                    return Err(Error::Inconclusive(format!(
                        "generator {} has no word of length <= {max_len} in the other set",
                        g.name
                    )))
                }
            }
        }
    }
    Ok(l)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BilipschitzWitness {
    pub x: String,
    pub y: String,
    pub d_s: usize,
    pub d_t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BilipschitzOutcome {
    pub pass: bool,
    pub constant: usize,
    pub pairs_checked: usize,
    pub witness: Option<BilipschitzWitness>,
}

/// Checks `d_S <= L d_T` and `d_T <= L d_S` on every unordered pair of
/// distinct vertices certified in both balls. The first violation in vertex
/// order of `ball_s` is the witness.
pub fn bilipschitz_compare(ball_s: &LabeledBall, ball_t: &LabeledBall, l: usize) -> Result<BilipschitzOutcome> {
    if ball_s.basepoint() != ball_t.basepoint() {
        return Err(Error::InvalidInput(format!(
            "balls have different basepoints {} and {}",
            ball_s.basepoint(),
            ball_t.basepoint()
        )));
    }
    let shared: Vec<(usize, usize)> = (0..ball_s.len())
        .filter_map(|i| ball_t.index_of(ball_s.key(i)).map(|j| (i, j)))
        .collect();
    let mut checked = 0;
    for (a, &(si, ti)) in shared.iter().enumerate() {
        let ds = ball_s.distances_from(si);
        let dt = ball_t.distances_from(ti);
        for &(sj, tj) in &shared[a + 1..] {
            let (Some(d_s), Some(d_t)) = (ds[sj], dt[tj]) else {
                continue;
            };
            if !ball_s.certifies(si, sj, d_s) || !ball_t.certifies(ti, tj, d_t) {
                continue;
            }
            checked += 1;
            if d_s > l * d_t || d_t > l * d_s {
                return Ok(BilipschitzOutcome {
                    pass: false,
                    constant: l,
                    pairs_checked: checked,
                    witness: Some(BilipschitzWitness {
                        x: ball_s.key(si).to_string(),
                        y: ball_s.key(sj).to_string(),
                        d_s,
                        d_t,
                    }),
                });
            }
        }
    }
    if checked == 0 {
        return Err(Error::Inconclusive("no pair is certified in both balls".into()));
    }
    Ok(BilipschitzOutcome {
        pass: true,
        constant: l,
        pairs_checked: checked,
        witness: None,
    })
}

/// Constants of a claimed quasi-isometric embedding:
/// `(1/λ) d1 - k <= d2 <= λ d1 + k`, with image `C`-dense.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QIWitness {
    pub lambda: f64,
    pub k: f64,
    pub c: f64,
}

impl QIWitness {
    pub fn new(lambda: f64, k: f64, c: f64) -> Result<Self> {
        if !(lambda >= 1.0 && k >= 0.0 && c >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "quasi-isometry constants need lambda >= 1, k >= 0, C >= 0; got {lambda}, {k}, {c}"
            )));
        }
        Ok(QIWitness { lambda, k, c })
    }

    pub fn isometry() -> Self {
        QIWitness {
            lambda: 1.0,
            k: 0.0,
            c: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QiOutcome {
    pub pass: bool,
    /// Index into the sample of the first violating pair.
    pub violation: Option<usize>,
}

/// Checks both embedding inequalities on samples `(d1, d2)`, where `d1` is
/// the source distance and `d2` the distance between images.
pub fn qi_embedding_check(samples: &[(usize, usize)], witness: QIWitness) -> QiOutcome {
    let violation = samples.iter().position(|&(d1, d2)| {
        let (d1, d2) = (d1 as f64, d2 as f64);
        // (1/λ) d1 - k <= d2, multiplied through by λ
        d1 > witness.lambda * (d2 + witness.k) || d2 > witness.lambda * d1 + witness.k
    });
    QiOutcome {
        pass: violation.is_none(),
        violation,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{quandle_ball, DEFAULT_VERTEX_CAP};
    use super::*;
    use crate::families::{dihedral_quandle, DihedralOrder, FiniteBackend, QuandleBackend};
    use crate::repr::Element;
    use crate::algebra::FiniteQuandle;
    use crate::families::dihedral_table;

    #[test]
    fn r_inf_distances() {
        let r = dihedral_quandle(DihedralOrder::Infinite).unwrap();
        let inner = quandle_ball(r.as_ref(), &r.inner_generators().unwrap(), &Element::Int(0), 6, DEFAULT_VERTEX_CAP)
            .unwrap();
        assert_eq!(distance(&inner, "0", "-2"), BallDistance::Exact(2));
        assert_eq!(distance(&inner, "4", "4"), BallDistance::Exact(0));
        assert_eq!(distance(&inner, "0", "1"), BallDistance::OutOfBall);
        let dis = r.displacement_generators().unwrap().unwrap();
        let line = quandle_ball(r.as_ref(), &dis, &Element::Int(0), 6, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(distance(&line, "0", "-4"), BallDistance::Exact(2));
        assert_eq!(distance(&line, "12", "-12"), BallDistance::Uncertified(12));
    }

    #[test]
    fn cycle_pairs_near_the_rim_are_not_trusted() {
        // R_12 displacement graph is a 6-cycle on the even residues.
        let q = FiniteQuandle::from_table(dihedral_table(12)).unwrap();
        let b = FiniteBackend::new("dihedral(12)", q);
        let u = b.generators_from_names(&["s_1*s_0^-1".to_string()]).unwrap();
        let ball = quandle_ball(&b, &u, &Element::Index(0), 2, DEFAULT_VERTEX_CAP).unwrap();
        // 4 and 8 are 4 apart inside the ball but 2 apart through 6
        assert!(!ball.is_complete());
        assert_eq!(distance(&ball, "2", "10"), BallDistance::Exact(2));
        assert_eq!(distance(&ball, "4", "8"), BallDistance::Uncertified(4));
    }

    #[test]
    fn forest_checks() {
        let q = FiniteQuandle::from_table(dihedral_table(3)).unwrap();
        let b = FiniteBackend::new("dihedral(3)", q);
        let u = b.displacement_generators().unwrap().unwrap();
        let ball = quandle_ball(&b, &u, &Element::Index(0), 3, DEFAULT_VERTEX_CAP).unwrap();
        assert!(!loopless_forest_check(&ball));
        let single = FiniteBackend::new("trivial(1)", FiniteQuandle::trivial(1));
        let s = single.inner_generators().unwrap();
        let ball = quandle_ball(&single, &s, &Element::Index(0), 2, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(ball.edges().len(), 1);
        assert!(loopless_forest_check(&ball));
    }

    #[test]
    fn qi_samples() {
        let doubled: Vec<(usize, usize)> = (0..5).flat_map(|i| (i..5).map(move |j| (j - i, 2 * (j - i)))).collect();
        let out = qi_embedding_check(&doubled, QIWitness::isometry());
        assert!(!out.pass);
        assert_eq!(doubled[out.violation.unwrap()], (1, 2));
        let same: Vec<(usize, usize)> = (0..10).map(|d| (d, d)).collect();
        assert!(qi_embedding_check(&same, QIWitness::isometry()).pass);
        assert!(QIWitness::new(0.5, 0.0, 0.0).is_err());
    }
}
