use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::repr::Automorphism;

/// Word length of `target` over the generators and their inverses, found by
/// BFS in the Cayley graph from the identity.
///
/// Returns `Ok(None)` when the length exceeds `max`. Every generator must
/// share the representation family of `target`.
pub fn word_length(gens: &[(String, Automorphism)], target: &Automorphism, max: usize) -> Result<Option<usize>> {
    let identity = target.identity_like();
    let mut steps = Vec::with_capacity(2 * gens.len());
    for (_, g) in gens {
        // surfaces family and ambient mismatches before the search starts
        identity.then(g)?;
        steps.push(g.clone());
        steps.push(g.inverse());
    }
    if *target == identity {
        return Ok(Some(0));
    }
    let mut seen: HashSet<Automorphism> = HashSet::from([identity.clone()]);
    let mut frontier = VecDeque::from([identity]);
    for depth in 1..=max {
        let mut next = VecDeque::new();
        while let Some(h) = frontier.pop_front() {
            for s in &steps {
                let candidate = h.then(s)?;
                if candidate == *target {
                    return Ok(Some(depth));
                }
                if seen.insert(candidate.clone()) {
                    next.push_back(candidate);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(None)
}

/// A quandle word `(..((a ◁^ε1 a1) ◁^ε2 a2)..) ◁^εn an`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleTerm<E> {
    pub base: E,
    pub ops: Vec<(E, i8)>,
}

impl<E> QuandleTerm<E> {
    pub fn new(base: E, ops: Vec<(E, i8)>) -> Result<Self> {
        if ops.iter().any(|(_, e)| *e != 1 && *e != -1) {
            return Err(Error::MalformedExpression("exponents must be +1 or -1".into()));
        }
        Ok(QuandleTerm { base, ops })
    }
}

impl QuandleTerm<String> {
    /// Parses `a*b/c`, where `*` is `◁` and `/` is `◁^-1`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::MalformedExpression("empty expression".into()));
        }
        let mut parts = Vec::new();
        let mut current = String::new();
        let mut pending: i8 = 0;
        for ch in text.chars() {
            match ch {
                '*' | '/' => {
                    parts.push((pending, std::mem::take(&mut current)));
                    pending = if ch == '*' { 1 } else { -1 };
                }
                c if c.is_whitespace() => {}
                c => current.push(c),
            }
        }
        parts.push((pending, current));
        if parts.iter().any(|(_, s)| s.is_empty()) {
            return Err(Error::MalformedExpression(format!("missing operand in `{text}`")));
        }
        let mut iter = parts.into_iter();
        let (_, base) = iter.next().expect("at least one part");
        QuandleTerm::new(base, iter.map(|(e, s)| (s, e)).collect())
    }
}

/// A product `s_{b1}^{e1} s_{b2}^{e2} ..` of point symmetries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryWord<E>(pub Vec<(E, i8)>);

impl<E> SymmetryWord<E> {
    /// Multiplies the factors left to right with `symmetry(b)` giving `s_b`.
    pub fn evaluate(&self, mut symmetry: impl FnMut(&E) -> Result<Automorphism>) -> Result<Automorphism> {
        let mut acc: Option<Automorphism> = None;
        for (b, e) in &self.0 {
            let s = symmetry(b)?;
            let factor = if *e < 0 { s.inverse() } else { s };
            acc = Some(match acc {
                None => factor,
                Some(a) => a.then(&factor)?,
            });
        }
        acc.ok_or_else(|| Error::MalformedExpression("empty symmetry word".into()))
    }
}

/// Rewrites `s_x` for `x = (..(a ◁^ε1 a1)..) ◁^εn an` as
/// `s_an^-εn .. s_a1^-ε1 s_a s_a1^ε1 .. s_an^εn`.
pub fn symmetry_rewrite<E: Clone>(term: &QuandleTerm<E>) -> SymmetryWord<E> {
    let mut word: Vec<(E, i8)> = term.ops.iter().rev().map(|(b, e)| (b.clone(), -e)).collect();
    word.push((term.base.clone(), 1));
    word.extend(term.ops.iter().cloned());
    SymmetryWord(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::SignedAffine;

    fn shift(c: i64) -> Automorphism {
        Automorphism::Signed(SignedAffine::new(1, c))
    }

    #[test]
    fn word_lengths_over_translation() {
        let gens = vec![("u".to_string(), shift(-2))];
        assert_eq!(word_length(&gens, &shift(-6), 10).unwrap(), Some(3));
        assert_eq!(word_length(&gens, &shift(0), 10).unwrap(), Some(0));
        assert_eq!(word_length(&gens, &shift(4), 1).unwrap(), None);
        assert_eq!(word_length(&gens, &shift(4), 2).unwrap(), Some(2));
        // odd shifts are unreachable; the BFS keeps growing until the cap
        assert_eq!(word_length(&gens, &shift(3), 5).unwrap(), None);
    }

    #[test]
    fn word_length_rejects_mixed_families() {
        let gens = vec![("u".to_string(), shift(-2))];
        let target = Automorphism::Perm(crate::algebra::Permutation::identity(3));
        assert!(matches!(word_length(&gens, &target, 3), Err(Error::MixedRepresentation { .. })));
    }

    #[test]
    fn rewrite_single_operation() {
        let term = QuandleTerm::parse("a*b").unwrap();
        let word = symmetry_rewrite(&term);
        assert_eq!(word.0, vec![("b".to_string(), -1), ("a".to_string(), 1), ("b".to_string(), 1)]);
    }

    #[test]
    fn rewrite_bare_generator() {
        let word = symmetry_rewrite(&QuandleTerm::parse("a").unwrap());
        assert_eq!(word.0, vec![("a".to_string(), 1)]);
    }

    #[test]
    fn rewrite_mixed_signs() {
        let word = symmetry_rewrite(&QuandleTerm::parse("a * b / c").unwrap());
        let names: Vec<(&str, i8)> = word.0.iter().map(|(s, e)| (s.as_str(), *e)).collect();
        assert_eq!(names, vec![("c", 1), ("b", -1), ("a", 1), ("b", 1), ("c", -1)]);
    }

    #[test]
    fn empty_expression_is_malformed() {
        assert!(matches!(QuandleTerm::parse("  "), Err(Error::MalformedExpression(_))));
        assert!(matches!(QuandleTerm::parse("a*"), Err(Error::MalformedExpression(_))));
    }
}
