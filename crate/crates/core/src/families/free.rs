//! Free groups and free quandles.
//!
//! Symbols are single alphabetic characters. A word is written as its
//! letters joined by `.`, an inverse letter carrying the suffix `-1`, and the
//! empty word as `1`; so `b.a-1.c` is `b a^-1 c`. A free-quandle element
//! `a^w` is written `a^<word>`, e.g. `a^1` or `a^b.a-1`.

use std::fmt;

use super::QuandleBackend;
use crate::error::{Error, Result};
use crate::repr::{Automorphism, Element};
use crate::schreier::GeneratorSet;

/// A freely reduced word; letters are `(symbol, ±1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<(char, i8)>,
}

/// Free reduction of `raw` over `alphabet`.
pub fn free_reduce(raw: &[(char, i8)], alphabet: &[char]) -> Result<ReducedWord> {
    let mut letters: Vec<(char, i8)> = Vec::with_capacity(raw.len());
    for &(symbol, exponent) in raw {
        if !alphabet.contains(&symbol) {
            return Err(Error::UnknownSymbol(symbol.to_string()));
        }
        if exponent != 1 && exponent != -1 {
            return Err(Error::MalformedExpression(format!("exponent {exponent} on {symbol}")));
        }
        push_reducing(&mut letters, (symbol, exponent));
    }
    Ok(ReducedWord { letters })
}

fn push_reducing(letters: &mut Vec<(char, i8)>, letter: (char, i8)) {
    match letters.last() {
        Some(&(s, e)) if s == letter.0 && e == -letter.1 => {
            letters.pop();
        }
        _ => letters.push(letter),
    }
}

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord { letters: Vec::new() }
    }

    pub fn letter(symbol: char, exponent: i8) -> Self {
        ReducedWord {
            letters: vec![(symbol, exponent)],
        }
    }

    pub fn letters(&self) -> &[(char, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &ReducedWord) -> ReducedWord {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reducing(&mut letters, l);
        }
        ReducedWord { letters }
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord {
            letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect(),
        }
    }

    /// Parses the `.`-separated notation; `1` or the empty string is the
    /// identity.
    pub fn parse(text: &str, alphabet: &[char]) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(ReducedWord::empty());
        }
        let mut raw = Vec::new();
        for token in text.split('.') {
            let (sym, exp) = match token.strip_suffix("-1") {
                Some(s) => (s, -1),
                None => (token, 1),
            };
            let mut chars = sym.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => raw.push((c, exp)),
                _ => return Err(Error::ParseElement(text.to_string())),
            }
        }
        free_reduce(&raw, alphabet)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &(s, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{s}")?;
            if e < 0 {
                write!(f, "-1")?;
            }
        }
        Ok(())
    }
}

/// The class `a^w` of `(a, w)` under `(a, w) ~ (a, a^n w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeQuandleElement {
    base: char,
    tail: ReducedWord,
}

/// Canonical form of `a^w`: strips the maximal leading power of the base
/// from `w`.
pub fn fq_normalize(base: char, tail: ReducedWord) -> FreeQuandleElement {
    let strip = tail.letters.iter().take_while(|(s, _)| *s == base).count();
    let tail = if strip == 0 {
        tail
    } else {
        ReducedWord {
            letters: tail.letters[strip..].to_vec(),
        }
    };
    FreeQuandleElement { base, tail }
}

/// `a^w ◁^ε b^v = a^{w v^-1 b^ε v}`.
pub fn fq_op(x: &FreeQuandleElement, y: &FreeQuandleElement, exponent: i8) -> FreeQuandleElement {
    x.right_multiply(&y.conjugator(exponent))
}

impl FreeQuandleElement {
    pub fn generator(base: char) -> Self {
        FreeQuandleElement {
            base,
            tail: ReducedWord::empty(),
        }
    }

    pub fn base(&self) -> char {
        self.base
    }

    pub fn tail(&self) -> &ReducedWord {
        &self.tail
    }

    /// `a^w · u = a^{wu}`.
    pub fn right_multiply(&self, u: &ReducedWord) -> FreeQuandleElement {
        fq_normalize(self.base, self.tail.mul(u))
    }

    /// `v^-1 b^ε v` for `self = b^v`: the free-group word by which `s_self^ε`
    /// multiplies tails.
    pub fn conjugator(&self, exponent: i8) -> ReducedWord {
        self.tail
            .inverse()
            .mul(&ReducedWord::letter(self.base, exponent))
            .mul(&self.tail)
    }

    pub fn parse(text: &str, alphabet: &[char]) -> Result<Self> {
        let text = text.trim();
        let (base, tail) = text.split_once('^').unwrap_or((text, "1"));
        let mut chars = base.chars();
        let base = match (chars.next(), chars.next()) {
            (Some(c), None) if alphabet.contains(&c) => c,
            (Some(c), None) => return Err(Error::UnknownSymbol(c.to_string())),
            _ => return Err(Error::ParseElement(text.to_string())),
        };
        Ok(fq_normalize(base, ReducedWord::parse(tail, alphabet)?))
    }
}

impl fmt::Display for FreeQuandleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.base, self.tail)
    }
}

/// The free quandle `FQ[A]` on a finite alphabet.
#[derive(Clone, Debug)]
pub struct FreeQuandle {
    alphabet: Vec<char>,
}

impl FreeQuandle {
    pub fn new(alphabet: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut alphabet: Vec<char> = alphabet.into_iter().collect();
        alphabet.sort_unstable();
        alphabet.dedup();
        if alphabet.is_empty() {
            return Err(Error::InvalidInput("alphabet is empty".into()));
        }
        if let Some(c) = alphabet.iter().find(|c| !c.is_alphabetic()) {
            return Err(Error::InvalidInput(format!("symbol `{c}` is not a letter")));
        }
        Ok(FreeQuandle { alphabet })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    fn element<'a>(&self, x: &'a Element) -> Result<&'a FreeQuandleElement> {
        match x {
            Element::Free(e) if self.alphabet.contains(&e.base) => Ok(e),
            other => Err(Error::InvalidInput(format!("{other} is not an element of {}", self.id()))),
        }
    }

    /// All reduced words of length exactly `len`, in lexicographic order of
    /// `(symbol, exponent)` letters.
    fn words_of_length(&self, len: usize) -> Vec<ReducedWord> {
        let mut layer = vec![ReducedWord::empty()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &layer {
                for &s in &self.alphabet {
                    for e in [1i8, -1] {
                        if w.letters.last() != Some(&(s, -e)) {
                            let mut letters = w.letters.clone();
                            letters.push((s, e));
                            next.push(ReducedWord { letters });
                        }
                    }
                }
            }
            layer = next;
        }
        layer
    }
}

impl QuandleBackend for FreeQuandle {
    fn id(&self) -> String {
        format!("free({})", self.alphabet.iter().collect::<String>())
    }

    fn operate(&self, x: &Element, y: &Element, exponent: i64) -> Result<Element> {
        let (x, y) = (self.element(x)?, self.element(y)?);
        let mut power = ReducedWord::empty();
        let letter = ReducedWord::letter(y.base, if exponent < 0 { -1 } else { 1 });
        for _ in 0..exponent.unsigned_abs() {
            power = power.mul(&letter);
        }
        let u = y.tail.inverse().mul(&power).mul(&y.tail);
        Ok(Element::Free(x.right_multiply(&u)))
    }

    fn symmetry(&self, y: &Element) -> Result<Automorphism> {
        Ok(Automorphism::Free(self.element(y)?.conjugator(1)))
    }

    fn parse_element(&self, key: &str) -> Result<Element> {
        FreeQuandleElement::parse(key, &self.alphabet).map(Element::Free)
    }

    fn default_base(&self) -> Element {
        Element::Free(FreeQuandleElement::generator(self.alphabet[0]))
    }

    fn inner_generators(&self) -> Result<GeneratorSet> {
        let gens = self
            .alphabet
            .iter()
            .map(|&a| {
                let e = FreeQuandleElement::generator(a);
                (format!("s_{e}"), Automorphism::Free(e.conjugator(1)))
            })
            .collect();
        GeneratorSet::new(gens)
    }

    /// `Dis(FQ[A])` is not finitely generated once `|A| > 1`.
    fn displacement_generators(&self) -> Result<Option<GeneratorSet>> {
        if self.alphabet.len() == 1 {
            return GeneratorSet::new(Vec::new()).map(Some);
        }
        Ok(None)
    }

    fn component_key(&self, x: &Element) -> Result<String> {
        Ok(self.element(x)?.base.to_string())
    }

    /// Every canonical `a^w` with `|w| <= radius`.
    fn window(&self, radius: usize) -> Vec<Element> {
        let mut out = Vec::new();
        for len in 0..=radius {
            for w in self.words_of_length(len) {
                for &a in &self.alphabet {
                    if w.letters.first().map(|l| l.0) != Some(a) {
                        out.push(Element::Free(FreeQuandleElement { base: a, tail: w.clone() }));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AB: [char; 3] = ['a', 'b', 'c'];

    fn word(text: &str) -> ReducedWord {
        ReducedWord::parse(text, &AB).unwrap()
    }

    fn elem(text: &str) -> FreeQuandleElement {
        FreeQuandleElement::parse(text, &AB).unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(free_reduce(&[('a', 1), ('b', 1), ('b', -1)], &AB).unwrap(), word("a"));
        assert!(free_reduce(&[('a', 1), ('a', -1)], &AB).unwrap().is_empty());
        let raw = [('b', -1), ('a', 1), ('a', -1), ('b', 1), ('c', 1)];
        assert_eq!(free_reduce(&raw, &AB).unwrap(), word("c"));
        assert_eq!(free_reduce(&[('z', 1)], &AB).unwrap_err(), Error::UnknownSymbol("z".into()));
    }

    #[test]
    fn normalization_strips_leading_base_power_only() {
        assert_eq!(fq_normalize('a', word("a.a.b")), elem("a^b"));
        assert_eq!(fq_normalize('a', ReducedWord::empty()).to_string(), "a^1");
        assert_eq!(fq_normalize('a', word("a-1.b.a")).to_string(), "a^b.a");
    }

    #[test]
    fn operation() {
        let a = elem("a^1");
        let b = elem("b^1");
        assert_eq!(fq_op(&a, &b, 1), elem("a^b"));
        assert_eq!(fq_op(&a, &a, 1), a);
        assert_eq!(fq_op(&fq_op(&elem("a^b"), &b, 1), &b, -1), elem("a^b"));
        // a^1 ◁ b^c = a^{c^-1 b c}
        assert_eq!(fq_op(&a, &elem("b^c"), 1), elem("a^c-1.b.c"));
    }

    #[test]
    fn display_round_trip() {
        for text in ["a^1", "b^a.c-1", "c^a-1.a-1.b"] {
            assert_eq!(elem(text).to_string(), text);
        }
    }

    #[test]
    fn window_sizes() {
        let fq = FreeQuandle::new(['a', 'b']).unwrap();
        // lengths 0..=2: 2 + 2*2 + 2*6 = 18
        assert_eq!(fq.window(2).len(), 2 + 4 + 12);
    }
}
