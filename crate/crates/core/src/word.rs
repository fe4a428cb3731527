//! Words in the free group on `a`, `b`, `c`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::Bridge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    A,
    B,
    C,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::A, Generator::B, Generator::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        Generator::ALL[i]
    }

    pub fn of_bridge(b: Bridge) -> Generator {
        Generator::from_index(b.index())
    }

    pub fn name(self) -> char {
        ['a', 'b', 'c'][self.index()]
    }

    /// Name as a variable of `w(x, y, z)`.
    pub fn variable(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    fn from_char(c: char) -> Option<Generator> {
        match c {
            'a' | 'x' => Some(Generator::A),
            'b' | 'y' => Some(Generator::B),
            'c' | 'z' => Some(Generator::C),
            _ => None,
        }
    }

    /// The cyclic substitution `a → b → c → a`.
    pub fn next(self) -> Generator {
        Generator::from_index((self.index() + 1) % 3)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: Generator,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: Generator, exp: i8) -> Letter {
        assert!(exp == 1 || exp == -1, "letter exponent must be ±1");
        Letter { gen, exp }
    }

    pub fn pos(gen: Generator) -> Letter {
        Letter { gen, exp: 1 }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            exp: -self.exp,
        }
    }

    pub fn is_positive(self) -> bool {
        self.exp > 0
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, name: char) -> fmt::Result {
        if self.exp < 0 {
            write!(f, "{name}^-1")
        } else {
            write!(f, "{name}")
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, self.gen.name())
    }
}

/// A word, stored exactly as generated; see [`Word::free_reduce`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Inverts every letter, keeping the order.
    pub fn mirror(&self) -> Word {
        Word(self.0.iter().map(|l| l.inverse()).collect())
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Freely and cyclically reduced form.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.free_reduce().0;
        while w.len() >= 2 && w[0] == w[w.len() - 1].inverse() {
            w.pop();
            w.remove(0);
        }
        Word(w)
    }

    pub fn exponent_sum(&self, gen: Generator) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.exp as i64)
            .sum()
    }

    pub fn total_exponent(&self) -> i64 {
        self.0.iter().map(|l| l.exp as i64).sum()
    }

    /// `[e_a, e_b, e_c]`.
    pub fn abelianize(&self) -> [i64; 3] {
        Generator::ALL.map(|g| self.exponent_sum(g))
    }

    /// Renames generators by `map[g.index()]`.
    pub fn substitute(&self, map: &[Generator; 3]) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter {
                    gen: map[l.gen.index()],
                    exp: l.exp,
                })
                .collect(),
        )
    }

    /// `w(x, y, z) ↦ w(y, z, x)`.
    pub fn cyclic_shift(&self) -> Word {
        self.substitute(&[Generator::B, Generator::C, Generator::A])
    }

    pub fn power(&self, k: usize) -> Word {
        Word(self.0.iter().copied().cycle().take(self.0.len() * k).collect())
    }

    /// Written with the variables `x, y, z` in place of `a, b, c`.
    pub fn in_variables(&self) -> impl fmt::Display + '_ {
        VariableWord(self)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            l.write_with(f, l.gen.name())?;
        }
        Ok(())
    }
}

struct VariableWord<'a>(&'a Word);

impl fmt::Display for VariableWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in self.0.letters() {
            l.write_with(f, l.gen.variable())?;
        }
        Ok(())
    }
}

/// Parses `a b^-1 c`, `ab^-1c`, `ab'c` or the same with `x, y, z`; `1` is
/// the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Word> {
        let err = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        if trimmed == "1" || trimmed.is_empty() {
            return Ok(Word::new());
        }
        let mut out = Vec::new();
        let mut rest = trimmed;
        while let Some(c) = rest.chars().next() {
            if c.is_whitespace() || c == '*' {
                rest = &rest[c.len_utf8()..];
                continue;
            }
            let gen = Generator::from_char(c).ok_or_else(|| err("unknown generator"))?;
            rest = &rest[1..];
            let mut exp = 1;
            if let Some(r) = rest.strip_prefix("^-1") {
                exp = -1;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('\'') {
                exp = -1;
                rest = r;
            } else if let Some(r) = rest.strip_prefix("⁻¹") {
                exp = -1;
                rest = r;
            } else if let Some(r) = rest.strip_prefix("^1") {
                rest = r;
            }
            out.push(Letter { gen, exp });
        }
        Ok(Word(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("b c^-1 a").to_string(), "bc^-1a");
        assert_eq!(w("bc'a"), w("b c^-1 a"));
        assert_eq!(w("yz⁻¹y⁻¹z"), w("bc^-1b^-1c"));
        assert_eq!(w("bc^-1b^-1c").in_variables().to_string(), "yz^-1y^-1z");
        assert_eq!(w("1"), Word::new());
        assert!("ad".parse::<Word>().is_err());
    }

    #[test]
    fn reduction() {
        assert_eq!(w("a b b^-1 a^-1 c"), w("a b b^-1 a^-1 c"));
        assert_eq!(w("a b b^-1 a^-1 c").free_reduce(), w("c"));
        assert_eq!(w("a^-1 b c a").cyclic_reduce(), w("b c"));
        assert_eq!(w("a b a^-1").exponent_sum(Generator::A), 0);
        assert_eq!(w("a b c").cyclic_shift(), w("b c a"));
        assert_eq!(w("zyx").power(2), w("zyxzyx"));
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..3, prop::bool::ANY), 0..30).prop_map(|v| {
            v.into_iter()
                .map(|(g, neg)| Letter::new(Generator::from_index(g), if neg { -1 } else { 1 }))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(x in arb_word()) {
            prop_assert!(x.concat(&x.inverse()).free_reduce().is_empty());
            prop_assert_eq!(x.inverse().inverse(), x.clone());
        }

        #[test]
        fn reduction_keeps_abelianization(x in arb_word()) {
            let r = x.free_reduce();
            prop_assert_eq!(r.abelianize(), x.abelianize());
            prop_assert_eq!(r.free_reduce(), r.clone());
        }

        #[test]
        fn display_round_trips(x in arb_word()) {
            prop_assert_eq!(x.to_string().parse::<Word>().unwrap(), x);
        }
    }
}
