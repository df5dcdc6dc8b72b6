//! Finite words over the binary alphabet `{a, b}` in run-length form.
//!
//! Every word produced by an upper triangular morphism lies in `a*(ba*)*`,
//! so long `a`-runs are the common case; storing runs keeps the cost of each
//! operation proportional to the number of `b`s rather than the length.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn index(self) -> usize {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }
}

/// A finite word stored as maximal runs `(letter, count)`.
///
/// Adjacent runs always carry distinct letters and every count is at least
/// one, so structural equality is word equality. The empty word has no runs.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    runs: Vec<(Letter, u64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word { runs: Vec::new() }
    }

    /// `letter^count`; `count == 0` gives the empty word.
    pub fn power_of(letter: Letter, count: u64) -> Self {
        let mut w = Word::empty();
        if count > 0 {
            w.runs.push((letter, count));
        }
        w
    }

    pub fn a_pow(count: u64) -> Self {
        Word::power_of(Letter::A, count)
    }

    pub fn b_pow(count: u64) -> Self {
        Word::power_of(Letter::B, count)
    }

    /// Builds a word from arbitrary runs, dropping zero counts and merging
    /// equal neighbours.
    pub fn from_runs<I>(runs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Letter, u64)>,
    {
        let mut w = Word::empty();
        for (letter, count) in runs {
            w.push_run(letter, count)?;
        }
        Ok(w)
    }

    pub fn runs(&self) -> &[(Letter, u64)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn len(&self) -> Result<u64> {
        self.runs
            .iter()
            .try_fold(0u64, |acc, &(_, c)| acc.checked_add(c))
            .ok_or(Error::CountOverflow)
    }

    /// Number of occurrences of `letter`.
    pub fn occ(&self, letter: Letter) -> Result<u64> {
        self.runs
            .iter()
            .filter(|(l, _)| *l == letter)
            .try_fold(0u64, |acc, &(_, c)| acc.checked_add(c))
            .ok_or(Error::CountOverflow)
    }

    /// True when the word lies in `a*` (including ε).
    pub fn in_a_star(&self) -> bool {
        self.runs.iter().all(|(l, _)| *l == Letter::A)
    }

    /// True when the word lies in `b*` (including ε).
    pub fn in_b_star(&self) -> bool {
        self.runs.iter().all(|(l, _)| *l == Letter::B)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.runs.iter().any(|(l, _)| *l == letter)
    }

    pub fn push_run(&mut self, letter: Letter, count: u64) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        match self.runs.last_mut() {
            Some((l, c)) if *l == letter => {
                *c = c.checked_add(count).ok_or(Error::CountOverflow)?;
            }
            _ => self.runs.push((letter, count)),
        }
        Ok(())
    }

    pub fn append(&mut self, other: &Word) -> Result<()> {
        let mut rest = other.runs.iter();
        if let Some(&(letter, count)) = rest.next() {
            self.push_run(letter, count)?;
            self.runs.extend(rest.copied());
        }
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let mut w = self.clone();
        w.append(other)?;
        Ok(w)
    }

    /// `self^k`.
    pub fn pow(&self, k: u64) -> Result<Word> {
        match self.runs.as_slice() {
            [] => Ok(Word::empty()),
            [(letter, count)] => {
                let total = count.checked_mul(k).ok_or(Error::CountOverflow)?;
                Ok(Word::power_of(*letter, total))
            }
            _ => {
                let mut w = Word::empty();
                for _ in 0..k {
                    w.append(self)?;
                }
                Ok(w)
            }
        }
    }

    pub fn is_prefix_of(&self, w: &Word) -> bool {
        let n = self.runs.len();
        if n == 0 {
            return true;
        }
        if n > w.runs.len() || self.runs[..n - 1] != w.runs[..n - 1] {
            return false;
        }
        let (l, c) = self.runs[n - 1];
        let (wl, wc) = w.runs[n - 1];
        l == wl && c <= wc
    }

    /// The first `n` letters (the whole word if it is shorter).
    pub fn prefix(&self, n: u64) -> Word {
        let mut out = Word::empty();
        let mut left = n;
        for &(letter, count) in &self.runs {
            if left == 0 {
                break;
            }
            let take = count.min(left);
            out.runs.push((letter, take));
            left -= take;
        }
        out
    }

    /// Splits `w = a^lead · core · a^trail` where `core` runs from the first
    /// to the last `b`. A `b`-free word yields `(|w|, ε, 0)`.
    pub fn b_core(&self) -> (u64, Word, u64) {
        if !self.contains(Letter::B) {
            let len = self.runs.first().map_or(0, |&(_, c)| c);
            return (len, Word::empty(), 0);
        }
        let mut start = 0;
        let mut end = self.runs.len();
        let mut lead = 0;
        let mut trail = 0;
        if let Some(&(Letter::A, c)) = self.runs.first() {
            lead = c;
            start = 1;
        }
        if let Some(&(Letter::A, c)) = self.runs.last() {
            trail = c;
            end -= 1;
        }
        let core = Word {
            runs: self.runs[start..end].to_vec(),
        };
        (lead, core, trail)
    }

    /// Letter-by-letter expansion. Intended for bounded prefixes.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.runs
            .iter()
            .flat_map(|&(l, c)| std::iter::repeat_n(l, c as usize))
    }
}

/// `u⁻¹w`: the word `v` with `uv = w`.
pub fn strip_quotient(u: &Word, w: &Word) -> Result<Word> {
    if !u.is_prefix_of(w) {
        return Err(Error::NotAPrefix);
    }
    let n = u.runs.len();
    if n == 0 {
        return Ok(w.clone());
    }
    let (letter, wc) = w.runs[n - 1];
    let mut rest = Word::empty();
    rest.push_run(letter, wc - u.runs[n - 1].1)?;
    rest.runs.extend_from_slice(&w.runs[n..]);
    Ok(rest)
}

pub fn concat(u: &Word, v: &Word) -> Result<Word> {
    u.concat(v)
}

pub fn words_commute(u: &Word, v: &Word) -> Result<bool> {
    Ok(u.concat(v)? == v.concat(u)?)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("eps");
        }
        for &(letter, count) in &self.runs {
            let c = letter.as_char();
            for _ in 0..count {
                fmt::Write::write_char(f, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("Word(eps)");
        }
        f.write_str("Word(")?;
        for (i, &(letter, count)) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", letter.as_char(), count)?;
        }
        f.write_str(")")
    }
}

/// Parses a word literal, reporting positions relative to `offset`.
pub(crate) fn parse_word_at(text: &str, offset: usize) -> Result<Word, ParseError> {
    if text == "eps" {
        return Ok(Word::empty());
    }
    if text.is_empty() {
        return Err(ParseError {
            position: offset,
            message: "empty word literal; write `eps` for the empty word".into(),
        });
    }
    let mut w = Word::empty();
    for (i, ch) in text.char_indices() {
        let letter = match ch {
            'a' => Letter::A,
            'b' => Letter::B,
            other => {
                return Err(ParseError {
                    position: offset + i,
                    message: format!("unexpected character {other:?}; expected `a` or `b`"),
                })
            }
        };
        w.push_run(letter, 1).map_err(|_| ParseError {
            position: offset + i,
            message: "run count overflow".into(),
        })?;
    }
    Ok(w)
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word_at(s, 0)
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
    fn concat_examples() {
        assert_eq!(concat(&w("ab"), &w("ba")).unwrap(), w("abba"));
        let aaa = concat(&w("a"), &w("aa")).unwrap();
        assert_eq!(aaa.runs(), &[(Letter::A, 3)]);
        assert_eq!(concat(&Word::empty(), &w("b")).unwrap(), w("b"));
    }

    #[test]
    fn concat_overflow() {
        let big = Word::a_pow(u64::MAX);
        assert_eq!(big.concat(&w("a")), Err(Error::CountOverflow));
        // different letters at the seam do not merge
        assert!(big.concat(&w("b")).is_ok());
        let two = Word::from_runs([(Letter::A, u64::MAX), (Letter::B, 1)]).unwrap();
        assert_eq!(two.len(), Err(Error::CountOverflow));
    }

    #[test]
    fn strip_quotient_examples() {
        assert_eq!(strip_quotient(&w("ba"), &w("baab")).unwrap(), w("ab"));
        assert_eq!(strip_quotient(&Word::empty(), &w("ab")).unwrap(), w("ab"));
        assert_eq!(strip_quotient(&w("b"), &w("ab")), Err(Error::NotAPrefix));
        assert_eq!(strip_quotient(&w("aab"), &w("aab")).unwrap(), Word::empty());
        assert_eq!(strip_quotient(&w("aaa"), &w("aab")), Err(Error::NotAPrefix));
    }

    #[test]
    fn b_core_examples() {
        assert_eq!(w("aabaa").b_core(), (2, w("b"), 2));
        assert_eq!(w("babb").b_core(), (0, w("babb"), 0));
        assert_eq!(w("aaa").b_core(), (3, Word::empty(), 0));
        assert_eq!(Word::empty().b_core(), (0, Word::empty(), 0));
    }

    #[test]
    fn commute_examples() {
        assert!(words_commute(&w("ab"), &w("abab")).unwrap());
        assert!(!words_commute(&w("ab"), &w("ba")).unwrap());
        assert!(words_commute(&Word::empty(), &w("b")).unwrap());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("eps"), Word::empty());
        assert_eq!(Word::empty().to_string(), "eps");
        assert_eq!(w("aabba").to_string(), "aabba");
        let err = "abca".parse::<Word>().unwrap_err();
        assert_eq!(err.position, 2);
        assert!("".parse::<Word>().is_err());
    }

    #[test]
    fn prefix_truncates_runs() {
        assert_eq!(w("aabbba").prefix(3), w("aab"));
        assert_eq!(w("ab").prefix(10), w("ab"));
        assert_eq!(w("ab").prefix(0), Word::empty());
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just(Letter::A), Just(Letter::B)], 0..=max_len)
            .prop_map(|ls| Word::from_runs(ls.into_iter().map(|l| (l, 1))).unwrap())
    }

    proptest! {
        #[test]
        fn normal_form_matches_letters(ls in proptest::collection::vec(any::<bool>(), 0..30)) {
            let letters: Vec<Letter> = ls.iter().map(|&b| if b { Letter::B } else { Letter::A }).collect();
            let word = Word::from_runs(letters.iter().map(|&l| (l, 1))).unwrap();
            prop_assert_eq!(word.letters().collect::<Vec<_>>(), letters);
            for pair in word.runs().windows(2) {
                prop_assert_ne!(pair[0].0, pair[1].0);
            }
        }

        #[test]
        fn concat_is_additive(u in arb_word(20), v in arb_word(20)) {
            let uv = u.concat(&v).unwrap();
            prop_assert_eq!(uv.len().unwrap(), u.len().unwrap() + v.len().unwrap());
            for l in [Letter::A, Letter::B] {
                prop_assert_eq!(uv.occ(l).unwrap(), u.occ(l).unwrap() + v.occ(l).unwrap());
            }
            prop_assert_eq!(strip_quotient(&u, &uv).unwrap(), v);
        }

        #[test]
        fn commute_symmetric_and_powers(u in arb_word(8), v in arb_word(8), k in 0u64..=5) {
            prop_assert_eq!(words_commute(&u, &v).unwrap(), words_commute(&v, &u).unwrap());
            prop_assert!(words_commute(&u, &u.pow(k).unwrap()).unwrap());
        }

        #[test]
        fn b_core_roundtrip(u in arb_word(20)) {
            let (lead, core, trail) = u.b_core();
            let rebuilt = Word::a_pow(lead).concat(&core).unwrap().concat(&Word::a_pow(trail)).unwrap();
            prop_assert_eq!(rebuilt, u);
        }
    }
}
