//! The infinite word `ω(h)` of a nonsingular triangular morphism and its gap
//! sequence.
//!
//! With `h(b) = a^γ1 · b · v`, the word `ω(h)` is the limit of `h^k(b)` with
//! its leading `a`s removed. It factors as
//!
//! ```text
//! ω(h) = b · v · h(v) · h²(v) · …
//! ```
//!
//! which is what every prefix computation here expands. The gap `A(i)` is
//! the number of `a`s between the `i`-th and `(i+1)`-th `b` of `ω(h)`; for
//! `|h(b)|_b = p ≥ 2` it has the closed form
//! `A(i) = α_d·s^m + (γ1+γ2)·(1 + s + … + s^(m-1))` where `m` is the `p`-adic
//! valuation of `i` and `d` its lowest nonzero base-`p` digit.

use crate::error::{Error, Result};
use crate::morphisms::{BinaryMorphism, TriangularForm};
use crate::numtheory::val_and_digit;
use crate::words::{Letter, Word};

/// A nonsingular triangular morphism prepared for `ω` expansion.
#[derive(Debug, Clone)]
pub struct OmegaSpec {
    form: TriangularForm,
    morphism: BinaryMorphism,
    tail: Word,
}

impl OmegaSpec {
    pub fn new(form: &TriangularForm) -> Result<Self> {
        let tail = right_tail(form)?;
        Ok(OmegaSpec {
            form: form.clone(),
            morphism: form.to_morphism()?,
            tail,
        })
    }

    pub fn form(&self) -> &TriangularForm {
        &self.form
    }

    /// The `v` in `h(b) = a^γ1 · b · v`.
    pub fn tail(&self) -> &Word {
        &self.tail
    }

    pub fn is_defined(&self) -> bool {
        !self.tail.is_empty()
    }

    /// Expands `b · v · h(v) · …` term by term until `done` holds.
    fn expand_until(&self, done: impl Fn(&Word) -> Result<bool>) -> Result<Word> {
        if !self.is_defined() {
            return Err(Error::OmegaUndefined);
        }
        let mut out = Word::b_pow(1);
        let mut term = self.tail.clone();
        while !done(&out)? {
            out.append(&term)?;
            term = self.morphism.apply(&term)?;
        }
        Ok(out)
    }

    pub fn prefix(&self, n: u64) -> Result<Word> {
        let w = self.expand_until(|w| Ok(w.len()? >= n))?;
        Ok(w.prefix(n))
    }

    /// A prefix containing at least `count` occurrences of `b`, ending on
    /// a `b` boundary or later.
    pub fn prefix_with_bs(&self, count: u64) -> Result<Word> {
        if self.form.p() < 2 && count > 1 {
            return Err(Error::NotApplicable(
                "omega has a single b unless |h(b)|_b >= 2",
            ));
        }
        self.expand_until(|w| Ok(w.occ(Letter::B)? >= count))
    }
}

/// `v` with `h(b) = a^γ1 · b · v`.
pub fn right_tail(h: &TriangularForm) -> Result<Word> {
    let Some((_, alphas, gamma2)) = h.core_parts() else {
        return Err(Error::NotApplicable("image of b contains no b"));
    };
    if h.s == 0 {
        return Err(Error::NotApplicable("morphism is singular (a maps to eps)"));
    }
    let mut v = Word::empty();
    for &gap in alphas {
        v.push_run(Letter::A, gap)?;
        v.push_run(Letter::B, 1)?;
    }
    v.push_run(Letter::A, gamma2)?;
    Ok(v)
}

/// The length-`n` prefix of `ω(h)`.
pub fn omega_prefix(h: &TriangularForm, n: u64) -> Result<Word> {
    OmegaSpec::new(h)?.prefix(n)
}

/// Removes the leading `a`-run, if any.
pub fn strip_leading_a(w: &Word) -> Word {
    match w.runs().first() {
        Some(&(Letter::A, _)) => Word::from_runs(w.runs()[1..].iter().copied())
            .expect("runs of a normalized word stay normalized"),
        _ => w.clone(),
    }
}

fn gap_preconditions(h: &TriangularForm) -> Result<(u64, u64, &[u64], u64)> {
    if !h.is_nonsingular() {
        return Err(Error::NotApplicable("gap sequence needs a nonsingular morphism"));
    }
    let (gamma1, alphas, gamma2) = h.core_parts().expect("nonsingular implies core");
    if alphas.is_empty() {
        return Err(Error::NotApplicable("gap sequence needs |h(b)|_b >= 2"));
    }
    Ok((h.s, gamma1, alphas, gamma2))
}

/// `1 + s + … + s^(m-1)`.
fn geometric_sum(s: u64, m: u32) -> Result<u64> {
    if s == 1 {
        return Ok(m as u64);
    }
    let mut acc: u64 = 0;
    let mut term: u64 = 1;
    for _ in 0..m {
        acc = acc.checked_add(term).ok_or(Error::CountOverflow)?;
        term = term.checked_mul(s).ok_or(Error::CountOverflow)?;
    }
    Ok(acc)
}

/// Closed-form gap `A_{ω(h)}(i)`.
pub fn gap(h: &TriangularForm, i: u64) -> Result<u64> {
    let (s, gamma1, alphas, gamma2) = gap_preconditions(h)?;
    if i == 0 {
        return Err(Error::NotApplicable("gap index starts at 1"));
    }
    let p = alphas.len() as u64 + 1;
    let (m, d) = val_and_digit(i, p);
    let scale = s.checked_pow(m).ok_or(Error::CountOverflow)?;
    let lead = alphas[d as usize - 1]
        .checked_mul(scale)
        .ok_or(Error::CountOverflow)?;
    let outer = gamma1.checked_add(gamma2).ok_or(Error::CountOverflow)?;
    let drift = outer
        .checked_mul(geometric_sum(s, m)?)
        .ok_or(Error::CountOverflow)?;
    lead.checked_add(drift).ok_or(Error::CountOverflow)
}

/// Gaps `A(1), …, A(upto)` read off an explicit prefix of `ω(h)`.
pub fn gaps_direct(h: &TriangularForm, upto: u64) -> Result<Vec<u64>> {
    gap_preconditions(h)?;
    let spec = OmegaSpec::new(h)?;
    let word = spec.prefix_with_bs(upto + 1)?;
    let mut gaps = Vec::with_capacity(upto as usize);
    let mut runs = word.runs().iter();
    // ω starts with b
    let Some(&(Letter::B, first)) = runs.next() else {
        unreachable!("omega prefix starts with b");
    };
    gaps.extend(std::iter::repeat_n(0, first as usize - 1));
    let mut pending = 0;
    for &(letter, count) in runs {
        match letter {
            Letter::A => pending = count,
            Letter::B => {
                gaps.push(pending);
                pending = 0;
                gaps.extend(std::iter::repeat_n(0, count as usize - 1));
            }
        }
        if gaps.len() as u64 >= upto {
            break;
        }
    }
    gaps.truncate(upto as usize);
    debug_assert_eq!(gaps.len() as u64, upto);
    Ok(gaps)
}

/// Gap `A(i)` by literal expansion of `ω(h)`.
pub fn gap_direct(h: &TriangularForm, i: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::NotApplicable("gap index starts at 1"));
    }
    Ok(gaps_direct(h, i)?[i as usize - 1])
}

/// Whether `ω(h)` is eventually periodic: `γ1 = γ2 = 0`, all inner gaps
/// equal to some `α`, and `s = 1` unless `α = 0`.
pub fn omega_eventually_periodic(h: &TriangularForm) -> Result<bool> {
    let (s, gamma1, alphas, gamma2) = gap_preconditions(h)?;
    let alpha = alphas[0];
    Ok(gamma1 == 0
        && gamma2 == 0
        && alphas.iter().all(|&x| x == alpha)
        && (alpha == 0 || s == 1))
}

/// Searches for `(preperiod, period)` with `period <= max_period` and
/// `preperiod <= max_preperiod` such that `w[i] = w[i + period]` for every
/// `i >= preperiod` inside the sample. Returns the smallest period found.
pub fn detect_eventual_period(
    letters: &[Letter],
    max_preperiod: usize,
    max_period: usize,
) -> Option<(usize, usize)> {
    for period in 1..=max_period.min(letters.len().saturating_sub(1)) {
        let last_bad = (0..letters.len() - period)
            .rev()
            .find(|&i| letters[i] != letters[i + period]);
        let pre = last_bad.map_or(0, |i| i + 1);
        if pre <= max_preperiod {
            return Some((pre, period));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::power;

    fn form(s: &str) -> TriangularForm {
        s.parse::<BinaryMorphism>().unwrap().to_triangular().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn right_tail_examples() {
        assert_eq!(right_tail(&form("a=a,b=abab")).unwrap(), w("ab"));
        assert_eq!(right_tail(&form("a=a,b=b")).unwrap(), Word::empty());
        assert_eq!(right_tail(&form("a=a,b=baa")).unwrap(), w("aa"));
        assert!(matches!(
            right_tail(&form("a=a,b=aa")),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn omega_prefix_examples() {
        assert_eq!(omega_prefix(&form("a=a,b=bab"), 7).unwrap(), w("bababab"));
        assert_eq!(omega_prefix(&form("a=aa,b=bab"), 6).unwrap(), w("babaab"));
        assert_eq!(omega_prefix(&form("a=a,b=ba"), 4).unwrap(), w("baaa"));
        assert_eq!(
            omega_prefix(&form("a=aa,b=ab"), 3).unwrap_err(),
            Error::OmegaUndefined
        );
    }

    #[test]
    fn gap_examples() {
        let h = TriangularForm::core(1, 0, vec![1, 2], 0);
        assert_eq!(gap(&h, 1).unwrap(), 1);
        assert_eq!(gap(&h, 6).unwrap(), 2);
        let h = TriangularForm::core(2, 1, vec![3], 0);
        assert_eq!(gap(&h, 4).unwrap(), 15);
        assert!(matches!(gap(&form("a=a,b=ab"), 1), Err(Error::NotApplicable(_))));
        assert!(matches!(gap(&form("a=eps,b=bb"), 1), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn gap_direct_examples() {
        let h = TriangularForm::core(1, 0, vec![1, 2], 0);
        assert_eq!(gap_direct(&h, 1).unwrap(), 1);
        assert_eq!(gap_direct(&h, 6).unwrap(), 2);
        let h = TriangularForm::core(2, 1, vec![3], 0);
        assert_eq!(gap_direct(&h, 4).unwrap(), 15);
        assert_eq!(gap_direct(&TriangularForm::core(1, 0, vec![0], 0), 17).unwrap(), 0);
        let h = TriangularForm::core(1, 0, vec![5], 0);
        assert!(gaps_direct(&h, 50).unwrap().iter().all(|&g| g == 5));
    }

    #[test]
    fn gap_direct_spot_values() {
        // ω = b a³ b a⁷ b a³ b …  for a→aa, b→abaaab
        let h = TriangularForm::core(2, 1, vec![3], 0);
        assert_eq!(gaps_direct(&h, 4).unwrap(), vec![3, 7, 3, 15]);
    }

    #[test]
    fn periodic_examples() {
        assert!(omega_eventually_periodic(&form("a=a,b=baabaab")).unwrap());
        assert!(!omega_eventually_periodic(&form("a=a,b=abb")).unwrap());
        assert!(!omega_eventually_periodic(&form("a=a,b=babaab")).unwrap());
        // equal gaps but growing under s = 2
        assert!(!omega_eventually_periodic(&form("a=aa,b=bab")).unwrap());
        assert!(omega_eventually_periodic(&form("a=aaa,b=bbb")).unwrap());
        assert!(omega_eventually_periodic(&form("a=a,b=ab")).is_err());
    }

    #[test]
    fn detector_finds_simple_periods() {
        let letters: Vec<Letter> = w("aaabababab").letters().collect();
        assert_eq!(detect_eventual_period(&letters, 4, 5), Some((2, 2)));
        let letters: Vec<Letter> = w("abaabaaab").letters().collect();
        assert_eq!(detect_eventual_period(&letters, 1, 3), None);
    }

    #[test]
    fn stripped_powers_are_prefixes() {
        for text in ["a=aa,b=abab", "a=a,b=aabba", "a=aaa,b=babaa"] {
            let g: BinaryMorphism = text.parse().unwrap();
            let h = g.to_triangular().unwrap();
            let omega = omega_prefix(&h, 4000).unwrap();
            for k in 1..=4 {
                let stripped = strip_leading_a(&power(&g, k).unwrap().image_b);
                assert!(stripped.is_prefix_of(&omega), "{text} k={k}");
            }
        }
    }

    #[test]
    fn prefixes_are_consistent() {
        let h = form("a=aa,b=abaab");
        let long = omega_prefix(&h, 500).unwrap();
        for n in [0, 1, 7, 64, 499] {
            assert!(omega_prefix(&h, n).unwrap().is_prefix_of(&long));
        }
    }
}
