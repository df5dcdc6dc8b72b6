//! Endomorphisms of `{a, b}*`, their count matrices and the triangular
//! canonical form.
//!
//! Composition order: `compose(g1, g2)` is the product `g1 g2`, which applies
//! `g2` first, i.e. `compose(g1, g2)(w) = g1(g2(w))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::words::{parse_word_at, Letter, Word};

/// A morphism of `{a, b}*`, determined by the images of the two letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryMorphism {
    pub image_a: Word,
    pub image_b: Word,
}

impl BinaryMorphism {
    pub fn new(image_a: Word, image_b: Word) -> Self {
        BinaryMorphism { image_a, image_b }
    }

    pub fn identity() -> Self {
        BinaryMorphism::new(Word::a_pow(1), Word::b_pow(1))
    }

    pub fn is_identity(&self) -> bool {
        *self == BinaryMorphism::identity()
    }

    pub fn image(&self, letter: Letter) -> &Word {
        match letter {
            Letter::A => &self.image_a,
            Letter::B => &self.image_b,
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Word::empty();
        for &(letter, count) in w.runs() {
            let img = self.image(letter);
            match img.runs() {
                [] => {}
                [(l, c)] => {
                    out.push_run(*l, c.checked_mul(count).ok_or(Error::CountOverflow)?)?;
                }
                _ => {
                    for _ in 0..count {
                        out.append(img)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn matrix(&self) -> Result<MorphMatrix> {
        let mut m = [[0u64; 2]; 2];
        for col in [Letter::A, Letter::B] {
            for row in [Letter::A, Letter::B] {
                m[row.index()][col.index()] = self.image(col).occ(row)?;
            }
        }
        Ok(MorphMatrix { m })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.image_a.in_a_star()
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        Ok(self.matrix()?.det() != 0)
    }

    pub fn to_triangular(&self) -> Result<TriangularForm> {
        to_triangular(self)
    }
}

/// `g1 g2`: apply `g2`, then `g1`.
pub fn compose(g1: &BinaryMorphism, g2: &BinaryMorphism) -> Result<BinaryMorphism> {
    Ok(BinaryMorphism::new(
        g1.apply(&g2.image_a)?,
        g1.apply(&g2.image_b)?,
    ))
}

pub fn power(g: &BinaryMorphism, n: u32) -> Result<BinaryMorphism> {
    let mut acc = BinaryMorphism::identity();
    for _ in 0..n {
        acc = compose(&acc, g)?;
    }
    Ok(acc)
}

pub fn apply(g: &BinaryMorphism, w: &Word) -> Result<Word> {
    g.apply(w)
}

/// Entry `m[i][j]` counts occurrences of letter `i` in the image of letter
/// `j`, with `a` before `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphMatrix {
    pub m: [[u64; 2]; 2],
}

impl MorphMatrix {
    pub fn identity() -> Self {
        MorphMatrix { m: [[1, 0], [0, 1]] }
    }

    pub fn det(&self) -> i128 {
        let [[p, q], [r, s]] = self.m;
        p as i128 * s as i128 - q as i128 * r as i128
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.m[1][0] == 0
    }

    pub fn mul(&self, other: &MorphMatrix) -> Result<MorphMatrix> {
        let mut m = [[0u64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = 0u64;
                for k in 0..2 {
                    let term = self.m[i][k]
                        .checked_mul(other.m[k][j])
                        .ok_or(Error::CountOverflow)?;
                    acc = acc.checked_add(term).ok_or(Error::CountOverflow)?;
                }
                *cell = acc;
            }
        }
        Ok(MorphMatrix { m })
    }
}

/// The part of a triangular morphism describing the image of `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BPart {
    /// `h(b) = a^e`.
    BOnly { e: u64 },
    /// `h(b) = a^gamma1 b a^alphas[0] b … b a^alphas[p-2] b a^gamma2`.
    Core {
        gamma1: u64,
        alphas: Vec<u64>,
        gamma2: u64,
    },
}

/// Canonical decomposition of an upper triangular morphism: `h(a) = a^s`
/// and the image of `b` split into its outer `a`-runs and inner gaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangularForm {
    pub s: u64,
    pub bpart: BPart,
}

impl TriangularForm {
    pub fn core(s: u64, gamma1: u64, alphas: Vec<u64>, gamma2: u64) -> Self {
        TriangularForm {
            s,
            bpart: BPart::Core {
                gamma1,
                alphas,
                gamma2,
            },
        }
    }

    pub fn b_only(s: u64, e: u64) -> Self {
        TriangularForm {
            s,
            bpart: BPart::BOnly { e },
        }
    }

    /// Number of `b`s in the image of `b`.
    pub fn p(&self) -> u64 {
        match &self.bpart {
            BPart::BOnly { .. } => 0,
            BPart::Core { alphas, .. } => alphas.len() as u64 + 1,
        }
    }

    pub fn is_nonsingular(&self) -> bool {
        self.s >= 1 && matches!(self.bpart, BPart::Core { .. })
    }

    /// `(gamma1, alphas, gamma2)` for the `Core` case.
    pub fn core_parts(&self) -> Option<(u64, &[u64], u64)> {
        match &self.bpart {
            BPart::Core {
                gamma1,
                alphas,
                gamma2,
            } => Some((*gamma1, alphas.as_slice(), *gamma2)),
            BPart::BOnly { .. } => None,
        }
    }

    pub fn image_b(&self) -> Result<Word> {
        match &self.bpart {
            BPart::BOnly { e } => Ok(Word::a_pow(*e)),
            BPart::Core {
                gamma1,
                alphas,
                gamma2,
            } => {
                let mut w = Word::a_pow(*gamma1);
                w.push_run(Letter::B, 1)?;
                for &gap in alphas {
                    w.push_run(Letter::A, gap)?;
                    w.push_run(Letter::B, 1)?;
                }
                w.push_run(Letter::A, *gamma2)?;
                Ok(w)
            }
        }
    }

    pub fn to_morphism(&self) -> Result<BinaryMorphism> {
        Ok(BinaryMorphism::new(Word::a_pow(self.s), self.image_b()?))
    }
}

pub fn to_triangular(g: &BinaryMorphism) -> Result<TriangularForm> {
    if !g.image_a.in_a_star() {
        return Err(Error::NotUpperTriangular);
    }
    let s = g.image_a.occ(Letter::A)?;
    let runs = g.image_b.runs();
    if !g.image_b.contains(Letter::B) {
        return Ok(TriangularForm::b_only(s, g.image_b.len()?));
    }
    let mut gamma1 = 0;
    let mut alphas = Vec::new();
    let mut pending_gap: Option<u64> = None;
    let mut seen_b = false;
    for &(letter, count) in runs {
        match letter {
            Letter::A if !seen_b => gamma1 = count,
            Letter::A => pending_gap = Some(count),
            Letter::B => {
                if seen_b {
                    alphas.push(pending_gap.take().unwrap_or(0));
                }
                alphas.extend(std::iter::repeat_n(0, count as usize - 1));
                seen_b = true;
            }
        }
    }
    Ok(TriangularForm::core(
        s,
        gamma1,
        alphas,
        pending_gap.unwrap_or(0),
    ))
}

pub fn matrix(g: &BinaryMorphism) -> Result<MorphMatrix> {
    g.matrix()
}

pub fn is_nonsingular(g: &BinaryMorphism) -> Result<bool> {
    g.is_nonsingular()
}

/// Whether `h(b)` lies in `a*ba*`.
fn single_b(w: &Word) -> Result<bool> {
    Ok(w.occ(Letter::B)? == 1)
}

/// Both images of `b` lie in `a*ba*` and exactly one image of `a` is `a`.
pub fn is_special_pair(g1: &BinaryMorphism, g2: &BinaryMorphism) -> Result<bool> {
    if !g1.is_upper_triangular() || !g2.is_upper_triangular() {
        return Err(Error::NotUpperTriangular);
    }
    let a = Word::a_pow(1);
    Ok(single_b(&g1.image_b)?
        && single_b(&g2.image_b)?
        && ((g1.image_a == a) != (g2.image_a == a)))
}

impl fmt::Display for BinaryMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={},b={}", self.image_a, self.image_b)
    }
}

impl fmt::Debug for BinaryMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMorphism({self})")
    }
}

impl FromStr for BinaryMorphism {
    type Err = ParseError;

    /// Parses `a=<word>,b=<word>`; whitespace anywhere is ignored.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        // compact string plus a map back to byte offsets in `text`
        let kept: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let compact: String = kept.iter().map(|&(_, c)| c).collect();
        let origin = |i: usize| kept.get(i).map_or(text.len(), |&(p, _)| p);
        let err = |i: usize, message: &str| ParseError {
            position: origin(i),
            message: message.to_string(),
        };

        let Some(rest) = compact.strip_prefix("a=") else {
            return Err(err(0, "expected `a=`"));
        };
        let Some(comma) = rest.find(',') else {
            return Err(err(compact.len(), "expected `,b=` after the image of a"));
        };
        let img_a = &rest[..comma];
        let after = &rest[comma + 1..];
        let b_start = 2 + comma + 1;
        let Some(img_b) = after.strip_prefix("b=") else {
            return Err(err(b_start, "expected `b=`"));
        };
        let remap = |e: ParseError| ParseError {
            position: origin(e.position),
            message: e.message,
        };
        let image_a = parse_word_at(img_a, 2).map_err(remap)?;
        let image_b = parse_word_at(img_b, b_start + 2).map_err(remap)?;
        Ok(BinaryMorphism::new(image_a, image_b))
    }
}
