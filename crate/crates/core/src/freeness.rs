//! Bounded breadth-first search for relations in the monoid generated by two
//! morphisms.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphisms::{compose, BinaryMorphism};

/// Largest depth accepted by [`find_relation`]; use [`find_relation_deep`]
/// to go further.
pub const DEFAULT_MAX_DEPTH: usize = 6;

/// Two distinct generator sequences whose products coincide. Index `k`
/// stands for `g_k`; a sequence `u1 u2 … um` denotes the product
/// `g_u1 g_u2 ⋯ g_um` (rightmost applied first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub left: Vec<u8>,
    pub right: Vec<u8>,
}

fn seq_string(seq: &[u8]) -> String {
    seq.iter().map(|d| char::from(b'0' + d)).collect()
}

impl Relation {
    pub fn left_str(&self) -> String {
        seq_string(&self.left)
    }

    pub fn right_str(&self) -> String {
        seq_string(&self.right)
    }

    /// Re-checks the relation by composing both sides.
    pub fn verify(&self, g1: &BinaryMorphism, g2: &BinaryMorphism) -> Result<bool> {
        Ok(self.left != self.right
            && evaluate(&self.left, g1, g2)? == evaluate(&self.right, g1, g2)?)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.left_str(), self.right_str())
    }
}

/// The product named by a generator sequence.
pub fn evaluate(seq: &[u8], g1: &BinaryMorphism, g2: &BinaryMorphism) -> Result<BinaryMorphism> {
    seq.iter().try_fold(BinaryMorphism::identity(), |acc, &k| match k {
        1 => compose(&acc, g1),
        2 => compose(&acc, g2),
        _ => panic!("generator index must be 1 or 2, got {k}"),
    })
}

pub fn find_relation(
    g1: &BinaryMorphism,
    g2: &BinaryMorphism,
    depth: usize,
) -> Result<Option<Relation>> {
    if depth > DEFAULT_MAX_DEPTH {
        return Err(Error::DepthLimit {
            depth,
            limit: DEFAULT_MAX_DEPTH,
        });
    }
    find_relation_deep(g1, g2, depth)
}

/// Like [`find_relation`] without the depth cap.
///
/// Sequences are visited in shortlex order; the first sequence whose product
/// was already seen yields the relation `(earlier, current)`.
pub fn find_relation_deep(
    g1: &BinaryMorphism,
    g2: &BinaryMorphism,
    depth: usize,
) -> Result<Option<Relation>> {
    let gens = [g1, g2];
    let mut seen: HashMap<BinaryMorphism, Vec<u8>> = HashMap::new();
    let mut frontier: Vec<(Vec<u8>, BinaryMorphism)> = vec![(Vec::new(), BinaryMorphism::identity())];

    for level in 1..=depth {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (seq, product) in &frontier {
            for (k, g) in gens.iter().enumerate() {
                let mut extended = seq.clone();
                extended.push(k as u8 + 1);
                let value = compose(product, g).map_err(|e| match e {
                    Error::CountOverflow => Error::SearchAborted { depth: level },
                    other => other,
                })?;
                if let Some(earlier) = seen.get(&value) {
                    return Ok(Some(Relation {
                        left: earlier.clone(),
                        right: extended,
                    }));
                }
                seen.insert(value.clone(), extended.clone());
                next.push((extended, value));
            }
        }
        frontier = next;
    }
    Ok(None)
}
