//! Decides commutation of two upper triangular morphisms structurally.
//!
//! [`classify`] routes a pair to one of six cases, evaluates every clause of
//! the matching characterization and predicts commutation as their
//! disjunction. [`direct_commute`] is the ground truth it is checked against:
//! it composes the two morphisms both ways and compares letter images.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::morphisms::{compose, power, BinaryMorphism, TriangularForm};
use crate::numtheory::{mult_dependence, MultDependence};
use crate::words::{words_commute, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Case {
    /// One image of `b` lies in `a*`.
    SingularBImage,
    /// One image of `a` is empty, both images of `b` contain `b`.
    SingularAImage,
    /// Both nonsingular, one `b` in each image of `b`.
    BothGapOne,
    /// Both nonsingular, `|g1(b)|_b = 1 < |g2(b)|_b`.
    GapOneVsMany,
    /// Both nonsingular, `b`-counts at least two and multiplicatively independent.
    MultIndependent,
    /// Both nonsingular, `b`-counts at least two and multiplicatively dependent.
    MultDependent,
}

impl Case {
    pub const ALL: [Case; 6] = [
        Case::SingularBImage,
        Case::SingularAImage,
        Case::BothGapOne,
        Case::GapOneVsMany,
        Case::MultIndependent,
        Case::MultDependent,
    ];

    /// Names of the clauses evaluated for this case, in report order.
    pub fn condition_names(self) -> &'static [&'static str] {
        match self {
            Case::SingularBImage | Case::BothGapOne => &["identity"],
            Case::SingularAImage => &["i", "ii", "iii", "iv", "v"],
            Case::GapOneVsMany | Case::MultIndependent => &["i", "ii"],
            Case::MultDependent => &["i", "ii", "iii"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::SingularBImage => "SingularBImage",
            Case::SingularAImage => "SingularAImage",
            Case::BothGapOne => "BothGapOne",
            Case::GapOneVsMany => "GapOneVsMany",
            Case::MultIndependent => "MultIndependent",
            Case::MultDependent => "MultDependent",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Supporting data for a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `p = r^m`, `q = r^n`; conditions were checked on `g1^n` and `g2^m`.
    Dependence { r: u64, m: u32, n: u32 },
    /// `g1(b) = (b a^alpha)^(p-1) b` and `g2(b) = (b a^alpha)^(q-1) b`.
    PeriodicBlock { alpha: u64 },
    /// `g1(b) = (a^alpha b a^beta)^i` and `g2(b) = (b a^(alpha+beta))^j b`.
    BlockPower { alpha: u64, beta: u64, i: u64, j: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub case: Case,
    /// The input pair was exchanged to put it in the case's normal form.
    pub swapped: bool,
    #[serde(serialize_with = "conditions_as_map")]
    pub conditions: Vec<(&'static str, bool)>,
    pub witness: Option<Witness>,
    pub prediction: bool,
}

fn conditions_as_map<S: Serializer>(
    conditions: &[(&'static str, bool)],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = serializer.serialize_map(Some(conditions.len()))?;
    for (name, holds) in conditions {
        map.serialize_entry(name, holds)?;
    }
    map.end()
}

impl CommutationReport {
    fn new(case: Case, swapped: bool, conditions: Vec<(&'static str, bool)>) -> Self {
        debug_assert_eq!(
            conditions.iter().map(|c| c.0).collect::<Vec<_>>(),
            case.condition_names()
        );
        let prediction = conditions.iter().any(|&(_, holds)| holds);
        CommutationReport {
            case,
            swapped,
            conditions,
            witness: None,
            prediction,
        }
    }

    pub fn condition(&self, name: &str) -> Option<bool> {
        self.conditions
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, holds)| holds)
    }
}

/// Ground truth: `g1 g2 = g2 g1` as morphisms.
pub fn direct_commute(g1: &BinaryMorphism, g2: &BinaryMorphism) -> Result<bool> {
    Ok(compose(g1, g2)? == compose(g2, g1)?)
}

/// `u = a^p w a^q` and `v = a^r w a^s` with `p + q = r + s`.
pub fn a_conjugates(u: &Word, v: &Word) -> bool {
    let (lead_u, core_u, trail_u) = u.b_core();
    let (lead_v, core_v, trail_v) = v.b_core();
    if core_u.is_empty() && core_v.is_empty() {
        return lead_u == lead_v;
    }
    // outer counts are single runs, so their sums fit in u128
    core_u == core_v && lead_u as u128 + trail_u as u128 == lead_v as u128 + trail_v as u128
}

fn in_b_star(g: &BinaryMorphism) -> bool {
    g.image_b.in_b_star()
}

fn a_len(g: &BinaryMorphism) -> Result<u128> {
    Ok(g.image_a.len()? as u128)
}

/// `|h1(a)|·|h2(b)|_a + |h1(b)|·|h2(b)|_b = |h2(a)|·|h1(b)|` for `h1(b) ∈ a*`.
fn length_identity(h1: &BinaryMorphism, h2: &BinaryMorphism) -> Result<bool> {
    let h1b = h1.image_b.len()? as u128;
    let lhs = a_len(h1)? * h2.image_b.occ(Letter::A)? as u128 + h1b * h2.image_b.occ(Letter::B)? as u128;
    let rhs = a_len(h2)? * h1b;
    Ok(lhs == rhs)
}

/// Matches `u = (a^α b a^β)^i` and `v = (b a^(α+β))^j b`.
fn block_power(u: &TriangularForm, v: &TriangularForm) -> Option<Witness> {
    let (alpha, u_gaps, beta) = u.core_parts()?;
    let (lead, v_gaps, trail) = v.core_parts()?;
    let period = alpha.checked_add(beta)?;
    let matches = u_gaps.iter().all(|&g| g == period)
        && lead == 0
        && trail == 0
        && v_gaps.iter().all(|&g| g == period);
    matches.then(|| Witness::BlockPower {
        alpha,
        beta,
        i: u.p(),
        j: v.p() - 1,
    })
}

/// `g(b) = (b a^α)^(p-1) b` with the given `α`, and `g(a) = a`.
fn periodic_block(form: &TriangularForm, alpha: u64) -> bool {
    match form.core_parts() {
        Some((gamma1, gaps, gamma2)) => {
            form.s == 1 && gamma1 == 0 && gamma2 == 0 && gaps.iter().all(|&g| g == alpha)
        }
        None => false,
    }
}

pub fn classify(g1: &BinaryMorphism, g2: &BinaryMorphism) -> Result<CommutationReport> {
    let f1 = g1.to_triangular()?;
    let f2 = g2.to_triangular()?;

    if g1.image_b.in_a_star() || g2.image_b.in_a_star() {
        let swapped = !g1.image_b.in_a_star();
        let (h1, h2) = if swapped { (g2, g1) } else { (g1, g2) };
        let holds = length_identity(h1, h2)?;
        return Ok(CommutationReport::new(
            Case::SingularBImage,
            swapped,
            vec![("identity", holds)],
        ));
    }

    if g1.image_a.is_empty() || g2.image_a.is_empty() {
        let swapped = !g1.image_a.is_empty();
        let ((h1, k1), (h2, k2)) = if swapped {
            ((g2, &f2), (g1, &f1))
        } else {
            ((g1, &f1), (g2, &f2))
        };
        let t = k2.s;
        let witness = if t == 1 { block_power(k1, k2) } else { None };
        let conditions = vec![
            ("i", h1 == h2),
            ("ii", h2.is_identity()),
            ("iii", t == 0 && words_commute(&h1.image_b, &h2.image_b)?),
            ("iv", in_b_star(h1) && in_b_star(h2)),
            ("v", witness.is_some()),
        ];
        let mut report = CommutationReport::new(Case::SingularAImage, swapped, conditions);
        report.witness = witness;
        return Ok(report);
    }

    // both nonsingular from here on
    let swapped = f1.p() > f2.p();
    let ((h1, k1), (h2, k2)) = if swapped {
        ((g2, &f2), (g1, &f1))
    } else {
        ((g1, &f1), (g2, &f2))
    };
    let (p, q) = (k1.p(), k2.p());
    let (s, t) = (k1.s as u128, k2.s as u128);
    let (gamma1, alphas, gamma2) = k1.core_parts().expect("nonsingular");
    let (delta1, _, delta2) = k2.core_parts().expect("nonsingular");

    if q == 1 {
        let holds = (s - 1) * delta1 as u128 == (t - 1) * gamma1 as u128
            && (s - 1) * delta2 as u128 == (t - 1) * gamma2 as u128;
        return Ok(CommutationReport::new(
            Case::BothGapOne,
            swapped,
            vec![("identity", holds)],
        ));
    }

    if p == 1 {
        return Ok(CommutationReport::new(
            Case::GapOneVsMany,
            swapped,
            vec![
                ("i", h1.is_identity()),
                ("ii", in_b_star(h1) && in_b_star(h2)),
            ],
        ));
    }

    match mult_dependence(p, q) {
        MultDependence::Independent => {
            let alpha = alphas[0];
            let periodic = periodic_block(k1, alpha) && periodic_block(k2, alpha);
            let mut report = CommutationReport::new(
                Case::MultIndependent,
                swapped,
                vec![("i", in_b_star(h1) && in_b_star(h2)), ("ii", periodic)],
            );
            if periodic {
                report.witness = Some(Witness::PeriodicBlock { alpha });
            }
            Ok(report)
        }
        MultDependence::Dependent { r, m, n } => {
            let p1 = power(h1, n)?;
            let p2 = power(h2, m)?;
            let a = Word::a_pow(1);
            let conditions = vec![
                ("i", p1 == p2),
                ("ii", in_b_star(h1) && in_b_star(h2)),
                (
                    "iii",
                    h1.image_a == a && h2.image_a == a && a_conjugates(&p1.image_b, &p2.image_b),
                ),
            ];
            let mut report = CommutationReport::new(Case::MultDependent, swapped, conditions);
            report.witness = Some(Witness::Dependence { r, m, n });
            Ok(report)
        }
    }
}

/// Whether `classify` agrees with composition for the pair.
pub fn prediction_matches(g1: &BinaryMorphism, g2: &BinaryMorphism) -> Result<bool> {
    Ok(classify(g1, g2)?.prediction == direct_commute(g1, g2)?)
}
