//! Exhaustive enumeration of small triangular morphisms and the pairwise
//! comparison of [`classify`] against [`direct_commute`].

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{classify, direct_commute, Case};
use crate::error::Result;
use crate::morphisms::{BinaryMorphism, TriangularForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    /// Largest `s` in `h(a) = a^s`.
    pub max_s: u64,
    /// Largest number of `b`s in `h(b)`.
    pub max_p: u64,
    /// Largest outer or inner `a`-exponent in `h(b)` when it contains `b`.
    pub max_exp: u64,
    /// Largest `e` in `h(b) = a^e`.
    pub max_bonly_exp: u64,
    /// Worker threads; 0 lets rayon decide.
    #[serde(skip)]
    pub parallel: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_s: 3,
            max_p: 3,
            max_exp: 2,
            max_bonly_exp: 3,
            parallel: 0,
        }
    }
}

/// Every digit vector of length `len` over `0..=max`, in lexicographic order.
fn digit_vectors(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0; len]];
    let mut cur = vec![0; len];
    loop {
        let Some(pos) = (0..len).rev().find(|&i| cur[i] < max) else {
            return out;
        };
        cur[pos] += 1;
        for d in &mut cur[pos + 1..] {
            *d = 0;
        }
        out.push(cur.clone());
    }
}

/// All triangular forms within the bounds, in a fixed order: by `s`, then
/// `b`-free images by exponent, then by `p` and lexicographic
/// `(γ1, α1, …, α_{p-1}, γ2)`.
pub fn sweep_forms(cfg: &SweepConfig) -> Vec<TriangularForm> {
    let mut forms = Vec::new();
    for s in 0..=cfg.max_s {
        for e in 0..=cfg.max_bonly_exp {
            forms.push(TriangularForm::b_only(s, e));
        }
        for p in 1..=cfg.max_p {
            for digits in digit_vectors(p as usize + 1, cfg.max_exp) {
                let (gamma1, rest) = digits.split_first().expect("p >= 1");
                let (gamma2, alphas) = rest.split_last().expect("p >= 1");
                forms.push(TriangularForm::core(s, *gamma1, alphas.to_vec(), *gamma2));
            }
        }
    }
    forms
}

pub fn sweep_morphisms(cfg: &SweepConfig) -> Vec<BinaryMorphism> {
    sweep_forms(cfg)
        .iter()
        .map(|f| f.to_morphism().expect("small bounds cannot overflow"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: u64,
    pub g1: String,
    pub g2: String,
    pub case: Case,
    pub prediction: bool,
    pub direct: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub morphisms: u64,
    pub pairs: u64,
    pub commuting: u64,
    pub mismatches: Vec<Mismatch>,
    pub cases: BTreeMap<Case, u64>,
    /// `"<Case>.<condition>"` → number of pairs where that clause holds.
    pub conditions: BTreeMap<String, u64>,
}

impl SweepSummary {
    pub fn condition_hits(&self, case: Case, name: &str) -> u64 {
        self.conditions
            .get(&format!("{}.{}", case.name(), name))
            .copied()
            .unwrap_or(0)
    }
}

#[derive(Default)]
struct RowStats {
    commuting: u64,
    mismatches: Vec<Mismatch>,
    cases: BTreeMap<Case, u64>,
    conditions: BTreeMap<String, u64>,
}

fn sweep_row(i: usize, morphisms: &[BinaryMorphism]) -> Result<RowStats> {
    let n = morphisms.len();
    let g1 = &morphisms[i];
    let mut stats = RowStats::default();
    for (j, g2) in morphisms.iter().enumerate() {
        let report = classify(g1, g2)?;
        let direct = direct_commute(g1, g2)?;
        stats.commuting += direct as u64;
        *stats.cases.entry(report.case).or_default() += 1;
        for &(name, holds) in &report.conditions {
            if holds {
                *stats
                    .conditions
                    .entry(format!("{}.{}", report.case.name(), name))
                    .or_default() += 1;
            }
        }
        if report.prediction != direct {
            stats.mismatches.push(Mismatch {
                index: (i * n + j) as u64,
                g1: g1.to_string(),
                g2: g2.to_string(),
                case: report.case,
                prediction: report.prediction,
                direct,
            });
        }
    }
    Ok(stats)
}

/// Runs every ordered pair. Rows are processed in parallel and merged in
/// enumeration order, so the summary does not depend on the worker count.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepSummary> {
    let morphisms = sweep_morphisms(cfg);
    let rows: Vec<Result<RowStats>> = {
        let work = || {
            (0..morphisms.len())
                .into_par_iter()
                .map(|i| sweep_row(i, &morphisms))
                .collect()
        };
        if cfg.parallel > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.parallel)
                .build()
                .expect("thread pool")
                .install(work)
        } else {
            work()
        }
    };

    let n = morphisms.len() as u64;
    let mut summary = SweepSummary {
        config: *cfg,
        morphisms: n,
        pairs: n * n,
        commuting: 0,
        mismatches: Vec::new(),
        cases: Case::ALL.iter().map(|&c| (c, 0)).collect(),
        conditions: BTreeMap::new(),
    };
    for row in rows {
        let row = row?;
        summary.commuting += row.commuting;
        summary.mismatches.extend(row.mismatches);
        for (case, count) in row.cases {
            *summary.cases.entry(case).or_default() += count;
        }
        for (name, count) in row.conditions {
            *summary.conditions.entry(name).or_default() += count;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_space_size() {
        // 4 values of s × (4 b-free images + 3² + 3³ + 3⁴ images with b)
        let forms = sweep_forms(&SweepConfig::default());
        assert_eq!(forms.len(), 4 * (4 + 9 + 27 + 81));
        let morphisms = sweep_morphisms(&SweepConfig::default());
        let mut sorted = morphisms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), morphisms.len());
    }

    #[test]
    fn digit_vectors_are_lexicographic() {
        assert_eq!(
            digit_vectors(2, 1),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(digit_vectors(0, 3), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn tiny_sweep_is_exact_and_deterministic() {
        let cfg = SweepConfig {
            max_s: 2,
            max_p: 2,
            max_exp: 1,
            max_bonly_exp: 1,
            parallel: 1,
        };
        let one = run_sweep(&cfg).unwrap();
        let many = run_sweep(&SweepConfig { parallel: 4, ..cfg }).unwrap();
        assert!(one.mismatches.is_empty(), "{:?}", one.mismatches);
        // worker count is not serialized; everything else must match
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&many).unwrap()
        );
        assert_eq!(one.cases.values().sum::<u64>(), one.pairs);
    }
}
