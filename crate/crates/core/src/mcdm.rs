//! Group multi-criteria decision making with circular Pythagorean fuzzy values.
//!
//! [`solve`] runs the whole method:
//!
//! 1. complement every cost-criterion evaluation ([`DecisionProblem::normalize`]);
//! 2. fuse the experts' PFVs per cell into C-PFVs ([`build_circular_matrix`]);
//! 3. aggregate each alternative's row with the criterion weights;
//! 4. score each aggregate by cosine similarity to the ideal `⟨1, 0; 1⟩`;
//! 5. rank by descending score.
//!
//! Everything runs at full precision; rounding is left to whoever displays
//! the results.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::aggregation::{Aggregator, Operator, WeightVector};
use crate::fusion::{build_circular_matrix, Matrix};
use crate::generators::RadiusGenerator;
use crate::model::{Cpfv, Pfv};
use crate::similarity::csm_to_ideal;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Benefit,
    Cost,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Benefit => "benefit",
            Polarity::Cost => "cost",
        }
    }
}

impl FromStr for Polarity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "benefit" => Ok(Polarity::Benefit),
            "cost" => Ok(Polarity::Cost),
            other => Err(Error::DomainError(format!(
                "polarity must be `benefit` or `cost`, got `{other}`"
            ))),
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Experts × alternatives × criteria evaluations plus the criterion metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    polarity: Vec<Polarity>,
    weights: WeightVector,
    experts: Vec<Matrix<Pfv>>,
}

fn check_unique(kind: &str, labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::DimensionMismatch(format!("no {kind} given")));
    }
    let mut seen = HashSet::new();
    match labels.iter().find(|l| !seen.insert(l.as_str())) {
        Some(dup) => Err(Error::DuplicateLabel(dup.clone())),
        None => Ok(()),
    }
}

impl DecisionProblem {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<String>,
        polarity: Vec<Polarity>,
        weights: WeightVector,
        experts: Vec<Matrix<Pfv>>,
    ) -> Result<Self> {
        check_unique("alternatives", &alternatives)?;
        check_unique("criteria", &criteria)?;
        if polarity.len() != criteria.len() {
            return Err(Error::LengthMismatch {
                expected: criteria.len(),
                actual: polarity.len(),
            });
        }
        if weights.len() != criteria.len() {
            return Err(Error::LengthMismatch {
                expected: criteria.len(),
                actual: weights.len(),
            });
        }
        if experts.is_empty() {
            return Err(Error::DimensionMismatch("no expert matrices given".into()));
        }
        for (e, m) in experts.iter().enumerate() {
            if m.len() != alternatives.len() {
                return Err(Error::DimensionMismatch(format!(
                    "expert {e} rates {} alternatives, expected {}",
                    m.len(),
                    alternatives.len()
                )));
            }
            if let Some((i, row)) = m
                .iter()
                .enumerate()
                .find(|(_, r)| r.len() != criteria.len())
            {
                return Err(Error::DimensionMismatch(format!(
                    "expert {e}, alternative {i} has {} criteria, expected {}",
                    row.len(),
                    criteria.len()
                )));
            }
        }
        Ok(Self {
            alternatives,
            criteria,
            polarity,
            weights,
            experts,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn polarity(&self) -> &[Polarity] {
        &self.polarity
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn experts(&self) -> &[Matrix<Pfv>] {
        &self.experts
    }

    /// Swaps `μ` and `ν` of every evaluation under a cost criterion.
    pub fn normalize(&self) -> DecisionProblem {
        let experts = self
            .experts
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| {
                        row.iter()
                            .zip(&self.polarity)
                            .map(|(p, pol)| match pol {
                                Polarity::Benefit => *p,
                                Polarity::Cost => p.complement(),
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        DecisionProblem {
            experts,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankEntry {
    pub label: String,
    /// Position of the alternative in the problem.
    pub index: usize,
    pub score: f64,
    /// Set when the score equals that of a neighbouring entry.
    pub tied: bool,
}

/// Alternatives ordered best first.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    entries: Vec<RankEntry>,
}

impl Ranking {
    /// Sorts by descending score; equal scores keep their input order.
    pub fn from_scores(labels: &[String], scores: &[f64]) -> Self {
        let mut entries: Vec<RankEntry> = labels
            .iter()
            .zip(scores)
            .enumerate()
            .map(|(index, (label, &score))| RankEntry {
                label: label.clone(),
                index,
                score,
                tied: false,
            })
            .collect();
        entries.sort_by(|a, b| b.score.total_cmp(&a.score));
        for i in 1..entries.len() {
            if entries[i].score == entries[i - 1].score {
                entries[i].tied = true;
                entries[i - 1].tied = true;
            }
        }
        Self { entries }
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn best(&self) -> Option<&RankEntry> {
        self.entries.first()
    }

    pub fn has_ties(&self) -> bool {
        self.entries.iter().any(|e| e.tied)
    }

    /// Worst-to-best chain such as `A1 < A4 < A3 < A2 < A5`; tied neighbours
    /// are joined with `=`.
    pub fn ascending(&self) -> String {
        let mut out = String::new();
        let rev: Vec<&RankEntry> = self.entries.iter().rev().collect();
        for (i, e) in rev.iter().enumerate() {
            if i > 0 {
                out.push_str(if e.score == rev[i - 1].score {
                    " = "
                } else {
                    " < "
                });
            }
            out.push_str(&e.label);
        }
        out
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascending())
    }
}

/// Every intermediate table of a run.
#[derive(Debug, Clone)]
pub struct Solution {
    pub normalized: DecisionProblem,
    /// Fused alternatives × criteria matrix.
    pub circular: Matrix<Cpfv>,
    /// One aggregated value per alternative.
    pub aggregated: Vec<Cpfv>,
    /// Similarity of each aggregated value to the ideal, in alternative order.
    pub scores: Vec<f64>,
    pub ranking: Ranking,
}

pub fn solve(problem: &DecisionProblem, aggregator: &Aggregator) -> Result<Solution> {
    let normalized = problem.normalize();
    let circular = build_circular_matrix(normalized.experts())?;
    let aggregated = circular
        .iter()
        .map(|row| aggregator.aggregate(row, normalized.weights()))
        .collect::<Result<Vec<_>>>()?;
    let scores = aggregated
        .iter()
        .map(csm_to_ideal)
        .collect::<Result<Vec<_>>>()?;
    let ranking = Ranking::from_scores(normalized.alternatives(), &scores);
    Ok(Solution {
        normalized,
        circular,
        aggregated,
        scores,
        ranking,
    })
}

/// Estimated operation count for `k` criteria, `n` alternatives and `m`
/// experts: `k + 2kn(6m + 7) + 25n` for the q-radius operators and
/// `k + 4kn(3m + 4) + 27n` for the p-radius ones.
pub fn complexity_estimate(k: u64, n: u64, m: u64, operator: Operator) -> Result<u64> {
    if k < 2 || n < 2 {
        return Err(Error::DomainError(format!(
            "need at least 2 criteria and 2 alternatives (k = {k}, n = {n})"
        )));
    }
    if m < 1 {
        return Err(Error::DomainError("need at least one expert".into()));
    }
    let overflow = || Error::DomainError("operation count overflows u64".into());
    let (factor, per_expert, constant, per_alt) = match operator.radius {
        RadiusGenerator::Q => (2u64, 6u64, 7u64, 25u64),
        RadiusGenerator::P => (4, 3, 4, 27),
    };
    let inner = per_expert
        .checked_mul(m)
        .and_then(|x| x.checked_add(constant))
        .ok_or_else(overflow)?;
    factor
        .checked_mul(k)
        .and_then(|x| x.checked_mul(n))
        .and_then(|x| x.checked_mul(inner))
        .and_then(|x| x.checked_add(k))
        .and_then(|x| x.checked_add(per_alt.checked_mul(n)?))
        .ok_or_else(overflow)
}
