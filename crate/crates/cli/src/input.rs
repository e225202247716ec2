//! On-disk shape of decision problems and PFV collections.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cpfs::fusion::Matrix;
use cpfs::{DecisionProblem, Pfv, Polarity, WeightVector};
use serde::{Deserialize, Serialize};

/// A decision problem as written in an input file. Each expert is an
/// alternatives × criteria array of `[mu, nu]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    pub polarity: Vec<String>,
    pub weights: Vec<f64>,
    pub experts: Vec<Vec<Vec<[f64; 2]>>>,
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn pfv_at(pair: [f64; 2], at: impl FnOnce() -> String) -> Result<Pfv> {
    Pfv::new(pair[0], pair[1]).map_err(|e| anyhow!("{}: {e}", at()))
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<DecisionProblem> {
        let file: ProblemFile = read_json(path)?;
        file.to_problem()
            .with_context(|| format!("invalid problem in {}", path.display()))
    }

    /// Validates every field, naming the offending location on failure.
    pub fn to_problem(&self) -> Result<DecisionProblem> {
        let (n_alt, n_crit) = (self.alternatives.len(), self.criteria.len());
        let polarity = self
            .polarity
            .iter()
            .enumerate()
            .map(|(j, p)| {
                p.parse::<Polarity>()
                    .map_err(|e| anyhow!("polarity[{j}]: {e}"))
            })
            .collect::<Result<Vec<_>>>()?;
        if polarity.len() != n_crit {
            bail!("polarity: {} entries for {n_crit} criteria", polarity.len());
        }
        if self.weights.len() != n_crit {
            bail!(
                "weights: {} entries for {n_crit} criteria",
                self.weights.len()
            );
        }
        let weights =
            WeightVector::new(self.weights.clone()).map_err(|e| anyhow!("weights: {e}"))?;
        if self.experts.is_empty() {
            bail!("experts: no expert matrices given");
        }
        let mut experts: Vec<Matrix<Pfv>> = Vec::with_capacity(self.experts.len());
        for (e, m) in self.experts.iter().enumerate() {
            if m.len() != n_alt {
                bail!("experts[{e}]: {} rows for {n_alt} alternatives", m.len());
            }
            let mut rows = Vec::with_capacity(n_alt);
            for (i, row) in m.iter().enumerate() {
                if row.len() != n_crit {
                    bail!(
                        "experts[{e}][{i}]: {} cells for {n_crit} criteria",
                        row.len()
                    );
                }
                let cells = row
                    .iter()
                    .enumerate()
                    .map(|(j, &pair)| pfv_at(pair, || format!("experts[{e}][{i}][{j}]")))
                    .collect::<Result<Vec<_>>>()?;
                rows.push(cells);
            }
            experts.push(rows);
        }
        DecisionProblem::new(
            self.alternatives.clone(),
            self.criteria.clone(),
            polarity,
            weights,
            experts,
        )
        .map_err(|e| anyhow!("{e}"))
    }

    pub fn from_problem(p: &DecisionProblem) -> Self {
        Self {
            alternatives: p.alternatives().to_vec(),
            criteria: p.criteria().to_vec(),
            polarity: p.polarity().iter().map(|x| x.as_str().to_owned()).collect(),
            weights: p.weights().as_slice().to_vec(),
            experts: p
                .experts()
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|row| row.iter().map(|c| [c.mu(), c.nu()]).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

/// Reads a JSON array of collections, each an array of `[mu, nu]` pairs.
pub fn load_collections(path: &Path) -> Result<Vec<Vec<Pfv>>> {
    let raw: Vec<Vec<[f64; 2]>> = read_json(path)?;
    raw.iter()
        .enumerate()
        .map(|(k, coll)| {
            if coll.is_empty() {
                bail!("[{k}]: empty collection");
            }
            coll.iter()
                .enumerate()
                .map(|(i, &pair)| pfv_at(pair, || format!("[{k}][{i}]")))
                .collect()
        })
        .collect::<Result<_>>()
        .with_context(|| format!("invalid collections in {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUNDLED: &str = include_str!("../data/case_study.json");

    fn bundled() -> ProblemFile {
        serde_json::from_str(BUNDLED).unwrap()
    }

    #[test]
    fn round_trip_is_identity() {
        let problem = bundled().to_problem().unwrap();
        let text = serde_json::to_string_pretty(&ProblemFile::from_problem(&problem)).unwrap();
        let again: ProblemFile = serde_json::from_str(&text).unwrap();
        assert_eq!(again, bundled());
        assert_eq!(again.to_problem().unwrap(), problem);
    }

    #[test]
    fn errors_name_their_location() {
        let mut f = bundled();
        f.weights[0] = 0.1;
        assert!(f
            .to_problem()
            .unwrap_err()
            .to_string()
            .starts_with("weights:"));

        let mut f = bundled();
        f.experts[0][1][2] = [0.9, 0.9];
        assert!(f
            .to_problem()
            .unwrap_err()
            .to_string()
            .starts_with("experts[0][1][2]:"));

        let mut f = bundled();
        f.experts[2][4].pop();
        assert!(f
            .to_problem()
            .unwrap_err()
            .to_string()
            .starts_with("experts[2][4]:"));

        let mut f = bundled();
        f.polarity[3] = "neutral".into();
        assert!(f
            .to_problem()
            .unwrap_err()
            .to_string()
            .starts_with("polarity[3]:"));

        let mut f = bundled();
        f.weights.push(0.0);
        assert!(f
            .to_problem()
            .unwrap_err()
            .to_string()
            .starts_with("weights:"));
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = BUNDLED.replacen('{', "{\"extra\": 1,", 1);
        let err = serde_json::from_str::<ProblemFile>(&text).unwrap_err();
        assert!(err.to_string().contains("unknown field"), "{err}");
        assert_eq!(err.line(), 1);
    }
}
