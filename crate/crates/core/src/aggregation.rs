//! Weighted arithmetic (CPWA) and geometric (CPWG) aggregation.
//!
//! Both operators work in generator space:
//!
//! ```text
//! CPWA = ⟨h⁻¹(Σ wᵢ h(μᵢ)), g⁻¹(Σ wᵢ g(νᵢ)); q⁻¹(Σ wᵢ q(rᵢ))⟩
//! CPWG = ⟨g⁻¹(Σ wᵢ g(μᵢ)), h⁻¹(Σ wᵢ h(νᵢ)); q⁻¹(Σ wᵢ q(rᵢ))⟩
//! ```
//!
//! Components with zero weight are skipped, so a zero component paired with a
//! zero weight never produces `0 · ∞`.

use std::fmt;
use std::str::FromStr;

use crate::generators::{Generator, GeneratorPair, RadiusGenerator};
use crate::model::Cpfv;
use crate::{Error, Result};

/// Tolerance on `Σ wᵢ = 1`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Non-negative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("weight vector is empty".into()));
        }
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || !(0.0..=1.0).contains(*w))
        {
            return Err(Error::InvalidWeights(format!(
                "weight {i} = {w} is outside [0, 1]"
            )));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        Ok(Self(weights))
    }

    /// Equal weights `1/n`.
    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_inputs(values: &[Cpfv], w: &WeightVector) -> Result<()> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if values.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            actual: values.len(),
        });
    }
    Ok(())
}

fn weighted_mean(
    gen: &dyn Generator,
    values: &[Cpfv],
    w: &WeightVector,
    component: impl Fn(&Cpfv) -> f64,
) -> f64 {
    let total: f64 = values
        .iter()
        .zip(w.as_slice())
        .filter(|(_, &wi)| wi > 0.0)
        .map(|(v, &wi)| wi * gen.forward(component(v)))
        .sum();
    gen.inverse(total)
}

/// Circular Pythagorean weighted arithmetic aggregation.
pub fn cpwa(values: &[Cpfv], w: &WeightVector, gens: &GeneratorPair) -> Result<Cpfv> {
    check_inputs(values, w)?;
    Ok(Cpfv::new_unchecked(
        weighted_mean(&*gens.h, values, w, Cpfv::mu),
        weighted_mean(&*gens.g, values, w, Cpfv::nu),
        weighted_mean(&*gens.q, values, w, Cpfv::r),
    ))
}

/// Circular Pythagorean weighted geometric aggregation.
pub fn cpwg(values: &[Cpfv], w: &WeightVector, gens: &GeneratorPair) -> Result<Cpfv> {
    check_inputs(values, w)?;
    Ok(Cpfv::new_unchecked(
        weighted_mean(&*gens.g, values, w, Cpfv::mu),
        weighted_mean(&*gens.h, values, w, Cpfv::nu),
        weighted_mean(&*gens.q, values, w, Cpfv::r),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AggregationKind {
    Arithmetic,
    Geometric,
}

/// One of the four built-in algebraic operators: `cpwa_q`, `cpwa_p`,
/// `cpwg_q`, `cpwg_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Operator {
    pub kind: AggregationKind,
    pub radius: RadiusGenerator,
}

impl Operator {
    pub const CPWA_Q: Operator = Operator::new(AggregationKind::Arithmetic, RadiusGenerator::Q);
    pub const CPWA_P: Operator = Operator::new(AggregationKind::Arithmetic, RadiusGenerator::P);
    pub const CPWG_Q: Operator = Operator::new(AggregationKind::Geometric, RadiusGenerator::Q);
    pub const CPWG_P: Operator = Operator::new(AggregationKind::Geometric, RadiusGenerator::P);

    pub const ALL: [Operator; 4] = [
        Operator::CPWA_Q,
        Operator::CPWA_P,
        Operator::CPWG_Q,
        Operator::CPWG_P,
    ];

    pub const fn new(kind: AggregationKind, radius: RadiusGenerator) -> Self {
        Self { kind, radius }
    }

    pub fn id(&self) -> &'static str {
        match (self.kind, self.radius) {
            (AggregationKind::Arithmetic, RadiusGenerator::Q) => "cpwa_q",
            (AggregationKind::Arithmetic, RadiusGenerator::P) => "cpwa_p",
            (AggregationKind::Geometric, RadiusGenerator::Q) => "cpwg_q",
            (AggregationKind::Geometric, RadiusGenerator::P) => "cpwg_p",
        }
    }

    pub fn aggregator(&self) -> Aggregator {
        Aggregator {
            kind: self.kind,
            gens: GeneratorPair::algebraic(self.radius),
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Operator::ALL
            .into_iter()
            .find(|op| op.id() == s)
            .ok_or_else(|| Error::UnknownOperator(s.to_string()))
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// An aggregation kind bound to a concrete generator pair; this is how
/// user-supplied generators enter the decision pipeline.
#[derive(Debug, Clone)]
pub struct Aggregator {
    pub kind: AggregationKind,
    pub gens: GeneratorPair,
}

impl Aggregator {
    pub fn aggregate(&self, values: &[Cpfv], w: &WeightVector) -> Result<Cpfv> {
        match self.kind {
            AggregationKind::Arithmetic => cpwa(values, w, &self.gens),
            AggregationKind::Geometric => cpwg(values, w, &self.gens),
        }
    }
}

impl From<Operator> for Aggregator {
    fn from(op: Operator) -> Self {
        op.aggregator()
    }
}
