//! Radius-aware cosine similarity.
//!
//! `CSM(a, b)` averages the cosine of the angle between the squared centers
//! `(μ², ν²)` with `1 − |ra − rb|`:
//!
//! ```text
//! CSM(a, b) = ½ · ( (μa²μb² + νa²νb²) / (√(μa⁴ + νa⁴) · √(μb⁴ + νb⁴)) + 1 − |ra − rb| )
//! ```
//!
//! A score of 1 does not imply equal values: centers with proportional
//! squared components and equal radii also score 1.

use crate::model::Cpfv;
use crate::{Error, Result};

fn squares(a: &Cpfv) -> (f64, f64) {
    (a.mu() * a.mu(), a.nu() * a.nu())
}

fn squared_norm(a: &Cpfv) -> Result<f64> {
    let (m2, n2) = squares(a);
    let norm = m2.hypot(n2);
    if norm == 0.0 {
        return Err(Error::DegenerateCenter);
    }
    Ok(norm)
}

/// The cosine of the angle between `(μa², νa²)` and `(μb², νb²)`.
pub fn cosine_term(a: &Cpfv, b: &Cpfv) -> Result<f64> {
    let (na, nb) = (squared_norm(a)?, squared_norm(b)?);
    if a.center() == b.center() {
        return Ok(1.0);
    }
    let ((ma, na2), (mb, nb2)) = (squares(a), squares(b));
    // each product is formed from both sides symmetrically so CSM(a, b) and
    // CSM(b, a) agree bit for bit
    let dot = ma * mb + na2 * nb2;
    Ok((dot / (na * nb)).min(1.0))
}

pub fn csm(a: &Cpfv, b: &Cpfv) -> Result<f64> {
    let cos = cosine_term(a, b)?;
    Ok(0.5 * (cos + 1.0 - (a.r() - b.r()).abs()))
}

/// Similarity to the positive ideal `⟨1, 0; 1⟩`.
pub fn csm_to_ideal(a: &Cpfv) -> Result<f64> {
    csm(a, &Cpfv::IDEAL)
}
