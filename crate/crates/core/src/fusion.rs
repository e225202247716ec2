//! Fusion of several PFVs into one C-PFV.
//!
//! The center is the componentwise quadratic mean of the collection and the
//! radius is the largest Euclidean distance from that center to any member,
//! capped at 1. Because `μ² + ν² ≤ 1` holds for every member it holds for
//! the quadratic means too.

use crate::model::{Cpfv, Pfv};
use crate::{Error, Result};

/// An alternatives × criteria matrix.
pub type Matrix<T> = Vec<Vec<T>>;

pub fn fuse(collection: &[Pfv]) -> Result<Cpfv> {
    if collection.is_empty() {
        return Err(Error::EmptyInput);
    }
    let k = collection.len() as f64;
    let mu = (collection.iter().map(|p| p.mu() * p.mu()).sum::<f64>() / k).sqrt();
    let nu = (collection.iter().map(|p| p.nu() * p.nu()).sum::<f64>() / k).sqrt();
    let spread = collection
        .iter()
        .map(|p| (mu - p.mu()).hypot(nu - p.nu()))
        .fold(0.0, f64::max);
    Ok(Cpfv::new_unchecked(mu, nu, spread.min(1.0)))
}

/// Fuses a stack of per-expert matrices cell by cell.
pub fn build_circular_matrix(experts: &[Matrix<Pfv>]) -> Result<Matrix<Cpfv>> {
    let first = experts.first().ok_or(Error::EmptyInput)?;
    let rows = first.len();
    let cols = first.first().map_or(0, Vec::len);
    for (e, m) in experts.iter().enumerate() {
        if m.len() != rows {
            return Err(Error::DimensionMismatch(format!(
                "expert {e} has {} alternatives, expected {rows}",
                m.len()
            )));
        }
        if let Some((i, row)) = m.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "expert {e}, alternative {i} has {} criteria, expected {cols}",
                row.len()
            )));
        }
    }
    let mut cell = Vec::with_capacity(experts.len());
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    cell.clear();
                    cell.extend(experts.iter().map(|m| m[i][j]));
                    fuse(&cell)
                })
                .collect()
        })
        .collect()
}
