//! Probability-over-position records, the unit of CSV output.

use crate::error::{Error, Result};
use crate::topology::Topology;

/// A probability distribution over the positions of a topology, either an
/// instantaneous snapshot (`t_or_horizon` = step count) or a time average
/// (`t_or_horizon` = averaging horizon).
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionRecord {
    pub topo: Topology,
    pub t_or_horizon: usize,
    pub probs: Vec<f64>,
}

impl DistributionRecord {
    pub fn new(topo: Topology, t_or_horizon: usize, probs: Vec<f64>) -> Self {
        debug_assert_eq!(probs.len(), topo.slots());
        Self {
            topo,
            t_or_horizon,
            probs,
        }
    }

    /// Total mass; 1 within 1e-12 for anything produced by evolution.
    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// `(position, probability)` pairs in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.topo.positions().zip(self.probs.iter().copied())
    }

    /// Probability at position `x`.
    pub fn at(&self, x: i64) -> Result<f64> {
        let i = self.topo.index_of(x).ok_or(Error::InvalidPosition(x))?;
        Ok(self.probs[i])
    }

    /// Total-variation distance to the uniform distribution over `n` points:
    /// `(1/2) Σ_x |p(x) − 1/n|`.
    pub fn tv_to_uniform(&self, n: usize) -> Result<f64> {
        if self.probs.len() != n {
            return Err(Error::SizeMismatch {
                len: self.probs.len(),
                n,
            });
        }
        let u = 1.0 / n as f64;
        Ok(0.5 * self.probs.iter().map(|p| (p - u).abs()).sum::<f64>())
    }

    /// Largest pointwise probability difference against `other`.
    pub fn max_abs_diff(&self, other: &DistributionRecord) -> f64 {
        self.probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
