//! Time-averaged distributions and mixing on the n-cycle.
//!
//! The instantaneous distribution of a unitary walk never converges, but its
//! running time average does; distance of that average to the uniform
//! distribution is the mixing diagnostic used here.

use crate::coin::{CoinMatrix, CoinParams, InitialSpin};
use crate::distribution::DistributionRecord;
use crate::error::{Error, Result};
use crate::state::WalkState;
use crate::topology::Topology;

/// The exact time average `p̄(x, T) = (1/T) Σ_{t=0}^{T−1} p(x, t)` on a
/// cycle — the expectation of the "pick a random stopping time below T"
/// sampling scheme, computed deterministically.
pub fn time_averaged_distribution(
    coin: CoinParams,
    spin: InitialSpin,
    topo: Topology,
    horizon: usize,
) -> Result<DistributionRecord> {
    if topo.is_line() {
        return Err(Error::CycleRequired);
    }
    if horizon == 0 {
        return Err(Error::EmptyHorizon);
    }
    let matrix = CoinMatrix::new(coin)?;
    let mut state = WalkState::localized(spin, topo)?;
    let mut acc = state.distribution().probs;
    for _ in 1..horizon {
        state.step(&matrix)?;
        for (a, p) in acc.iter_mut().zip(state.distribution().probs) {
            *a += p;
        }
    }
    let scale = 1.0 / horizon as f64;
    for a in acc.iter_mut() {
        *a *= scale;
    }
    Ok(DistributionRecord::new(topo, horizon, acc))
}

/// Distance-to-uniform of the time average at every horizon `T = 1..=t_max`,
/// from a single evolution with a running accumulator.
pub fn mixing_profile(
    coin: CoinParams,
    spin: InitialSpin,
    n: usize,
    t_max: usize,
) -> Result<Vec<(usize, f64)>> {
    let topo = Topology::cycle(n)?;
    if t_max == 0 {
        return Err(Error::EmptyHorizon);
    }
    let matrix = CoinMatrix::new(coin)?;
    let mut state = WalkState::localized(spin, topo)?;
    let uniform = 1.0 / n as f64;
    let mut acc = state.distribution().probs;
    let mut out = Vec::with_capacity(t_max);
    for horizon in 1..=t_max {
        if horizon > 1 {
            state.step(&matrix)?;
            for (a, p) in acc.iter_mut().zip(state.distribution().probs) {
                *a += p;
            }
        }
        let tv = 0.5
            * acc
                .iter()
                .map(|a| (a / horizon as f64 - uniform).abs())
                .sum::<f64>();
        out.push((horizon, tv));
    }
    Ok(out)
}
