//! Return probabilities, the quantum Pólya number, and the measurement
//! witness that separates complete recurrence, fractional recurrence, and
//! transience.

use crate::coin::{CoinMatrix, CoinParams, InitialSpin};
use crate::distribution::DistributionRecord;
use crate::error::{Error, Result};
use crate::state::WalkState;
use crate::topology::Topology;

/// Default threshold below which a probability deficit `1 − p0(t)` counts as
/// an exact revival. True revivals stay within ~1e-12 of 1 over thousands of
/// double-precision steps; near-misses on small cycles stop short of 1 by
/// 1e-3 or more.
pub const DEFAULT_EPS_REC: f64 = 1e-9;

/// The origin-return probability series `p0(t)`, `t = 0..=horizon`, of an
/// unmeasured walk.
#[derive(Debug, Clone)]
pub struct RecurrenceSeries {
    pub coin: CoinParams,
    pub spin: InitialSpin,
    pub topo: Topology,
    /// `p0[t]` is the probability at the origin after `t` steps.
    pub p0: Vec<f64>,
}

impl RecurrenceSeries {
    pub fn horizon(&self) -> usize {
        self.p0.len() - 1
    }
}

/// Evolves one walk continuously and records the origin probability after
/// every step. No measurement is performed, so this equals measuring a fresh
/// copy at each horizon.
pub fn p0_series(
    coin: CoinParams,
    spin: InitialSpin,
    topo: Topology,
    horizon: usize,
) -> Result<RecurrenceSeries> {
    let matrix = CoinMatrix::new(coin)?;
    let mut state = WalkState::localized(spin, topo)?;
    let mut p0 = Vec::with_capacity(horizon + 1);
    p0.push(state.probability_at(0)?);
    for _ in 0..horizon {
        state.step(&matrix)?;
        p0.push(state.probability_at(0)?);
    }
    Ok(RecurrenceSeries {
        coin,
        spin,
        topo,
        p0,
    })
}

/// Partial quantum Pólya numbers of a return series.
#[derive(Debug, Clone)]
pub struct PolyaResult {
    /// `partial_products[T] = 1 − Π_{t=1}^{T} [1 − p0(t)]`; the entry at
    /// `T = 0` is 0 (empty product).
    pub partial_products: Vec<f64>,
    /// Set when some `p0(t)`, `t ≥ 1`, reaches `1 − eps_rec`.
    pub recurrence_detected: bool,
}

impl PolyaResult {
    /// The deepest partial product, `P` at the series horizon.
    pub fn value(&self) -> f64 {
        *self.partial_products.last().unwrap()
    }
}

/// Folds the series into `P(T) = 1 − Π_{t=1}^{T} [1 − p0(t)]` for every
/// horizon `T`. The `t = 0` entry is excluded from the product: the walker
/// starts at the origin, so including it would pin `P = 1` always.
pub fn polya_number(series: &RecurrenceSeries, eps_rec: f64) -> PolyaResult {
    debug_assert!(eps_rec > 0.0 && eps_rec < 1.0);
    let mut partial_products = Vec::with_capacity(series.p0.len());
    partial_products.push(0.0);
    let mut product = 1.0;
    let mut detected = false;
    for &p in &series.p0[1..] {
        product *= 1.0 - p;
        partial_products.push(1.0 - product);
        if p >= 1.0 - eps_rec {
            detected = true;
        }
    }
    PolyaResult {
        partial_products,
        recurrence_detected: detected,
    }
}

/// Outcome of the two-copy measurement witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceVerdict {
    /// The wave packet relocalizes completely; measuring it at the revival
    /// time leaves later evolution unchanged.
    CompleteRecurrence,
    /// Only part of the wave packet returns, so the measured and unmeasured
    /// copies disagree afterwards.
    FractionalRecurrence,
    /// Nothing returns to the origin.
    Transient,
}

impl RecurrenceVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            RecurrenceVerdict::CompleteRecurrence => "CompleteRecurrence",
            RecurrenceVerdict::FractionalRecurrence => "FractionalRecurrence",
            RecurrenceVerdict::Transient => "Transient",
        }
    }
}

/// Comparison of two identically prepared walks, one measured at the origin
/// at time `T` and evolved one more step, the other evolved to `T + 1`
/// untouched.
#[derive(Debug, Clone)]
pub struct WitnessReport {
    /// The measurement time `T`.
    pub horizon: usize,
    /// Detection probability at the origin at time `T`.
    pub p_origin: f64,
    /// Distribution at `T + 1` after a successful origin detection at `T`;
    /// `None` when the detection probability is exactly zero.
    pub measured: Option<DistributionRecord>,
    /// Distribution at `T + 1` of the copy that was never measured.
    pub unmeasured: DistributionRecord,
    /// Largest pointwise difference between the two branches (the measured
    /// branch counts as all-zero when detection is impossible).
    pub max_abs_diff: f64,
    pub verdict: RecurrenceVerdict,
}

/// Runs the comparative evolution of two identically prepared walkers.
///
/// The measured branch conditions on the detection succeeding: when
/// `0 < p_origin < 1` the collapsed state is the fractional wave packet that
/// did return. On a line topology the budget must allow `T + 1` steps.
pub fn recurrence_witness(
    coin: CoinParams,
    spin: InitialSpin,
    topo: Topology,
    horizon: usize,
    eps_rec: f64,
) -> Result<WitnessReport> {
    if horizon < 1 {
        return Err(Error::SeriesTooShort {
            got: horizon,
            need: 1,
        });
    }
    let matrix = CoinMatrix::new(coin)?;

    let mut first = WalkState::localized(spin, topo)?;
    first.evolve(&matrix, horizon)?;
    let (p_origin, collapsed) = first.measure_at(0)?;
    let measured = match collapsed {
        Some(mut state) => {
            state.step(&matrix)?;
            Some(state.distribution())
        }
        None => None,
    };

    let mut second = WalkState::localized(spin, topo)?;
    second.evolve(&matrix, horizon + 1)?;
    let unmeasured = second.distribution();

    let max_abs_diff = match &measured {
        Some(d) => d.max_abs_diff(&unmeasured),
        None => unmeasured.probs.iter().copied().fold(0.0, f64::max),
    };

    let verdict = if p_origin <= eps_rec {
        RecurrenceVerdict::Transient
    } else if p_origin >= 1.0 - eps_rec && max_abs_diff <= eps_rec {
        RecurrenceVerdict::CompleteRecurrence
    } else {
        RecurrenceVerdict::FractionalRecurrence
    };

    Ok(WitnessReport {
        horizon,
        p_origin,
        measured,
        unmeasured,
        max_abs_diff,
        verdict,
    })
}

/// Stability functional for the `p0(t) = O(1/t)` origin decay: the largest
/// `t · p0(t)` over even `t` in the top half of the series. Comparing the
/// value across horizons checks that `t · p0(t)` stays bounded.
///
/// Odd steps are skipped because parity makes their origin probability
/// exactly zero, which says nothing about the decay rate.
pub fn decay_check(series: &RecurrenceSeries) -> Result<f64> {
    let horizon = series.horizon();
    if horizon < 100 {
        return Err(Error::SeriesTooShort {
            got: horizon,
            need: 100,
        });
    }
    let lo = horizon / 2;
    let sup = (lo..=horizon)
        .filter(|t| t % 2 == 0)
        .map(|t| t as f64 * series.p0[t])
        .fold(0.0, f64::max);
    Ok(sup)
}
