//! The classical symmetric random walk on the line, the baseline the quantum
//! results are compared against.

/// Probability that a symmetric ±1 walk is back at the origin after `t`
/// steps: `C(t, t/2) / 2^t` for even `t`, zero for odd `t`.
///
/// Computed as the running product `Π_{k=1}^{m} (2k−1)/(2k)` with `m = t/2`;
/// every factor lies in (0, 1), so nothing overflows no matter how large `t`
/// gets (raw factorials would blow past u64 near t = 60).
pub fn return_probability(t: usize) -> f64 {
    if t % 2 == 1 {
        return 0.0;
    }
    let mut p = 1.0;
    for k in 1..=(t / 2) {
        p *= (2 * k - 1) as f64 / (2 * k) as f64;
    }
    p
}

/// Return probabilities and partial classical Pólya numbers up to a horizon.
#[derive(Debug, Clone)]
pub struct ClassicalSeries {
    /// `p0[t]`, `t = 0..=horizon`.
    pub p0: Vec<f64>,
    /// `polya_partial[T] = 1 − 1 / Σ_{t=0}^{T} p0(t)`.
    pub polya_partial: Vec<f64>,
}

impl ClassicalSeries {
    pub fn horizon(&self) -> usize {
        self.p0.len() - 1
    }

    pub fn final_polya(&self) -> f64 {
        *self.polya_partial.last().unwrap()
    }
}

/// Builds the series incrementally; the `t = 0` term (probability 1) is
/// included in the sum, so the partial Pólya number starts at 0 and climbs
/// towards 1 as the divergent return sum grows.
pub fn polya_partial_series(horizon: usize) -> ClassicalSeries {
    let mut p0 = Vec::with_capacity(horizon + 1);
    let mut polya_partial = Vec::with_capacity(horizon + 1);
    let mut even_return = 1.0; // return probability at the latest even step
    let mut sum = 0.0;
    for t in 0..=horizon {
        let p = if t % 2 == 1 {
            0.0
        } else {
            if t > 0 {
                even_return *= (t - 1) as f64 / t as f64;
            }
            even_return
        };
        p0.push(p);
        sum += p;
        polya_partial.push(1.0 - 1.0 / sum);
    }
    ClassicalSeries { p0, polya_partial }
}
