//! The state-vector evolution engine.

use num_complex::Complex64;

use crate::coin::{CoinMatrix, InitialSpin};
use crate::distribution::DistributionRecord;
use crate::error::{Error, Result};
use crate::topology::Topology;

/// Full two-component complex amplitude field of a walker.
///
/// `left[i]` is the `|0⟩` (left-propagating) amplitude at the position stored
/// in slot `i`, `right[i]` the `|1⟩` (right-propagating) one. The step
/// counter `t` equals the number of shifts applied so far; on the line the
/// support after `t` steps is contained in `−t..=+t`, and positions whose
/// parity differs from `t` carry exactly zero amplitude.
///
/// Evolution mutates in place; states are plain values and can be cloned to
/// branch (see [`WalkState::measure_at`]).
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    topo: Topology,
    t: usize,
    left: Vec<Complex64>,
    right: Vec<Complex64>,
}

impl WalkState {
    /// A walker at position 0 with coin state `cos(δ)|0⟩ + e^{iη} sin(δ)|1⟩`.
    pub fn localized(spin: InitialSpin, topo: Topology) -> Result<Self> {
        let slots = topo.slots();
        let origin = topo
            .index_of(0)
            .expect("every topology contains the origin");
        let mut left = vec![Complex64::ZERO; slots];
        let mut right = vec![Complex64::ZERO; slots];
        let (a0, a1) = spin.spinor();
        left[origin] = a0;
        right[origin] = a1;
        Ok(Self {
            topo,
            t: 0,
            left,
            right,
        })
    }

    pub fn topology(&self) -> Topology {
        self.topo
    }

    /// Number of shifts applied since the initial state.
    pub fn time(&self) -> usize {
        self.t
    }

    /// The `(|0⟩, |1⟩)` amplitude pair at position `x`.
    pub fn amplitude(&self, x: i64) -> Result<(Complex64, Complex64)> {
        let i = self.topo.index_of(x).ok_or(Error::InvalidPosition(x))?;
        Ok((self.left[i], self.right[i]))
    }

    /// Total probability; exactly 1 up to floating-point drift.
    pub fn norm_sqr(&self) -> f64 {
        self.left
            .iter()
            .zip(&self.right)
            .map(|(l, r)| l.norm_sqr() + r.norm_sqr())
            .sum()
    }

    /// Rotates the coin at every position: `(l, r) ← (c00·l + c01·r, c10·l + c11·r)`.
    ///
    /// Does not advance `t`.
    pub fn apply_coin(&mut self, coin: &CoinMatrix) {
        for (l, r) in self.left.iter_mut().zip(self.right.iter_mut()) {
            let (nl, nr) = coin.apply(*l, *r);
            *l = nl;
            *r = nr;
        }
    }

    /// Conditional translation: `|0⟩` amplitude moves one site down,
    /// `|1⟩` amplitude one site up (mod n on a cycle). Advances `t`.
    ///
    /// On a line the move is refused once the step budget is spent, since the
    /// wavefront would fall off the pre-allocated window.
    pub fn shift(&mut self) -> Result<()> {
        match self.topo {
            Topology::Line { max_steps } => {
                if self.t >= max_steps {
                    return Err(Error::WindowOverflow(max_steps));
                }
                // While t < max_steps the outermost slots hold exactly zero,
                // so the rotation cannot wrap amplitude around the window.
                debug_assert!(self.left[0] == Complex64::ZERO);
                debug_assert!(self.right[self.right.len() - 1] == Complex64::ZERO);
                self.left.rotate_left(1);
                self.right.rotate_right(1);
            }
            Topology::Cycle { .. } => {
                self.left.rotate_left(1);
                self.right.rotate_right(1);
            }
        }
        self.t += 1;
        Ok(())
    }

    /// One walk step: coin rotation followed by the conditional shift.
    pub fn step(&mut self, coin: &CoinMatrix) -> Result<()> {
        self.apply_coin(coin);
        self.shift()
    }

    /// Applies `steps` walk steps.
    pub fn evolve(&mut self, coin: &CoinMatrix, steps: usize) -> Result<()> {
        for _ in 0..steps {
            self.step(coin)?;
        }
        Ok(())
    }

    /// Exactly undoes one [`WalkState::step`] with the same coin.
    pub fn inverse_step(&mut self, coin: &CoinMatrix) -> Result<()> {
        if self.t == 0 {
            return Err(Error::NothingToUndo);
        }
        // Inverse shift. The |0⟩ component never reaches the top slot and the
        // |1⟩ component never reaches the bottom one, so rotating back is safe.
        debug_assert!(self.left[self.left.len() - 1] == Complex64::ZERO || !self.topo.is_line());
        debug_assert!(self.right[0] == Complex64::ZERO || !self.topo.is_line());
        self.left.rotate_right(1);
        self.right.rotate_left(1);
        self.t -= 1;
        self.apply_coin(&coin.dagger());
        Ok(())
    }

    /// Probability of finding the walker at `x`: `|Ψᴸ(x)|² + |Ψᴿ(x)|²`.
    pub fn probability_at(&self, x: i64) -> Result<f64> {
        let (l, r) = self.amplitude(x)?;
        Ok(l.norm_sqr() + r.norm_sqr())
    }

    /// Projective position measurement at `x`.
    ///
    /// Returns the detection probability together with the post-measurement
    /// state: all amplitude outside `x` is discarded and the spinor at `x` is
    /// renormalized (its global phase kept as-is). When the detection
    /// probability is exactly zero there is no state to collapse onto and
    /// `None` is returned.
    pub fn measure_at(&self, x: i64) -> Result<(f64, Option<WalkState>)> {
        let i = self.topo.index_of(x).ok_or(Error::InvalidPosition(x))?;
        let p = self.left[i].norm_sqr() + self.right[i].norm_sqr();
        if p == 0.0 {
            return Ok((0.0, None));
        }
        let scale = 1.0 / p.sqrt();
        let mut collapsed = Self {
            topo: self.topo,
            t: self.t,
            left: vec![Complex64::ZERO; self.left.len()],
            right: vec![Complex64::ZERO; self.right.len()],
        };
        collapsed.left[i] = self.left[i] * scale;
        collapsed.right[i] = self.right[i] * scale;
        Ok((p, Some(collapsed)))
    }

    /// The position distribution `p(x) = |Ψᴸ(x)|² + |Ψᴿ(x)|²`.
    pub fn distribution(&self) -> DistributionRecord {
        let probs = self
            .left
            .iter()
            .zip(&self.right)
            .map(|(l, r)| l.norm_sqr() + r.norm_sqr())
            .collect();
        DistributionRecord::new(self.topo, self.t, probs)
    }

    /// Position variance `Σ p(x)·x² − (Σ p(x)·x)²`. Line only: on a cycle
    /// position labels are periodic and the moment is meaningless.
    pub fn variance(&self) -> Result<f64> {
        if !self.topo.is_line() {
            return Err(Error::VarianceOnCycle);
        }
        let mut mean = 0.0;
        let mut second = 0.0;
        for (i, (l, r)) in self.left.iter().zip(&self.right).enumerate() {
            let p = l.norm_sqr() + r.norm_sqr();
            let x = self.topo.position_at(i) as f64;
            mean += p * x;
            second += p * x * x;
        }
        Ok(second - mean * mean)
    }
}
