//! The experiment runners. Each produces one CSV as an in-memory string;
//! all numbers are written with Rust's shortest round-trip float formatting,
//! so identical parameters give byte-identical output.

use std::fmt::Write;

use qwalk::classical;
use qwalk::mixing::time_averaged_distribution;
use qwalk::recurrence::{p0_series, polya_number, recurrence_witness};
use qwalk::{CoinMatrix, CoinParams, InitialSpin, Result, Topology, WalkState};

/// Coin, spin, and threshold shared by the quantum runs.
#[derive(Debug, Clone, Copy)]
pub struct WalkSettings {
    pub coin: CoinParams,
    pub spin: InitialSpin,
    pub eps_rec: f64,
}

/// `t,p0,one_minus_p0,polya_partial` for a line walk of `steps` steps.
pub fn line_csv(settings: &WalkSettings, steps: usize) -> Result<String> {
    let series = p0_series(settings.coin, settings.spin, Topology::line(steps), steps)?;
    let polya = polya_number(&series, settings.eps_rec);
    let mut out = String::from("t,p0,one_minus_p0,polya_partial\n");
    for (t, &p) in series.p0.iter().enumerate() {
        writeln!(out, "{t},{p},{},{}", 1.0 - p, polya.partial_products[t]).unwrap();
    }
    Ok(out)
}

/// `t,p0` for a walk on the n-cycle.
pub fn cycle_csv(settings: &WalkSettings, n: usize, steps: usize) -> Result<String> {
    let series = p0_series(settings.coin, settings.spin, Topology::cycle(n)?, steps)?;
    let mut out = String::from("t,p0\n");
    for (t, &p) in series.p0.iter().enumerate() {
        writeln!(out, "{t},{p}").unwrap();
    }
    Ok(out)
}

/// `x,p_avg` of the time-averaged distribution on the n-cycle, with the
/// distance to uniform as trailing metadata.
pub fn mixing_csv(settings: &WalkSettings, n: usize, horizon: usize) -> Result<String> {
    let topo = Topology::cycle(n)?;
    let avg = time_averaged_distribution(settings.coin, settings.spin, topo, horizon)?;
    let tv = avg.tv_to_uniform(n)?;
    let mut out = String::from("x,p_avg\n");
    for (x, p) in avg.iter() {
        writeln!(out, "{x},{p}").unwrap();
    }
    writeln!(out, "# tv_to_uniform = {tv}").unwrap();
    Ok(out)
}

/// `x,p_measured,p_unmeasured` at time `T + 1` for the two witness branches,
/// with the detection probability, branch difference, and verdict as trailing
/// metadata. When detection at `T` is impossible the measured column is zero.
pub fn witness_csv(settings: &WalkSettings, topo: Topology, horizon: usize) -> Result<String> {
    let report = recurrence_witness(
        settings.coin,
        settings.spin,
        topo,
        horizon,
        settings.eps_rec,
    )?;
    let mut out = String::from("x,p_measured,p_unmeasured\n");
    for (i, (x, p_free)) in report.unmeasured.iter().enumerate() {
        let p_meas = report.measured.as_ref().map_or(0.0, |d| d.probs[i]);
        writeln!(out, "{x},{p_meas},{p_free}").unwrap();
    }
    writeln!(out, "# p_origin_at_T = {}", report.p_origin).unwrap();
    writeln!(out, "# max_abs_diff = {}", report.max_abs_diff).unwrap();
    writeln!(out, "# verdict = {}", report.verdict.as_str()).unwrap();
    Ok(out)
}

/// `t,p0,polya_partial` for the classical symmetric walk.
pub fn classical_csv(steps: usize) -> String {
    let series = classical::polya_partial_series(steps);
    let mut out = String::from("t,p0,polya_partial\n");
    for t in 0..=steps {
        writeln!(out, "{t},{},{}", series.p0[t], series.polya_partial[t]).unwrap();
    }
    out
}

/// `t,variance,variance_over_t2` along one line evolution.
pub fn variance_csv(settings: &WalkSettings, steps: usize) -> Result<String> {
    let coin = CoinMatrix::new(settings.coin)?;
    let mut state = WalkState::localized(settings.spin, Topology::line(steps))?;
    let mut out = String::from("t,variance,variance_over_t2\n");
    writeln!(out, "0,{},0", state.variance()?).unwrap();
    for t in 1..=steps {
        state.step(&coin)?;
        let var = state.variance()?;
        let t2 = (t * t) as f64;
        writeln!(out, "{t},{var},{}", var / t2).unwrap();
    }
    Ok(out)
}
