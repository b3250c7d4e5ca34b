//! Thin wasm-bindgen layer over the walk engine for the browser playground.
//! Everything returns plain `f64` slices so the page can feed them straight
//! into canvas plots.

use wasm_bindgen::prelude::*;

use qwalk::mixing::time_averaged_distribution;
use qwalk::recurrence::{p0_series, polya_number, DEFAULT_EPS_REC};
use qwalk::{CoinMatrix, CoinParams, InitialSpin, Topology, WalkState};

fn js_err(e: qwalk::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn line_state(
    theta_deg: f64,
    xi_deg: f64,
    zeta_deg: f64,
    delta_deg: f64,
    eta_deg: f64,
    steps: usize,
) -> Result<WalkState, JsError> {
    let coin =
        CoinMatrix::new(CoinParams::from_degrees(xi_deg, theta_deg, zeta_deg)).map_err(js_err)?;
    let spin = InitialSpin::from_degrees(delta_deg, eta_deg);
    let mut state = WalkState::localized(spin, Topology::line(steps)).map_err(js_err)?;
    state.evolve(&coin, steps).map_err(js_err)?;
    Ok(state)
}

/// Position distribution of a line walk after `steps` steps, over the window
/// `−steps ..= +steps` (length `2·steps + 1`).
#[wasm_bindgen]
pub fn line_distribution(
    theta_deg: f64,
    xi_deg: f64,
    zeta_deg: f64,
    delta_deg: f64,
    eta_deg: f64,
    steps: usize,
) -> Result<Vec<f64>, JsError> {
    let state = line_state(theta_deg, xi_deg, zeta_deg, delta_deg, eta_deg, steps)?;
    Ok(state.distribution().probs)
}

/// `σ²/t²` of the same walk — compare against `1 − sin θ`.
#[wasm_bindgen]
pub fn line_variance_ratio(
    theta_deg: f64,
    xi_deg: f64,
    zeta_deg: f64,
    delta_deg: f64,
    eta_deg: f64,
    steps: usize,
) -> Result<f64, JsError> {
    if steps == 0 {
        return Ok(0.0);
    }
    let state = line_state(theta_deg, xi_deg, zeta_deg, delta_deg, eta_deg, steps)?;
    let var = state.variance().map_err(js_err)?;
    Ok(var / (steps * steps) as f64)
}

/// Origin-return series `p0(t)`, `t = 0..=steps`, on the n-cycle with the
/// symmetric initial spin.
#[wasm_bindgen]
pub fn cycle_return_series(n: usize, theta_deg: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    let topo = Topology::cycle(n).map_err(js_err)?;
    let series = p0_series(
        CoinParams::from_degrees(0.0, theta_deg, 0.0),
        InitialSpin::symmetric(),
        topo,
        steps,
    )
    .map_err(js_err)?;
    Ok(series.p0)
}

/// Pólya partial products `P(T)` matching [`cycle_return_series`];
/// `P(steps)` is the fractional-recurrence number at that horizon.
#[wasm_bindgen]
pub fn cycle_polya_partials(n: usize, theta_deg: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    let topo = Topology::cycle(n).map_err(js_err)?;
    let series = p0_series(
        CoinParams::from_degrees(0.0, theta_deg, 0.0),
        InitialSpin::symmetric(),
        topo,
        steps,
    )
    .map_err(js_err)?;
    Ok(polya_number(&series, DEFAULT_EPS_REC).partial_products)
}

/// Time-averaged distribution over `horizon` steps on the n-cycle.
#[wasm_bindgen]
pub fn cycle_time_average(n: usize, theta_deg: f64, horizon: usize) -> Result<Vec<f64>, JsError> {
    let topo = Topology::cycle(n).map_err(js_err)?;
    let avg = time_averaged_distribution(
        CoinParams::from_degrees(0.0, theta_deg, 0.0),
        InitialSpin::symmetric(),
        topo,
        horizon,
    )
    .map_err(js_err)?;
    Ok(avg.probs)
}

/// Distance of that time average to the uniform distribution.
#[wasm_bindgen]
pub fn cycle_tv_distance(n: usize, theta_deg: f64, horizon: usize) -> Result<f64, JsError> {
    let topo = Topology::cycle(n).map_err(js_err)?;
    let avg = time_averaged_distribution(
        CoinParams::from_degrees(0.0, theta_deg, 0.0),
        InitialSpin::symmetric(),
        topo,
        horizon,
    )
    .map_err(js_err)?;
    avg.tv_to_uniform(n).map_err(js_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_distribution_shape_and_mass() {
        let d = line_distribution(45.0, 0.0, 0.0, 45.0, 90.0, 20).unwrap();
        assert_eq!(d.len(), 41);
        assert!((d.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn variance_ratio_tracks_one_minus_sin_theta() {
        let r = line_variance_ratio(45.0, 0.0, 0.0, 45.0, 90.0, 200).unwrap();
        assert!((r - (1.0 - 1.0 / 2.0_f64.sqrt())).abs() < 0.02);
    }

    #[test]
    fn cycle_series_starts_at_one() {
        let p0 = cycle_return_series(8, 45.0, 30).unwrap();
        assert_eq!(p0.len(), 31);
        assert!((p0[0] - 1.0).abs() < 1e-15);
    }

    // Error paths return JsError, which only exists on wasm targets; they
    // are covered by the core crate's tests.

    #[test]
    fn tv_decreases_with_horizon_for_small_theta() {
        let short = cycle_tv_distance(31, 15.0, 31).unwrap();
        let long = cycle_tv_distance(31, 15.0, 31 * 40).unwrap();
        assert!(long < short);
    }
}
