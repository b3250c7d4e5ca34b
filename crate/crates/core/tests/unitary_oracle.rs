//! Checks the step engine against an explicit 2n×2n unitary built straight
//! from the defining operators, and against hand-worked amplitudes on the
//! 5-cycle.

use num_complex::Complex64;
use qwalk::{CoinMatrix, CoinParams, InitialSpin, Topology, WalkState};

/// Dense column-major-free complex matrix, just enough for the oracle.
#[derive(Clone)]
struct Dense {
    n: usize,
    a: Vec<Complex64>,
}

impl Dense {
    fn zeros(n: usize) -> Self {
        Dense {
            n,
            a: vec![Complex64::ZERO; n * n],
        }
    }

    fn set(&mut self, row: usize, col: usize, v: Complex64) {
        self.a[row * self.n + col] = v;
    }

    fn get(&self, row: usize, col: usize) -> Complex64 {
        self.a[row * self.n + col]
    }

    fn matmul(&self, other: &Dense) -> Dense {
        let n = self.n;
        let mut out = Dense::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let lik = self.get(i, k);
                if lik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += lik * other.get(k, j);
                }
            }
        }
        out
    }

    fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Flattened basis index: spin-0 amplitudes at 0..n, spin-1 at n..2n.
fn flat(spin: usize, x: usize, n: usize) -> usize {
    spin * n + x
}

/// The conditional shift on an n-cycle as an explicit permutation matrix:
/// spin 0 sends x to x−1 (mod n), spin 1 sends x to x+1 (mod n).
fn cycle_shift_matrix(n: usize) -> Dense {
    let mut s = Dense::zeros(2 * n);
    for x in 0..n {
        s.set(flat(0, (x + n - 1) % n, n), flat(0, x, n), Complex64::ONE);
        s.set(flat(1, (x + 1) % n, n), flat(1, x, n), Complex64::ONE);
    }
    s
}

/// The coin acting on the spin factor, identity on position.
fn coin_tensor_identity(coin: &CoinMatrix, n: usize) -> Dense {
    let mut c = Dense::zeros(2 * n);
    for x in 0..n {
        c.set(flat(0, x, n), flat(0, x, n), coin.c00);
        c.set(flat(0, x, n), flat(1, x, n), coin.c01);
        c.set(flat(1, x, n), flat(0, x, n), coin.c10);
        c.set(flat(1, x, n), flat(1, x, n), coin.c11);
    }
    c
}

fn flatten_state(state: &WalkState, n: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::ZERO; 2 * n];
    for x in 0..n {
        let (l, r) = state.amplitude(x as i64).unwrap();
        v[flat(0, x, n)] = l;
        v[flat(1, x, n)] = r;
    }
    v
}

fn assert_states_match(engine: &[Complex64], oracle: &[Complex64], tol: f64, ctx: &str) {
    for (i, (a, b)) in engine.iter().zip(oracle).enumerate() {
        assert!(
            (a - b).norm() <= tol,
            "{ctx}: entry {i} differs: engine {a} vs oracle {b}"
        );
    }
}

fn oracle_vs_engine(n: usize, params: CoinParams, steps: usize) {
    let coin = CoinMatrix::new(params).unwrap();
    let topo = Topology::cycle(n).unwrap();
    let walk_step = cycle_shift_matrix(n).matmul(&coin_tensor_identity(&coin, n));

    let mut state = WalkState::localized(InitialSpin::symmetric(), topo).unwrap();
    let mut vec = flatten_state(&state, n);
    for t in 1..=steps {
        state.step(&coin).unwrap();
        vec = walk_step.matvec(&vec);
        assert_states_match(
            &flatten_state(&state, n),
            &vec,
            1e-12,
            &format!("n={n} t={t}"),
        );
    }
}

#[test]
fn engine_matches_explicit_unitary_on_small_cycles() {
    for n in [3usize, 5, 8, 16] {
        oracle_vs_engine(n, CoinParams::hadamard(), 100);
    }
}

#[test]
fn engine_matches_explicit_unitary_for_a_phased_coin() {
    for n in [3usize, 5, 8] {
        oracle_vs_engine(n, CoinParams::new(0.3, 0.7, 1.1), 100);
    }
}

/// Direct slot-by-slot recursion for the single-parameter coin, coin applied
/// first and shift second:
///   Ψᴸ(x, t+1) = cosθ·Ψᴸ(x+1, t) + sinθ·Ψᴿ(x+1, t)
///   Ψᴿ(x, t+1) = sinθ·Ψᴸ(x−1, t) − cosθ·Ψᴿ(x−1, t)
fn recursion_step(
    left: &[Complex64],
    right: &[Complex64],
    theta: f64,
) -> (Vec<Complex64>, Vec<Complex64>) {
    let (s, c) = theta.sin_cos();
    let len = left.len();
    let mut nl = vec![Complex64::ZERO; len];
    let mut nr = vec![Complex64::ZERO; len];
    for x in 0..len {
        if x + 1 < len {
            nl[x] = c * left[x + 1] + s * right[x + 1];
        }
        if x >= 1 {
            nr[x] = s * left[x - 1] - c * right[x - 1];
        }
    }
    (nl, nr)
}

#[test]
fn step_satisfies_the_component_recursion() {
    let max_steps = 25;
    for theta_deg in [15.0, 45.0, 75.0] {
        let params = CoinParams::from_degrees(0.0, theta_deg, 0.0);
        let coin = CoinMatrix::new(params).unwrap();
        let topo = Topology::line(max_steps);
        let mut state = WalkState::localized(InitialSpin::symmetric(), topo).unwrap();

        let slots = topo.slots();
        let mut left = vec![Complex64::ZERO; slots];
        let mut right = vec![Complex64::ZERO; slots];
        let (a0, a1) = InitialSpin::symmetric().spinor();
        left[max_steps] = a0;
        right[max_steps] = a1;

        for t in 1..=max_steps {
            state.step(&coin).unwrap();
            let (nl, nr) = recursion_step(&left, &right, params.theta);
            left = nl;
            right = nr;
            for (i, x) in (-(max_steps as i64)..=max_steps as i64).enumerate() {
                let (l, r) = state.amplitude(x).unwrap();
                assert!(
                    (l - left[i]).norm() <= 1e-13 && (r - right[i]).norm() <= 1e-13,
                    "theta={theta_deg} t={t} x={x}"
                );
            }
        }
    }
}

fn almost(v: Complex64, re: f64, im: f64, tol: f64) -> bool {
    (v - Complex64::new(re, im)).norm() <= tol
}

/// Replaying shift·(H⊗1)·shift on the symmetric state of a 5-cycle, expanded
/// by hand: the result is (1/2)·{ |0⟩⊗|ψ₃⟩ + (|1⟩ + i|0⟩)⊗|ψ₀⟩ − i|1⟩⊗|ψ₂⟩ }.
#[test]
fn five_cycle_two_step_operator_string() {
    let h = CoinMatrix::hadamard();
    let topo = Topology::cycle(5).unwrap();
    let mut s = WalkState::localized(InitialSpin::symmetric(), topo).unwrap();
    s.shift().unwrap();
    s.apply_coin(&h);
    s.shift().unwrap();

    let tol = 1e-12;
    let k = 0.5;
    let (l0, r0) = s.amplitude(0).unwrap();
    let (l1, r1) = s.amplitude(1).unwrap();
    let (l2, r2) = s.amplitude(2).unwrap();
    let (l3, r3) = s.amplitude(3).unwrap();
    let (l4, r4) = s.amplitude(4).unwrap();
    assert!(almost(l0, 0.0, k, tol) && almost(r0, k, 0.0, tol));
    assert!(l1.norm() <= tol && r1.norm() <= tol);
    assert!(l2.norm() <= tol && almost(r2, 0.0, -k, tol));
    assert!(almost(l3, k, 0.0, tol) && r3.norm() <= tol);
    assert!(l4.norm() <= tol && r4.norm() <= tol);
}

/// One more coined shift on top of the previous string gives, up to the
/// common factor 1/(2√2):
///   |0⟩⊗|ψ₂⟩ + (|0⟩ + |1⟩ + i|0⟩)⊗|ψ₄⟩ − (|1⟩ + i|0⟩ − i|1⟩)⊗|ψ₁⟩ + i|1⟩⊗|ψ₃⟩
/// (hand expansion; the signs at |ψ₁⟩ follow from H acting on the |ψ₀⟩ and
/// |ψ₂⟩ spinors of the two-step state).
#[test]
fn five_cycle_three_step_operator_string() {
    let h = CoinMatrix::hadamard();
    let topo = Topology::cycle(5).unwrap();
    let mut s = WalkState::localized(InitialSpin::symmetric(), topo).unwrap();
    s.shift().unwrap();
    s.apply_coin(&h);
    s.shift().unwrap();
    s.apply_coin(&h);
    s.shift().unwrap();

    let tol = 1e-12;
    let k = 0.5 / 2.0_f64.sqrt();
    let (l0, r0) = s.amplitude(0).unwrap();
    let (l1, r1) = s.amplitude(1).unwrap();
    let (l2, r2) = s.amplitude(2).unwrap();
    let (l3, r3) = s.amplitude(3).unwrap();
    let (l4, r4) = s.amplitude(4).unwrap();
    assert!(l0.norm() <= tol && r0.norm() <= tol);
    assert!(almost(l1, 0.0, -k, tol) && almost(r1, -k, k, tol));
    assert!(almost(l2, k, 0.0, tol) && r2.norm() <= tol);
    assert!(l3.norm() <= tol && almost(r3, 0.0, k, tol));
    assert!(almost(l4, k, k, tol) && almost(r4, k, 0.0, tol));

    assert!((s.norm_sqr() - 1.0).abs() <= 1e-13);
    assert_eq!(s.time(), 3);
}
