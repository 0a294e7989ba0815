use num_complex::Complex64;
use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;

use super::circuit::{AngleSource, Axis, Gate, Observable};
use super::{QsimError, Result, MAX_QUBITS};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Pure state of `n_qubits` qubits stored as `2^n` complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    amplitudes: Vec<Complex64>,
    n_qubits: usize,
}

impl Statevector {
    /// The all-zero basis state `|0…0⟩`.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    /// The computational basis state with index `index` (qubit 0 = LSB).
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(QsimError::QubitCount(n_qubits));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(QsimError::DimensionMismatch {
                what: "basis index",
                expected: dim,
                got: index,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            amplitudes,
            n_qubits,
        })
    }

    /// Wraps raw amplitudes. The caller is responsible for normalisation.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(QsimError::DimensionMismatch {
                what: "amplitude vector",
                expected: len.next_power_of_two().max(2),
                got: len,
            });
        }
        let n_qubits = len.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(QsimError::QubitCount(n_qubits));
        }
        Ok(Self {
            amplitudes,
            n_qubits,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Statevector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.n_qubits {
            Err(QsimError::QubitOutOfRange {
                index: q,
                n_qubits: self.n_qubits,
            })
        } else {
            Ok(())
        }
    }

    /// Applies `gate`. `angle` must be supplied exactly when the gate is a
    /// rotation bound to a parameter slot; fixed-angle rotations carry their
    /// own angle.
    pub fn apply_gate(&mut self, gate: &Gate, angle: Option<f64>) -> Result<()> {
        match *gate {
            Gate::Rotation {
                axis,
                target,
                angle: source,
            } => {
                self.check_qubit(target)?;
                let a = match (source, angle) {
                    (AngleSource::Fixed(fixed), None) => fixed,
                    (AngleSource::Fixed(_), Some(_)) => return Err(QsimError::UnexpectedAngle),
                    (AngleSource::Slot { .. }, Some(a)) => a,
                    (AngleSource::Slot { .. }, None) => return Err(QsimError::MissingAngle(target)),
                };
                if !a.is_finite() {
                    return Err(QsimError::NonFiniteAngle(a));
                }
                self.rotate(axis, target, a);
            }
            Gate::Cnot { control, target } | Gate::Cz { control, target } => {
                if angle.is_some() {
                    return Err(QsimError::UnexpectedAngle);
                }
                self.check_qubit(control)?;
                self.check_qubit(target)?;
                if control == target {
                    return Err(QsimError::SameQubit(control));
                }
                if matches!(gate, Gate::Cnot { .. }) {
                    self.cnot(control, target);
                } else {
                    self.cz(control, target);
                }
            }
        }
        Ok(())
    }

    /// `R_axis(angle)` on qubit `q`; indices are assumed valid.
    pub(crate) fn rotate(&mut self, axis: Axis, q: usize, angle: f64) {
        let (s, c) = (angle / 2.0).sin_cos();
        let m = match axis {
            Axis::X => [
                [Complex64::new(c, 0.0), Complex64::new(0.0, -s)],
                [Complex64::new(0.0, -s), Complex64::new(c, 0.0)],
            ],
            Axis::Y => [
                [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
                [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
            ],
            Axis::Z => {
                let lo = Complex64::new(c, -s);
                let hi = Complex64::new(c, s);
                let bit = 1usize << q;
                for (k, a) in self.amplitudes.iter_mut().enumerate() {
                    *a *= if k & bit == 0 { lo } else { hi };
                }
                return;
            }
        };
        self.apply_1q(q, m);
    }

    fn apply_1q(&mut self, q: usize, m: [[Complex64; 2]; 2]) {
        let bit = 1usize << q;
        for i in 0..self.amplitudes.len() {
            if i & bit == 0 {
                let j = i | bit;
                let a0 = self.amplitudes[i];
                let a1 = self.amplitudes[j];
                self.amplitudes[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amplitudes[j] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    pub(crate) fn cnot(&mut self, control: usize, target: usize) {
        let cbit = 1usize << control;
        let tbit = 1usize << target;
        for i in 0..self.amplitudes.len() {
            if i & cbit != 0 && i & tbit == 0 {
                self.amplitudes.swap(i, i | tbit);
            }
        }
    }

    pub(crate) fn cz(&mut self, a: usize, b: usize) {
        let mask = (1usize << a) | (1usize << b);
        for (k, amp) in self.amplitudes.iter_mut().enumerate() {
            if k & mask == mask {
                *amp = -*amp;
            }
        }
    }

    /// Multiplies by the Pauli operator `axis` on qubit `q` (not a rotation).
    pub(crate) fn pauli(&mut self, axis: Axis, q: usize) {
        let bit = 1usize << q;
        match axis {
            Axis::X => {
                for i in 0..self.amplitudes.len() {
                    if i & bit == 0 {
                        self.amplitudes.swap(i, i | bit);
                    }
                }
            }
            Axis::Y => {
                // Y|0> = i|1>, Y|1> = -i|0>
                for i in 0..self.amplitudes.len() {
                    if i & bit == 0 {
                        let j = i | bit;
                        let a0 = self.amplitudes[i];
                        let a1 = self.amplitudes[j];
                        self.amplitudes[i] = -I * a1;
                        self.amplitudes[j] = I * a0;
                    }
                }
            }
            Axis::Z => {
                for (k, a) in self.amplitudes.iter_mut().enumerate() {
                    if k & bit != 0 {
                        *a = -*a;
                    }
                }
            }
        }
    }
}

fn check_observable(state: &Statevector, obs: &Observable) -> Result<()> {
    for &q in obs.qubits() {
        state.check_qubit(q)?;
    }
    Ok(())
}

/// Exact `⟨Z_q⟩` for every observed qubit, in observable order.
pub fn expectation_z(state: &Statevector, obs: &Observable) -> Result<Vec<f64>> {
    check_observable(state, obs)?;
    let mut out = vec![0.0; obs.qubits().len()];
    for (k, a) in state.amplitudes.iter().enumerate() {
        let p = a.norm_sqr();
        for (slot, &q) in out.iter_mut().zip(obs.qubits()) {
            if k >> q & 1 == 0 {
                *slot += p;
            } else {
                *slot -= p;
            }
        }
    }
    Ok(out)
}

/// Monte-Carlo estimate of `⟨Z_q⟩` from `shots` projective measurements of
/// the whole register.
pub fn sample_expectation_z<R: Rng + ?Sized>(
    state: &Statevector,
    obs: &Observable,
    shots: usize,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if shots == 0 {
        return Err(QsimError::ZeroShots);
    }
    check_observable(state, obs)?;
    let dist = WeightedIndex::new(state.probabilities())
        .expect("a normalised state has positive total probability");
    let mut sums = vec![0i64; obs.qubits().len()];
    for _ in 0..shots {
        let k = dist.sample(rng);
        for (sum, &q) in sums.iter_mut().zip(obs.qubits()) {
            *sum += if k >> q & 1 == 0 { 1 } else { -1 };
        }
    }
    Ok(sums.into_iter().map(|s| s as f64 / shots as f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    fn ry(q: usize) -> Gate {
        Gate::Rotation {
            axis: Axis::Y,
            target: q,
            angle: AngleSource::Slot { index: 0, scale: 1.0 },
        }
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn ry_half_turn_makes_plus_state() {
        let mut s = Statevector::zero(1).unwrap();
        s.apply_gate(&ry(0), Some(FRAC_PI_2)).unwrap();
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        assert!(close(s.amplitudes()[0], h));
        assert!(close(s.amplitudes()[1], h));
    }

    #[test]
    fn cnot_truth_table() {
        let gate = Gate::Cnot {
            control: 0,
            target: 1,
        };
        // index = q0 + 2*q1
        for (input, output) in [(0b00, 0b00), (0b01, 0b11), (0b10, 0b10), (0b11, 0b01)] {
            let mut s = Statevector::basis(2, input).unwrap();
            s.apply_gate(&gate, None).unwrap();
            assert_eq!(s, Statevector::basis(2, output).unwrap());
        }
    }

    #[test]
    fn cz_truth_table() {
        let gate = Gate::Cz {
            control: 0,
            target: 1,
        };
        for k in 0..4 {
            let mut s = Statevector::basis(2, k).unwrap();
            s.apply_gate(&gate, None).unwrap();
            let sign = if k == 3 { -1.0 } else { 1.0 };
            assert_eq!(s.amplitudes()[k], Complex64::new(sign, 0.0));
        }
    }

    #[test]
    fn rz_on_zero_is_a_phase() {
        let theta = 0.7;
        let mut s = Statevector::zero(1).unwrap();
        let gate = Gate::Rotation {
            axis: Axis::Z,
            target: 0,
            angle: AngleSource::Fixed(theta),
        };
        s.apply_gate(&gate, None).unwrap();
        assert!(close(
            s.amplitudes()[0],
            Complex64::from_polar(1.0, -theta / 2.0)
        ));
        let obs = Observable::new(vec![0]);
        assert!((expectation_z(&s, &obs).unwrap()[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rx_pi_flips() {
        let mut s = Statevector::zero(1).unwrap();
        s.rotate(Axis::X, 0, PI);
        assert!((s.amplitudes()[1].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn expectation_on_basis_states() {
        let obs = Observable::new(vec![0, 1]);
        let s = Statevector::basis(2, 0b10).unwrap();
        assert_eq!(expectation_z(&s, &obs).unwrap(), vec![1.0, -1.0]);
    }

    #[test]
    fn gate_errors() {
        let mut s = Statevector::zero(2).unwrap();
        assert_eq!(s.apply_gate(&ry(0), None), Err(QsimError::MissingAngle(0)));
        assert!(matches!(
            s.apply_gate(&ry(5), Some(0.1)),
            Err(QsimError::QubitOutOfRange { index: 5, .. })
        ));
        let cnot = Gate::Cnot {
            control: 1,
            target: 1,
        };
        assert_eq!(s.apply_gate(&cnot, None), Err(QsimError::SameQubit(1)));
        let fixed = Gate::Rotation {
            axis: Axis::X,
            target: 0,
            angle: AngleSource::Fixed(1.0),
        };
        assert_eq!(
            s.apply_gate(&fixed, Some(1.0)),
            Err(QsimError::UnexpectedAngle)
        );
        assert!(Statevector::zero(0).is_err());
        assert!(Statevector::zero(MAX_QUBITS + 1).is_err());
    }

    #[test]
    fn pauli_y_matches_definition() {
        let mut s = Statevector::zero(1).unwrap();
        s.pauli(Axis::Y, 0);
        assert!(close(s.amplitudes()[1], I));
        let mut s = Statevector::basis(1, 1).unwrap();
        s.pauli(Axis::Y, 0);
        assert!(close(s.amplitudes()[0], -I));
    }

    #[test]
    fn sampling_is_exact_for_basis_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = Statevector::zero(2).unwrap();
        let obs = Observable::new(vec![0, 1]);
        assert_eq!(
            sample_expectation_z(&s, &obs, 17, &mut rng).unwrap(),
            vec![1.0, 1.0]
        );
        assert_eq!(
            sample_expectation_z(&s, &obs, 0, &mut rng),
            Err(QsimError::ZeroShots)
        );
    }
}
