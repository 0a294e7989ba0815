//! Two independent routes to `∂⟨Z_q⟩/∂slot`: the parameter-shift rule and a
//! reverse (adjoint) sweep over the statevector.

use std::f64::consts::FRAC_PI_2;

use super::circuit::{AngleSource, Gate, Observable, ParamCircuit};
use super::state::expectation_z;
use super::Result;

fn check_obs(circuit: &ParamCircuit, obs: &Observable) -> Result<()> {
    for &q in obs.qubits() {
        if q >= circuit.n_qubits() {
            return Err(super::QsimError::QubitOutOfRange {
                index: q,
                n_qubits: circuit.n_qubits(),
            });
        }
    }
    Ok(())
}

/// Parameter-shift Jacobian over every slot (inputs and theta), shape
/// `n_observed × n_slots`. A slot feeding several gates accumulates one
/// shift term per occurrence.
pub fn shift_slot_grad(
    circuit: &ParamCircuit,
    slots: &[f64],
    obs: &Observable,
) -> Result<Vec<Vec<f64>>> {
    check_obs(circuit, obs)?;
    let mut grad = vec![vec![0.0; circuit.n_slots()]; obs.len()];
    for (i, gate) in circuit.gates().iter().enumerate() {
        if let Gate::Rotation {
            angle: AngleSource::Slot { index, scale },
            ..
        } = *gate
        {
            let plus = expectation_z(&circuit.run_slots(slots, Some((i, FRAC_PI_2))), obs)?;
            let minus = expectation_z(&circuit.run_slots(slots, Some((i, -FRAC_PI_2))), obs)?;
            for (row, (p, m)) in grad.iter_mut().zip(plus.iter().zip(&minus)) {
                row[index] += scale * 0.5 * (p - m);
            }
        }
    }
    Ok(grad)
}

/// Adjoint-method expectations and Jacobian over every slot.
///
/// One forward pass, then a single backward pass carrying the state and one
/// co-state `λ_r = U_{>k}† Z_r ψ` per observed qubit. For a rotation
/// `exp(-i a A / 2)` the derivative contribution is `Im⟨λ_r|A ψ_k⟩`.
pub fn adjoint_slot_grad(
    circuit: &ParamCircuit,
    slots: &[f64],
    obs: &Observable,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    check_obs(circuit, obs)?;
    let mut psi = circuit.run_slots(slots, None);
    let values = expectation_z(&psi, obs)?;
    let mut grad = vec![vec![0.0; circuit.n_slots()]; obs.len()];

    let mut lambdas: Vec<_> = obs
        .qubits()
        .iter()
        .map(|&q| {
            let mut l = psi.clone();
            l.pauli(super::Axis::Z, q);
            l
        })
        .collect();

    let mut scratch = psi.clone();
    for gate in circuit.gates().iter().rev() {
        if let Gate::Rotation {
            axis,
            target,
            angle: AngleSource::Slot { index, scale },
        } = *gate
        {
            scratch.clone_from(&psi);
            scratch.pauli(axis, target);
            for (row, lambda) in grad.iter_mut().zip(&lambdas) {
                row[index] += scale * lambda.inner(&scratch).im;
            }
        }
        circuit.apply_inverse(&mut psi, gate, slots);
        for lambda in &mut lambdas {
            circuit.apply_inverse(lambda, gate, slots);
        }
    }
    Ok((values, grad))
}

fn theta_block(circuit: &ParamCircuit, grad: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let start = circuit.n_inputs();
    grad.into_iter().map(|row| row[start..].to_vec()).collect()
}

/// `∂⟨Z_q⟩/∂θ_j` by the parameter-shift rule, shape `n_observed × n_params`.
pub fn parameter_shift_grad(
    circuit: &ParamCircuit,
    inputs: &[f64],
    theta: &[f64],
    obs: &Observable,
) -> Result<Vec<Vec<f64>>> {
    let slots = circuit.slots(inputs, theta)?;
    Ok(theta_block(circuit, shift_slot_grad(circuit, &slots, obs)?))
}

/// `∂⟨Z_q⟩/∂θ_j` by adjoint differentiation; same contract as
/// [`parameter_shift_grad`].
pub fn analytic_grad(
    circuit: &ParamCircuit,
    inputs: &[f64],
    theta: &[f64],
    obs: &Observable,
) -> Result<Vec<Vec<f64>>> {
    let slots = circuit.slots(inputs, theta)?;
    let (_, grad) = adjoint_slot_grad(circuit, &slots, obs)?;
    Ok(theta_block(circuit, grad))
}
