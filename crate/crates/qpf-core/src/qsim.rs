//! Exact statevector simulation of small qubit registers with Y rotations,
//! CNOT, and Pauli-Z expectation measurement.
//!
//! Amplitude indexing is little-endian: bit `k` of a basis-state index is
//! qubit `k`'s state. `RY(theta) = exp(-i*theta*Y/2)`, so on |0> it gives
//! `<Z> = cos(theta)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Register size cap. Keeps the exhaustive oracle cheap; the filter itself
/// only ever needs four qubits.
pub const MAX_QUBITS: usize = 12;

/// Full amplitude vector of a qubit register.
#[derive(Debug, Clone)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0> on `n_qubits` qubits.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount(n_qubits));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitIndex {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Y rotation on one qubit: [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
    /// applied to the (bit=0, bit=1) amplitude pairs of the target.
    pub fn apply_ry(&mut self, qubit: usize, theta: f64) -> Result<()> {
        self.check_qubit(qubit)?;
        if !theta.is_finite() {
            return Err(Error::NonFiniteAngle);
        }
        let (sin, cos) = (theta / 2.0).sin_cos();
        let dist = 1usize << qubit;
        let mut base = 0;
        while base < self.amps.len() {
            for low in base..base + dist {
                let high = low + dist;
                let a0 = self.amps[low];
                let a1 = self.amps[high];
                self.amps[low] = a0 * cos - a1 * sin;
                self.amps[high] = a0 * sin + a1 * cos;
            }
            base += 2 * dist;
        }
        Ok(())
    }

    /// Flips the target bit wherever the control bit is set.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::CnotOverlap(control));
        }
        let cmask = 1usize << control;
        let tmask = 1usize << target;
        for i in 0..self.amps.len() {
            if i & cmask != 0 && i & tmask == 0 {
                self.amps.swap(i, i | tmask);
            }
        }
        Ok(())
    }

    /// <Z> on one qubit: sum of |amp|^2 signed by the qubit's bit.
    pub fn expect_z(&self, qubit: usize) -> Result<f64> {
        self.check_qubit(qubit)?;
        let mask = 1usize << qubit;
        let mut e = 0.0;
        for (i, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if i & mask == 0 {
                e += p;
            } else {
                e -= p;
            }
        }
        Ok(e)
    }
}

/// Where an RY gate takes its angle: bound to the next external input at run
/// time, or fixed in the circuit description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngleSource {
    Bound,
    Fixed(f64),
}

/// One gate in a circuit description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateOp {
    Ry { qubit: usize, angle: AngleSource },
    Cnot { control: usize, target: usize },
}

/// An ordered gate list over a fixed register size. Validated at
/// construction so every application site can assume well-formedness.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitSpec {
    n_qubits: usize,
    gates: Vec<GateOp>,
}

impl CircuitSpec {
    pub fn new(n_qubits: usize, gates: Vec<GateOp>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount(n_qubits));
        }
        for gate in &gates {
            match *gate {
                GateOp::Ry { qubit, angle } => {
                    if qubit >= n_qubits {
                        return Err(Error::QubitIndex { qubit, n_qubits });
                    }
                    if let AngleSource::Fixed(theta) = angle {
                        if !theta.is_finite() {
                            return Err(Error::NonFiniteAngle);
                        }
                    }
                }
                GateOp::Cnot { control, target } => {
                    if control >= n_qubits {
                        return Err(Error::QubitIndex {
                            qubit: control,
                            n_qubits,
                        });
                    }
                    if target >= n_qubits {
                        return Err(Error::QubitIndex {
                            qubit: target,
                            n_qubits,
                        });
                    }
                    if control == target {
                        return Err(Error::CnotOverlap(control));
                    }
                }
            }
        }
        Ok(Self { n_qubits, gates })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[GateOp] {
        &self.gates
    }

    /// Number of RY gates that bind an external angle.
    pub fn bound_angle_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| matches!(g, GateOp::Ry { angle: AngleSource::Bound, .. }))
            .count()
    }

    /// Runs the circuit on |0...0>, binding `thetas` to the bound RY gates in
    /// order of appearance, and returns one <Z> per qubit.
    pub fn run(&self, thetas: &[f64]) -> Result<Vec<f64>> {
        let expected = self.bound_angle_count();
        if thetas.len() != expected {
            return Err(Error::AngleArity {
                expected,
                got: thetas.len(),
            });
        }
        let mut state = StateVector::zero(self.n_qubits)?;
        let mut next_theta = 0;
        for gate in &self.gates {
            match *gate {
                GateOp::Ry { qubit, angle } => {
                    let theta = match angle {
                        AngleSource::Bound => {
                            let t = thetas[next_theta];
                            next_theta += 1;
                            t
                        }
                        AngleSource::Fixed(t) => t,
                    };
                    state.apply_ry(qubit, theta)?;
                }
                GateOp::Cnot { control, target } => state.apply_cnot(control, target)?,
            }
        }
        (0..self.n_qubits).map(|q| state.expect_z(q)).collect()
    }
}
