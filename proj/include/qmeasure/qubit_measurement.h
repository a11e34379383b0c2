// Copyright 2026 The qmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMEASURE_QUBIT_MEASUREMENT_H
#define QMEASURE_QUBIT_MEASUREMENT_H

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qmeasure/linalg.h"

// Indirect σz measurement of a qubit system through a qubit probe.
//
// Basis index 0 is |+⟩ (σz = +1) and index 1 is |−⟩. Two-qubit operators
// act on system ⊗ probe, so the joint index is 2*system + probe.

namespace qmeasure {

enum class QubitScheme { Cnot, Dcnot, Swap };

std::string_view scheme_name(QubitScheme scheme);

struct QubitState {
    Complex amp_plus;
    Complex amp_minus;

    ComplexVector vector() const;
    double norm() const;
    bool is_normalized(double tol = kDefaultTolerance) const;
    /// Throws std::invalid_argument when the state is the zero vector.
    QubitState normalized() const;
    static QubitState from_vector(const ComplexVector &v);
};

/// Measurement operators for probe outcomes s_p^z = +1 and −1.
struct KrausPair {
    ComplexMatrix plus;
    ComplexMatrix minus;

    /// M₊†M₊ + M₋†M₋.
    ComplexMatrix completeness() const;
};

struct QubitMeasurementResult {
    double prob_plus;
    double prob_minus;
    /// Empty when the corresponding outcome has zero probability.
    std::optional<QubitState> post_plus;
    std::optional<QubitState> post_minus;
};

/// CNOT with the system as control, flipping the probe when the system is |−⟩.
ComplexMatrix cnot_system_to_probe();
/// CNOT with the probe as control.
ComplexMatrix cnot_probe_to_system();

ComplexMatrix build_unitary(QubitScheme scheme);

QubitMeasurementResult measure(QubitScheme scheme, const QubitState &system, const QubitState &probe);

/// M_m = (I ⊗ ⟨m|) U (I ⊗ |probe⟩).
KrausPair kraus_operators(QubitScheme scheme, const QubitState &probe);

/// U = exp(i · angle · generator); exact for CNOT/DCNOT, up to a global
/// phase for SWAP.
struct QubitGenerator {
    ComplexMatrix generator;
    double angle;
};

/// Ŝ_s · Ŝ_p with Ŝ the vector of Pauli matrices.
ComplexMatrix heisenberg_exchange();

QubitGenerator hamiltonian_generator(QubitScheme scheme);

/// (U_SWAP)^α ≡ exp(α iπ/4 Ŝ_s·Ŝ_p).
ComplexMatrix swap_power(double alpha);

enum class Qubit { System, Probe };

struct QubitPulse {
    enum class Kind {
        /// (σx + σz)/√2 on `target`.
        Hadamard,
        /// exp(i · parameter · σz) on `target`.
        ZRotation,
        /// (U_SWAP)^parameter on both qubits.
        SwapPower,
    };
    Kind kind;
    Qubit target;
    double parameter;

    ComplexMatrix matrix() const;
};

/// Pulses listed in application order (first applied first).
/// Throws std::invalid_argument for SWAP, which has no pulse compilation.
std::vector<QubitPulse> pulse_sequence(QubitScheme scheme);

/// Product of the pulses in application order; I₄ for an empty sequence.
ComplexMatrix compose_pulses(std::span<const QubitPulse> pulses);

}  // namespace qmeasure

#endif
