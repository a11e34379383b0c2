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

#include "qmeasure/qubit_measurement.h"

#include <cmath>

namespace qmeasure {

namespace {

// Outcome probabilities below this are treated as impossible branches.
constexpr double kZeroProbability = 1e-14;

ComplexMatrix on_system(const ComplexMatrix &op) {
    return tensor_product(op, identity(2));
}

ComplexMatrix on_probe(const ComplexMatrix &op) {
    return tensor_product(identity(2), op);
}

ComplexMatrix hadamard() {
    return (pauli_x() + pauli_z()) / std::sqrt(2.0);
}

void require_normalized(const QubitState &state, const char *role) {
    if (!state.is_normalized()) {
        throw std::invalid_argument(
            std::string("measure: ") + role + " state is not normalized (norm " + std::to_string(state.norm()) +
            ")");
    }
}

}  // namespace

std::string_view scheme_name(QubitScheme scheme) {
    switch (scheme) {
        case QubitScheme::Cnot:
            return "CNOT";
        case QubitScheme::Dcnot:
            return "DCNOT";
        case QubitScheme::Swap:
            return "SWAP";
    }
    return "?";
}

ComplexVector QubitState::vector() const {
    ComplexVector v(2);
    v << amp_plus, amp_minus;
    return v;
}

double QubitState::norm() const {
    return std::sqrt(std::norm(amp_plus) + std::norm(amp_minus));
}

bool QubitState::is_normalized(double tol) const {
    return std::abs(std::norm(amp_plus) + std::norm(amp_minus) - 1.0) < tol;
}

QubitState QubitState::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw std::invalid_argument("QubitState::normalized: zero state");
    }
    return {amp_plus / n, amp_minus / n};
}

QubitState QubitState::from_vector(const ComplexVector &v) {
    if (v.size() != 2) {
        throw std::invalid_argument("QubitState::from_vector: expected 2 amplitudes");
    }
    return {v[0], v[1]};
}

ComplexMatrix KrausPair::completeness() const {
    return plus.adjoint() * plus + minus.adjoint() * minus;
}

ComplexMatrix cnot_system_to_probe() {
    ComplexMatrix id = identity(2);
    ComplexMatrix z = pauli_z();
    return on_system((id + z) / 2.0) + tensor_product((id - z) / 2.0, pauli_x());
}

ComplexMatrix cnot_probe_to_system() {
    ComplexMatrix id = identity(2);
    ComplexMatrix z = pauli_z();
    return on_probe((id + z) / 2.0) + tensor_product(pauli_x(), (id - z) / 2.0);
}

ComplexMatrix build_unitary(QubitScheme scheme) {
    switch (scheme) {
        case QubitScheme::Cnot:
            return cnot_system_to_probe();
        case QubitScheme::Dcnot:
            return cnot_system_to_probe() * cnot_probe_to_system();
        case QubitScheme::Swap: {
            ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
            for (int s = 0; s < 2; s++) {
                for (int p = 0; p < 2; p++) {
                    swap(2 * p + s, 2 * s + p) = 1.0;
                }
            }
            return swap;
        }
    }
    throw std::invalid_argument("build_unitary: unknown scheme");
}

QubitMeasurementResult measure(QubitScheme scheme, const QubitState &system, const QubitState &probe) {
    require_normalized(system, "system");
    require_normalized(probe, "probe");

    ComplexVector joint = build_unitary(scheme) * tensor_product(system.vector(), probe.vector());

    QubitMeasurementResult result{};
    for (int outcome = 0; outcome < 2; outcome++) {
        // Project the probe onto |outcome⟩; what remains is the unnormalized system state.
        ComplexVector branch(2);
        branch << joint[outcome], joint[2 + outcome];
        double prob = branch.squaredNorm();
        std::optional<QubitState> post;
        if (prob > kZeroProbability) {
            post = QubitState::from_vector(branch / std::sqrt(prob));
        }
        if (outcome == 0) {
            result.prob_plus = prob;
            result.post_plus = post;
        } else {
            result.prob_minus = prob;
            result.post_minus = post;
        }
    }
    return result;
}

KrausPair kraus_operators(QubitScheme scheme, const QubitState &probe) {
    if (!probe.is_normalized()) {
        throw std::invalid_argument("kraus_operators: probe state is not normalized");
    }
    ComplexMatrix u = build_unitary(scheme);
    ComplexVector phi = probe.vector();
    ComplexMatrix ops[2] = {ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
    for (int m = 0; m < 2; m++) {
        for (int out = 0; out < 2; out++) {
            for (int in = 0; in < 2; in++) {
                Complex total = 0.0;
                for (int p = 0; p < 2; p++) {
                    total += u(2 * out + m, 2 * in + p) * phi[p];
                }
                ops[m](out, in) = total;
            }
        }
    }
    return {ops[0], ops[1]};
}

ComplexMatrix heisenberg_exchange() {
    return tensor_product(pauli_x(), pauli_x()) + tensor_product(pauli_y(), pauli_y()) +
           tensor_product(pauli_z(), pauli_z());
}

QubitGenerator hamiltonian_generator(QubitScheme scheme) {
    ComplexMatrix id = identity(2);
    switch (scheme) {
        case QubitScheme::Cnot:
            // Â = (I − σz_s)(I − σx_p)/4, idempotent.
            return {tensor_product(ComplexMatrix(id - pauli_z()), ComplexMatrix(id - pauli_x())) / 4.0, kPi};
        case QubitScheme::Dcnot: {
            // B̂ with B̂³ = B̂.
            ComplexMatrix rest = id - pauli_x() - pauli_z();
            ComplexMatrix b =
                (tensor_product(pauli_y(), rest) - tensor_product(rest, pauli_y())) / (2.0 * std::sqrt(3.0));
            return {b, 2.0 * kPi / 3.0};
        }
        case QubitScheme::Swap:
            return {heisenberg_exchange(), kPi / 4.0};
    }
    throw std::invalid_argument("hamiltonian_generator: unknown scheme");
}

ComplexMatrix swap_power(double alpha) {
    return matrix_exponential(heisenberg_exchange(), kI * (alpha * kPi / 4.0));
}

ComplexMatrix QubitPulse::matrix() const {
    switch (kind) {
        case Kind::Hadamard:
            return target == Qubit::System ? on_system(hadamard()) : on_probe(hadamard());
        case Kind::ZRotation: {
            ComplexMatrix rot = ComplexMatrix::Zero(2, 2);
            rot(0, 0) = std::polar(1.0, parameter);
            rot(1, 1) = std::polar(1.0, -parameter);
            return target == Qubit::System ? on_system(rot) : on_probe(rot);
        }
        case Kind::SwapPower:
            return swap_power(parameter);
    }
    throw std::invalid_argument("QubitPulse::matrix: unknown pulse kind");
}

std::vector<QubitPulse> pulse_sequence(QubitScheme scheme) {
    using K = QubitPulse::Kind;
    switch (scheme) {
        case QubitScheme::Cnot:
            return {
                {K::Hadamard, Qubit::Probe, 0.0},
                {K::SwapPower, Qubit::System, 0.5},
                {K::ZRotation, Qubit::System, kPi / 2},
                {K::SwapPower, Qubit::System, 0.5},
                {K::ZRotation, Qubit::Probe, -kPi / 4},
                {K::ZRotation, Qubit::System, kPi / 4},
                {K::Hadamard, Qubit::Probe, 0.0},
            };
        case QubitScheme::Dcnot:
            return {
                {K::Hadamard, Qubit::Probe, 0.0},
                {K::SwapPower, Qubit::System, -0.5},
                {K::ZRotation, Qubit::System, kPi / 2},
                {K::SwapPower, Qubit::System, 0.5},
                {K::ZRotation, Qubit::Probe, -kPi / 4},
                {K::ZRotation, Qubit::System, kPi / 4},
                {K::Hadamard, Qubit::System, 0.0},
            };
        case QubitScheme::Swap:
            break;
    }
    throw std::invalid_argument("pulse_sequence: no pulse compilation is defined for SWAP");
}

ComplexMatrix compose_pulses(std::span<const QubitPulse> pulses) {
    ComplexMatrix total = identity(4);
    for (const auto &pulse : pulses) {
        total = pulse.matrix() * total;
    }
    return total;
}

}  // namespace qmeasure
