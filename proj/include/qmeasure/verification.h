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

#ifndef QMEASURE_VERIFICATION_H
#define QMEASURE_VERIFICATION_H

#include <string>
#include <string_view>
#include <vector>

#include "qmeasure/cv_transform.h"

// Named identity checks with their declared tolerances.

namespace qmeasure {

struct IdentityCheck {
    std::string name;
    double residual;
    double tolerance;

    bool pass() const {
        return residual < tolerance;
    }
};

/// "qubit-hamiltonians", "pulse-sequences", "ozawa", "appendix-b", "parity".
const std::vector<std::string_view> &verify_suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name.
std::vector<IdentityCheck> run_verify_suite(std::string_view suite);

/// Closed-form Hamiltonian parameters of the contractive preset.
HamiltonianParams csm_hamiltonian_closed_form(double lambda);
/// Closed-form Hamiltonian parameters of the swapping preset with p = 0.
HamiltonianParams ssm_hamiltonian_closed_form(double lambda);

/// L² distance, minimized over a global phase, between the Fock-truncated
/// exp(−iπ/2 · Ĉ) applied to a pair of offset squeezed Gaussians and the
/// analytic ψ(y/λ)φ(λx).
double scaled_swap_residual(double lambda, std::size_t n_fock);

/// L² distance between the Fock-basis parity of an offset Gaussian and its
/// grid reflection, and between the parity applied twice and the input.
struct ParityResiduals {
    double reflection;
    double involution;
};
ParityResiduals parity_residuals(std::size_t n_levels = 48);

}  // namespace qmeasure

#endif
