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

#ifndef QMEASURE_FOCK_H
#define QMEASURE_FOCK_H

#include <cstddef>

#include "qmeasure/linalg.h"
#include "qmeasure/quadratic_form.h"
#include "qmeasure/wavefunction.h"

// Harmonic-oscillator (Fock) representation of grid states, with
// x̂ = (â + â†)/√2 and p̂ = −i(â − â†)/√2.

namespace qmeasure {

/// Largest per-mode truncation accepted by evolve_quadratic_fock.
inline constexpr std::size_t kMaxFockLevels = 64;

/// Hermite functions φ_0..φ_{n−1} sampled on the grid, one per column.
Eigen::MatrixXd hermite_functions(const Grid1D &grid, std::size_t n_levels);

struct HermiteExpansion {
    ComplexVector coefficients;
    /// L² norm of ψ − Σ c_n φ_n on the grid.
    double residual;
};

HermiteExpansion expand_hermite(const WaveFunction &psi, std::size_t n_levels);

/// Σ c_n φ_n on the grid.
WaveFunction reconstruct_hermite(const Grid1D &grid, const ComplexVector &coefficients);

/// Truncated annihilation operator ⟨m|â|n⟩ = √n δ_{m,n−1}.
ComplexMatrix annihilation(std::size_t n_levels);

/// Σ c_n (−1)^n φ_n, i.e. exp(−iπ â†â) ψ. Throws NumericalError when the
/// expansion residual exceeds 1e-6.
WaveFunction parity_via_fock(const WaveFunction &psi, std::size_t n_levels);

/// The quadratic form as an (n²)×(n²) Hermitian matrix on |n_x⟩ ⊗ |n_y⟩.
/// Matrix elements are exact within the truncated space.
ComplexMatrix fock_operator(const QuadraticForm &form, std::size_t n_levels);

/// exp(−i · angle · G) ψ(x)φ(y) evaluated in the truncated two-mode Fock
/// basis and resampled on (ψ.grid, φ.grid). Throws std::invalid_argument
/// for n_levels > kMaxFockLevels and NumericalError when the product input
/// leaves a projection residual above 1e-5.
JointWaveFunction evolve_quadratic_fock(
    const QuadraticForm &generator, double angle, const WaveFunction &psi, const WaveFunction &phi,
    std::size_t n_levels);

}  // namespace qmeasure

#endif
