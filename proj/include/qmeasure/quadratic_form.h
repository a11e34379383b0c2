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

#ifndef QMEASURE_QUADRATIC_FORM_H
#define QMEASURE_QUADRATIC_FORM_H

#include <Eigen/Dense>

#include "qmeasure/linalg.h"

namespace qmeasure {

/// Phase-space coordinates z = (x̂, p̂_x, ŷ, p̂_y) with [x̂, p̂_x] = [ŷ, p̂_y] = i.
enum PhaseSpaceAxis : int { kX = 0, kPx = 1, kY = 2, kPy = 3 };

/// A linear combination l · z of the phase-space operators.
using LinearForm = Eigen::Vector4d;

/// [l1 · z, l2 · z] = i · l1ᵀ J l2.
Complex commutator(const LinearForm &l1, const LinearForm &l2);

/// Σ_ij Q_ij (z_i z_j + z_j z_i)/2 + constant, with Q symmetric.
struct QuadraticForm {
    Eigen::Matrix4d coefficients = Eigen::Matrix4d::Zero();
    double constant = 0.0;

    /// Adds coeff · (z_i z_j + z_j z_i)/2.
    QuadraticForm &add(int i, int j, double coeff);
    /// Adds (l · z)².
    QuadraticForm &add_square(const LinearForm &l, double coeff = 1.0);

    double max_abs_diff(const QuadraticForm &other) const;
};

/// u(x̂p̂_x − ŷp̂_y) + v ŷp̂_x + w x̂p̂_y; exp(−i·G) realizes
/// HamiltonianParams{u, v, w}.
QuadraticForm ozawa_generator(double u, double v, double w);

/// λ x̂p̂_y − λ⁻¹ ŷp̂_x; exp(−iπ/2 · G) maps ψ(x)φ(y) to ψ(y/λ)φ(−λx).
QuadraticForm ssm_p0_generator(double lambda);

/// Ĉ = (λx̂² + λ⁻¹p̂_x²)/2 + (λ⁻¹ŷ² + λp̂_y²)/2 − (x̂ŷ + p̂_x p̂_y) − 1/2.
/// Throws std::invalid_argument for λ ≤ 0.
QuadraticForm ssm_p1_quadratic_form(double lambda);

/// Normal modes in which Ĉ = X̂² + P̂_X² − 1/2.
struct NormalModes {
    LinearForm X;
    LinearForm P_X;
    LinearForm Y;
    LinearForm P_Y;
};

NormalModes ssm_p1_normal_modes(double lambda);

}  // namespace qmeasure

#endif
