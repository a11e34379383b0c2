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

#ifndef QMEASURE_LINALG_H
#define QMEASURE_LINALG_H

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qmeasure {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Default absolute tolerance on the max entry for O(1) operators.
inline constexpr double kDefaultTolerance = 1e-10;

/// Raised when a numerical guard (residual, leakage, truncation) trips.
struct NumericalError : std::runtime_error {
    double residual;
    NumericalError(const std::string &what, double residual)
        : std::runtime_error(what), residual(residual) {
    }
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity(Eigen::Index dim);

/// Throws std::invalid_argument when the inner dimensions differ.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product. The left factor indexes the slow (system) axis:
/// (A ⊗ B)[i*rb + k, j*cb + l] = A[i,j] B[k,l].
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector tensor_product(const ComplexVector &a, const ComplexVector &b);

/// Largest absolute entry.
double max_abs(const ComplexMatrix &m);

bool is_hermitian(const ComplexMatrix &m, double tol = 1e-12);
bool is_normal(const ComplexMatrix &m, double tol = 1e-12);
bool is_unitary(const ComplexMatrix &m, double tol = kDefaultTolerance);

/// exp(scale * generator).
///
/// Hermitian generators go through a self-adjoint eigendecomposition and
/// normal ones through a complex Schur form (diagonal for normal input).
/// Anything else falls back to Padé scaling-and-squaring. The spectral
/// paths check their reconstruction residual relative to the generator
/// norm and throw NumericalError when it exceeds 1e-10.
ComplexMatrix matrix_exponential(const ComplexMatrix &generator, Complex scale = 1.0);

/// exp(scale * generator) for a Hermitian generator, via eigendecomposition.
/// Throws std::invalid_argument when the generator is not Hermitian.
ComplexMatrix hermitian_exponential(const ComplexMatrix &generator, Complex scale);

/// exp(scale * generator) v without forming the full exponential.
ComplexVector hermitian_exponential_apply(const ComplexMatrix &generator, Complex scale, const ComplexVector &v);

struct PhaseMatch {
    bool equal;
    /// φ in (−π, π] such that u ≈ e^{iφ} v.
    double phase;
    /// max |u − e^{iφ} v|.
    double residual;
};

/// Tests u == e^{iφ} v for some global phase φ. The phase is read off the
/// largest-magnitude entry of v. Throws std::invalid_argument on a shape
/// mismatch or when either matrix is zero.
PhaseMatch equal_up_to_global_phase(const ComplexMatrix &u, const ComplexMatrix &v, double tol = kDefaultTolerance);

}  // namespace qmeasure

#endif
