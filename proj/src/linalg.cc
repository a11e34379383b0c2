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

#include "qmeasure/linalg.h"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace qmeasure {

namespace {

constexpr double kSpectralResidualLimit = 1e-10;

void require_square(const ComplexMatrix &m, const char *where) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(
            std::string(where) + ": matrix must be square, got " + std::to_string(m.rows()) + "x" +
            std::to_string(m.cols()));
    }
}

double relative_residual(const ComplexMatrix &reconstructed, const ComplexMatrix &original) {
    double scale = std::max(1.0, max_abs(original));
    return max_abs(reconstructed - original) / scale;
}

}  // namespace

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument(
            "matmul: dimension mismatch (" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
            std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
    }
    return a * b;
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

ComplexVector tensor_product(const ComplexVector &a, const ComplexVector &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

double max_abs(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol * std::max(1.0, max_abs(m));
}

bool is_normal(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    ComplexMatrix commutator = m * m.adjoint() - m.adjoint() * m;
    double scale = std::max(1.0, max_abs(m));
    return max_abs(commutator) <= tol * scale * scale;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m.adjoint() * m - identity(m.rows())) < tol;
}

namespace {

struct Spectrum {
    ComplexMatrix vectors;
    Eigen::VectorXd values;
};

Spectrum hermitian_spectrum(const ComplexMatrix &generator, const char *where) {
    require_square(generator, where);
    if (!is_hermitian(generator)) {
        throw std::invalid_argument(std::string(where) + ": generator is not Hermitian");
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    ComplexMatrix h = 0.5 * (generator + generator.adjoint());
    Spectrum spectrum;
    bool real = h.imag().cwiseAbs().maxCoeff() == 0.0;
    bool converged;
    if (real) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real());
        converged = solver.info() == Eigen::Success;
        spectrum.vectors = solver.eigenvectors().cast<Complex>();
        spectrum.values = solver.eigenvalues();
    } else {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
        converged = solver.info() == Eigen::Success;
        spectrum.vectors = solver.eigenvectors();
        spectrum.values = solver.eigenvalues();
    }
    if (!converged) {
        throw NumericalError(std::string(where) + ": eigendecomposition did not converge", INFINITY);
    }

    // ‖H V − V Λ‖ relative to ‖H‖.
    ComplexMatrix defect = h * spectrum.vectors - spectrum.vectors * spectrum.values.cast<Complex>().asDiagonal();
    double residual = max_abs(defect) / std::max(1.0, max_abs(h));
    if (residual > kSpectralResidualLimit) {
        throw NumericalError(
            std::string(where) + ": spectral residual " + std::to_string(residual) + " exceeds limit", residual);
    }
    return spectrum;
}

ComplexVector phase_factors(const Eigen::VectorXd &values, Complex scale) {
    ComplexVector phases(values.size());
    for (Eigen::Index k = 0; k < values.size(); k++) {
        phases[k] = std::exp(scale * values[k]);
    }
    return phases;
}

}  // namespace

ComplexMatrix hermitian_exponential(const ComplexMatrix &generator, Complex scale) {
    Spectrum s = hermitian_spectrum(generator, "hermitian_exponential");
    return s.vectors * phase_factors(s.values, scale).asDiagonal() * s.vectors.adjoint();
}

ComplexVector hermitian_exponential_apply(const ComplexMatrix &generator, Complex scale, const ComplexVector &v) {
    if (v.size() != generator.rows()) {
        throw std::invalid_argument("hermitian_exponential_apply: vector length does not match the generator");
    }
    Spectrum s = hermitian_spectrum(generator, "hermitian_exponential_apply");
    ComplexVector coords = s.vectors.adjoint() * v;
    return s.vectors * phase_factors(s.values, scale).cwiseProduct(coords);
}

ComplexMatrix matrix_exponential(const ComplexMatrix &generator, Complex scale) {
    require_square(generator, "matrix_exponential");
    if (generator.rows() > 10000) {
        throw std::invalid_argument("matrix_exponential: dimension exceeds 10000");
    }
    if (generator.rows() == 0) {
        return generator;
    }
    if (is_hermitian(generator)) {
        return hermitian_exponential(generator, scale);
    }

    ComplexMatrix scaled = scale * generator;
    if (is_normal(scaled)) {
        Eigen::ComplexSchur<ComplexMatrix> schur(scaled);
        if (schur.info() == Eigen::Success) {
            const ComplexMatrix &q = schur.matrixU();
            const ComplexMatrix &t = schur.matrixT();
            ComplexMatrix diagonal = t.diagonal().asDiagonal();
            double residual = relative_residual(q * diagonal * q.adjoint(), scaled);
            if (residual <= kSpectralResidualLimit) {
                ComplexVector exps = t.diagonal().array().exp();
                return q * exps.asDiagonal() * q.adjoint();
            }
        }
    }

    ComplexMatrix result = scaled.exp();
    if (!result.allFinite()) {
        throw NumericalError("matrix_exponential: scaling-and-squaring produced non-finite entries", INFINITY);
    }
    return result;
}

PhaseMatch equal_up_to_global_phase(const ComplexMatrix &u, const ComplexMatrix &v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("equal_up_to_global_phase: shape mismatch");
    }
    if (max_abs(u) == 0.0 || max_abs(v) == 0.0) {
        throw std::invalid_argument("equal_up_to_global_phase: zero matrix");
    }
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    v.cwiseAbs().maxCoeff(&row, &col);
    Complex ratio = u(row, col) / v(row, col);
    double phase = std::arg(ratio);
    if (phase <= -kPi) {
        phase = kPi;
    }
    Complex unit = std::polar(1.0, phase);
    double residual = max_abs(u - unit * v);
    return {residual < tol, phase, residual};
}

}  // namespace qmeasure
