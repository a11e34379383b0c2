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

#include "qmeasure/fock.h"

#include <cmath>
#include <string>

namespace qmeasure {

namespace {

constexpr double kParityResidualLimit = 1e-6;
constexpr double kJointResidualLimit = 1e-5;

double trapezoid_weight(std::size_t i, std::size_t n) {
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
}

/// x̂ or p̂ for one mode, in a space two levels larger than needed so that
/// products truncated back to n levels keep exact matrix elements.
struct PaddedQuadratures {
    ComplexMatrix x;
    ComplexMatrix p;
};

PaddedQuadratures padded_quadratures(std::size_t n_levels) {
    ComplexMatrix a = annihilation(n_levels + 2);
    ComplexMatrix ad = a.adjoint();
    return {(a + ad) / std::sqrt(2.0), -kI * (a - ad) / std::sqrt(2.0)};
}

}  // namespace

Eigen::MatrixXd hermite_functions(const Grid1D &grid, std::size_t n_levels) {
    auto rows = static_cast<Eigen::Index>(grid.size());
    auto cols = static_cast<Eigen::Index>(n_levels);
    Eigen::MatrixXd h(rows, cols);
    for (Eigen::Index i = 0; i < rows; i++) {
        double x = grid.coordinate(static_cast<std::size_t>(i));
        double prev = 0.0;
        double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
        for (Eigen::Index n = 0; n < cols; n++) {
            h(i, n) = cur;
            double next = std::sqrt(2.0 / double(n + 1)) * x * cur - std::sqrt(double(n) / double(n + 1)) * prev;
            prev = cur;
            cur = next;
        }
    }
    return h;
}

HermiteExpansion expand_hermite(const WaveFunction &psi, std::size_t n_levels) {
    Eigen::MatrixXd h = hermite_functions(psi.grid, n_levels);
    std::size_t n = psi.grid.size();
    ComplexVector weighted(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; i++) {
        weighted[static_cast<Eigen::Index>(i)] = trapezoid_weight(i, n) * psi.grid.spacing() * psi.samples[i];
    }
    ComplexVector coefficients = h.transpose().cast<Complex>() * weighted;
    WaveFunction rebuilt = reconstruct_hermite(psi.grid, coefficients);
    return {coefficients, l2_distance(psi, rebuilt)};
}

WaveFunction reconstruct_hermite(const Grid1D &grid, const ComplexVector &coefficients) {
    Eigen::MatrixXd h = hermite_functions(grid, static_cast<std::size_t>(coefficients.size()));
    ComplexVector values = h.cast<Complex>() * coefficients;
    return WaveFunction(grid, std::vector<Complex>(values.data(), values.data() + values.size()));
}

ComplexMatrix annihilation(std::size_t n_levels) {
    auto n = static_cast<Eigen::Index>(n_levels);
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k < n; k++) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

WaveFunction parity_via_fock(const WaveFunction &psi, std::size_t n_levels) {
    HermiteExpansion expansion = expand_hermite(psi, n_levels);
    if (expansion.residual > kParityResidualLimit) {
        throw NumericalError(
            "parity_via_fock: Hermite truncation residual " + std::to_string(expansion.residual) + " with " +
                std::to_string(n_levels) + " levels exceeds 1e-6",
            expansion.residual);
    }
    ComplexVector flipped = expansion.coefficients;
    for (Eigen::Index k = 1; k < flipped.size(); k += 2) {
        flipped[k] = -flipped[k];
    }
    return reconstruct_hermite(psi.grid, flipped);
}

ComplexMatrix fock_operator(const QuadraticForm &form, std::size_t n_levels) {
    auto n = static_cast<Eigen::Index>(n_levels);
    PaddedQuadratures padded = padded_quadratures(n_levels);
    const ComplexMatrix *single[2] = {&padded.x, &padded.p};
    ComplexMatrix id = identity(n);

    // Axis k lives on mode k / 2 and is x̂ or p̂ by k % 2.
    auto embed = [&](const ComplexMatrix &op, int mode) {
        return mode == 0 ? tensor_product(op, id) : tensor_product(id, op);
    };

    ComplexMatrix total = form.constant * identity(n * n);
    for (int i = 0; i < 4; i++) {
        for (int j = i; j < 4; j++) {
            double coeff = form.coefficients(i, j);
            if (coeff == 0.0) {
                continue;
            }
            // Off-diagonal pairs appear twice in Σ_ij Q_ij.
            double weight = i == j ? coeff : 2.0 * coeff;
            int mode_i = i / 2;
            int mode_j = j / 2;
            const ComplexMatrix &op_i = *single[i % 2];
            const ComplexMatrix &op_j = *single[j % 2];
            ComplexMatrix term;
            if (mode_i == mode_j) {
                ComplexMatrix sym = (op_i * op_j + op_j * op_i) / 2.0;
                term = embed(ComplexMatrix(sym.topLeftCorner(n, n)), mode_i);
            } else {
                term = tensor_product(ComplexMatrix(op_i.topLeftCorner(n, n)), ComplexMatrix(op_j.topLeftCorner(n, n)));
            }
            total += weight * term;
        }
    }
    return total;
}

JointWaveFunction evolve_quadratic_fock(
    const QuadraticForm &generator, double angle, const WaveFunction &psi, const WaveFunction &phi,
    std::size_t n_levels) {
    if (n_levels > kMaxFockLevels) {
        throw std::invalid_argument(
            "evolve_quadratic_fock: " + std::to_string(n_levels) + " levels exceeds the limit of " +
            std::to_string(kMaxFockLevels));
    }
    if (n_levels == 0) {
        throw std::invalid_argument("evolve_quadratic_fock: at least one level is required");
    }
    HermiteExpansion ex = expand_hermite(psi, n_levels);
    HermiteExpansion ey = expand_hermite(phi, n_levels);
    double kept = ex.coefficients.squaredNorm() * ey.coefficients.squaredNorm();
    double residual = std::sqrt(std::max(0.0, psi.norm_squared() * phi.norm_squared() - kept));
    if (residual > kJointResidualLimit) {
        throw NumericalError(
            "evolve_quadratic_fock: two-mode truncation residual " + std::to_string(residual) + " exceeds 1e-5",
            residual);
    }

    ComplexVector state = tensor_product(ex.coefficients, ey.coefficients);
    ComplexVector evolved = hermitian_exponential_apply(fock_operator(generator, n_levels), -kI * angle, state);

    auto n = static_cast<Eigen::Index>(n_levels);
    // evolved[nx * n + ny] -> C(nx, ny).
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> coeffs(
        evolved.data(), n, n);
    ComplexMatrix hx = hermite_functions(psi.grid, n_levels).cast<Complex>();
    ComplexMatrix hy = hermite_functions(phi.grid, n_levels).cast<Complex>();
    ComplexMatrix values = hx * coeffs * hy.transpose();

    JointWaveFunction joint(psi.grid, phi.grid);
    for (std::size_t ix = 0; ix < psi.grid.size(); ix++) {
        for (std::size_t iy = 0; iy < phi.grid.size(); iy++) {
            joint(ix, iy) = values(static_cast<Eigen::Index>(ix), static_cast<Eigen::Index>(iy));
        }
    }
    return joint;
}

}  // namespace qmeasure
