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

#include "gtest/gtest.h"
#include "qmeasure/verification.h"

using namespace qmeasure;

namespace {

Complex gaussian(double x, double center, double width, double momentum) {
    double u = x - center;
    return std::pow(2.0 * kPi * width * width, -0.25) * std::exp(Complex(-u * u / (4.0 * width * width), momentum * x));
}

// Evolves a Gaussian pair with exp(−i·angle·G) and compares against ψ(ax + by)φ(cx + dy).
double fock_vs_transform(
    const QuadraticForm &g, double angle, const CoordTransform &t, double psi_width, double phi_width,
    std::size_t n_levels) {
    Grid1D grid(-10.0, 10.0, 200);
    auto psi_fn = [&](double x) { return gaussian(x, 0.3, psi_width, 0.2); };
    auto phi_fn = [&](double y) { return gaussian(y, -0.2, phi_width, 0.0); };
    JointWaveFunction evolved =
        evolve_quadratic_fock(g, angle, WaveFunction(grid, psi_fn), WaveFunction(grid, phi_fn), n_levels);
    JointWaveFunction want(grid, grid);
    for (std::size_t ix = 0; ix < grid.size(); ix++) {
        for (std::size_t iy = 0; iy < grid.size(); iy++) {
            double x = grid.coordinate(ix), y = grid.coordinate(iy);
            want(ix, iy) = t.normalization() * psi_fn(t.a * x + t.b * y) * phi_fn(t.c * x + t.d * y);
        }
    }
    return l2_distance(evolved, want, true);
}

}  // namespace

TEST(fock, hermite_functions_are_orthonormal) {
    Grid1D grid(-12.0, 12.0, 400);
    Eigen::MatrixXd h = hermite_functions(grid, 20);
    Eigen::MatrixXd gram = h.transpose() * h * grid.spacing();
    EXPECT_LT((gram - Eigen::MatrixXd::Identity(20, 20)).cwiseAbs().maxCoeff(), 1e-12);
    // φ_0 is the normalized ground state π^{−1/4} e^{−x²/2}.
    EXPECT_NEAR(h(200, 0), std::pow(kPi, -0.25) * std::exp(-0.5 * std::pow(grid.coordinate(200), 2)), 1e-15);
}

TEST(fock, hermite_functions_obey_the_oscillator_equation) {
    // −φ_n'' + x² φ_n = (2n + 1) φ_n, with a finite-difference second derivative.
    Grid1D grid(-8.0, 8.0, 3201);
    Eigen::MatrixXd h = hermite_functions(grid, 6);
    double dx = grid.spacing();
    for (int n = 0; n < 6; n++) {
        for (std::size_t i = 1400; i < 1800; i += 37) {
            double x = grid.coordinate(i);
            double second = (h(i + 1, n) - 2.0 * h(i, n) + h(i - 1, n)) / (dx * dx);
            EXPECT_NEAR(-second + x * x * h(i, n), (2 * n + 1) * h(i, n), 1e-3) << n;
        }
    }
}

TEST(fock, expansion_round_trip) {
    Grid1D grid = Grid1D::standard(512);
    WaveFunction psi = sample_gaussian({1.0, 0.8, -0.5}, grid);
    HermiteExpansion ex = expand_hermite(psi, 40);
    EXPECT_LT(ex.residual, 1e-8);
    EXPECT_NEAR(ex.coefficients.squaredNorm(), 1.0, 1e-10);
    EXPECT_LT(l2_distance(reconstruct_hermite(grid, ex.coefficients), psi), 1e-8);
    // Too few levels leave a visible residual.
    EXPECT_GT(expand_hermite(psi, 3).residual, 1e-3);
}

TEST(fock, annihilation_matrix_elements) {
    ComplexMatrix a = annihilation(5);
    EXPECT_DOUBLE_EQ(a(0, 1).real(), 1.0);
    EXPECT_DOUBLE_EQ(a(3, 4).real(), 2.0);
    // [a, a†] = 1 away from the truncation edge.
    ComplexMatrix comm = a * a.adjoint() - a.adjoint() * a;
    for (int k = 0; k < 4; k++) EXPECT_NEAR(comm(k, k).real(), 1.0, 1e-15);
}

TEST(fock, quadratic_operator_is_exact_inside_truncation) {
    const std::size_t n = 5;
    QuadraticForm xsq;
    xsq.add(kX, kX, 1.0);
    ComplexMatrix op = fock_operator(xsq, n);
    // ⟨k|x̂²|k⟩ = k + 1/2 on the x mode, including the top level.
    for (std::size_t k = 0; k < n; k++) {
        auto idx = static_cast<Eigen::Index>(k * n);
        EXPECT_NEAR(op(idx, idx).real(), k + 0.5, 1e-14) << k;
    }
    QuadraticForm osc;
    osc.add(kY, kY, 0.5).add(kPy, kPy, 0.5);
    ComplexMatrix h = fock_operator(osc, n);
    // (ŷ² + p̂_y²)/2 = n_y + 1/2 exactly, diagonal.
    for (std::size_t k = 0; k < n * n; k++) {
        auto idx = static_cast<Eigen::Index>(k);
        EXPECT_NEAR(h(idx, idx).real(), double(k % n) + 0.5, 1e-14);
    }
    EXPECT_NEAR(max_abs(h - ComplexMatrix(h.diagonal().asDiagonal())), 0.0, 1e-14);
    EXPECT_TRUE(is_hermitian(fock_operator(ssm_p1_quadratic_form(1.7), n)));
}

TEST(fock, parity_reflects_offset_gaussian) {
    Grid1D grid = Grid1D::standard();
    WaveFunction psi = sample_gaussian({1.2, 0.9, 0.3}, grid);
    WaveFunction once = parity_via_fock(psi, 48);
    std::vector<Complex> reflected(psi.samples.rbegin(), psi.samples.rend());
    EXPECT_LT(l2_distance(once, WaveFunction(grid, reflected)), 1e-6);
    EXPECT_LT(l2_distance(parity_via_fock(once, 48), psi), 1e-6);
    EXPECT_THROW(parity_via_fock(sample_gaussian({6.0, 0.7, 0.0}, grid), 8), NumericalError);
}

TEST(fock, ozawa_generator_realizes_contractive_transform) {
    HamiltonianParams h = hamiltonian_params(CoordTransform::contractive(1.0));
    double r = fock_vs_transform(ozawa_generator(h.u, h.v, h.w), 1.0, CoordTransform::contractive(1.0),
                                 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 28);
    EXPECT_LT(r, 1e-4);
}

TEST(fock, ssm_p0_generator_swaps_with_scaling) {
    const double lambda = 1.3;
    double r = fock_vs_transform(ssm_p0_generator(lambda), kPi / 2.0, CoordTransform::swapping(lambda, 0),
                                 1.0 / std::sqrt(2.0 * lambda), std::sqrt(lambda / 2.0), 24);
    EXPECT_LT(r, 1e-4);
}

TEST(fock, p1_form_swaps_with_scaling_at_small_truncation) {
    EXPECT_LT(scaled_swap_residual(1.0, 20), 1e-4);
}

TEST(fock, evolution_guards) {
    Grid1D grid = Grid1D::standard(128);
    WaveFunction psi = sample_gaussian({0.0, 0.7, 0.0}, grid);
    QuadraticForm g = ssm_p1_quadratic_form(1.0);
    EXPECT_THROW(evolve_quadratic_fock(g, 1.0, psi, psi, kMaxFockLevels + 1), std::invalid_argument);
    EXPECT_THROW(evolve_quadratic_fock(g, 1.0, psi, psi, 0), std::invalid_argument);
    WaveFunction far = sample_gaussian({7.0, 0.7, 0.0}, grid);
    EXPECT_THROW(evolve_quadratic_fock(g, 1.0, far, psi, 6), NumericalError);
}
