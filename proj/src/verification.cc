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

#include "qmeasure/verification.h"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qmeasure/fock.h"
#include "qmeasure/qubit_measurement.h"
#include "qmeasure/quadratic_form.h"
#include "qmeasure/wavefunction.h"

namespace qmeasure {

namespace {

constexpr double kOperatorTolerance = 1e-10;
constexpr double kScaledSwapTolerance = 1e-4;
constexpr double kParityTolerance = 1e-6;
constexpr std::size_t kScaledSwapFockLevels = 32;
const double kOzawaLambdas[] = {0.5, 1.0, 2.0};

Complex gaussian(double x, double center, double width, double momentum) {
    double u = x - center;
    return std::pow(2.0 * kPi * width * width, -0.25) * std::exp(Complex(-u * u / (4.0 * width * width), momentum * x));
}

std::string lambda_tag(double lambda) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", lambda);
    return buf;
}

void qubit_hamiltonians(std::vector<IdentityCheck> &out) {
    QubitGenerator a = hamiltonian_generator(QubitScheme::Cnot);
    out.push_back({"exp(i pi A) == U_CNOT",
                   max_abs(matrix_exponential(a.generator, kI * a.angle) - build_unitary(QubitScheme::Cnot)),
                   kOperatorTolerance});

    QubitGenerator b = hamiltonian_generator(QubitScheme::Dcnot);
    out.push_back({"B^3 == B", max_abs(b.generator * b.generator * b.generator - b.generator), kOperatorTolerance});
    out.push_back({"exp(2i pi/3 B) == U_DCNOT",
                   max_abs(matrix_exponential(b.generator, kI * b.angle) - build_unitary(QubitScheme::Dcnot)),
                   kOperatorTolerance});

    QubitGenerator s = hamiltonian_generator(QubitScheme::Swap);
    PhaseMatch m = equal_up_to_global_phase(
        matrix_exponential(s.generator, kI * s.angle), build_unitary(QubitScheme::Swap), kOperatorTolerance);
    out.push_back({"exp(i pi/4 S.S) == U_SWAP up to phase", m.residual, kOperatorTolerance});
}

void pulse_sequences(std::vector<IdentityCheck> &out) {
    for (QubitScheme scheme : {QubitScheme::Cnot, QubitScheme::Dcnot}) {
        auto pulses = pulse_sequence(scheme);
        PhaseMatch m = equal_up_to_global_phase(compose_pulses(pulses), build_unitary(scheme), kOperatorTolerance);
        out.push_back(
            {"pulse sequence == U_" + std::string(scheme == QubitScheme::Cnot ? "CNOT" : "DCNOT") + " up to phase",
             m.residual, kOperatorTolerance});
    }
}

double params_diff(const HamiltonianParams &x, const HamiltonianParams &y) {
    return std::max({std::abs(x.u - y.u), std::abs(x.v - y.v), std::abs(x.w - y.w)});
}

/// max |exp(−[[u, v], [w, −u]]) − target|, exponentiated numerically.
double generator_exponential_residual(const HamiltonianParams &params, const CoordTransform &target) {
    Eigen::Matrix2d k;
    k << params.u, params.v, params.w, -params.u;
    Eigen::Matrix2d e = (-k).exp();
    return (e - target.matrix()).cwiseAbs().maxCoeff();
}

void ozawa(std::vector<IdentityCheck> &out) {
    for (double lambda : kOzawaLambdas) {
        std::string tag = " (lambda=" + lambda_tag(lambda) + ")";
        CoordTransform csm = CoordTransform::contractive(lambda);
        HamiltonianParams csm_params = hamiltonian_params(csm);
        out.push_back({"CSM u,v,w" + tag, params_diff(csm_params, csm_hamiltonian_closed_form(lambda)),
                       kOperatorTolerance});
        out.push_back({"CSM exp(-K) == target" + tag, generator_exponential_residual(csm_params, csm),
                       kOperatorTolerance});

        CoordTransform ssm = CoordTransform::swapping(lambda, 0);
        HamiltonianParams ssm_params = hamiltonian_params(ssm);
        out.push_back({"SSM u,v,w" + tag, params_diff(ssm_params, ssm_hamiltonian_closed_form(lambda)),
                       kOperatorTolerance});
        out.push_back({"SSM exp(-K) == target" + tag, generator_exponential_residual(ssm_params, ssm),
                       kOperatorTolerance});
    }
}

void scaled_swap(std::vector<IdentityCheck> &out) {
    for (double lambda : {1.0, 2.0}) {
        out.push_back({"exp(-i pi/2 C) == swap with scaling (lambda=" + lambda_tag(lambda) + ", n_fock=32)",
                       scaled_swap_residual(lambda, kScaledSwapFockLevels), kScaledSwapTolerance});
    }
}

void parity(std::vector<IdentityCheck> &out) {
    ParityResiduals r = parity_residuals();
    out.push_back({"Fock parity == reflection", r.reflection, kParityTolerance});
    out.push_back({"Fock parity squared == identity", r.involution, kParityTolerance});
}

}  // namespace

const std::vector<std::string_view> &verify_suite_names() {
    static const std::vector<std::string_view> names = {
        "qubit-hamiltonians", "pulse-sequences", "ozawa", "appendix-b", "parity"};
    return names;
}

std::vector<IdentityCheck> run_verify_suite(std::string_view suite) {
    std::vector<IdentityCheck> out;
    bool all = suite == "all";
    bool known = all;
    auto want = [&](std::string_view name) {
        bool hit = all || suite == name;
        known = known || hit;
        return hit;
    };
    if (want("qubit-hamiltonians")) qubit_hamiltonians(out);
    if (want("pulse-sequences")) pulse_sequences(out);
    if (want("ozawa")) ozawa(out);
    if (want("appendix-b")) scaled_swap(out);
    if (want("parity")) parity(out);
    if (!known) {
        throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    }
    return out;
}

HamiltonianParams csm_hamiltonian_closed_form(double lambda) {
    double k = 2.0 * kPi / (3.0 * std::sqrt(3.0));
    return {kPi / (3.0 * std::sqrt(3.0)), -k / lambda, k * lambda};
}

HamiltonianParams ssm_hamiltonian_closed_form(double lambda) {
    return {0.0, -kPi / (2.0 * lambda), kPi * lambda / 2.0};
}

double scaled_swap_residual(double lambda, std::size_t n_fock) {
    Grid1D grid(-12.0, 12.0, 384);
    // Widths chosen so that both the inputs and the rescaled outputs stay
    // close to the oscillator ground state.
    double psi_width = 1.0 / std::sqrt(2.0 * lambda);
    double phi_width = std::sqrt(lambda / 2.0);
    auto psi_fn = [&](double x) { return gaussian(x, 0.5, psi_width, 0.3); };
    auto phi_fn = [&](double y) { return gaussian(y, 0.3, phi_width, -0.2); };
    WaveFunction psi(grid, psi_fn);
    WaveFunction phi(grid, phi_fn);

    JointWaveFunction evolved = evolve_quadratic_fock(ssm_p1_quadratic_form(lambda), kPi / 2.0, psi, phi, n_fock);
    JointWaveFunction expected(grid, grid);
    for (std::size_t ix = 0; ix < grid.size(); ix++) {
        for (std::size_t iy = 0; iy < grid.size(); iy++) {
            expected(ix, iy) = psi_fn(grid.coordinate(iy) / lambda) * phi_fn(lambda * grid.coordinate(ix));
        }
    }
    return l2_distance(evolved, expected, true);
}

ParityResiduals parity_residuals(std::size_t n_levels) {
    Grid1D grid = Grid1D::standard();
    WaveFunction psi = sample_gaussian({1.5, 1.0 / std::sqrt(2.0), 0.4}, grid);
    std::vector<Complex> reflected(psi.samples.rbegin(), psi.samples.rend());
    WaveFunction once = parity_via_fock(psi, n_levels);
    WaveFunction twice = parity_via_fock(once, n_levels);
    return {l2_distance(once, WaveFunction(grid, reflected)), l2_distance(twice, psi)};
}

}  // namespace qmeasure
