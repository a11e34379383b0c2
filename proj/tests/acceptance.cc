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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qmeasure/cv_transform.h"
#include "qmeasure/fock.h"
#include "qmeasure/linalg.h"
#include "qmeasure/quadratic_form.h"
#include "qmeasure/qubit_measurement.h"
#include "qmeasure/scenarios.h"
#include "qmeasure/verification.h"
#include "qmeasure/wavefunction.h"

using namespace qmeasure;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

Complex gaussian(double x, double center, double width, double momentum) {
    double u = x - center;
    return std::pow(2.0 * kPi * width * width, -0.25) * std::exp(Complex(-u * u / (4.0 * width * width), momentum * x));
}

double gaussian_pdf(double x, double mean, double sd) {
    double u = (x - mean) / sd;
    return std::exp(-0.5 * u * u) / (sd * std::sqrt(2.0 * kPi));
}

QubitState random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    return QubitState{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))}.normalized();
}

// |u><v| as a 2x2 matrix.
ComplexMatrix outer(const ComplexVector &u, const ComplexVector &v) {
    return u * v.adjoint();
}

Outcome criterion_1() {
    QubitGenerator a = hamiltonian_generator(QubitScheme::Cnot);
    QubitGenerator b = hamiltonian_generator(QubitScheme::Dcnot);
    QubitGenerator s = hamiltonian_generator(QubitScheme::Swap);
    double ra = max_abs(matrix_exponential(a.generator, kI * kPi) - cnot_system_to_probe());
    double rb = max_abs(
        matrix_exponential(b.generator, kI * (2.0 * kPi / 3.0)) - cnot_system_to_probe() * cnot_probe_to_system());
    // Independent swap oracle: |s, p> -> |p, s>.
    ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
    for (int sys = 0; sys < 2; sys++) {
        for (int pr = 0; pr < 2; pr++) {
            swap(2 * pr + sys, 2 * sys + pr) = 1.0;
        }
    }
    double rs = equal_up_to_global_phase(matrix_exponential(s.generator, kI * (kPi / 4.0)), swap).residual;
    double worst = std::max({ra, rb, rs});
    return {worst < 1e-10, fmt("A: %.2e, B: %.2e, SWAP up to phase: %.2e (tol 1e-10)", ra, rb, rs)};
}

Outcome criterion_2() {
    double rc = equal_up_to_global_phase(
                    compose_pulses(pulse_sequence(QubitScheme::Cnot)), build_unitary(QubitScheme::Cnot))
                    .residual;
    double rd = equal_up_to_global_phase(
                    compose_pulses(pulse_sequence(QubitScheme::Dcnot)), build_unitary(QubitScheme::Dcnot))
                    .residual;
    return {std::max(rc, rd) < 1e-10, fmt("CNOT: %.2e, DCNOT: %.2e up to phase (tol 1e-10)", rc, rd)};
}

Outcome criterion_3() {
    std::mt19937_64 rng(3);
    double completeness = 0.0;
    double closed = 0.0;
    ComplexVector plus(2), minus(2);
    plus << 1.0, 0.0;
    minus << 0.0, 1.0;
    auto track = [&](const ComplexMatrix &got, const ComplexMatrix &want) {
        closed = std::max(closed, equal_up_to_global_phase(got, want, 1e-10).residual);
    };
    for (int trial = 0; trial < 200; trial++) {
        QubitState probe = random_state(rng);
        ComplexVector phi = probe.vector();
        for (QubitScheme scheme : {QubitScheme::Cnot, QubitScheme::Dcnot, QubitScheme::Swap}) {
            KrausPair k = kraus_operators(scheme, probe);
            completeness = std::max(completeness, max_abs(k.completeness() - identity(2)));
        }
        // DCNOT: M± = |ψ'±><±| with ψ'+ = c|+> + d|->, ψ'- = d|+> + c|->.
        ComplexVector post_plus(2), post_minus(2);
        post_plus << phi[0], phi[1];
        post_minus << phi[1], phi[0];
        KrausPair kd = kraus_operators(QubitScheme::Dcnot, probe);
        track(kd.plus, outer(post_plus, plus));
        track(kd.minus, outer(post_minus, minus));
        // SWAP: M± = |φ><±|.
        KrausPair ks = kraus_operators(QubitScheme::Swap, probe);
        track(ks.plus, outer(phi, plus));
        track(ks.minus, outer(phi, minus));
    }
    // CNOT with the probe prepared in |+>: M± = |±><±|.
    KrausPair kc = kraus_operators(QubitScheme::Cnot, QubitState{1.0, 0.0});
    track(kc.plus, outer(plus, plus));
    track(kc.minus, outer(minus, minus));
    bool pass = completeness < 1e-10 && closed < 1e-10;
    return {pass, fmt("completeness: %.2e, closed forms: %.2e over 200 probes (tol 1e-10)", completeness, closed)};
}

CoordTransform random_target(std::mt19937_64 &rng, double det) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (;;) {
        double a = u(rng), b = u(rng), c = u(rng);
        if (std::abs(a) < 0.1 || std::abs(b) < 1e-3) {
            continue;
        }
        return {a, b, c, (det + b * c) / a};
    }
}

Outcome criterion_4() {
    std::mt19937_64 rng(4);
    double vnm = 0.0, two = 0.0, single = 0.0;
    for (int trial = 0; trial < 1000; trial++) {
        CoordTransform t = random_target(rng, trial % 2 == 0 ? 1.0 : -1.0);
        vnm = std::max(vnm, compose(decompose_von_neumann(t).sequence()).max_abs_diff(t));
        two = std::max(two, compose(decompose_two_mode(t).sequence()).max_abs_diff(t));
        single = std::max(single, compose(decompose_single_mode(t).sequence()).max_abs_diff(t));
    }
    bool pass = vnm < 1e-12 && two < 1e-10 && single < 1e-10;
    return {pass, fmt("von Neumann: %.2e (tol 1e-12), two-mode: %.2e, single-mode: %.2e (tol 1e-10)", vnm, two, single)};
}

Outcome criterion_5() {
    double worst = 0.0;
    auto check = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
    for (double lambda : {0.5, 1.0, 2.0, 3.7}) {
        OpticalParams vnm = decompose_two_mode(CoordTransform::von_neumann(lambda));
        check(vnm.r, std::log((lambda + std::sqrt(lambda * lambda + 4.0)) / 2.0));
        check(vnm.theta1, 0.5 * std::atan(lambda / 2.0));
        check(vnm.theta2, 0.5 * std::atan(lambda / 2.0));
        check(std::sin(2.0 * vnm.theta1), std::tanh(vnm.r));

        double lp = lambda + 1.0 / lambda;
        double lm = lambda - 1.0 / lambda;
        OpticalParams csm = decompose_two_mode(CoordTransform::contractive(lambda));
        check(csm.r, std::log((std::sqrt(lp * lp + 1.0) + std::sqrt(lm * lm + 1.0)) / 2.0));
        check(csm.theta1, (std::atan(lp) - std::atan(lm)) / 2.0 + kPi / 4.0);
        check(csm.theta2, (std::atan(lp) + std::atan(lm)) / 2.0 - kPi / 4.0);

        HamiltonianParams ozawa_csm = hamiltonian_params(CoordTransform::contractive(lambda));
        double k = 2.0 * kPi / (3.0 * std::sqrt(3.0));
        check(ozawa_csm.u, kPi / (3.0 * std::sqrt(3.0)));
        check(ozawa_csm.v, -k / lambda);
        check(ozawa_csm.w, k * lambda);
        HamiltonianParams ozawa_ssm = hamiltonian_params(CoordTransform::swapping(lambda, 0));
        check(ozawa_ssm.u, 0.0);
        check(ozawa_ssm.v, -kPi / (2.0 * lambda));
        check(ozawa_ssm.w, kPi * lambda / 2.0);
    }
    for (double lambda : {1.0, 2.0, 3.7}) {
        for (int p : {0, 1}) {
            OpticalParams ssm = decompose_two_mode(CoordTransform::swapping(lambda, p));
            check(ssm.r, std::log(lambda));
            check(ssm.theta1, kPi / 4.0);
            check(ssm.theta2, kPi / 4.0);
            check(ssm.p, p);
        }
    }
    // For λ < 1 the decomposer returns r ≥ 0; the tuple (ln λ, π/4, π/4) is an
    // equivalent parameterization of the same transform.
    for (double lambda : {0.3, 0.5, 0.9}) {
        for (int p : {0, 1}) {
            CoordTransform target = CoordTransform::swapping(lambda, p);
            worst = std::max(worst, OpticalParams{std::log(lambda), kPi / 4.0, kPi / 4.0, p}.transform().max_abs_diff(target));
            worst = std::max(worst, decompose_two_mode(target).transform().max_abs_diff(target));
        }
    }
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    OpticalParams vnm1 = decompose_two_mode(CoordTransform::von_neumann(1.0));
    check(vnm1.r, std::log(phi));
    check(vnm1.theta1, std::atan(phi) - kPi / 4.0);
    OpticalParams csm1 = decompose_two_mode(CoordTransform::contractive(1.0));
    check(csm1.r, std::log(phi));
    check(csm1.theta1, std::atan(1.0 / phi) + kPi / 4.0);
    check(csm1.theta2, std::atan(1.0 / phi) - kPi / 4.0);
    return {worst < 1e-12, fmt("max deviation from the closed-form tables: %.2e (tol 1e-12)", worst)};
}

Outcome criterion_6() {
    Grid1D grid = Grid1D::standard();
    const double lambda = 2.0;
    const GaussianSpec system{0.3, 0.8, 0.5};
    WaveFunction psi = sample_gaussian(system, grid);
    // A single Gaussian and a chirped two-lobe superposition.
    WaveFunction probe_a = sample_gaussian({0.0, 0.5, 0.0}, grid);
    WaveFunction probe_b = WaveFunction(grid, [](double y) {
                               return (gaussian(y, -2.0, 0.6, 0.0) + gaussian(y, 2.5, 0.4, 0.0)) *
                                      std::exp(Complex(0.0, 0.3 * y * y));
                           }).normalized();
    auto born = [&](double a) { return gaussian_pdf(a / lambda, system.center, system.width) / lambda; };

    double l1 = 0.0;
    double spread = 0.0;
    for (CoordTransform t : {CoordTransform::contractive(lambda), CoordTransform::swapping(lambda, 0)}) {
        OutcomeDistribution pa = outcome_distribution(apply_transform(t, psi, probe_a));
        OutcomeDistribution pb = outcome_distribution(apply_transform(t, psi, probe_b));
        l1 = std::max({l1, pa.l1_distance(born), pb.l1_distance(born)});
        spread = std::max(spread, pa.l1_distance(pb));
    }

    // SSM post-states at 10 sampled outcomes.
    JointWaveFunction joint = apply_transform(CoordTransform::swapping(lambda, 1), psi, probe_b);
    OutcomeDistribution dist = outcome_distribution(joint);
    std::mt19937_64 rng(6);
    std::discrete_distribution<std::size_t> pick(dist.density.begin(), dist.density.end());
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    std::vector<WaveFunction> posts;
    for (int i = 0; i < 10; i++) {
        // Half of the outcomes fall between grid nodes.
        double a = dist.coordinates[pick(rng)] + (i % 2 == 0 ? 0.0 : jitter(rng) * grid.spacing());
        posts.push_back(postmeasurement_state(joint, a));
    }
    double post = 0.0;
    for (const auto &w : posts) {
        post = std::max(post, l2_distance_up_to_phase(w, posts.front()));
    }
    bool pass = l1 < 1e-3 && spread < 1e-4 && post < 1e-6;
    return {pass, fmt("L1 to Born: %.2e (tol 1e-3), probe spread: %.2e (tol 1e-4), SSM post-state L2: %.2e (tol 1e-6)",
                      l1, spread, post)};
}

Outcome criterion_7() {
    double worst = 0.0;
    for (double lambda : {1.0, 3.0, 10.0}) {
        for (double alpha : {0.5, 1.0}) {
            for (double d : {0.5, 2.0}) {
                SnrResult r = snr({0.0, d, 0.0}, lambda, alpha);
                double expected = lambda * lambda * alpha * alpha / (d * d);
                worst = std::max({worst, std::abs(r.simulated - expected) / expected,
                                  std::abs(r.analytic - expected) / expected});
            }
        }
    }
    return {worst < 0.01, fmt("max relative S/N deviation over 12 settings: %.2e (tol 1e-2)", worst)};
}

Outcome criterion_8() {
    Grid1D grid(-12.0, 12.0, 320);
    double worst = 0.0;
    for (double lambda : {1.0, 2.0}) {
        double sp = 0.9 / std::sqrt(2.0 * lambda);
        double sf = 1.1 * std::sqrt(lambda / 2.0);
        auto psi_fn = [&](double x) { return gaussian(x, -0.4, sp, 0.5); };
        auto phi_fn = [&](double y) { return gaussian(y, 0.6, sf, 0.0); };
        JointWaveFunction evolved = evolve_quadratic_fock(
            ssm_p1_quadratic_form(lambda), kPi / 2.0, WaveFunction(grid, psi_fn), WaveFunction(grid, phi_fn), 32);
        JointWaveFunction expected(grid, grid);
        for (std::size_t ix = 0; ix < grid.size(); ix++) {
            for (std::size_t iy = 0; iy < grid.size(); iy++) {
                expected(ix, iy) = psi_fn(grid.coordinate(iy) / lambda) * phi_fn(lambda * grid.coordinate(ix));
            }
        }
        worst = std::max(worst, l2_distance(evolved, expected, true));
    }
    return {worst < 1e-4, fmt("max L2 up to global phase, lambda in {1, 2}, n_fock=32: %.2e (tol 1e-4)", worst)};
}

Outcome criterion_9() {
    Grid1D grid = Grid1D::standard();
    WaveFunction psi = sample_gaussian({2.0, 0.6, -0.7}, grid);
    WaveFunction reflected(grid, [&](double x) { return psi.at(-x); });
    WaveFunction once = parity_via_fock(psi, 56);
    WaveFunction twice = parity_via_fock(once, 56);
    double r1 = l2_distance(once, reflected);
    double r2 = l2_distance(twice, psi);
    return {r1 < 2e-6 && r2 < 2e-6, fmt("reflection: %.2e, parity squared: %.2e (tol 2e-6)", r1, r2)};
}

Outcome criterion_10() {
    const double sep = 1.0, d = 4.0;
    bool pass = true;
    std::string detail;
    for (double lambda : {1.0, 20.0}) {
        TwoPeakReport r = scenario_two_peak(lambda, sep, d);
        // Oracle: equal mixture of two Gaussians of variance λ²w² + d² centred at ±λ sep/2.
        double sd = std::hypot(lambda * r.system_width, r.scaled.effective_probe_width);
        auto mix = [&](double a) {
            return 0.5 * (gaussian_pdf(a, -lambda * sep / 2.0, sd) + gaussian_pdf(a, lambda * sep / 2.0, sd));
        };
        double image = lambda * sep / 2.0;
        double valley = mix(image);
        double peak = 0.0;
        for (double a : r.scaled.distribution.coordinates) {
            peak = std::max(peak, mix(a));
            if (std::abs(a) <= image) {
                valley = std::min(valley, mix(a));
            }
        }
        bool oracle_resolved = valley / peak < kResolvedValleyRatio;
        bool expected = lambda > 1.0;
        double l1 = r.scaled.distribution.l1_distance(mix);
        pass = pass && r.scaled.resolved == expected && oracle_resolved == expected && l1 < 1e-3;
        detail += fmt("lambda=%g: ratio %.3f (oracle %.3f)", lambda, r.scaled.valley_to_peak, valley / peak);
        detail += r.scaled.resolved ? " resolved; " : " unresolved; ";
    }
    return {pass, detail + "expected unresolved at 1, resolved at 20"};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"qubit Hamiltonian identities", criterion_1},
        {"pulse sequences", criterion_2},
        {"Kraus completeness and closed forms", criterion_3},
        {"decomposition round trips", criterion_4},
        {"optical and Hamiltonian parameter tables", criterion_5},
        {"grid simulation vs closed forms", criterion_6},
        {"signal-to-noise ratio", criterion_7},
        {"Fock-basis swap with scaling", criterion_8},
        {"parity identity", criterion_9},
        {"two-peak resolvability", criterion_10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception &e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2zu %s: %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    out.detail.c_str(), seconds);
        failures += out.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
