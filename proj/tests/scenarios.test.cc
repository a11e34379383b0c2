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

#include "qmeasure/scenarios.h"

#include "gtest/gtest.h"

using namespace qmeasure;

namespace {

OutcomeDistribution tabulate(const std::function<double(double)> &f, double lo, double hi, std::size_t n) {
    OutcomeDistribution d;
    Grid1D g(lo, hi, n);
    for (std::size_t i = 0; i < n; i++) {
        d.coordinates.push_back(g.coordinate(i));
        d.density.push_back(f(g.coordinate(i)));
    }
    return d;
}

}  // namespace

TEST(scenarios, valley_to_peak_of_known_shapes) {
    auto bimodal = [](double x) { return std::exp(-(x - 1) * (x - 1) * 8) + std::exp(-(x + 1) * (x + 1) * 8); };
    OutcomeDistribution d = tabulate(bimodal, -3.0, 3.0, 601);
    EXPECT_NEAR(valley_to_peak(d, -1.0, 1.0), 2.0 * std::exp(-8.0) / (1.0 + std::exp(-32.0)), 1e-6);
    OutcomeDistribution flat = tabulate([](double) { return 1.0; }, -1.0, 1.0, 32);
    EXPECT_DOUBLE_EQ(valley_to_peak(flat, -0.5, 0.5), 1.0);
}

TEST(scenarios, two_peak_resolution_grows_with_lambda) {
    TwoPeakReport coarse = scenario_two_peak(1.0, 1.0, 4.0);
    TwoPeakReport scaled = scenario_two_peak(20.0, 1.0, 4.0);
    EXPECT_FALSE(coarse.scaled.resolved);
    EXPECT_FALSE(scaled.unit.resolved);
    EXPECT_TRUE(scaled.scaled.resolved);
    EXPECT_LT(scaled.scaled.valley_to_peak, 0.5);
    EXPECT_NEAR(scaled.scaled.distribution.total(), 1.0, 1e-6);
    EXPECT_DOUBLE_EQ(scaled.system_width, 0.1);
    // The unit-λ baseline is independent of the requested λ.
    EXPECT_DOUBLE_EQ(coarse.unit.valley_to_peak, scaled.unit.valley_to_peak);
}

TEST(scenarios, two_peak_ratio_is_monotone_once_resolved) {
    // Below resolution the window edges move with λ, so only the resolved branch is monotone.
    double previous = 2.0;
    for (double lambda : {10.0, 15.0, 20.0, 30.0}) {
        double ratio = scenario_two_peak(lambda, 1.0, 4.0, 512).scaled.valley_to_peak;
        EXPECT_LT(ratio, previous) << lambda;
        previous = ratio;
    }
}

TEST(scenarios, two_peak_rejects_bad_parameters) {
    EXPECT_THROW(scenario_two_peak(0.0, 1.0, 4.0), std::invalid_argument);
    EXPECT_THROW(scenario_two_peak(1.0, -1.0, 4.0), std::invalid_argument);
    EXPECT_THROW(scenario_two_peak(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(scenarios, narrow_probe_is_clamped_to_grid_resolution) {
    TwoPeakReport r = scenario_two_peak(1.0, 1.0, 1e-4, 256);
    EXPECT_GT(r.scaled.effective_probe_width, 1e-4);
    EXPECT_TRUE(r.scaled.resolved);
}

TEST(scenarios, repeated_swapping_post_states_do_not_move) {
    WaveFunction probe = sample_gaussian({0.5, 0.8, 0.0}, Grid1D::standard(512));
    RepeatedReport r = scenario_repeated_measurement(RepeatedScheme::Swapping, 8, probe, {0.0, 1.0, 0.0}, 1.0, 0, 7);
    ASSERT_EQ(r.rounds.size(), 8u);
    EXPECT_LT(r.post_state_spread, 1e-6);
    EXPECT_LT(r.center_spread, 1e-6);
    // SSM with p = 0 leaves φ(−x): centre −0.5, width 0.8.
    EXPECT_NEAR(r.rounds[3].post_center, -0.5, 1e-8);
    EXPECT_NEAR(r.rounds[3].post_width, 0.8, 1e-8);
}

TEST(scenarios, repeated_contractive_post_states_follow_outcomes) {
    WaveFunction probe = sample_gaussian({0.0, 0.5, 0.0}, Grid1D::standard(512));
    RepeatedReport r =
        scenario_repeated_measurement(RepeatedScheme::Contractive, 6, probe, {0.0, 1.0, 0.0}, 1.0, 0, 11);
    EXPECT_GT(r.center_spread, 0.05);
    EXPECT_GT(r.post_state_spread, 0.05);
    EXPECT_GE(r.resolution_window, 6.0 * 0.5 - 1e-6);
    // For λ = 1 the post-state is φ(a − x): centred on the outcome.
    for (const auto &round : r.rounds) {
        EXPECT_NEAR(round.post_center, round.outcome, 1e-6);
    }
}

TEST(scenarios, repeated_is_deterministic_given_seed) {
    WaveFunction probe = sample_gaussian({0.0, 0.7, 0.0}, Grid1D::standard(256));
    auto run = [&](std::uint64_t seed) {
        return scenario_repeated_measurement(RepeatedScheme::Contractive, 4, probe, {0.0, 1.0, 0.0}, 1.0, 0, seed);
    };
    RepeatedReport a = run(5), b = run(5), c = run(6);
    for (std::size_t i = 0; i < a.rounds.size(); i++) {
        EXPECT_EQ(a.rounds[i].outcome, b.rounds[i].outcome);
    }
    bool differs = false;
    for (std::size_t i = 0; i < a.rounds.size(); i++) {
        differs = differs || a.rounds[i].outcome != c.rounds[i].outcome;
    }
    EXPECT_TRUE(differs);
}

TEST(scenarios, repeated_rejects_bad_parameters) {
    WaveFunction probe = sample_gaussian({0.0, 1.0, 0.0}, Grid1D::standard(128));
    EXPECT_THROW(
        scenario_repeated_measurement(RepeatedScheme::Swapping, 1, probe, {0.0, 1.0, 0.0}, 1.0, 0, 7),
        std::invalid_argument);
    EXPECT_THROW(
        scenario_repeated_measurement(RepeatedScheme::Swapping, 3, probe, {0.0, 1.0, 0.0}, 0.0, 0, 7),
        std::invalid_argument);
    EXPECT_THROW(
        scenario_repeated_measurement(RepeatedScheme::Swapping, 3, probe, {0.0, 1.0, 0.0}, 1.0, 2, 7),
        std::invalid_argument);
    EXPECT_EQ(scheme_name(RepeatedScheme::Contractive), "csm");
    EXPECT_EQ(scheme_name(RepeatedScheme::Swapping), "ssm");
}
