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

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace qmeasure {

namespace {

constexpr std::size_t kSystemGridPoints = 512;

PeakResolution resolve_peaks(
    double lambda, double separation, double probe_width, double system_width, const WaveFunction &system,
    std::size_t n_points) {
    double out_width = std::hypot(probe_width, lambda * system_width);
    double half = lambda * separation / 2.0 + 10.0 * std::max(out_width, probe_width);
    Grid1D probe_grid(-half, half, n_points);
    double effective = std::max(probe_width, 4.0 * probe_grid.spacing());
    WaveFunction probe = sample_gaussian({0.0, effective, 0.0}, probe_grid);

    JointWaveFunction joint = apply_transform(CoordTransform::von_neumann(lambda), system, probe);
    OutcomeDistribution dist = outcome_distribution(joint);
    double image = lambda * separation / 2.0;
    double ratio = valley_to_peak(dist, -image, image);
    return {lambda, effective, std::move(dist), ratio, ratio < kResolvedValleyRatio};
}

}  // namespace

double valley_to_peak(const OutcomeDistribution &dist, double lo, double hi) {
    double peak = *std::max_element(dist.density.begin(), dist.density.end());
    double valley = peak;
    for (std::size_t i = 0; i < dist.coordinates.size(); i++) {
        if (dist.coordinates[i] >= lo && dist.coordinates[i] <= hi) {
            valley = std::min(valley, dist.density[i]);
        }
    }
    return peak > 0.0 ? valley / peak : 1.0;
}

TwoPeakReport scenario_two_peak(double lambda, double separation, double probe_width, std::size_t n_points) {
    if (!(separation > 0.0) || !(probe_width > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("scenario_two_peak: lambda, separation and probe width must be positive");
    }
    double system_width = separation / 10.0;
    double half = separation / 2.0 + 10.0 * system_width;
    Grid1D system_grid(-half, half, kSystemGridPoints);
    WaveFunction left = sample_gaussian({-separation / 2.0, system_width, 0.0}, system_grid);
    WaveFunction right = sample_gaussian({separation / 2.0, system_width, 0.0}, system_grid);
    std::vector<Complex> sum(system_grid.size());
    for (std::size_t i = 0; i < sum.size(); i++) {
        sum[i] = left.samples[i] + right.samples[i];
    }
    WaveFunction system = WaveFunction(system_grid, std::move(sum)).normalized();

    return {
        separation,
        probe_width,
        system_width,
        resolve_peaks(lambda, separation, probe_width, system_width, system, n_points),
        resolve_peaks(1.0, separation, probe_width, system_width, system, n_points),
    };
}

std::string_view scheme_name(RepeatedScheme scheme) {
    return scheme == RepeatedScheme::Contractive ? "csm" : "ssm";
}

RepeatedReport scenario_repeated_measurement(
    RepeatedScheme scheme, int rounds, const WaveFunction &probe, const GaussianSpec &system, double lambda, int p,
    std::uint64_t seed) {
    if (rounds < 2) {
        throw std::invalid_argument("scenario_repeated_measurement: at least 2 rounds are required");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("scenario_repeated_measurement: lambda must be positive");
    }
    if (p != 0 && p != 1) {
        throw std::invalid_argument("scenario_repeated_measurement: p must be 0 or 1");
    }
    CoordTransform transform =
        scheme == RepeatedScheme::Contractive ? CoordTransform::contractive(lambda) : CoordTransform::swapping(lambda, p);

    RepeatedReport report{scheme, lambda, p, seed, {}, 0.0, 0.0, 0.0};
    std::mt19937_64 rng(seed);
    WaveFunction state = sample_gaussian(system, probe.grid);
    std::vector<WaveFunction> posts;
    std::vector<std::pair<double, double>> windows;

    for (int round = 0; round < rounds; round++) {
        JointWaveFunction joint = apply_transform(transform, state, probe);
        OutcomeDistribution dist = outcome_distribution(joint);
        std::discrete_distribution<std::size_t> pick(dist.density.begin(), dist.density.end());
        double outcome = dist.coordinates[pick(rng)];

        WaveFunction post = postmeasurement_state(joint, outcome);
        double center = post.mean();
        double width = std::sqrt(post.variance());
        double distance = posts.empty() ? 0.0 : l2_distance_up_to_phase(post, posts.front());
        report.rounds.push_back({outcome, center, width, distance});
        windows.emplace_back(center - 3.0 * width, center + 3.0 * width);
        posts.push_back(post);
        state = std::move(post);
    }

    double lo = report.rounds.front().post_center;
    double hi = lo;
    for (const auto &r : report.rounds) {
        report.post_state_spread = std::max(report.post_state_spread, r.distance_to_first);
        lo = std::min(lo, r.post_center);
        hi = std::max(hi, r.post_center);
    }
    report.center_spread = hi - lo;

    std::sort(windows.begin(), windows.end());
    double covered = 0.0;
    double run_lo = windows.front().first;
    double run_hi = windows.front().second;
    for (const auto &[a, b] : windows) {
        if (a > run_hi) {
            covered += run_hi - run_lo;
            run_lo = a;
            run_hi = b;
        } else {
            run_hi = std::max(run_hi, b);
        }
    }
    covered += run_hi - run_lo;
    report.resolution_window = covered;
    return report;
}

}  // namespace qmeasure
