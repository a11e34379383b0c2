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

#ifndef QMEASURE_SCENARIOS_H
#define QMEASURE_SCENARIOS_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "qmeasure/wavefunction.h"

namespace qmeasure {

/// Valley-to-peak density ratio below which two peaks count as resolved.
inline constexpr double kResolvedValleyRatio = 0.8;

struct PeakResolution {
    double lambda;
    /// Probe width actually simulated (never below 4 grid spacings).
    double effective_probe_width;
    OutcomeDistribution distribution;
    /// Minimum density between the two image points over the maximum density.
    double valley_to_peak;
    bool resolved;
};

struct TwoPeakReport {
    double separation;
    double probe_width;
    /// Width of each of the two system peaks.
    double system_width;
    PeakResolution scaled;
    PeakResolution unit;
};

/// Valley-to-peak ratio of a distribution between coordinates lo and hi.
double valley_to_peak(const OutcomeDistribution &dist, double lo, double hi);

/// A system state made of two narrow Gaussians at ±separation/2 read out by
/// a von Neumann measurement with a coarse Gaussian probe, at the requested
/// λ and at λ = 1. Throws std::invalid_argument unless separation > 0,
/// probe_width > 0 and lambda > 0.
TwoPeakReport scenario_two_peak(double lambda, double separation, double probe_width, std::size_t n_points = 1024);

enum class RepeatedScheme { Contractive, Swapping };

std::string_view scheme_name(RepeatedScheme scheme);

struct RepeatedRound {
    double outcome;
    double post_center;
    double post_width;
    /// Phase-insensitive L² distance to the first round's post-state.
    double distance_to_first;
};

struct RepeatedReport {
    RepeatedScheme scheme;
    double lambda;
    int p;
    std::uint64_t seed;
    std::vector<RepeatedRound> rounds;
    /// Largest distance_to_first over all rounds.
    double post_state_spread;
    /// max − min of the post-state centers.
    double center_spread;
    /// Length of the union of [center − 3σ, center + 3σ] over all rounds:
    /// the coordinate range a probe must resolve finely across the run.
    double resolution_window;
};

/// Feeds each post-measurement state back in as the next system state and
/// samples one outcome per round from a seeded generator. The initial
/// system state is sampled on the probe's grid. Throws
/// std::invalid_argument for rounds < 2.
RepeatedReport scenario_repeated_measurement(
    RepeatedScheme scheme, int rounds, const WaveFunction &probe, const GaussianSpec &system, double lambda, int p,
    std::uint64_t seed);

}  // namespace qmeasure

#endif
