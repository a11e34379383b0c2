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

#ifndef QMEASURE_WAVEFUNCTION_H
#define QMEASURE_WAVEFUNCTION_H

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "qmeasure/cv_transform.h"
#include "qmeasure/linalg.h"

namespace qmeasure {

/// Uniform grid including both end points.
class Grid1D {
   public:
    /// Throws std::invalid_argument unless x_min < x_max and n_points ≥ 16.
    Grid1D(double x_min, double x_max, std::size_t n_points);

    /// [−16, 16] with 1024 points.
    static Grid1D standard();
    static Grid1D standard(std::size_t n_points);

    double x_min() const {
        return x_min_;
    }
    double x_max() const {
        return x_max_;
    }
    std::size_t size() const {
        return n_points_;
    }
    double spacing() const {
        return spacing_;
    }
    double coordinate(std::size_t i) const {
        return x_min_ + spacing_ * static_cast<double>(i);
    }
    bool contains(double x) const {
        return x >= x_min_ && x <= x_max_;
    }

    bool operator==(const Grid1D &other) const = default;

   private:
    double x_min_;
    double x_max_;
    std::size_t n_points_;
    double spacing_;
};

/// Trapezoidal ∫ f over the grid.
double trapezoid(const Grid1D &grid, const std::vector<double> &values);

/// A state that would not fit the simulation box, or that a transform maps
/// out of it.
struct GridLeakageError : NumericalError {
    using NumericalError::NumericalError;
};

/// An outcome whose probability density is too small to condition on.
struct ZeroProbabilityOutcome : std::domain_error {
    using std::domain_error::domain_error;
};

struct WaveFunction {
    Grid1D grid;
    std::vector<Complex> samples;

    WaveFunction(Grid1D grid, std::vector<Complex> samples);
    WaveFunction(Grid1D grid, const std::function<Complex(double)> &f);

    double norm_squared() const;
    bool is_normalized(double tol = 1e-6) const;
    /// |ψ| at both edges below tol · max|ψ|.
    bool fits_in_box(double tol = 1e-6) const;
    WaveFunction normalized() const;

    /// Catmull-Rom interpolation; zero outside the grid.
    Complex at(double x) const;

    std::vector<double> density() const;
    double mean() const;
    double variance() const;
};

/// L² distance √∫|ψ1 − ψ2|². Both states must share a grid.
double l2_distance(const WaveFunction &psi1, const WaveFunction &psi2);
/// min over φ of the L² distance between ψ1 and e^{iφ}ψ2.
double l2_distance_up_to_phase(const WaveFunction &psi1, const WaveFunction &psi2);

struct GaussianSpec {
    double center = 0.0;
    /// Standard deviation of |ψ|².
    double width = 1.0;
    double momentum = 0.0;
};

/// (2πσ²)^{−1/4} exp(−(x−c)²/4σ² + ikx), renormalized on the grid.
/// Throws std::invalid_argument for width ≤ 0 and GridLeakageError when the
/// Gaussian does not decay to 1e-6 of its peak inside the grid.
WaveFunction sample_gaussian(const GaussianSpec &spec, const Grid1D &grid);

/// Samples Ψ(x_i, y_j), stored with x as the slow index.
struct JointWaveFunction {
    Grid1D grid_x;
    Grid1D grid_y;
    std::vector<Complex> samples;
    /// Sample points whose substituted arguments fell outside the input grids.
    std::size_t off_grid_samples = 0;
    /// Fraction of probability lost to the box.
    double leaked_mass = 0.0;

    JointWaveFunction(Grid1D grid_x, Grid1D grid_y);

    Complex &operator()(std::size_t ix, std::size_t iy) {
        return samples[ix * grid_y.size() + iy];
    }
    const Complex &operator()(std::size_t ix, std::size_t iy) const {
        return samples[ix * grid_y.size() + iy];
    }

    double norm_squared() const;
    /// Singular values of the sample matrix, largest first.
    Eigen::VectorXd singular_values() const;
};

JointWaveFunction product_state(const WaveFunction &psi, const WaveFunction &phi);

/// L² distance over the joint grid, optionally minimized over a global phase.
double l2_distance(const JointWaveFunction &lhs, const JointWaveFunction &rhs, bool up_to_phase = false);

/// Largest fraction of probability that apply_transform tolerates losing.
inline constexpr double kMaxLeakedMass = 1e-3;

/// Ψ(x, y) = √|det| ψ(ax + by) φ(cx + dy) on ψ's grid (x) and φ's grid (y).
/// Arguments off the input grids read as zero and are counted. Throws
/// GridLeakageError when more than kMaxLeakedMass of the probability is lost.
JointWaveFunction apply_transform(const CoordTransform &t, const WaveFunction &psi, const WaveFunction &phi);

/// Probability density of the probe coordinate.
struct OutcomeDistribution {
    std::vector<double> coordinates;
    std::vector<double> density;

    double total() const;
    double mean() const;
    double variance() const;
    /// ∫|P − f| over the bins.
    double l1_distance(const std::function<double(double)> &f) const;
    double l1_distance(const OutcomeDistribution &other) const;
    /// λ P(λ a), the distribution expressed in system units.
    OutcomeDistribution rescaled(double lambda) const;

    /// RFC-4180 CSV with header "coordinate,density".
    void write_csv(std::ostream &out) const;
};

/// P(y) = ∫|Ψ(x, y)|² dx.
OutcomeDistribution outcome_distribution(const JointWaveFunction &joint);

/// Normalized slice Ψ(x, a). Off-node outcomes are interpolated along y.
/// Throws ZeroProbabilityOutcome when ∫|Ψ(x, a)|² dx < 1e-12.
WaveFunction postmeasurement_state(const JointWaveFunction &joint, double outcome);

struct SnrResult {
    double analytic;
    double simulated;
};

/// Signal-to-noise of a von Neumann position readout with a zero-mean
/// Gaussian probe of width d: analytic λ²α²/d² against mean²/variance of the
/// simulated outcome distribution for a system Gaussian of width 10⁻³ d
/// centred at α (a stand-in for a system localized at α), with n_points
/// probe samples. Throws std::invalid_argument for a degenerate probe
/// (width ≤ 0 or nonzero center).
SnrResult snr(const GaussianSpec &probe, double lambda, double alpha, std::size_t n_points = 2048);

}  // namespace qmeasure

#endif
