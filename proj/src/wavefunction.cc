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

#include "qmeasure/wavefunction.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <string>

namespace qmeasure {

namespace {

constexpr double kMinSliceProbability = 1e-12;

/// Catmull-Rom weights for samples i−1, i, i+1, i+2 at fractional offset f.
std::array<double, 4> catmull_rom_weights(double f) {
    double f2 = f * f;
    double f3 = f2 * f;
    return {
        0.5 * (-f3 + 2.0 * f2 - f),
        0.5 * (3.0 * f3 - 5.0 * f2 + 2.0),
        0.5 * (-3.0 * f3 + 4.0 * f2 + f),
        0.5 * (f3 - f2),
    };
}

struct Stencil {
    std::ptrdiff_t base;
    std::array<double, 4> weights;
};

/// Stencil for x on grid; base is the index of the i−1 sample. Returns false
/// when x lies outside the grid.
bool stencil_for(const Grid1D &grid, double x, Stencil &out) {
    if (!grid.contains(x)) {
        return false;
    }
    double t = (x - grid.x_min()) / grid.spacing();
    auto i = static_cast<std::ptrdiff_t>(std::floor(t));
    auto last = static_cast<std::ptrdiff_t>(grid.size()) - 1;
    if (i >= last) {
        i = last - 1;
    }
    out.base = i - 1;
    out.weights = catmull_rom_weights(t - static_cast<double>(i));
    return true;
}

/// Sample k of a sequence of length n, zero outside [0, n).
template <typename F>
Complex sample_or_zero(F &&sample, std::ptrdiff_t k, std::size_t n) {
    if (k < 0 || k >= static_cast<std::ptrdiff_t>(n)) {
        return 0.0;
    }
    return sample(static_cast<std::size_t>(k));
}

// System width used by snr, relative to the probe width.
constexpr double kSnrSystemWidthRatio = 1e-3;

double trapezoid_weight(std::size_t i, std::size_t n) {
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
}

}  // namespace

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points), spacing_(0.0) {
    if (!(x_min < x_max)) {
        throw std::invalid_argument("Grid1D: x_min must be below x_max");
    }
    if (n_points < 16) {
        throw std::invalid_argument("Grid1D: at least 16 points are required");
    }
    spacing_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

Grid1D Grid1D::standard() {
    return standard(1024);
}

Grid1D Grid1D::standard(std::size_t n_points) {
    return Grid1D(-16.0, 16.0, n_points);
}

double trapezoid(const Grid1D &grid, const std::vector<double> &values) {
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); i++) {
        total += trapezoid_weight(i, values.size()) * values[i];
    }
    return total * grid.spacing();
}

WaveFunction::WaveFunction(Grid1D grid, std::vector<Complex> samples) : grid(grid), samples(std::move(samples)) {
    if (this->samples.size() != grid.size()) {
        throw std::invalid_argument("WaveFunction: sample count does not match the grid");
    }
}

WaveFunction::WaveFunction(Grid1D grid, const std::function<Complex(double)> &f) : grid(grid) {
    samples.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); i++) {
        samples[i] = f(grid.coordinate(i));
    }
}

std::vector<double> WaveFunction::density() const {
    std::vector<double> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(), [](Complex z) { return std::norm(z); });
    return out;
}

double WaveFunction::norm_squared() const {
    return trapezoid(grid, density());
}

bool WaveFunction::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) < tol;
}

bool WaveFunction::fits_in_box(double tol) const {
    double peak = 0.0;
    for (auto z : samples) {
        peak = std::max(peak, std::abs(z));
    }
    return std::abs(samples.front()) <= tol * peak && std::abs(samples.back()) <= tol * peak;
}

WaveFunction WaveFunction::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0.0) {
        throw std::invalid_argument("WaveFunction::normalized: zero state");
    }
    WaveFunction out = *this;
    for (auto &z : out.samples) {
        z /= n;
    }
    return out;
}

Complex WaveFunction::at(double x) const {
    Stencil st;
    if (!stencil_for(grid, x, st)) {
        return 0.0;
    }
    auto get = [&](std::size_t k) { return samples[k]; };
    Complex total = 0.0;
    for (int k = 0; k < 4; k++) {
        total += st.weights[k] * sample_or_zero(get, st.base + k, samples.size());
    }
    return total;
}

double WaveFunction::mean() const {
    std::vector<double> weighted = density();
    for (std::size_t i = 0; i < weighted.size(); i++) {
        weighted[i] *= grid.coordinate(i);
    }
    return trapezoid(grid, weighted) / norm_squared();
}

double WaveFunction::variance() const {
    double m = mean();
    std::vector<double> weighted = density();
    for (std::size_t i = 0; i < weighted.size(); i++) {
        double dx = grid.coordinate(i) - m;
        weighted[i] *= dx * dx;
    }
    return trapezoid(grid, weighted) / norm_squared();
}

double l2_distance(const WaveFunction &psi1, const WaveFunction &psi2) {
    if (!(psi1.grid == psi2.grid)) {
        throw std::invalid_argument("l2_distance: states live on different grids");
    }
    std::vector<double> diff(psi1.samples.size());
    for (std::size_t i = 0; i < diff.size(); i++) {
        diff[i] = std::norm(psi1.samples[i] - psi2.samples[i]);
    }
    return std::sqrt(trapezoid(psi1.grid, diff));
}

double l2_distance_up_to_phase(const WaveFunction &psi1, const WaveFunction &psi2) {
    if (!(psi1.grid == psi2.grid)) {
        throw std::invalid_argument("l2_distance_up_to_phase: states live on different grids");
    }
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < psi1.samples.size(); i++) {
        overlap += trapezoid_weight(i, psi1.samples.size()) * std::conj(psi2.samples[i]) * psi1.samples[i];
    }
    Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    WaveFunction rotated = psi2;
    for (auto &z : rotated.samples) {
        z *= phase;
    }
    return l2_distance(psi1, rotated);
}

WaveFunction sample_gaussian(const GaussianSpec &spec, const Grid1D &grid) {
    if (!(spec.width > 0.0)) {
        throw std::invalid_argument("sample_gaussian: width must be positive");
    }
    double amplitude = std::pow(2.0 * kPi * spec.width * spec.width, -0.25);
    double inv4var = 1.0 / (4.0 * spec.width * spec.width);
    WaveFunction psi(grid, [&](double x) {
        double dx = x - spec.center;
        return amplitude * std::exp(-dx * dx * inv4var) * std::polar(1.0, spec.momentum * x);
    });
    if (!psi.fits_in_box()) {
        throw GridLeakageError(
            "sample_gaussian: Gaussian (center " + std::to_string(spec.center) + ", width " +
                std::to_string(spec.width) + ") does not fit in [" + std::to_string(grid.x_min()) + ", " +
                std::to_string(grid.x_max()) + "]",
            std::abs(psi.samples.front()) + std::abs(psi.samples.back()));
    }
    return psi.normalized();
}

JointWaveFunction::JointWaveFunction(Grid1D grid_x, Grid1D grid_y)
    : grid_x(grid_x), grid_y(grid_y), samples(grid_x.size() * grid_y.size()) {
}

double JointWaveFunction::norm_squared() const {
    std::size_t nx = grid_x.size();
    std::size_t ny = grid_y.size();
    double total = 0.0;
    for (std::size_t ix = 0; ix < nx; ix++) {
        double row = 0.0;
        for (std::size_t iy = 0; iy < ny; iy++) {
            row += trapezoid_weight(iy, ny) * std::norm((*this)(ix, iy));
        }
        total += trapezoid_weight(ix, nx) * row;
    }
    return total * grid_x.spacing() * grid_y.spacing();
}

Eigen::VectorXd JointWaveFunction::singular_values() const {
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        samples.data(), static_cast<Eigen::Index>(grid_x.size()), static_cast<Eigen::Index>(grid_y.size()));
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    return svd.singularValues();
}

JointWaveFunction product_state(const WaveFunction &psi, const WaveFunction &phi) {
    JointWaveFunction joint(psi.grid, phi.grid);
    for (std::size_t ix = 0; ix < psi.grid.size(); ix++) {
        for (std::size_t iy = 0; iy < phi.grid.size(); iy++) {
            joint(ix, iy) = psi.samples[ix] * phi.samples[iy];
        }
    }
    return joint;
}

double l2_distance(const JointWaveFunction &lhs, const JointWaveFunction &rhs, bool up_to_phase) {
    if (!(lhs.grid_x == rhs.grid_x) || !(lhs.grid_y == rhs.grid_y)) {
        throw std::invalid_argument("l2_distance: joint states live on different grids");
    }
    std::size_t nx = lhs.grid_x.size();
    std::size_t ny = lhs.grid_y.size();
    Complex phase = 1.0;
    if (up_to_phase) {
        Complex overlap = 0.0;
        for (std::size_t ix = 0; ix < nx; ix++) {
            for (std::size_t iy = 0; iy < ny; iy++) {
                overlap += trapezoid_weight(ix, nx) * trapezoid_weight(iy, ny) * std::conj(rhs(ix, iy)) * lhs(ix, iy);
            }
        }
        if (std::abs(overlap) > 0.0) {
            phase = overlap / std::abs(overlap);
        }
    }
    double total = 0.0;
    for (std::size_t ix = 0; ix < nx; ix++) {
        for (std::size_t iy = 0; iy < ny; iy++) {
            total += trapezoid_weight(ix, nx) * trapezoid_weight(iy, ny) * std::norm(lhs(ix, iy) - phase * rhs(ix, iy));
        }
    }
    return std::sqrt(total * lhs.grid_x.spacing() * lhs.grid_y.spacing());
}

JointWaveFunction apply_transform(const CoordTransform &t, const WaveFunction &psi, const WaveFunction &phi) {
    JointWaveFunction joint(psi.grid, phi.grid);
    double scale = t.normalization();
    std::size_t nx = psi.grid.size();
    std::size_t ny = phi.grid.size();
    for (std::size_t ix = 0; ix < nx; ix++) {
        double x = psi.grid.coordinate(ix);
        for (std::size_t iy = 0; iy < ny; iy++) {
            double y = phi.grid.coordinate(iy);
            double u = t.a * x + t.b * y;
            double v = t.c * x + t.d * y;
            if (!psi.grid.contains(u) || !phi.grid.contains(v)) {
                joint.off_grid_samples++;
                joint(ix, iy) = 0.0;
                continue;
            }
            joint(ix, iy) = scale * psi.at(u) * phi.at(v);
        }
    }

    double expected = psi.norm_squared() * phi.norm_squared();
    joint.leaked_mass = std::max(0.0, 1.0 - joint.norm_squared() / expected);
    if (joint.leaked_mass > kMaxLeakedMass) {
        throw GridLeakageError(
            "apply_transform: " + std::to_string(100.0 * joint.leaked_mass) +
                "% of the probability was mapped outside the grid",
            joint.leaked_mass);
    }
    return joint;
}

double OutcomeDistribution::total() const {
    Grid1D grid(coordinates.front(), coordinates.back(), coordinates.size());
    return trapezoid(grid, density);
}

double OutcomeDistribution::mean() const {
    Grid1D grid(coordinates.front(), coordinates.back(), coordinates.size());
    std::vector<double> weighted(density.size());
    for (std::size_t i = 0; i < density.size(); i++) {
        weighted[i] = coordinates[i] * density[i];
    }
    return trapezoid(grid, weighted) / total();
}

double OutcomeDistribution::variance() const {
    Grid1D grid(coordinates.front(), coordinates.back(), coordinates.size());
    double m = mean();
    std::vector<double> weighted(density.size());
    for (std::size_t i = 0; i < density.size(); i++) {
        double da = coordinates[i] - m;
        weighted[i] = da * da * density[i];
    }
    return trapezoid(grid, weighted) / total();
}

double OutcomeDistribution::l1_distance(const std::function<double(double)> &f) const {
    Grid1D grid(coordinates.front(), coordinates.back(), coordinates.size());
    std::vector<double> diff(density.size());
    for (std::size_t i = 0; i < density.size(); i++) {
        diff[i] = std::abs(density[i] - f(coordinates[i]));
    }
    return trapezoid(grid, diff);
}

double OutcomeDistribution::l1_distance(const OutcomeDistribution &other) const {
    if (coordinates != other.coordinates) {
        throw std::invalid_argument("l1_distance: distributions use different bins");
    }
    Grid1D grid(coordinates.front(), coordinates.back(), coordinates.size());
    std::vector<double> diff(density.size());
    for (std::size_t i = 0; i < density.size(); i++) {
        diff[i] = std::abs(density[i] - other.density[i]);
    }
    return trapezoid(grid, diff);
}

OutcomeDistribution OutcomeDistribution::rescaled(double lambda) const {
    OutcomeDistribution out;
    out.coordinates.reserve(coordinates.size());
    out.density.reserve(density.size());
    for (std::size_t i = 0; i < coordinates.size(); i++) {
        out.coordinates.push_back(coordinates[i] / lambda);
        out.density.push_back(density[i] * lambda);
    }
    return out;
}

void OutcomeDistribution::write_csv(std::ostream &out) const {
    auto old_precision = out.precision(12);
    out << "coordinate,density\r\n";
    for (std::size_t i = 0; i < coordinates.size(); i++) {
        out << coordinates[i] << ',' << density[i] << "\r\n";
    }
    out.precision(old_precision);
}

OutcomeDistribution outcome_distribution(const JointWaveFunction &joint) {
    std::size_t nx = joint.grid_x.size();
    std::size_t ny = joint.grid_y.size();
    OutcomeDistribution dist;
    dist.coordinates.resize(ny);
    dist.density.assign(ny, 0.0);
    for (std::size_t iy = 0; iy < ny; iy++) {
        dist.coordinates[iy] = joint.grid_y.coordinate(iy);
    }
    for (std::size_t ix = 0; ix < nx; ix++) {
        double w = trapezoid_weight(ix, nx);
        for (std::size_t iy = 0; iy < ny; iy++) {
            dist.density[iy] += w * std::norm(joint(ix, iy));
        }
    }
    for (auto &p : dist.density) {
        p *= joint.grid_x.spacing();
    }
    return dist;
}

WaveFunction postmeasurement_state(const JointWaveFunction &joint, double outcome) {
    const Grid1D &gy = joint.grid_y;
    std::size_t nx = joint.grid_x.size();
    std::size_t ny = gy.size();
    std::vector<Complex> slice(nx, 0.0);

    Stencil st;
    if (!stencil_for(gy, outcome, st)) {
        throw ZeroProbabilityOutcome("postmeasurement_state: outcome " + std::to_string(outcome) + " is off the grid");
    }
    double t = (outcome - gy.x_min()) / gy.spacing();
    double nearest = std::round(t);
    if (std::abs(t - nearest) < 1e-9) {
        auto iy = static_cast<std::size_t>(nearest);
        for (std::size_t ix = 0; ix < nx; ix++) {
            slice[ix] = joint(ix, iy);
        }
    } else {
        for (std::size_t ix = 0; ix < nx; ix++) {
            auto get = [&](std::size_t k) { return joint(ix, k); };
            for (int k = 0; k < 4; k++) {
                slice[ix] += st.weights[k] * sample_or_zero(get, st.base + k, ny);
            }
        }
    }

    WaveFunction post(joint.grid_x, std::move(slice));
    if (post.norm_squared() < kMinSliceProbability) {
        throw ZeroProbabilityOutcome(
            "postmeasurement_state: outcome " + std::to_string(outcome) + " has vanishing probability");
    }
    return post.normalized();
}

SnrResult snr(const GaussianSpec &probe, double lambda, double alpha, std::size_t n_points) {
    if (!(probe.width > 0.0) || probe.center != 0.0) {
        throw std::invalid_argument("snr: probe must have positive width and zero mean");
    }
    double d = probe.width;
    // A system sharply localized at α, narrow enough that λ²ε² ≪ d².
    double eps = kSnrSystemWidthRatio * d;
    WaveFunction psi = sample_gaussian({alpha, eps, 0.0}, Grid1D(alpha - 12.0 * eps, alpha + 12.0 * eps, 256));

    double shift = lambda * alpha;
    double lo = std::min(0.0, shift) - 12.0 * d;
    double hi = std::max(0.0, shift) + 12.0 * d;
    WaveFunction phi = sample_gaussian(probe, Grid1D(lo, hi, n_points));

    OutcomeDistribution dist = outcome_distribution(apply_transform(CoordTransform::von_neumann(lambda), psi, phi));
    double m1 = dist.mean();
    double analytic = lambda * lambda * alpha * alpha / (d * d);
    return {analytic, m1 * m1 / dist.variance()};
}

}  // namespace qmeasure
