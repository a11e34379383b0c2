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

#include "qmeasure/cv_transform.h"

#include <algorithm>
#include <cmath>

#include "qmeasure/linalg.h"

namespace qmeasure {

namespace {

// Accepted deviation of |det| from 1 for decomposition inputs. Looser than
// the circuit-unitary flag so that 12-digit command-line tuples pass.
constexpr double kDetTolerance = 1e-9;
constexpr double kConsistencyLimit = 1e-8;

void require_unit_det(const CoordTransform &t, const char *where) {
    if (!(std::abs(std::abs(t.det()) - 1.0) < kDetTolerance)) {
        throw std::invalid_argument(
            std::string(where) + ": ad - bc must be +1 or -1, got " + std::to_string(t.det()));
    }
}

int parity_of(const CoordTransform &t) {
    return t.det() > 0 ? 0 : 1;
}

double parity_sign(int p) {
    return p == 0 ? 1.0 : -1.0;
}

}  // namespace

double CoordTransform::normalization() const {
    return std::sqrt(std::abs(det()));
}

bool CoordTransform::is_circuit_unitary(double tol) const {
    return std::abs(std::abs(det()) - 1.0) < tol;
}

Eigen::Matrix2d CoordTransform::matrix() const {
    Eigen::Matrix2d m;
    m << a, b, c, d;
    return m;
}

CoordTransform CoordTransform::from_matrix(const Eigen::Matrix2d &m) {
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

CoordTransform CoordTransform::then(const CoordTransform &next) const {
    return from_matrix(matrix() * next.matrix());
}

double CoordTransform::max_abs_diff(const CoordTransform &other) const {
    return std::max({std::abs(a - other.a), std::abs(b - other.b), std::abs(c - other.c), std::abs(d - other.d)});
}

CoordTransform CoordTransform::von_neumann(double lambda) {
    return {1.0, 0.0, -lambda, 1.0};
}

CoordTransform CoordTransform::contractive(double lambda) {
    return {0.0, 1.0 / lambda, -lambda, 1.0};
}

CoordTransform CoordTransform::swapping(double lambda, int p) {
    return {0.0, 1.0 / lambda, -parity_sign(p) * lambda, 0.0};
}

std::string_view gate_name(CVGateKind kind) {
    switch (kind) {
        case CVGateKind::Vxpy:
            return "Vxpy";
        case CVGateKind::Vypx:
            return "Vypx";
        case CVGateKind::ParityY:
            return "ParityY";
        case CVGateKind::ParityX:
            return "ParityX";
        case CVGateKind::Rot:
            return "Rot";
        case CVGateKind::TwoModeSqueeze:
            return "TwoModeSqueeze";
        case CVGateKind::SqueezeX:
            return "SqueezeX";
        case CVGateKind::SqueezeY:
            return "SqueezeY";
    }
    return "?";
}

CVGateKind parse_gate_name(std::string_view name) {
    for (auto kind : {CVGateKind::Vxpy, CVGateKind::Vypx, CVGateKind::ParityY, CVGateKind::ParityX, CVGateKind::Rot,
                      CVGateKind::TwoModeSqueeze, CVGateKind::SqueezeX, CVGateKind::SqueezeY}) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown gate name '" + std::string(name) + "'");
}

bool gate_has_parameter(CVGateKind kind) {
    return kind != CVGateKind::ParityX && kind != CVGateKind::ParityY;
}

CoordTransform gate_matrix(const CVGate &gate) {
    double t = gate.parameter;
    switch (gate.kind) {
        case CVGateKind::Vxpy:
            return {1.0, 0.0, -t, 1.0};
        case CVGateKind::Vypx:
            return {1.0, -t, 0.0, 1.0};
        case CVGateKind::ParityY:
            return {1.0, 0.0, 0.0, -1.0};
        case CVGateKind::ParityX:
            return {-1.0, 0.0, 0.0, 1.0};
        case CVGateKind::Rot:
            return {std::cos(t), std::sin(t), -std::sin(t), std::cos(t)};
        case CVGateKind::TwoModeSqueeze:
            return {std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t)};
        case CVGateKind::SqueezeX:
            return {std::exp(t), 0.0, 0.0, 1.0};
        case CVGateKind::SqueezeY:
            return {1.0, 0.0, 0.0, std::exp(t)};
    }
    throw std::invalid_argument("gate_matrix: unknown gate kind");
}

CoordTransform compose(std::span<const CVGate> sequence) {
    if (sequence.empty()) {
        throw std::invalid_argument("compose: empty gate sequence");
    }
    Eigen::Matrix2d total = Eigen::Matrix2d::Identity();
    for (const auto &gate : sequence) {
        total = total * gate_matrix(gate).matrix();
    }
    return CoordTransform::from_matrix(total);
}

double normalize_angle(double theta) {
    double r = std::remainder(theta, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

GateSequence VonNeumannParams::sequence() const {
    GateSequence seq;
    if (p == 1) {
        seq.push_back({CVGateKind::ParityY});
    }
    seq.push_back({CVGateKind::Vxpy, alpha});
    seq.push_back({CVGateKind::Vypx, beta});
    seq.push_back({CVGateKind::Vxpy, gamma});
    return seq;
}

VonNeumannParams decompose_von_neumann(const CoordTransform &target) {
    require_unit_det(target, "decompose_von_neumann");
    int p = parity_of(target);
    double sign = parity_sign(p);
    if (target.b != 0.0) {
        double beta = -target.b;
        double gamma = (target.a - 1.0) / beta;
        double alpha = (sign * target.d - 1.0) / beta;
        return {p, alpha, beta, gamma};
    }
    if (target.a != 1.0) {
        throw NotDecomposable(
            "decompose_von_neumann: b = 0 requires a = 1 (a = 1 + beta*gamma with beta = -b), got a = " +
            std::to_string(target.a));
    }
    return {p, 0.0, 0.0, -sign * target.c};
}

GateSequence OpticalParams::sequence() const {
    GateSequence seq;
    if (p == 1) {
        seq.push_back({CVGateKind::ParityY});
    }
    seq.push_back({CVGateKind::Rot, theta1});
    seq.push_back({CVGateKind::TwoModeSqueeze, -r});
    seq.push_back({CVGateKind::Rot, theta2});
    return seq;
}

CoordTransform OpticalParams::transform() const {
    double ch = std::cosh(r);
    double sh = std::sinh(r);
    double sum = theta1 + theta2;
    double diff = theta1 - theta2;
    double sign = parity_sign(p);
    return {
        ch * std::cos(sum) - sh * std::sin(diff),
        ch * std::sin(sum) - sh * std::cos(diff),
        -sign * (ch * std::sin(sum) + sh * std::cos(diff)),
        sign * (ch * std::cos(sum) + sh * std::sin(diff)),
    };
}

GateSequence SingleModeOpticalParams::sequence() const {
    GateSequence seq;
    if (p == 1) {
        seq.push_back({CVGateKind::ParityY});
    }
    seq.push_back({CVGateKind::Rot, theta1});
    seq.push_back({CVGateKind::SqueezeX, -r});
    seq.push_back({CVGateKind::SqueezeY, r});
    seq.push_back({CVGateKind::Rot, theta2});
    return seq;
}

CoordTransform SingleModeOpticalParams::transform() const {
    double ch = std::cosh(r);
    double sh = std::sinh(r);
    double sum = theta1 + theta2;
    double diff = theta1 - theta2;
    double sign = parity_sign(p);
    return {
        ch * std::cos(sum) - sh * std::cos(diff),
        ch * std::sin(sum) + sh * std::sin(diff),
        -sign * (ch * std::sin(sum) - sh * std::sin(diff)),
        sign * (ch * std::cos(sum) + sh * std::cos(diff)),
    };
}

OpticalParams decompose_two_mode(const CoordTransform &target) {
    require_unit_det(target, "decompose_two_mode");
    int p = parity_of(target);
    double sign = parity_sign(p);
    const auto &[a, b, c, d] = target;

    // cosh r (cos Σ, sin Σ) and sinh r (sin Δ, cos Δ) with Σ = θ1 + θ2, Δ = θ1 − θ2.
    double cosh_cos = (a + sign * d) / 2.0;
    double cosh_sin = (b - sign * c) / 2.0;
    double sinh_sin = (sign * d - a) / 2.0;
    double sinh_cos = (-sign * c - b) / 2.0;

    double sinh_r = std::hypot(sinh_sin, sinh_cos);
    double r = std::asinh(sinh_r);
    double sum = std::atan2(cosh_sin, cosh_cos);
    double diff = sinh_r < 1e-14 ? 0.0 : std::atan2(sinh_sin, sinh_cos);

    OpticalParams params{r, normalize_angle((sum + diff) / 2.0), normalize_angle((sum - diff) / 2.0), p};
    double residual = params.transform().max_abs_diff(target);
    if (residual > kConsistencyLimit) {
        throw NumericalError(
            "decompose_two_mode: inconsistent target, recomposition residual " + std::to_string(residual), residual);
    }
    return params;
}

SingleModeOpticalParams to_single_mode(const OpticalParams &params) {
    return {
        params.r,
        normalize_angle(params.theta1 - kPi / 4.0),
        normalize_angle(params.theta2 + kPi / 4.0),
        params.p,
    };
}

SingleModeOpticalParams decompose_single_mode(const CoordTransform &target) {
    return to_single_mode(decompose_two_mode(target));
}

GateSequence ssm_alternative_sequence(double lambda, int p) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("ssm_alternative_sequence: lambda must be positive");
    }
    if (p != 0 && p != 1) {
        throw std::invalid_argument("ssm_alternative_sequence: p must be 0 or 1");
    }
    GateSequence seq;
    if (p == 1) {
        seq.push_back({CVGateKind::ParityY});
    }
    seq.push_back({CVGateKind::SqueezeY, std::log(lambda)});
    seq.push_back({CVGateKind::Rot, kPi / 2.0});
    seq.push_back({CVGateKind::SqueezeY, -std::log(lambda)});
    return seq;
}

double HamiltonianParams::D() const {
    return std::sqrt(-(u * u + v * w));
}

CoordTransform HamiltonianParams::transform() const {
    double angle = D();
    double k = angle == 0.0 ? 1.0 : std::sin(angle) / angle;
    double cs = std::cos(angle);
    return {cs - u * k, -v * k, -w * k, cs + u * k};
}

HamiltonianParams hamiltonian_params(const CoordTransform &target) {
    if (!(std::abs(target.det() - 1.0) < kDetTolerance)) {
        throw std::invalid_argument(
            "hamiltonian_params: ad - bc must be +1, got " + std::to_string(target.det()));
    }
    double trace = target.a + target.d;
    if (!(std::abs(trace) < 2.0)) {
        throw UnsupportedRegime(
            "hamiltonian_params: only |a + d| < 2 is supported, got a + d = " + std::to_string(trace), trace);
    }
    double angle = std::acos(trace / 2.0);
    double k = std::sin(angle) / angle;
    return {(std::cos(angle) - target.a) / k, -target.b / k, -target.c / k};
}

}  // namespace qmeasure
