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

#ifndef QMEASURE_CV_TRANSFORM_H
#define QMEASURE_CV_TRANSFORM_H

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

// Linear-coordinate unitaries on a system mode x and a probe mode y.
//
// A CoordTransform (a, b, c, d) acts on a product wave function as
//
//     U ψ(x) φ(y) = √|ad − bc| · ψ(ax + by) φ(cx + dy)
//
// and, because it is a substitution of arguments, on any joint function
// F(x, y) as F(M·(x, y)). Applying G after U therefore yields the matrix
// M_U · M_G: circuits accumulate by right multiplication in application
// order. All quantities are dimensionless (ħ = 1).

namespace qmeasure {

struct CoordTransform {
    double a;
    double b;
    double c;
    double d;

    double det() const {
        return a * d - b * c;
    }
    /// √|det|, the amplitude factor that keeps the map norm preserving.
    double normalization() const;
    /// |det| = 1 within tol.
    bool is_circuit_unitary(double tol = 1e-12) const;

    Eigen::Matrix2d matrix() const;
    static CoordTransform from_matrix(const Eigen::Matrix2d &m);

    /// The transform obtained by applying `this` first and `next` second.
    CoordTransform then(const CoordTransform &next) const;

    double max_abs_diff(const CoordTransform &other) const;

    static CoordTransform identity() {
        return {1, 0, 0, 1};
    }
    /// (1, 0, −λ, 1).
    static CoordTransform von_neumann(double lambda);
    /// (0, λ⁻¹, −λ, 1).
    static CoordTransform contractive(double lambda);
    /// (0, λ⁻¹, (−1)^{p+1} λ, 0).
    static CoordTransform swapping(double lambda, int p);
};

/// Raised when a target lies outside the reach of a decomposition family.
struct NotDecomposable : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by hamiltonian_params outside the elliptic regime |a + d| < 2.
struct UnsupportedRegime : std::domain_error {
    double trace;
    UnsupportedRegime(const std::string &what, double trace) : std::domain_error(what), trace(trace) {
    }
};

enum class CVGateKind {
    /// exp(−iα x̂ p̂_y): φ(y) → φ(y − αx).
    Vxpy,
    /// exp(−iβ ŷ p̂_x): ψ(x) → ψ(x − βy).
    Vypx,
    ParityY,
    ParityX,
    /// Beam splitter T(θ) = exp[−iθ(x̂ p̂_y − ŷ p̂_x)].
    Rot,
    /// Two-mode squeezer S(r) = exp[ir(x̂ p̂_y + ŷ p̂_x)].
    TwoModeSqueeze,
    /// S_x(r) ψ(x) = e^{r/2} ψ(e^r x).
    SqueezeX,
    SqueezeY,
};

struct CVGate {
    CVGateKind kind;
    double parameter = 0.0;
};

/// Gates in physical application order (first applied first).
using GateSequence = std::vector<CVGate>;

std::string_view gate_name(CVGateKind kind);
/// Throws std::invalid_argument for an unknown name.
CVGateKind parse_gate_name(std::string_view name);
bool gate_has_parameter(CVGateKind kind);

CoordTransform gate_matrix(const CVGate &gate);

/// Throws std::invalid_argument for an empty sequence.
CoordTransform compose(std::span<const CVGate> sequence);

/// Reduces an angle to (−π, π].
double normalize_angle(double theta);

/// U(a,b,c,d) = V_xpy(γ) V_ypx(β) V_xpy(α) Π_y^p.
struct VonNeumannParams {
    int p;
    double alpha;
    double beta;
    double gamma;

    GateSequence sequence() const;
};

/// Throws std::invalid_argument unless |det| = 1, NotDecomposable when
/// b = 0 and a ≠ 1.
VonNeumannParams decompose_von_neumann(const CoordTransform &target);

/// U(r, θ1, θ2, p) = T(θ2) S(−r) T(θ1) Π_y^p.
struct OpticalParams {
    double r;
    double theta1;
    double theta2;
    int p;

    GateSequence sequence() const;
    /// Closed-form (a, b, c, d) of the circuit.
    CoordTransform transform() const;
};

/// U(r', θ1', θ2', p) = T(θ2') S_y(r') S_x(−r') T(θ1') Π_y^p.
struct SingleModeOpticalParams {
    double r;
    double theta1;
    double theta2;
    int p;

    GateSequence sequence() const;
    CoordTransform transform() const;
};

/// Canonical branch: r ≥ 0, angles in (−π, π], θ1 = θ2 when r = 0.
/// Throws std::invalid_argument unless |det| = 1 and NumericalError when
/// the recomposed target misses by more than 1e-8.
OpticalParams decompose_two_mode(const CoordTransform &target);

/// Shift between the two optical parameterizations: r' = r,
/// θ1' = θ1 − π/4, θ2' = θ2 + π/4.
SingleModeOpticalParams to_single_mode(const OpticalParams &params);

SingleModeOpticalParams decompose_single_mode(const CoordTransform &target);

/// S_y(ln λ⁻¹) T(π/2) S_y(ln λ) Π_y^p, an SSM circuit without S_x.
/// Throws std::invalid_argument for λ ≤ 0 or p ∉ {0, 1}.
GateSequence ssm_alternative_sequence(double lambda, int p);

/// exp{[u(x̂p̂_x − ŷp̂_y) + v ŷp̂_x + w x̂p̂_y]/i} with D = √(−(u² + vw)).
struct HamiltonianParams {
    double u;
    double v;
    double w;

    double D() const;
    /// cos D · I − (sin D / D) [[u, v], [w, −u]].
    CoordTransform transform() const;
};

/// Throws std::invalid_argument unless det = +1, UnsupportedRegime when
/// |a + d| ≥ 2.
HamiltonianParams hamiltonian_params(const CoordTransform &target);

}  // namespace qmeasure

#endif
