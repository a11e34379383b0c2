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

#include "qmeasure/quadratic_form.h"

#include <cmath>

namespace qmeasure {

Complex commutator(const LinearForm &l1, const LinearForm &l2) {
    Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
    j(kX, kPx) = 1.0;
    j(kPx, kX) = -1.0;
    j(kY, kPy) = 1.0;
    j(kPy, kY) = -1.0;
    return kI * l1.dot(j * l2);
}

QuadraticForm &QuadraticForm::add(int i, int j, double coeff) {
    if (i == j) {
        coefficients(i, i) += coeff;
    } else {
        coefficients(i, j) += coeff / 2.0;
        coefficients(j, i) += coeff / 2.0;
    }
    return *this;
}

QuadraticForm &QuadraticForm::add_square(const LinearForm &l, double coeff) {
    coefficients += coeff * l * l.transpose();
    return *this;
}

double QuadraticForm::max_abs_diff(const QuadraticForm &other) const {
    return std::max((coefficients - other.coefficients).cwiseAbs().maxCoeff(), std::abs(constant - other.constant));
}

QuadraticForm ozawa_generator(double u, double v, double w) {
    // The Weyl-symmetrized x̂p̂_x and ŷp̂_y differ from the plain products by
    // the same constant −i/2, which cancels in the difference.
    QuadraticForm q;
    q.add(kX, kPx, u).add(kY, kPy, -u).add(kY, kPx, v).add(kX, kPy, w);
    return q;
}

QuadraticForm ssm_p0_generator(double lambda) {
    QuadraticForm q;
    q.add(kX, kPy, lambda).add(kY, kPx, -1.0 / lambda);
    return q;
}

QuadraticForm ssm_p1_quadratic_form(double lambda) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("ssm_p1_quadratic_form: lambda must be positive");
    }
    QuadraticForm q;
    q.add(kX, kX, lambda / 2.0)
        .add(kPx, kPx, 1.0 / (2.0 * lambda))
        .add(kY, kY, 1.0 / (2.0 * lambda))
        .add(kPy, kPy, lambda / 2.0)
        .add(kX, kY, -1.0)
        .add(kPx, kPy, -1.0);
    q.constant = -0.5;
    return q;
}

NormalModes ssm_p1_normal_modes(double lambda) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("ssm_p1_normal_modes: lambda must be positive");
    }
    double s = std::sqrt(lambda / 2.0);
    double t = 1.0 / std::sqrt(2.0 * lambda);
    NormalModes modes;
    modes.X << s, 0.0, -t, 0.0;
    modes.P_X << 0.0, t, 0.0, -s;
    modes.Y << s, 0.0, t, 0.0;
    modes.P_Y << 0.0, t, 0.0, s;
    return modes;
}

}  // namespace qmeasure
