// Copyright 2026 The cohmzi Authors
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

#include "cohmzi/optics.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cohmzi {

ComplexAmp TransferMatrix::at(int row, int col) const {
    if (row == 0) {
        return col == 0 ? m00 : m01;
    }
    return col == 0 ? m10 : m11;
}

TransferMatrix TransferMatrix::adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

bool TransferMatrix::is_finite() const {
    for (const ComplexAmp &c : {m00, m01, m10, m11}) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            return false;
        }
    }
    return true;
}

TransferMatrix operator*(const TransferMatrix &lhs, const TransferMatrix &rhs) {
    return {
        lhs.m00 * rhs.m00 + lhs.m01 * rhs.m10,
        lhs.m00 * rhs.m01 + lhs.m01 * rhs.m11,
        lhs.m10 * rhs.m00 + lhs.m11 * rhs.m10,
        lhs.m10 * rhs.m01 + lhs.m11 * rhs.m11,
    };
}

double max_abs_diff(const TransferMatrix &a, const TransferMatrix &b) {
    return std::max({
        std::abs(a.m00 - b.m00),
        std::abs(a.m01 - b.m01),
        std::abs(a.m10 - b.m10),
        std::abs(a.m11 - b.m11),
    });
}

TransferMatrix make_beam_splitter() {
    const double s = 1.0 / std::sqrt(2.0);
    return {ComplexAmp{s, 0.0}, ComplexAmp{0.0, s}, ComplexAmp{0.0, s}, ComplexAmp{s, 0.0}};
}

TransferMatrix make_phase_pair(double phi_upper, double phi_lower) {
    if (!std::isfinite(phi_upper) || !std::isfinite(phi_lower)) {
        throw std::invalid_argument("make_phase_pair: phase must be finite");
    }
    return TransferMatrix::diagonal(std::polar(1.0, phi_upper), std::polar(1.0, phi_lower));
}

TransferMatrix compose(std::span<const TransferMatrix> elements_in_order) {
    if (elements_in_order.empty()) {
        throw std::invalid_argument("compose: at least one element is required");
    }
    TransferMatrix total = elements_in_order.front();
    for (const TransferMatrix &next : elements_in_order.subspan(1)) {
        total = next * total;
    }
    return total;
}

TransferMatrix compose(std::initializer_list<TransferMatrix> elements_in_order) {
    return compose(std::span<const TransferMatrix>(elements_in_order.begin(), elements_in_order.size()));
}

FieldState apply(const TransferMatrix &m, const FieldState &f) {
    return {
        m.m00 * f.port_a + m.m01 * f.port_b,
        m.m10 * f.port_a + m.m11 * f.port_b,
        f.carrier_hz,
    };
}

double unitarity_error(const TransferMatrix &m) {
    return max_abs_diff(m.adjoint() * m, TransferMatrix::identity());
}

bool is_unitary(const TransferMatrix &m, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("is_unitary: tolerance must be positive");
    }
    // NaN entries make the error NaN, which fails the comparison.
    return unitarity_error(m) <= tol;
}

double intensity(const FieldState &f, Port port) {
    return std::norm(port == Port::A ? f.port_a : f.port_b);
}

std::string to_string(const TransferMatrix &m) {
    std::ostringstream out;
    out.precision(17);
    out << "[[" << m.m00 << ", " << m.m01 << "], [" << m.m10 << ", " << m.m11 << "]]";
    return out.str();
}

}  // namespace cohmzi
