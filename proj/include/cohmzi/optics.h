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

#ifndef COHMZI_OPTICS_H
#define COHMZI_OPTICS_H

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <string>

namespace cohmzi {

using ComplexAmp = std::complex<double>;

/// Output port of a two-port element. A is the upper (input) port.
enum class Port { A, B };

/// Row-major 2x2 complex matrix acting on (port_a, port_b) column vectors.
struct TransferMatrix {
    ComplexAmp m00{1.0, 0.0};
    ComplexAmp m01{0.0, 0.0};
    ComplexAmp m10{0.0, 0.0};
    ComplexAmp m11{1.0, 0.0};

    static TransferMatrix identity() { return {}; }
    static TransferMatrix diagonal(ComplexAmp upper, ComplexAmp lower) {
        return {upper, 0.0, 0.0, lower};
    }

    ComplexAmp at(int row, int col) const;
    TransferMatrix adjoint() const;
    bool is_finite() const;

    friend bool operator==(const TransferMatrix &, const TransferMatrix &) = default;
};

/// Plain matrix product `lhs * rhs`, i.e. rhs acts on the field first.
TransferMatrix operator*(const TransferMatrix &lhs, const TransferMatrix &rhs);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const TransferMatrix &a, const TransferMatrix &b);

struct FieldState {
    ComplexAmp port_a{0.0, 0.0};
    ComplexAmp port_b{0.0, 0.0};
    double carrier_hz = 0.0;

    double total_intensity() const { return std::norm(port_a) + std::norm(port_b); }
};

/// Symmetric 50:50 splitter (1/sqrt2)[[1, i], [i, 1]]; reflection picks up the i.
TransferMatrix make_beam_splitter();

/// diag(e^{i phi_upper}, e^{i phi_lower}). Throws std::invalid_argument on a
/// non-finite phase. The scan phase matrix is make_phase_pair(zeta, 0).
TransferMatrix make_phase_pair(double phi_upper, double phi_lower);

/// Composes elements listed in propagation order (source to detector).
///
/// The first element touches the field first, so the numeric product is
/// elements[n-1] * ... * elements[1] * elements[0]. Throws
/// std::invalid_argument on an empty list.
TransferMatrix compose(std::span<const TransferMatrix> elements_in_order);
TransferMatrix compose(std::initializer_list<TransferMatrix> elements_in_order);

/// Matrix-vector product on the port amplitudes; the carrier passes through.
FieldState apply(const TransferMatrix &m, const FieldState &f);

/// max entrywise |M^dagger M - I|.
double unitarity_error(const TransferMatrix &m);

/// True iff unitarity_error(m) <= tol. Throws std::invalid_argument if tol <= 0.
bool is_unitary(const TransferMatrix &m, double tol);

double intensity(const FieldState &f, Port port);

std::string to_string(const TransferMatrix &m);

}  // namespace cohmzi

#endif
