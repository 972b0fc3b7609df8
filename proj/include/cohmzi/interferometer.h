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

#ifndef COHMZI_INTERFEROMETER_H
#define COHMZI_INTERFEROMETER_H

#include <span>

#include "cohmzi/optics.h"

namespace cohmzi {

/// Phase settings of the interferometers.
///
/// zeta is the common scan phase applied in the upper arm, phi_p and phi_q are
/// the phases written by the controllers on the upper and lower arm. phi and
/// psi only matter for the coupled (two-MZI) system.
struct PhaseConfig {
    double zeta = 0.0;
    double phi_p = 0.0;
    double phi_q = 0.0;
    double phi = 0.0;
    double psi = 0.0;

    double delta_phi() const { return phi_p - phi_q; }
};

/// Output intensities of a two-port interferometer; upper + lower == total.
struct IntensityPair {
    double upper = 0.0;
    double lower = 0.0;
    double total = 0.0;
};

/// Coupled MZI with a dummy psi stage:
///   I_C = i0 (1 + sin phi sin psi) / 2,  I_D = i0 (1 - sin phi sin psi) / 2.
/// Throws std::invalid_argument if i0 <= 0.
IntensityPair coupled_mzi_intensities(double phi, double psi, double i0);

/// The full single-MZI chain BS -> diag(e^{i phi_p}, e^{i phi_q}) -> diag(e^{i zeta}, 1) -> BS.
TransferMatrix single_mzi_matrix(const PhaseConfig &cfg);

/// Propagates e0 through single_mzi_matrix(cfg). The interferometer has a
/// single source, so any port-B amplitude is rejected with std::invalid_argument.
FieldState single_mzi_fields(const PhaseConfig &cfg, const FieldState &e0);

/// I_A = (i0/2)(1 - cos(zeta + dphi)), I_B = (i0/2)(1 + cos(zeta + dphi)).
/// Throws std::invalid_argument if i0 <= 0.
IntensityPair single_mzi_intensities(double zeta, double delta_phi, double i0);

/// sin^2(zeta + dphi).
double g2_analytic(double zeta, double delta_phi);

/// (max - min) / (max + min) of the upper-port intensities. Needs at least two
/// samples and a nonzero maximum; throws std::invalid_argument otherwise.
double fringe_visibility(std::span<const IntensityPair> samples);

}  // namespace cohmzi

#endif
