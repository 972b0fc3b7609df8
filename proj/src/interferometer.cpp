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

#include "cohmzi/interferometer.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cohmzi {

namespace {

void require_positive_intensity(double i0, const char *where) {
    if (!(i0 > 0.0) || !std::isfinite(i0)) {
        throw std::invalid_argument(std::string(where) + ": i0 must be positive and finite");
    }
}

}  // namespace

IntensityPair coupled_mzi_intensities(double phi, double psi, double i0) {
    require_positive_intensity(i0, "coupled_mzi_intensities");
    const double s = std::sin(phi) * std::sin(psi);
    return {i0 * (1.0 + s) / 2.0, i0 * (1.0 - s) / 2.0, i0};
}

TransferMatrix single_mzi_matrix(const PhaseConfig &cfg) {
    const TransferMatrix bs = make_beam_splitter();
    return compose({bs, make_phase_pair(cfg.phi_p, cfg.phi_q), make_phase_pair(cfg.zeta, 0.0), bs});
}

FieldState single_mzi_fields(const PhaseConfig &cfg, const FieldState &e0) {
    if (e0.port_b != ComplexAmp{0.0, 0.0}) {
        throw std::invalid_argument("single_mzi_fields: input must be on port A only");
    }
    return apply(single_mzi_matrix(cfg), e0);
}

IntensityPair single_mzi_intensities(double zeta, double delta_phi, double i0) {
    require_positive_intensity(i0, "single_mzi_intensities");
    const double c = std::cos(zeta + delta_phi);
    return {i0 * (1.0 - c) / 2.0, i0 * (1.0 + c) / 2.0, i0};
}

double g2_analytic(double zeta, double delta_phi) {
    const double s = std::sin(zeta + delta_phi);
    return s * s;
}

double fringe_visibility(std::span<const IntensityPair> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("fringe_visibility: need at least two samples");
    }
    auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                        [](const IntensityPair &a, const IntensityPair &b) {
                                            return a.upper < b.upper;
                                        });
    const double sum = hi->upper + lo->upper;
    if (!(sum > 0.0)) {
        throw std::invalid_argument("fringe_visibility: fringe is identically dark");
    }
    return (hi->upper - lo->upper) / sum;
}

}  // namespace cohmzi
