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

#ifndef COHMZI_SWEEP_H
#define COHMZI_SWEEP_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cohmzi/pulse.h"

namespace cohmzi {

/// One row of a zeta sweep.
struct SweepRecord {
    double zeta = 0.0;
    double i_a = 0.0;
    double i_b = 0.0;
    double g2 = 0.0;
    friend bool operator==(const SweepRecord &, const SweepRecord &) = default;
};

/// Inclusive grid: steps points from start to end, both endpoints exact.
struct ZetaGrid {
    double start = 0.0;
    double end = 0.0;
    int steps = 2;

    double at(int k) const;
};

/// Fixed phase difference; intensities and g2 come from the closed forms.
struct StaticMode {
    double delta_phi = 0.0;
};

/// rf-driven alternation; each point is the time average of a simulated train.
struct PulseMode {
    double period_s = 1e-3;
    double duty = 0.5;
    int n_periods = 1;
    int samples_per_period = 2;
    double dphi_on = 0.0;
    double jitter_std = 0.0;
    std::uint64_t seed = 0;
};

struct SweepPlan {
    ZetaGrid grid;
    double i0 = 1.0;
    std::variant<StaticMode, PulseMode> mode;
};

/// Checks grid and mode parameters; throws std::invalid_argument.
void validate(const SweepPlan &plan);

/// Kernel body shared by both drivers. Jittered points derive their generator
/// seed from (plan seed, k), so results do not depend on scheduling.
SweepRecord evaluate_point(const SweepPlan &plan, int k);

/// Reference implementation: one thread, grid order.
std::vector<SweepRecord> sweep_serial(const SweepPlan &plan);

/// OpenMP driver over grid points. threads <= 0 uses the runtime default.
/// Produces records bitwise identical to sweep_serial.
std::vector<SweepRecord> sweep_parallel(const SweepPlan &plan, int threads = 0);

/// Header `zeta,i_a,i_b,g2`, values in %.17g.
std::string to_csv(const std::vector<SweepRecord> &records);

/// {"records": [{"zeta": .., "i_a": .., "i_b": .., "g2": ..}, ...]}
std::string to_json(const std::vector<SweepRecord> &records);

}  // namespace cohmzi

#endif
