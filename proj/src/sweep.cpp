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

#include "cohmzi/sweep.h"

#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "cohmzi/interferometer.h"
#include "cohmzi/numeric.h"

namespace cohmzi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

double ZetaGrid::at(int k) const {
    if (k == steps - 1) {
        return end;
    }
    return start + (end - start) * (static_cast<double>(k) / (steps - 1));
}

void validate(const SweepPlan &plan) {
    const ZetaGrid &g = plan.grid;
    if (g.steps < 2) {
        throw std::invalid_argument("sweep: steps must be >= 2");
    }
    if (!std::isfinite(g.start) || !std::isfinite(g.end) || !(g.end > g.start)) {
        throw std::invalid_argument("sweep: zeta range must satisfy start < end");
    }
    if (!(plan.i0 > 0.0) || !std::isfinite(plan.i0)) {
        throw std::invalid_argument("sweep: i0 must be positive");
    }
    if (const auto *s = std::get_if<StaticMode>(&plan.mode)) {
        if (!std::isfinite(s->delta_phi)) {
            throw std::invalid_argument("sweep: dphi must be finite");
        }
        return;
    }
    const PulseMode &p = std::get<PulseMode>(plan.mode);
    build_pulse_train(p.period_s, p.duty, p.n_periods, p.dphi_on);
    if (p.samples_per_period < 2 || p.samples_per_period % 2 != 0) {
        throw std::invalid_argument("sweep: samples per period must be even and >= 2");
    }
    if (!(p.jitter_std >= 0.0) || !std::isfinite(p.jitter_std)) {
        throw std::invalid_argument("sweep: jitter std must be >= 0");
    }
}

SweepRecord evaluate_point(const SweepPlan &plan, int k) {
    const double zeta = plan.grid.at(k);
    if (const auto *s = std::get_if<StaticMode>(&plan.mode)) {
        const IntensityPair pair = single_mzi_intensities(zeta, s->delta_phi, plan.i0);
        return {zeta, pair.upper, pair.lower, g2_analytic(zeta, s->delta_phi)};
    }
    const PulseMode &p = std::get<PulseMode>(plan.mode);
    const PulseTrain train = build_pulse_train(p.period_s, p.duty, p.n_periods, p.dphi_on);
    PhaseJitter jitter{p.jitter_std, splitmix64(p.seed ^ splitmix64(static_cast<std::uint64_t>(k)))};
    const TimeSeries series = simulate_timeseries(train, zeta, plan.i0, p.samples_per_period, jitter);
    const TimeAverage avg = time_average(series);
    return {zeta, avg.mean_i_a, avg.mean_i_b, g2_estimate(series)};
}

std::vector<SweepRecord> sweep_serial(const SweepPlan &plan) {
    validate(plan);
    std::vector<SweepRecord> out(static_cast<std::size_t>(plan.grid.steps));
    for (int k = 0; k < plan.grid.steps; ++k) {
        out[static_cast<std::size_t>(k)] = evaluate_point(plan, k);
    }
    return out;
}

std::vector<SweepRecord> sweep_parallel(const SweepPlan &plan, int threads) {
    validate(plan);
    const int n = plan.grid.steps;
    std::vector<SweepRecord> out(static_cast<std::size_t>(n));
    const int team = threads > 0 ? threads : omp_get_max_threads();

    // Exceptions must not escape the parallel region; keep the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(static) num_threads(team)
    for (int k = 0; k < n; ++k) {
        try {
            out[static_cast<std::size_t>(k)] = evaluate_point(plan, k);
        } catch (...) {
#pragma omp critical(cohmzi_sweep_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

std::string to_csv(const std::vector<SweepRecord> &records) {
    std::string out = "zeta,i_a,i_b,g2\n";
    for (const SweepRecord &r : records) {
        out += format_17g(r.zeta);
        out += ',';
        out += format_17g(r.i_a);
        out += ',';
        out += format_17g(r.i_b);
        out += ',';
        out += format_17g(r.g2);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<SweepRecord> &records) {
    std::string out = "{\"records\": [";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const SweepRecord &r = records[i];
        out += i == 0 ? "\n  " : ",\n  ";
        out += "{\"zeta\": " + format_17g(r.zeta) + ", \"i_a\": " + format_17g(r.i_a) +
               ", \"i_b\": " + format_17g(r.i_b) + ", \"g2\": " + format_17g(r.g2) + "}";
    }
    out += records.empty() ? "]}\n" : "\n]}\n";
    return out;
}

}  // namespace cohmzi
