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

#include "cohmzi/pulse.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cohmzi/interferometer.h"

namespace cohmzi {

double aom_phase(const AomDrive &drive) {
    if (!std::isfinite(drive.delta_hz) || drive.delta_hz < 0.0) {
        throw std::invalid_argument("aom_phase: rf frequency must be finite and >= 0");
    }
    if (!std::isfinite(drive.duration_s) || !(drive.duration_s > 0.0)) {
        throw std::invalid_argument("aom_phase: pulse duration must be finite and > 0");
    }
    if (drive.sign != 1 && drive.sign != -1) {
        throw std::invalid_argument("aom_phase: diffraction sign must be +1 or -1");
    }
    return drive.sign * 2.0 * std::numbers::pi * drive.delta_hz * drive.duration_s;
}

double symmetric_aom_delta_phi(double delta_hz, double duration_s) {
    return aom_phase({delta_hz, duration_s, +1}) - aom_phase({delta_hz, duration_s, -1});
}

bool PulseTrain::is_on(double t) const {
    if (!(t >= 0.0) || t >= total_duration_s()) {
        return false;
    }
    const double in_period = std::fmod(t, period_s_);
    return in_period < duty_ * period_s_;
}

PulseTrain build_pulse_train(double period_s, double duty, int n_periods, double dphi_on) {
    if (!std::isfinite(period_s) || !(period_s > 0.0)) {
        throw std::invalid_argument("build_pulse_train: period must be > 0");
    }
    if (!(duty > 0.0 && duty <= 1.0)) {
        throw std::invalid_argument("build_pulse_train: duty must lie in (0, 1]");
    }
    if (n_periods < 1) {
        throw std::invalid_argument("build_pulse_train: need at least one period");
    }
    if (!std::isfinite(dphi_on)) {
        throw std::invalid_argument("build_pulse_train: dphi_on must be finite");
    }
    return PulseTrain(period_s, duty, n_periods, dphi_on);
}

TimeSeries simulate_timeseries(const PulseTrain &train, double zeta, double i0, int samples_per_period,
                               const PhaseJitter &jitter) {
    if (samples_per_period < 2 || samples_per_period % 2 != 0) {
        throw std::invalid_argument("simulate_timeseries: samples_per_period must be even and >= 2");
    }
    if (!(i0 > 0.0) || !std::isfinite(i0)) {
        throw std::invalid_argument("simulate_timeseries: i0 must be positive");
    }
    if (!std::isfinite(zeta)) {
        throw std::invalid_argument("simulate_timeseries: zeta must be finite");
    }
    if (!(jitter.std_rad >= 0.0) || !std::isfinite(jitter.std_rad)) {
        throw std::invalid_argument("simulate_timeseries: jitter std must be finite and >= 0");
    }

    const double dt = train.period_s() / samples_per_period;
    // ON/OFF is decided on the cell index so midpoints never straddle a window edge.
    const double on_cells = train.duty() * samples_per_period;

    // Without jitter each window has a single intensity pair.
    const IntensityPair on_pair = single_mzi_intensities(zeta, train.dphi_on(), i0);
    const IntensityPair off_pair = single_mzi_intensities(zeta, 0.0, i0);

    std::mt19937_64 rng(jitter.seed);
    std::normal_distribution<double> noise(0.0, jitter.std_rad > 0.0 ? jitter.std_rad : 1.0);

    TimeSeries series;
    series.i0 = i0;
    series.zeta = zeta;
    series.samples.reserve(static_cast<std::size_t>(train.n_periods()) * samples_per_period);
    for (int p = 0; p < train.n_periods(); ++p) {
        for (int j = 0; j < samples_per_period; ++j) {
            const bool on = j + 0.5 < on_cells;
            const double dphi = on ? train.dphi_on() : 0.0;
            const double t = (static_cast<double>(p) * samples_per_period + j + 0.5) * dt;
            IntensityPair pair = on ? on_pair : off_pair;
            if (jitter.std_rad > 0.0) {
                pair = single_mzi_intensities(zeta + noise(rng), dphi, i0);
            }
            series.samples.push_back({t, pair.upper, pair.lower, dphi});
        }
    }
    return series;
}

TimeAverage time_average(const TimeSeries &series) {
    if (series.samples.empty()) {
        throw std::invalid_argument("time_average: empty series");
    }
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (const TimeSample &s : series.samples) {
        sum_a += s.i_a;
        sum_b += s.i_b;
    }
    const double n = static_cast<double>(series.samples.size());
    return {sum_a / n, sum_b / n};
}

double g2_estimate(const TimeSeries &series) {
    const TimeAverage avg = time_average(series);
    // A port that is dark on average, including pure rounding residue of a
    // dark fringe, has no meaningful normalisation.
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * series.i0;
    if (!(avg.mean_i_a > floor) || !(avg.mean_i_b > floor)) {
        throw DegenerateCorrelation("g2_estimate: zero mean intensity in an output port");
    }
    double sum_ab = 0.0;
    for (const TimeSample &s : series.samples) {
        sum_ab += s.i_a * s.i_b;
    }
    const double mean_ab = sum_ab / static_cast<double>(series.samples.size());
    return mean_ab / (avg.mean_i_a * avg.mean_i_b);
}

}  // namespace cohmzi
