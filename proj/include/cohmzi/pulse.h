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

#ifndef COHMZI_PULSE_H
#define COHMZI_PULSE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cohmzi {

/// One acousto-optic modulator driven by an rf burst of frequency delta_hz
/// lasting duration_s. sign selects the +1 / -1 diffraction order.
struct AomDrive {
    double delta_hz = 0.0;
    double duration_s = 0.0;
    int sign = +1;
};

/// Accumulated optical phase sign * 2 pi * delta * T. Throws
/// std::invalid_argument on delta < 0, T <= 0, non-finite values or a sign
/// other than +1 / -1.
double aom_phase(const AomDrive &drive);

/// Phase difference produced by a mirrored pair of drives, one per arm:
/// aom_phase(+) - aom_phase(-) = 4 pi delta T.
double symmetric_aom_delta_phi(double delta_hz, double duration_s);

/// rf pulse train from the function generator. Each period starts with an ON
/// window of duty * period_s, during which the arms carry dphi_on; the OFF
/// remainder has dphi = 0.
class PulseTrain {
public:
    double period_s() const { return period_s_; }
    double duty() const { return duty_; }
    int n_periods() const { return n_periods_; }
    double dphi_on() const { return dphi_on_; }

    double total_duration_s() const { return period_s_ * n_periods_; }
    double on_duration_total_s() const { return duty_ * period_s_ * n_periods_; }
    /// True if t falls in an ON window. t outside [0, total) is OFF.
    bool is_on(double t) const;
    double dphi_at(double t) const { return is_on(t) ? dphi_on_ : 0.0; }

private:
    friend PulseTrain build_pulse_train(double, double, int, double);
    PulseTrain(double period_s, double duty, int n_periods, double dphi_on)
        : period_s_(period_s), duty_(duty), n_periods_(n_periods), dphi_on_(dphi_on) {}

    double period_s_;
    double duty_;
    int n_periods_;
    double dphi_on_;
};

/// Validates and builds a train. Throws std::invalid_argument if period_s <= 0,
/// duty is outside (0, 1], n_periods < 1 or dphi_on is not finite.
PulseTrain build_pulse_train(double period_s, double duty, int n_periods, double dphi_on);

struct TimeSample {
    double t = 0.0;
    double i_a = 0.0;
    double i_b = 0.0;
    double dphi = 0.0;
};

struct TimeSeries {
    std::vector<TimeSample> samples;
    double i0 = 0.0;
    double zeta = 0.0;
};

/// Gaussian jitter on the scan phase, drawn independently per sample.
/// std_rad == 0 disables it.
struct PhaseJitter {
    double std_rad = 0.0;
    std::uint64_t seed = 0;
};

/// Samples the output intensities on a uniform grid of samples_per_period
/// points per period, each at the midpoint of its cell (t_k = (k + 1/2) dt).
/// samples_per_period must be even and >= 2 so that a 50% duty cycle splits
/// each period evenly; i0 must be positive. Throws std::invalid_argument.
TimeSeries simulate_timeseries(const PulseTrain &train, double zeta, double i0, int samples_per_period,
                               const PhaseJitter &jitter = {});

struct TimeAverage {
    double mean_i_a = 0.0;
    double mean_i_b = 0.0;
};

/// Uniformly weighted mean of both ports. Throws std::invalid_argument when the
/// series is empty.
TimeAverage time_average(const TimeSeries &series);

/// Raised when a port is dark on average and <I_A><I_B> vanishes.
class DegenerateCorrelation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// <I_A I_B> / (<I_A> <I_B>) over the samples.
double g2_estimate(const TimeSeries &series);

}  // namespace cohmzi

#endif
