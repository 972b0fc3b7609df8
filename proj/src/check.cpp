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

#include "cohmzi/check.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cohmzi/interferometer.h"
#include "cohmzi/netlist.h"
#include "cohmzi/numeric.h"
#include "cohmzi/pulse.h"

namespace cohmzi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMatrixTol = 1e-12;
constexpr double kOracleTol = 1e-9;

PropertyResult verdict(std::string name, double worst, double tol) {
    return {std::move(name), worst <= tol, "max deviation " + format_roundtrip(worst) + " (tol " + format_roundtrip(tol) + ")"};
}

class Checker {
public:
    explicit Checker(const CheckOptions &options)
        : bs_(options.beam_splitter), rng_(options.seed), trials_(std::max(options.random_trials, 1)) {}

    double phase() { return std::uniform_real_distribution<double>(-2.0 * kPi, 2.0 * kPi)(rng_); }

    TransferMatrix chain(double zeta, double phi_p, double phi_q) const {
        return compose({bs_, make_phase_pair(phi_p, phi_q), make_phase_pair(zeta, 0.0), bs_});
    }

    PropertyResult unitarity() {
        double worst = unitarity_error(bs_);
        for (int i = 0; i < trials_; ++i) {
            worst = std::max(worst, unitarity_error(make_phase_pair(phase(), phase())));
            worst = std::max(worst, unitarity_error(chain(phase(), phase(), phase())));
        }
        return verdict("unitarity", worst, kMatrixTol);
    }

    PropertyResult energy_conservation() {
        double worst = 0.0;
        std::normal_distribution<double> amp(0.0, 1.0);
        for (int i = 0; i < trials_; ++i) {
            const FieldState in{{amp(rng_), amp(rng_)}, {amp(rng_), amp(rng_)}, 1.0};
            const FieldState out = apply(chain(phase(), phase(), phase()), in);
            const double before = in.total_intensity();
            worst = std::max(worst, std::abs(out.total_intensity() - before) / before);
        }
        return verdict("energy conservation", worst, kMatrixTol);
    }

    PropertyResult associativity() {
        double worst = 0.0;
        for (int i = 0; i < trials_; ++i) {
            const TransferMatrix a = chain(phase(), phase(), phase());
            const TransferMatrix b = make_phase_pair(phase(), phase());
            const TransferMatrix c = bs_;
            worst = std::max(worst, max_abs_diff(compose({a, b, c}), compose({compose({a, b}), c})));
        }
        return verdict("composition associativity", worst, kMatrixTol);
    }

    PropertyResult double_splitter() const {
        const TransferMatrix expected{0.0, ComplexAmp{0.0, 1.0}, ComplexAmp{0.0, 1.0}, 0.0};
        return verdict("double-splitter identity", max_abs_diff(compose({bs_, bs_}), expected), kMatrixTol);
    }

    PropertyResult oracle_equivalence() {
        double worst = 0.0;
        const FieldState e0{{1.0, 0.0}, {0.0, 0.0}, 1.0};
        for (int i = 0; i < trials_; ++i) {
            const double zeta = phase();
            const double phi_p = phase();
            const double phi_q = phase();
            const FieldState out = apply(chain(zeta, phi_p, phi_q), e0);
            const IntensityPair closed = single_mzi_intensities(zeta, phi_p - phi_q, 1.0);
            worst = std::max({worst, std::abs(intensity(out, Port::A) - closed.upper),
                              std::abs(intensity(out, Port::B) - closed.lower)});
        }
        return verdict("matrix chain vs closed form", worst, kOracleTol);
    }

    PropertyResult swap_symmetry() {
        double worst = 0.0;
        for (int i = 0; i < trials_; ++i) {
            const double zeta = phase();
            worst = std::max(worst, std::abs(single_mzi_intensities(zeta, kPi, 1.0).upper -
                                             single_mzi_intensities(zeta, 0.0, 1.0).lower));
        }
        return verdict("swap symmetry at dphi = pi", worst, kMatrixTol);
    }

    PropertyResult g2_periodicity() {
        double worst = 0.0;
        for (int i = 0; i < trials_; ++i) {
            const double zeta = phase();
            const double dphi = phase();
            worst = std::max(worst, std::abs(g2_analytic(zeta, dphi) - g2_analytic(zeta, dphi + kPi)));
        }
        return verdict("g2 pi-periodicity", worst, kMatrixTol);
    }

    PropertyResult coupled_randomness() {
        double worst = 0.0;
        for (int i = 0; i < trials_; ++i) {
            const double phi = phase();
            for (double psi : {0.0, kPi}) {
                const IntensityPair p = coupled_mzi_intensities(phi, psi, 1.0);
                worst = std::max({worst, std::abs(p.upper - 0.5), std::abs(p.lower - 0.5)});
            }
        }
        return verdict("coupled MZI randomness", worst, kMatrixTol);
    }

    PropertyResult pulse_randomness() {
        const PulseTrain train = build_pulse_train(1e-3, 0.5, 4, kPi);
        double worst_avg = 0.0;
        double worst_g2 = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double zeta = phase();
            const TimeSeries series = simulate_timeseries(train, zeta, 1.0, 20);
            const TimeAverage avg = time_average(series);
            worst_avg = std::max({worst_avg, std::abs(avg.mean_i_a - 0.5), std::abs(avg.mean_i_b - 0.5)});
            worst_g2 = std::max(worst_g2, std::abs(g2_estimate(series) - g2_analytic(zeta, 0.0)));
        }
        return {"pulse-train randomness and g2 estimate", worst_avg <= kMatrixTol && worst_g2 <= kOracleTol,
                "max |<I> - I0/2| " + format_roundtrip(worst_avg) + ", max |g2 - sin^2(zeta)| " + format_roundtrip(worst_g2)};
    }

    PropertyResult netlist_unitarity() const {
        const netlist::CircuitSpec mzi = netlist::parse(
            "source intensity=1 freq=1.935e14\n"
            "bs\n"
            "aom arm=upper delta=80e6 duration=3.125e-9 sign=+1\n"
            "aom arm=lower delta=80e6 duration=3.125e-9 sign=-1\n"
            "phase arm=upper value=0.3\n"
            "bs\n");
        return verdict("lowered netlist unitarity", unitarity_error(netlist::lower(mzi).matrix), kMatrixTol);
    }

private:
    TransferMatrix bs_;
    std::mt19937_64 rng_;
    int trials_;
};

}  // namespace

std::vector<PropertyResult> run_property_checks(const CheckOptions &options) {
    Checker c(options);
    return {
        c.unitarity(),        c.energy_conservation(), c.associativity(),     c.double_splitter(),
        c.oracle_equivalence(), c.swap_symmetry(),     c.g2_periodicity(),    c.coupled_randomness(),
        c.pulse_randomness(), c.netlist_unitarity(),
    };
}

}  // namespace cohmzi
