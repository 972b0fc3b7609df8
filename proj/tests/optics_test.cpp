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

#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace cohmzi;
using oracle::kPi;

namespace {

void expect_close(ComplexAmp actual, ComplexAmp expected, double tol = 1e-12) {
    EXPECT_NEAR(actual.real(), expected.real(), tol);
    EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

const ComplexAmp kI{0.0, 1.0};

}  // namespace

TEST(beam_splitter, splits_port_a_evenly_with_reflection_phase) {
    const FieldState out = apply(make_beam_splitter(), {1.0, 0.0, 5.0});
    expect_close(out.port_a, 1.0 / std::sqrt(2.0));
    expect_close(out.port_b, kI / std::sqrt(2.0));
    EXPECT_EQ(out.carrier_hz, 5.0);
    EXPECT_NEAR(intensity(out, Port::A), 0.5, 1e-15);
    EXPECT_NEAR(intensity(out, Port::B), 0.5, 1e-15);
}

TEST(beam_splitter, back_to_back_cross_couples) {
    const TransferMatrix bs = make_beam_splitter();
    const FieldState out = apply(compose({bs, bs}), {1.0, 0.0, 1.0});
    expect_close(out.port_a, 0.0);
    expect_close(out.port_b, kI);
    EXPECT_LE(max_abs_diff(compose({bs, bs}), TransferMatrix{0.0, kI, kI, 0.0}), 1e-12);
    EXPECT_TRUE(is_unitary(bs, 1e-12));
}

TEST(phase_pair, zero_is_identity) {
    EXPECT_EQ(make_phase_pair(0.0, 0.0), TransferMatrix::identity());
}

TEST(phase_pair, pi_flips_upper_amplitude) {
    const FieldState out = apply(make_phase_pair(kPi, 0.0), {1.0, 1.0, 1.0});
    expect_close(out.port_a, -1.0);
    expect_close(out.port_b, 1.0);
}

TEST(phase_pair, quarter_turns_match_complex_exponential) {
    const TransferMatrix m = make_phase_pair(kPi / 2, -kPi / 2);
    expect_close(m.m00, oracle::expi(kPi / 2));
    expect_close(m.m11, oracle::expi(-kPi / 2));
    expect_close(m.m00, kI);
    expect_close(m.m11, -kI);
    EXPECT_EQ(m.m01, ComplexAmp{});
    EXPECT_EQ(m.m10, ComplexAmp{});
}

TEST(phase_pair, rejects_non_finite) {
    EXPECT_THROW(make_phase_pair(std::nan(""), 0.0), std::invalid_argument);
    EXPECT_THROW(make_phase_pair(0.0, INFINITY), std::invalid_argument);
}

TEST(compose, single_element_and_identity_law) {
    const TransferMatrix m = compose({make_beam_splitter(), make_phase_pair(0.4, -1.1)});
    EXPECT_EQ(compose({m}), m);
    EXPECT_LE(max_abs_diff(compose({TransferMatrix::identity(), m}), m), 1e-15);
}

TEST(compose, empty_list_throws) {
    std::vector<TransferMatrix> none;
    EXPECT_THROW(compose(none), std::invalid_argument);
}

TEST(compose, first_argument_acts_first) {
    // Non-commuting pair: splitter then upper-arm phase vs the reverse order.
    const TransferMatrix bs = make_beam_splitter();
    const TransferMatrix z = make_phase_pair(kPi / 2, 0.0);
    EXPECT_EQ(compose({bs, z}), z * bs);
    EXPECT_GT(max_abs_diff(compose({bs, z}), compose({z, bs})), 0.1);
}

TEST(compose, controlled_chain_matches_printed_product) {
    const TransferMatrix bs = make_beam_splitter();
    for (auto [zeta, p, q] : {std::tuple{0.0, 0.0, 0.0}, {0.3, kPi / 2, -kPi / 2}, {-2.1, 0.7, 1.9}}) {
        const TransferMatrix m = compose({bs, make_phase_pair(p, q), make_phase_pair(zeta, 0.0), bs});
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                expect_close(m.at(r, c), oracle::controlled_mzi_entry(zeta, p, q, r, c));
            }
        }
    }
}

TEST(apply, identity_and_global_phase) {
    const FieldState f{{0.3, -0.4}, {1.2, 0.5}, 2.0};
    const FieldState same = apply(TransferMatrix::identity(), f);
    EXPECT_EQ(same.port_a, f.port_a);
    EXPECT_EQ(same.port_b, f.port_b);
    const FieldState rotated = apply(make_phase_pair(0.77, 0.77), f);
    EXPECT_NEAR(intensity(rotated, Port::A), intensity(f, Port::A), 1e-15);
    EXPECT_NEAR(intensity(rotated, Port::B), intensity(f, Port::B), 1e-15);
    EXPECT_EQ(rotated.carrier_hz, 2.0);
}

TEST(intensity, squared_modulus) {
    EXPECT_EQ(intensity({1.0, 0.0, 1.0}, Port::A), 1.0);
    EXPECT_NEAR(intensity({1.0 / std::sqrt(2.0), kI / std::sqrt(2.0), 1.0}, Port::B), 0.5, 1e-15);
    EXPECT_NEAR(intensity({kI * oracle::expi(0.3), 0.0, 1.0}, Port::A), 1.0, 1e-15);
}

TEST(is_unitary, rejects_scaling_and_bad_tolerance) {
    EXPECT_TRUE(is_unitary(TransferMatrix::identity(), 1e-12));
    EXPECT_FALSE(is_unitary(TransferMatrix::diagonal(2.0, 1.0), 1e-12));
    EXPECT_FALSE(is_unitary(TransferMatrix::diagonal(std::nan(""), 1.0), 1e-12));
    EXPECT_THROW(is_unitary(TransferMatrix::identity(), 0.0), std::invalid_argument);
}

TEST(optics_properties, random_chains_unitary_energy_preserving_associative) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ph(-2 * kPi, 2 * kPi);
    std::normal_distribution<double> amp(0.0, 1.0);
    const TransferMatrix bs = make_beam_splitter();
    for (int i = 0; i < 500; ++i) {
        const TransferMatrix a = make_phase_pair(ph(rng), ph(rng));
        const TransferMatrix b = make_phase_pair(ph(rng), 0.0);
        const TransferMatrix chain = compose({bs, a, b, bs});
        ASSERT_TRUE(is_unitary(chain, 1e-12));
        ASSERT_LE(max_abs_diff(compose({a, bs, b}), compose({compose({a, bs}), b})), 1e-12);
        const FieldState f{{amp(rng), amp(rng)}, {amp(rng), amp(rng)}, 1.0};
        const double before = f.total_intensity();
        ASSERT_NEAR(apply(chain, f).total_intensity(), before, 1e-12 * before);
    }
}
