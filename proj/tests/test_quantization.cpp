// SPDX-License-Identifier: Apache-2.0
//
// mixadc: uplink rate and energy-efficiency analysis for mixed-ADC massive MIMO
// Copyright (C) 2026 The mixadc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "mixadc/channel.hpp"
#include "mixadc/quantization.hpp"
#include "mixadc/scenario.hpp"

using namespace mixadc;

TEST_CASE("distortion factor table and approximation")
{
    CHECK(distortion_factor(1) == 0.3634);
    CHECK(distortion_factor(3) == 0.03454);
    CHECK(distortion_factor(5) == 0.002499);
    CHECK(distortion_factor_approx(5) == doctest::Approx(0.0026569).epsilon(1e-4));
    const double expected10 = pi * std::sqrt(3.0) / 2.0 * std::pow(2.0, -20);
    CHECK(distortion_factor(10) == doctest::Approx(expected10).epsilon(1e-15));
    CHECK(distortion_factor(10) == doctest::Approx(2.5944e-6).epsilon(1e-3));
    CHECK_THROWS_AS(distortion_factor(0), std::invalid_argument);
    CHECK_THROWS_AS(distortion_factor(13), std::invalid_argument);
}

TEST_CASE("distortion factor strictly decreasing")
{
    for (int b = 1; b < kMaxBits; ++b)
        CHECK(distortion_factor(b + 1) < distortion_factor(b));
}

TEST_CASE("approximation quality at the switchover")
{
    const double err = std::abs(distortion_factor_approx(5) - kDistortionTable[4]) / kDistortionTable[4];
    CHECK(err < 0.08);
}

TEST_CASE("aqnm parameters")
{
    for (int b = 1; b <= kMaxBits; ++b)
    {
        const AqnmParams q = AqnmParams::from_bits(b);
        CHECK(q.alpha + q.rho == 1.0);
        CHECK(q.bits == b);
    }
    const AqnmParams ideal = AqnmParams::ideal();
    CHECK(ideal.alpha == 1.0);
    CHECK(ideal.rho == 0.0);
    CHECK_THROWS_AS(AqnmParams::from_rho(1.5), std::invalid_argument);
}

TEST_CASE("quantization noise covariance")
{
    const AqnmParams q = AqnmParams::from_bits(1);
    const double ar = q.alpha * q.rho;

    const Eigen::VectorXd zero = quantization_noise_covariance_diag(CMatrix::Zero(3, 2), 5.0, q);
    for (Eigen::Index m = 0; m < 3; ++m)
        CHECK(zero(m) == doctest::Approx(ar));

    CMatrix g(1, 1);
    g(0, 0) = std::polar(1.0, 0.7);
    const double single = quantization_noise_covariance_diag(g, 1.0, q)(0);
    CHECK(single == doctest::Approx(0.6366 * 0.3634 * 2.0));
    CHECK(single == doctest::Approx(0.46268088).epsilon(1e-12));

    CMatrix G(3, 2);
    G << std::complex<double>(1, 2), std::complex<double>(0, -1), std::complex<double>(0.5, 0),
        std::complex<double>(-2, 1), std::complex<double>(0, 0), std::complex<double>(3, 3);
    const Eigen::VectorXd d1 = quantization_noise_covariance_diag(G, 2.0, q);
    const Eigen::VectorXd d3 = quantization_noise_covariance_diag(G, 6.0, q);
    CHECK(d1(0) == doctest::Approx(ar * (2.0 * (5.0 + 1.0) + 1.0)));
    CHECK(d1(2) == doctest::Approx(ar * (2.0 * 18.0 + 1.0)));
    for (Eigen::Index m = 0; m < 3; ++m)
    {
        CHECK(d1(m) >= ar);
        CHECK(d3(m) - ar == doctest::Approx(3.0 * (d1(m) - ar)).epsilon(1e-14));
    }
}

TEST_CASE("one-bit Lloyd-Max closed form")
{
    const LloydMaxResult r = lloyd_max_design(1);
    REQUIRE(r.quantizer.levels().size() == 2);
    const double level = std::sqrt(2.0 / pi);
    CHECK(r.quantizer.levels()[0] == doctest::Approx(-level).epsilon(1e-9));
    CHECK(r.quantizer.levels()[1] == doctest::Approx(level).epsilon(1e-9));
    CHECK(r.distortion == doctest::Approx(1.0 - 2.0 / pi).epsilon(1e-9));
    CHECK(std::abs(r.distortion - 0.3634) < 2e-3);
}

TEST_CASE("Lloyd-Max matches the reference table")
{
    for (int b = 1; b <= 5; ++b)
    {
        CAPTURE(b);
        const LloydMaxResult r = lloyd_max_design(b);
        CHECK(std::abs(r.distortion - kDistortionTable[b - 1]) <= 2e-3);
        CHECK(r.quantizer.levels().size() == (std::size_t{1} << b));
    }
    CHECK(lloyd_max_design(2).distortion == doctest::Approx(0.1175).epsilon(1e-3));
    CHECK_THROWS_AS(lloyd_max_design(0), std::invalid_argument);
    CHECK_THROWS_AS(lloyd_max_design(6), std::invalid_argument);
}

TEST_CASE("Lloyd-Max fixed point structure")
{
    const LloydMaxResult r = lloyd_max_design(3);
    const auto& lv = r.quantizer.levels();
    const auto& th = r.quantizer.thresholds();
    REQUIRE(th.size() == lv.size() - 1);
    for (std::size_t k = 0; k < th.size(); ++k)
    {
        CHECK(th[k] == doctest::Approx(0.5 * (lv[k] + lv[k + 1])).epsilon(1e-12));
        if (k > 0)
            CHECK(th[k] > th[k - 1]);
    }
    for (std::size_t k = 0; k < lv.size(); ++k)
        CHECK(lv[k] == doctest::Approx(-lv[lv.size() - 1 - k]).epsilon(1e-9));
    for (std::size_t k = 1; k < r.distortion_history.size(); ++k)
        CHECK(r.distortion_history[k] <= r.distortion_history[k - 1] + 1e-15);
    CHECK(r.quantizer.gaussian_distortion() == doctest::Approx(r.distortion).epsilon(1e-12));
}

TEST_CASE("Lloyd-Max is stable under perturbed starts")
{
    for (int b = 1; b <= 4; ++b)
    {
        const LloydMaxResult base = lloyd_max_design(b);
        std::vector<double> start = base.quantizer.levels();
        for (std::size_t k = 0; k < start.size(); ++k)
            start[k] = start[k] * 1.15 + 0.05 * ((k % 2) ? 1.0 : -1.0);
        std::sort(start.begin(), start.end());
        const LloydMaxResult again = lloyd_max_refine(start);
        CHECK(std::abs(again.distortion - base.distortion) < 1e-4);
    }
}

TEST_CASE("Lloyd-Max reports non-convergence")
{
    CHECK_THROWS_AS(lloyd_max_design(4, 2, 1e-15), std::runtime_error);
}

TEST_CASE("scalar quantizer mapping")
{
    const ScalarQuantizer q({-1.0, 0.5, 2.0}, {0.0, 1.0});
    CHECK(q(-3.0) == -1.0);
    CHECK(q(0.2) == 0.5);
    CHECK(q(1.5) == 2.0);
    CHECK_THROWS_AS(ScalarQuantizer({1.0, 2.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ScalarQuantizer({1.0, 2.0, 3.0}, {1.0, 0.5}), std::invalid_argument);
    const ScalarQuantizer id = ScalarQuantizer::identity();
    CHECK(id.is_identity());
    CHECK(id(0.123) == 0.123);
}

TEST_CASE("empirical distortion")
{
    RngStream rng = make_stream(42, StreamDomain::quantizer, 1);
    const double one = empirical_distortion(lloyd_max_design(1).quantizer, 1000000, rng);
    CHECK(std::abs(one - 0.3634) <= 0.005);

    RngStream rng3 = make_stream(42, StreamDomain::quantizer, 3);
    CHECK(std::abs(empirical_distortion(lloyd_max_design(3).quantizer, 200000, rng3) - 0.03454) <= 0.002);

    RngStream rng0 = make_stream(42, StreamDomain::quantizer, 0);
    CHECK(empirical_distortion(ScalarQuantizer::identity(), 10000, rng0) == 0.0);
    CHECK_THROWS_AS(empirical_distortion(ScalarQuantizer::identity(), 9999, rng0), std::invalid_argument);
}
