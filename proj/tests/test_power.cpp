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

#include "mixadc/power.hpp"

using namespace mixadc;

namespace
{

SystemConfig cfg(int M, int M0, int b)
{
    SystemConfig c;
    c.M = M;
    c.M0 = M0;
    c.b = b;
    return c;
}

} // namespace

TEST_CASE("converter power")
{
    const PowerParams p;
    CHECK(adc_power(1, p) == doctest::Approx(30e-6).epsilon(1e-12));
    CHECK(adc_power(12, p) == doctest::Approx(61.44e-3).epsilon(1e-12));
    PowerParams fast = p;
    fast.f_s = 2.0 * p.f_s;
    CHECK(adc_power(7, fast) == 2.0 * adc_power(7, p));
    CHECK_THROWS_AS(adc_power(0, p), std::invalid_argument);
}

TEST_CASE("total power reference value")
{
    const PowerBreakdown b = total_power(cfg(200, 0, 1), 12, PowerParams{});
    const double expected_mw = 22.5 + 200 * 9.0 + 400 * 0.03 + 200;
    CHECK(expected_mw == doctest::Approx(2034.5));
    CHECK(b.total == doctest::Approx(2.0345).epsilon(1e-14));
    CHECK(std::abs(b.total - 2.0345) < 1e-12);
    CHECK(b.total == doctest::Approx(b.lo + b.rf_chains + b.agc + b.adc_high + b.adc_low + b.baseband).epsilon(1e-15));
    CHECK(b.agc == 0.0);
    CHECK(b.adc_high == 0.0);
}

TEST_CASE("AGC appears only for multi-bit low-resolution chains")
{
    const PowerParams p;
    const PowerBreakdown one = total_power(cfg(100, 40, 1), 12, p);
    const PowerBreakdown two = total_power(cfg(100, 40, 2), 12, p);
    CHECK(one.agc == doctest::Approx(2 * 40 * p.P_AGC));
    CHECK(two.agc == doctest::Approx(2 * 40 * p.P_AGC + 2 * 60 * p.P_AGC));
    CHECK(two.adc_low == doctest::Approx(2 * 60 * adc_power(2, p)));
}

TEST_CASE("no low-resolution chains means no dependence on their settings")
{
    PowerParams p;
    const double a = total_power(cfg(64, 64, 1), 12, p).total;
    const double b = total_power(cfg(64, 64, 9), 12, p).total;
    CHECK(a == b);
}

TEST_CASE("total power monotonicity")
{
    const PowerParams p;
    for (int b = 1; b <= 11; ++b)
    {
        double prev = 0.0;
        for (int M = 2; M <= 300; M += 2)
        {
            const double t = total_power(cfg(M, M / 2, b), 12, p).total;
            CHECK(t > prev);
            prev = t;
        }
        prev = 0.0;
        for (int M0 = 0; M0 <= 100; ++M0)
        {
            const double t = total_power(cfg(100, M0, b), 12, p).total;
            CHECK(t > prev);
            prev = t;
        }
    }
    double prev = 0.0;
    for (int b = 2; b <= 12; ++b)
    {
        const double t = total_power(cfg(100, 30, b), 12, p).total;
        CHECK(t > prev);
        prev = t;
    }
    CHECK_THROWS_AS(total_power(cfg(100, 30, 10), 8, p), std::invalid_argument);
    PowerParams bad = p;
    bad.P_LNA = -1.0;
    CHECK_THROWS_AS(total_power(cfg(100, 30, 1), 12, bad), std::invalid_argument);
}

TEST_CASE("energy efficiency")
{
    SystemConfig c = cfg(200, 0, 1);
    PowerBreakdown b;
    b.total = 2.0345;
    const RateReport r = RateReport::from_per_user({20.0, 30.0}, RateMethod::analytic_perfect);
    CHECK(energy_efficiency(r, c, b) == doctest::Approx(2.458e10).epsilon(1e-3));
    PowerBreakdown twice = b;
    twice.total = 2.0 * b.total;
    CHECK(energy_efficiency(r, c, twice) == doctest::Approx(energy_efficiency(r, c, b) / 2.0).epsilon(1e-15));
    const RateReport zero = RateReport::from_per_user({0.0}, RateMethod::analytic_perfect);
    CHECK(energy_efficiency(zero, c, b) == 0.0);
}
