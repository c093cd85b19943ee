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

#include <cmath>
#include <limits>

#include "mixadc/scenario.hpp"

using namespace mixadc;

TEST_CASE("db conversion")
{
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(-10.0) == doctest::Approx(0.1));
    CHECK(db_to_linear(-std::numeric_limits<double>::infinity()) == 0.0);
    CHECK(linear_to_db(100.0) == doctest::Approx(20.0));
}

TEST_CASE("system config invariants")
{
    SystemConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK(c.M1() == 200);
    CHECK(c.kappa() == 0.0);
    CHECK(c.pilot_power() == doctest::Approx(100.0));

    c.M0 = 50;
    CHECK(c.M1() == 150);
    CHECK(c.kappa() == doctest::Approx(0.25));

    SystemConfig bad = c;
    bad.M0 = 201;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.tau = 9;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.b = 13;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.b = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.M = 0;
    bad.M0 = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.p_u = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.d_over_lambda = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("fixed user scenario passes values through")
{
    const UserScenario s = fixed_user_scenario({1.0, 1.0}, {0.0, pi / 6}, {10.0, 10.0});
    REQUIRE(s.size() == 2);
    CHECK(s.beta(1) == 1.0);
    CHECK(s.theta(1) == pi / 6);
    CHECK(s.K(0) == 10.0);
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
}

TEST_CASE("fixed user scenario rejects bad input")
{
    CHECK_THROWS_AS(fixed_user_scenario({}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_user_scenario({1.0, 2.0}, {0.0}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_user_scenario({0.0}, {0.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_user_scenario({-1.0}, {0.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_user_scenario({1.0}, {0.0}, {-0.5}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_user_scenario({1.0}, {2.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_user_scenario({1.0}, {0.0}, {std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
}

TEST_CASE("geometry parameters are checked")
{
    GeometryParams g;
    g.r_min_m = 1000.0;
    CHECK_THROWS_AS(sample_user_scenario(3, g, KAssignment::uniform(0.0), 1), std::invalid_argument);
    g = GeometryParams{};
    g.pathloss_exponent = 0.0;
    CHECK_THROWS_AS(sample_user_scenario(3, g, KAssignment::uniform(0.0), 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_user_scenario(0, GeometryParams{}, KAssignment::uniform(0.0), 1), std::invalid_argument);
}

TEST_CASE("large-scale gain normalization")
{
    const GeometryParams g;
    CHECK(large_scale_gain(100.0, 0.0, g) == doctest::Approx(1.0));
    CHECK(large_scale_gain(1000.0, 0.0, g) == doctest::Approx(std::pow(10.0, -3.8)));
    CHECK(large_scale_gain(100.0, 10.0, g) == doctest::Approx(10.0));
}

TEST_CASE("hexagon membership")
{
    CHECK(inside_hexagon(0.0, 0.0, 1000.0));
    CHECK(inside_hexagon(999.0, 0.0, 1000.0));
    CHECK_FALSE(inside_hexagon(1001.0, 0.0, 1000.0));
    const double apothem = 1000.0 * std::sqrt(3.0) / 2.0;
    CHECK(inside_hexagon(0.0, apothem - 1.0, 1000.0));
    CHECK_FALSE(inside_hexagon(0.0, apothem + 1.0, 1000.0));
    CHECK_FALSE(inside_hexagon(800.0, 600.0, 1000.0));
}

TEST_CASE("sampled scenario is deterministic and well formed")
{
    const GeometryParams g;
    const UserScenario a = sample_user_scenario(10, g, KAssignment::uniform(10.0), 42);
    const UserScenario b = sample_user_scenario(10, g, KAssignment::uniform(10.0), 42);
    const UserScenario c = sample_user_scenario(10, g, KAssignment::uniform(10.0), 43);
    bool differs = false;
    for (std::size_t n = 0; n < a.size(); ++n)
    {
        CHECK(a.beta(n) == b.beta(n));
        CHECK(a.theta(n) == b.theta(n));
        CHECK(a.beta(n) > 0.0);
        CHECK(std::abs(a.theta(n)) <= pi / 2);
        CHECK(a.K(n) == 10.0);
        differs = differs || a.beta(n) != c.beta(n);
    }
    CHECK(differs);
}

TEST_CASE("per-user K assignment")
{
    const UserScenario s =
        sample_user_scenario(3, GeometryParams{}, KAssignment::per_user({0.0, 1.0, 5.0}), 7);
    CHECK(s.K(0) == 0.0);
    CHECK(s.K(2) == 5.0);
    CHECK_THROWS_AS(sample_user_scenario(2, GeometryParams{}, KAssignment::per_user({0.0, 1.0, 5.0}), 7),
                    std::invalid_argument);
}

TEST_CASE("geometry draws respect the cell")
{
    const GeometryParams g;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        const UserGeometry u = sample_user_geometry(200, g, seed);
        for (std::size_t n = 0; n < u.distance_m.size(); ++n)
        {
            CHECK(u.distance_m[n] >= g.r_min_m);
            CHECK(inside_hexagon(u.x_m[n], u.y_m[n], g.cell_radius_m));
            CHECK(u.distance_m[n] == doctest::Approx(std::hypot(u.x_m[n], u.y_m[n])));
        }
    }
}

TEST_CASE("shadowing statistics")
{
    const UserGeometry u = sample_user_geometry(100000, GeometryParams{}, 99);
    double mean = 0.0;
    for (double s : u.shadowing_db)
        mean += s;
    mean /= static_cast<double>(u.shadowing_db.size());
    double var = 0.0;
    for (double s : u.shadowing_db)
        var += (s - mean) * (s - mean);
    const double sd = std::sqrt(var / static_cast<double>(u.shadowing_db.size() - 1));
    CHECK(std::abs(mean) <= 0.1);
    CHECK(std::abs(sd - 8.0) <= 0.2);
}

TEST_CASE("unit gains keep angles and K")
{
    const UserScenario s = sample_user_scenario(4, GeometryParams{}, KAssignment::uniform(3.0), 5);
    const UserScenario u = with_unit_gains(s);
    for (std::size_t n = 0; n < s.size(); ++n)
    {
        CHECK(u.beta(n) == 1.0);
        CHECK(u.theta(n) == s.theta(n));
        CHECK(u.K(n) == 3.0);
    }
}
