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

#include "mixadc/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mixadc/rng.hpp"

namespace mixadc
{

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

void SystemConfig::validate() const
{
    if (M < 1)
        throw std::invalid_argument("SystemConfig: M must be positive");
    if (M0 < 0 || M0 > M)
        throw std::invalid_argument("SystemConfig: M0 must lie in [0, M]");
    if (N < 1)
        throw std::invalid_argument("SystemConfig: N must be positive");
    if (b < 1 || b > 12)
        throw std::invalid_argument("SystemConfig: b must lie in [1, 12]");
    if (!(p_u >= 0.0) || !std::isfinite(p_u))
        throw std::invalid_argument("SystemConfig: p_u must be finite and non-negative");
    if (tau < N)
        throw std::invalid_argument("SystemConfig: tau must be at least N (orthogonal pilots)");
    if (!(d_over_lambda > 0.0))
        throw std::invalid_argument("SystemConfig: d_over_lambda must be positive");
    if (!(W_hz > 0.0))
        throw std::invalid_argument("SystemConfig: bandwidth must be positive");
}

UserScenario::UserScenario(std::vector<double> beta, std::vector<double> theta, std::vector<double> K)
    : beta_(std::move(beta)), theta_(std::move(theta)), K_(std::move(K))
{
    if (beta_.empty())
        throw std::invalid_argument("UserScenario: at least one user is required");
    if (beta_.size() != theta_.size() || beta_.size() != K_.size())
        throw std::invalid_argument("UserScenario: beta, theta and K must have equal length");
    for (std::size_t n = 0; n < beta_.size(); ++n)
    {
        if (!(beta_[n] > 0.0) || !std::isfinite(beta_[n]))
            throw std::invalid_argument("UserScenario: beta must be positive and finite (user " +
                                        std::to_string(n) + ")");
        if (!(std::abs(theta_[n]) <= pi / 2.0))
            throw std::invalid_argument("UserScenario: theta must lie in [-pi/2, pi/2] (user " +
                                        std::to_string(n) + ")");
        if (!(K_[n] >= 0.0) || !std::isfinite(K_[n]))
            throw std::invalid_argument("UserScenario: K must be finite and non-negative (user " +
                                        std::to_string(n) + ")");
    }
}

void GeometryParams::validate() const
{
    if (!(r_min_m > 0.0))
        throw std::invalid_argument("GeometryParams: r_min must be positive");
    if (!(r_min_m < cell_radius_m))
        throw std::invalid_argument("GeometryParams: r_min must be smaller than the cell radius");
    if (!(pathloss_exponent > 0.0))
        throw std::invalid_argument("GeometryParams: pathloss exponent must be positive");
    if (!(shadowing_std_db >= 0.0))
        throw std::invalid_argument("GeometryParams: shadowing std must be non-negative");
}

KAssignment KAssignment::uniform(double K)
{
    KAssignment a;
    a.values_ = {K};
    a.shared_ = true;
    return a;
}

KAssignment KAssignment::per_user(std::vector<double> K)
{
    KAssignment a;
    a.values_ = std::move(K);
    a.shared_ = false;
    return a;
}

std::vector<double> KAssignment::resolve(std::size_t n_users) const
{
    if (shared_)
        return std::vector<double>(n_users, values_.at(0));
    if (values_.size() != n_users)
        throw std::invalid_argument("KAssignment: per-user K vector length does not match user count");
    return values_;
}

bool inside_hexagon(double x, double y, double radius)
{
    const double s3 = std::sqrt(3.0);
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    return ay <= 0.5 * s3 * radius && s3 * ax + ay <= s3 * radius;
}

UserGeometry sample_user_geometry(int n_users, const GeometryParams& geometry, std::uint64_t rng_seed)
{
    if (n_users < 1)
        throw std::invalid_argument("sample_user_geometry: n_users must be positive");
    geometry.validate();

    RngStream rng = make_stream(rng_seed, StreamDomain::scenario);
    const double R = geometry.cell_radius_m;
    const double half_height = 0.5 * std::sqrt(3.0) * R;
    std::uniform_real_distribution<double> ux(-R, R);
    std::uniform_real_distribution<double> uy(-half_height, half_height);
    std::uniform_real_distribution<double> uangle(-pi / 2.0, pi / 2.0);
    std::normal_distribution<double> shadow(0.0, geometry.shadowing_std_db);

    UserGeometry g;
    const auto n = static_cast<std::size_t>(n_users);
    g.x_m.reserve(n);
    g.y_m.reserve(n);
    g.distance_m.reserve(n);
    g.shadowing_db.reserve(n);
    g.theta.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        double x = 0.0, y = 0.0, r = 0.0;
        do
        {
            x = ux(rng);
            y = uy(rng);
            r = std::hypot(x, y);
        } while (!inside_hexagon(x, y, R) || r < geometry.r_min_m);
        g.x_m.push_back(x);
        g.y_m.push_back(y);
        g.distance_m.push_back(r);
        g.shadowing_db.push_back(shadow(rng));
        g.theta.push_back(uangle(rng));
    }
    return g;
}

double large_scale_gain(double distance_m, double shadowing_db, const GeometryParams& geometry)
{
    return db_to_linear(shadowing_db) * std::pow(distance_m / geometry.r_min_m, -geometry.pathloss_exponent);
}

UserScenario sample_user_scenario(int n_users, const GeometryParams& geometry, const KAssignment& K_policy,
                                  std::uint64_t rng_seed)
{
    UserGeometry g = sample_user_geometry(n_users, geometry, rng_seed);
    std::vector<double> beta(g.distance_m.size());
    for (std::size_t n = 0; n < beta.size(); ++n)
        beta[n] = large_scale_gain(g.distance_m[n], g.shadowing_db[n], geometry);
    return UserScenario(std::move(beta), std::move(g.theta), K_policy.resolve(static_cast<std::size_t>(n_users)));
}

UserScenario fixed_user_scenario(std::vector<double> betas, std::vector<double> thetas, std::vector<double> Ks)
{
    return UserScenario(std::move(betas), std::move(thetas), std::move(Ks));
}

UserScenario with_unit_gains(const UserScenario& scenario)
{
    return UserScenario(std::vector<double>(scenario.size(), 1.0),
                        std::vector<double>(scenario.theta().begin(), scenario.theta().end()),
                        std::vector<double>(scenario.K().begin(), scenario.K().end()));
}

} // namespace mixadc
