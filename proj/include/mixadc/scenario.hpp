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

#ifndef MIXADC_SCENARIO_HPP
#define MIXADC_SCENARIO_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mixadc
{

inline constexpr double pi = 3.14159265358979323846;

double db_to_linear(double db);
double linear_to_db(double linear);

// System-level configuration of the mixed-ADC uplink.
// M0 antennas feed high-resolution ADC pairs, the remaining M1 = M - M0 feed
// b-bit ADC pairs. Powers are linear and normalized to unit noise variance.
struct SystemConfig
{
    int M = 200;
    int M0 = 0;
    int N = 10;
    int b = 1;
    double p_u = 10.0;
    int tau = 10;
    double d_over_lambda = 0.5;
    double W_hz = 1e9;

    int M1() const { return M - M0; }
    double kappa() const { return static_cast<double>(M0) / static_cast<double>(M); }
    double pilot_power() const { return static_cast<double>(tau) * p_u; }

    // Throws std::invalid_argument when any invariant is violated.
    void validate() const;
};

// Per-user large-scale gain, angle of arrival and linear Rician factor.
class UserScenario
{
  public:
    UserScenario(std::vector<double> beta, std::vector<double> theta, std::vector<double> K);

    std::size_t size() const { return beta_.size(); }
    std::span<const double> beta() const { return beta_; }
    std::span<const double> theta() const { return theta_; }
    std::span<const double> K() const { return K_; }
    double beta(std::size_t n) const { return beta_[n]; }
    double theta(std::size_t n) const { return theta_[n]; }
    double K(std::size_t n) const { return K_[n]; }

  private:
    std::vector<double> beta_;
    std::vector<double> theta_;
    std::vector<double> K_;
};

struct GeometryParams
{
    double cell_radius_m = 1000.0;
    double r_min_m = 100.0;
    double pathloss_exponent = 3.8;
    double shadowing_std_db = 8.0;

    void validate() const;
};

// Rician factor assignment: one shared value or one value per user (linear).
class KAssignment
{
  public:
    static KAssignment uniform(double K);
    static KAssignment per_user(std::vector<double> K);

    std::vector<double> resolve(std::size_t n_users) const;

  private:
    std::vector<double> values_;
    bool shared_ = true;
};

// Raw geometry draw; exposed so shadowing and distance statistics can be checked.
struct UserGeometry
{
    std::vector<double> x_m;
    std::vector<double> y_m;
    std::vector<double> distance_m;
    std::vector<double> shadowing_db;
    std::vector<double> theta;
};

// Flat-topped hexagon of circumradius R centered at the base station.
bool inside_hexagon(double x, double y, double radius);

UserGeometry sample_user_geometry(int n_users, const GeometryParams& geometry, std::uint64_t rng_seed);

double large_scale_gain(double distance_m, double shadowing_db, const GeometryParams& geometry);

UserScenario sample_user_scenario(int n_users, const GeometryParams& geometry, const KAssignment& K_policy,
                                  std::uint64_t rng_seed);

UserScenario fixed_user_scenario(std::vector<double> betas, std::vector<double> thetas, std::vector<double> Ks);

// Same angles and K factors with every beta set to 1.
UserScenario with_unit_gains(const UserScenario& scenario);

} // namespace mixadc

#endif
