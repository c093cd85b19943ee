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

#ifndef MIXADC_ANALYTIC_HPP
#define MIXADC_ANALYTIC_HPP

#include "mixadc/quantization.hpp"
#include "mixadc/rate_report.hpp"
#include "mixadc/scenario.hpp"

namespace mixadc
{

// Array factor between users n and i over an M_j-element half of the array:
// sin(M_j*x/2) / sin(x/2) with x = 2*pi*d/lambda*(sin(theta_n) - sin(theta_i)).
// Returns the continuous limit where the denominator vanishes.
double phi(double theta_n, double theta_i, int M_j, double d_over_lambda);

// Closed-form approximate rates with MRC. All logs are base 2; the K factors in
// the scenario are linear. Each report carries one rate per user.

// Perfect CSI over Rician fading.
RateReport rate_perfect_csi(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm);

// Rayleigh special case written in terms of M, kappa, alpha and rho. K is ignored.
RateReport rate_perfect_rayleigh(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm);

// Strong-LoS limit of the perfect-CSI rate (all K -> infinity).
RateReport rate_perfect_K_infinity(const UserScenario& scenario, const SystemConfig& config,
                                   const AqnmParams& aqnm);

// p_u = E_u / M, M -> infinity, perfect CSI.
double rate_limit_power_scaled_perfect(double E_u, double beta_n, double kappa, const AqnmParams& aqnm);

// Imperfect CSI with MMSE estimation from tau pilot symbols (p_p = tau * p_u).
RateReport rate_imperfect_csi(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm);

// Rayleigh special case of the imperfect-CSI rate. K is ignored.
RateReport rate_imperfect_rayleigh(const UserScenario& scenario, const SystemConfig& config,
                                   const AqnmParams& aqnm);

// p_u = E_u / M^gamma, large M, imperfect CSI.
double rate_limit_power_scaled_imperfect(double E_u, double beta_n, double K_n, int tau, double kappa,
                                         const AqnmParams& aqnm, double gamma, double M);

// gamma = 1, M -> infinity: the constant the previous expression settles to.
double rate_limit_power_scaled_imperfect_constant(double E_u, double beta_n, double K_n, double kappa,
                                                  const AqnmParams& aqnm);

} // namespace mixadc

#endif
