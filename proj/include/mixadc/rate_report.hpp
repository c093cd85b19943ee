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

#ifndef MIXADC_RATE_REPORT_HPP
#define MIXADC_RATE_REPORT_HPP

#include <optional>
#include <string_view>
#include <vector>

namespace mixadc
{

enum class RateMethod
{
    analytic_perfect,
    analytic_imperfect,
    analytic_rayleigh_perfect,
    analytic_rayleigh_imperfect,
    mc_perfect,
    mc_imperfect,
    limit_k_infinity,
    limit_power_scaled_perfect,
    limit_power_scaled_imperfect,
};

std::string_view method_tag(RateMethod method);

// Per-user rates in bits/s/Hz; sum_rate is always the natural-order sum.
struct RateReport
{
    std::vector<double> per_user_rate;
    double sum_rate = 0.0;
    RateMethod method = RateMethod::analytic_perfect;
    std::optional<std::vector<double>> mc_stderr;
    std::optional<double> sum_stderr;

    static RateReport from_per_user(std::vector<double> rates, RateMethod method);
};

} // namespace mixadc

#endif
