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

#include "mixadc/rate_report.hpp"

namespace mixadc
{

std::string_view method_tag(RateMethod method)
{
    switch (method)
    {
    case RateMethod::analytic_perfect:
        return "analytic-perfect";
    case RateMethod::analytic_imperfect:
        return "analytic-imperfect";
    case RateMethod::analytic_rayleigh_perfect:
        return "analytic-rayleigh-perfect";
    case RateMethod::analytic_rayleigh_imperfect:
        return "analytic-rayleigh-imperfect";
    case RateMethod::mc_perfect:
        return "mc-perfect";
    case RateMethod::mc_imperfect:
        return "mc-imperfect";
    case RateMethod::limit_k_infinity:
        return "limit-k-infinity";
    case RateMethod::limit_power_scaled_perfect:
        return "limit-power-scaled-perfect";
    case RateMethod::limit_power_scaled_imperfect:
        return "limit-power-scaled-imperfect";
    }
    return "unknown";
}

RateReport RateReport::from_per_user(std::vector<double> rates, RateMethod method)
{
    RateReport r;
    r.per_user_rate = std::move(rates);
    for (double v : r.per_user_rate)
        r.sum_rate += v;
    r.method = method;
    return r;
}

} // namespace mixadc
