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

#include "mixadc/power.hpp"

#include <cmath>
#include <stdexcept>

namespace mixadc
{

void PowerParams::validate() const
{
    for (double v : {P_LO, P_LNA, P_H, P_M, P_AGC, P_BB, FOM_W, f_s})
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("PowerParams: components must be finite and non-negative");
}

double adc_power(int b, const PowerParams& params)
{
    if (b < 1)
        throw std::invalid_argument("adc_power: b must be positive");
    return params.FOM_W * params.f_s * std::ldexp(1.0, b);
}

PowerBreakdown total_power(const SystemConfig& config, int b_high, const PowerParams& params)
{
    config.validate();
    params.validate();
    if (b_high < config.b)
        throw std::invalid_argument("total_power: high-resolution bits must be at least the low-resolution bits");

    const double M = config.M;
    const double M0 = config.M0;
    const double M1 = config.M1();
    const double agc_flag = config.b == 1 ? 0.0 : 1.0;

    PowerBreakdown p;
    p.lo = params.P_LO;
    p.rf_chains = M * (params.P_LNA + params.P_H + 2.0 * params.P_M);
    p.agc = 2.0 * M0 * params.P_AGC + 2.0 * M1 * agc_flag * params.P_AGC;
    p.adc_high = 2.0 * M0 * adc_power(b_high, params);
    p.adc_low = M1 > 0 ? 2.0 * M1 * adc_power(config.b, params) : 0.0;
    p.baseband = params.P_BB;
    p.total = p.lo + p.rf_chains + p.agc + p.adc_high + p.adc_low + p.baseband;
    return p;
}

double energy_efficiency(const RateReport& rate_report, const SystemConfig& config, const PowerBreakdown& breakdown)
{
    if (!(breakdown.total > 0.0))
        throw std::invalid_argument("energy_efficiency: total power must be positive");
    return rate_report.sum_rate * config.W_hz / breakdown.total;
}

} // namespace mixadc
