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

#ifndef MIXADC_POWER_HPP
#define MIXADC_POWER_HPP

#include "mixadc/rate_report.hpp"
#include "mixadc/scenario.hpp"

namespace mixadc
{

// Receiver component powers in watts. FOM_W is in joules per conversion step.
struct PowerParams
{
    double P_LO = 22.5e-3;
    double P_LNA = 5.4e-3;
    double P_H = 3e-3;
    double P_M = 0.3e-3;
    double P_AGC = 2e-3;
    double P_BB = 200e-3;
    double FOM_W = 15e-15;
    double f_s = 1e9;

    void validate() const;
};

struct PowerBreakdown
{
    double lo = 0.0;
    double rf_chains = 0.0; // LNA, hybrid/LO buffer and both mixers, all antennas
    double agc = 0.0;
    double adc_high = 0.0;
    double adc_low = 0.0;
    double baseband = 0.0;
    double total = 0.0;
};

// Walden figure of merit: FOM_W * f_s * 2^b.
double adc_power(int b, const PowerParams& params);

// Low-resolution chains use no AGC when b = 1. High-resolution chains use b_high bits.
PowerBreakdown total_power(const SystemConfig& config, int b_high, const PowerParams& params);

// Sum rate times bandwidth over total power, in bits per joule.
double energy_efficiency(const RateReport& rate_report, const SystemConfig& config, const PowerBreakdown& breakdown);

} // namespace mixadc

#endif
