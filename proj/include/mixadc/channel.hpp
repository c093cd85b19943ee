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

#ifndef MIXADC_CHANNEL_HPP
#define MIXADC_CHANNEL_HPP

#include <vector>

#include <Eigen/Dense>

#include "mixadc/rng.hpp"
#include "mixadc/scenario.hpp"

namespace mixadc
{

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// True channel split by ADC group: rows 0..M0-1 of the array feed the
// high-resolution ADCs (G0), rows M0..M-1 the low-resolution ADCs (G1).
struct ChannelRealization
{
    CMatrix G0;
    CMatrix G1;

    CMatrix stacked() const;
};

// MMSE estimate and its error, split the same way. Xi = Ghat - G.
// error_variance[n] is the per-entry error variance of user n.
struct EstimatedChannel
{
    CMatrix Ghat0;
    CMatrix Ghat1;
    CMatrix Xi0;
    CMatrix Xi1;
    std::vector<double> error_variance;
};

struct ChannelDrawOptions
{
    // Drop the scattered component (K -> infinity): g_n = sqrt(beta_n) * hbar_n.
    bool los_limit = false;
    // Infinite pilot power: eta_n = 1, Xi = 0.
    bool perfect_pilots = false;
};

// Entry m (0-based) is exp(-j * m * 2*pi*d/lambda * sin(theta)).
CVector los_steering(double theta, int M_ant, double d_over_lambda);

// Per-user estimation quality p_p*beta / (1 + p_p*beta).
double estimation_quality(double pilot_power, double beta);

// Per-entry variance of the estimation error of user n.
double estimation_error_variance(double pilot_power, double beta, double K);

ChannelRealization draw_channel(const UserScenario& scenario, const SystemConfig& config, RngStream& rng,
                                const ChannelDrawOptions& options = {});

struct ChannelWithEstimate
{
    ChannelRealization truth;
    EstimatedChannel estimate;
};

ChannelWithEstimate draw_estimated_channel(const UserScenario& scenario, const SystemConfig& config, RngStream& rng,
                                           const ChannelDrawOptions& options = {});

} // namespace mixadc

#endif
