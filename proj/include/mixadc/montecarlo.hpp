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

#ifndef MIXADC_MONTECARLO_HPP
#define MIXADC_MONTECARLO_HPP

#include <cstdint>

#include <Eigen/Dense>

#include "mixadc/channel.hpp"
#include "mixadc/quantization.hpp"
#include "mixadc/rate_report.hpp"
#include "mixadc/scenario.hpp"

namespace mixadc
{

enum class CsiMode
{
    perfect,
    imperfect,
};

struct McSettings
{
    std::int64_t n_realizations = 2000;
    std::uint64_t seed = 42;
    int workers = 1;
    double ci_level = 0.95;

    void validate() const;
};

// Per-realization MRC SINR of user n under the linearized quantizer. The AWGN
// contribution is its expectation given the channel; the identity part of the
// quantization-noise covariance is folded into alpha*||g_n1||^2.
double sinr_perfect(const CMatrix& G0, const CMatrix& G1, int n, double p_u, const AqnmParams& aqnm);

// All users at once; same values as sinr_perfect.
Eigen::VectorXd sinr_perfect_all(const CMatrix& G0, const CMatrix& G1, double p_u, const AqnmParams& aqnm);

// Imperfect CSI: combining uses the estimate, quantization noise follows the true channel.
double sinr_imperfect(const ChannelRealization& truth, const EstimatedChannel& estimate, int n, double p_u,
                      const AqnmParams& aqnm);

Eigen::VectorXd sinr_imperfect_all(const ChannelRealization& truth, const EstimatedChannel& estimate, double p_u,
                                   const AqnmParams& aqnm);

// Ergodic rate estimate, mean of log2(1 + SINR) over independent channel draws.
// Realization r always uses stream (seed, r), so the result does not depend on
// the worker count.
RateReport mc_rate(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm,
                   CsiMode csi_mode, const McSettings& settings);

// Two-sided normal confidence half-width for a given standard error.
double confidence_halfwidth(double stderr_value, double level);

} // namespace mixadc

#endif
