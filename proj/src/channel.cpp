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

#include "mixadc/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace mixadc
{

namespace
{

using cd = std::complex<double>;

// CN(0, 1): two independent real Gaussians scaled by 1/sqrt(2).
cd complex_normal(RngStream& rng, std::normal_distribution<double>& dist)
{
    constexpr double s = 0.70710678118654752440;
    const double re = dist(rng);
    const double im = dist(rng);
    return {s * re, s * im};
}

void split_rows(const CMatrix& G, int M0, CMatrix& top, CMatrix& bottom)
{
    top = G.topRows(M0);
    bottom = G.bottomRows(G.rows() - M0);
}

} // namespace

CMatrix ChannelRealization::stacked() const
{
    CMatrix G(G0.rows() + G1.rows(), G0.cols());
    G << G0, G1;
    return G;
}

CVector los_steering(double theta, int M_ant, double d_over_lambda)
{
    if (M_ant < 0)
        throw std::invalid_argument("los_steering: antenna count must be non-negative");
    const double kd = 2.0 * pi * d_over_lambda;
    const double step = kd * std::sin(theta);
    CVector h(M_ant);
    for (int m = 0; m < M_ant; ++m)
        h(m) = std::polar(1.0, -static_cast<double>(m) * step);
    return h;
}

double estimation_quality(double pilot_power, double beta)
{
    return pilot_power * beta / (1.0 + pilot_power * beta);
}

double estimation_error_variance(double pilot_power, double beta, double K)
{
    return beta / ((1.0 + pilot_power * beta) * (K + 1.0));
}

ChannelRealization draw_channel(const UserScenario& scenario, const SystemConfig& config, RngStream& rng,
                                const ChannelDrawOptions& options)
{
    if (scenario.size() != static_cast<std::size_t>(config.N))
        throw std::invalid_argument("draw_channel: scenario size does not match config.N");

    const int M = config.M;
    const int N = config.N;
    std::normal_distribution<double> dist(0.0, 1.0);
    CMatrix G(M, N);
    for (int n = 0; n < N; ++n)
    {
        const double beta = scenario.beta(n);
        const double K = scenario.K(n);
        const CVector hbar = los_steering(scenario.theta(n), M, config.d_over_lambda);
        if (options.los_limit)
        {
            G.col(n) = std::sqrt(beta) * hbar;
            continue;
        }
        const double los = std::sqrt(beta * K / (K + 1.0));
        const double nlos = std::sqrt(beta / (K + 1.0));
        for (int m = 0; m < M; ++m)
            G(m, n) = los * hbar(m) + nlos * complex_normal(rng, dist);
    }

    ChannelRealization out;
    split_rows(G, config.M0, out.G0, out.G1);
    return out;
}

ChannelWithEstimate draw_estimated_channel(const UserScenario& scenario, const SystemConfig& config, RngStream& rng,
                                           const ChannelDrawOptions& options)
{
    if (scenario.size() != static_cast<std::size_t>(config.N))
        throw std::invalid_argument("draw_estimated_channel: scenario size does not match config.N");
    const double p_p = config.pilot_power();
    if (!options.perfect_pilots && !(p_p > 0.0))
        throw std::invalid_argument("draw_estimated_channel: pilot power must be positive");

    const int M = config.M;
    const int N = config.N;
    std::normal_distribution<double> dist(0.0, 1.0);
    CMatrix Ghat(M, N);
    CMatrix Xi(M, N);
    std::vector<double> sigma2(static_cast<std::size_t>(N));

    for (int n = 0; n < N; ++n)
    {
        const double beta = scenario.beta(n);
        const double K = scenario.K(n);
        const double eta = options.perfect_pilots ? 1.0 : estimation_quality(p_p, beta);
        const double err_var = options.perfect_pilots ? 0.0 : estimation_error_variance(p_p, beta, K);
        sigma2[static_cast<std::size_t>(n)] = err_var;

        const CVector hbar = los_steering(scenario.theta(n), M, config.d_over_lambda);
        const double los = std::sqrt(beta * K / (K + 1.0));
        const double est_scatter = std::sqrt(beta * eta / (K + 1.0));
        const double err_std = std::sqrt(err_var);
        for (int m = 0; m < M; ++m)
        {
            Ghat(m, n) = los * hbar(m) + est_scatter * complex_normal(rng, dist);
            Xi(m, n) = err_std * complex_normal(rng, dist);
        }
    }

    const CMatrix G = Ghat - Xi;
    ChannelWithEstimate out;
    split_rows(G, config.M0, out.truth.G0, out.truth.G1);
    split_rows(Ghat, config.M0, out.estimate.Ghat0, out.estimate.Ghat1);
    split_rows(Xi, config.M0, out.estimate.Xi0, out.estimate.Xi1);
    out.estimate.error_variance = std::move(sigma2);
    return out;
}

} // namespace mixadc
