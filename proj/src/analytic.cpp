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

#include "mixadc/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mixadc/channel.hpp"

namespace mixadc
{

namespace
{

constexpr double kPhiSingularity = 1e-12;

void check_sizes(const UserScenario& scenario, const SystemConfig& config)
{
    config.validate();
    if (scenario.size() != static_cast<std::size_t>(config.N))
        throw std::invalid_argument("analytic rate: scenario size does not match config.N");
}

// Effective array gains of the two ADC groups.
struct ArrayGains
{
    double M0;
    double M1;
    double A; // M0 + alpha*M1
    double B; // M0 + alpha^2*M1
};

ArrayGains array_gains(const SystemConfig& config, const AqnmParams& aqnm)
{
    const double M0 = config.M0;
    const double M1 = config.M1();
    const double a = aqnm.alpha;
    return {M0, M1, M0 + a * M1, M0 + a * a * M1};
}

} // namespace

double phi(double theta_n, double theta_i, int M_j, double d_over_lambda)
{
    if (M_j < 0)
        throw std::invalid_argument("phi: M_j must be non-negative");
    const double kd = 2.0 * pi * d_over_lambda;
    const double u = 0.5 * kd * (std::sin(theta_n) - std::sin(theta_i));
    const double den = std::sin(u);
    if (std::abs(den) < kPhiSingularity)
    {
        // sin(M u)/sin(u) -> M * (-1)^(k (M-1)) at u = k*pi.
        const auto k = static_cast<long long>(std::llround(u / pi));
        const bool negative = ((k * (M_j - 1)) % 2) != 0;
        return negative ? -static_cast<double>(M_j) : static_cast<double>(M_j);
    }
    return std::sin(static_cast<double>(M_j) * u) / den;
}

RateReport rate_perfect_csi(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm)
{
    check_sizes(scenario, config);
    const ArrayGains g = array_gains(config, aqnm);
    const double a = aqnm.alpha;
    const double ar = aqnm.alpha * aqnm.rho;
    const double p_u = config.p_u;
    const std::size_t N = scenario.size();

    std::vector<double> rates(N);
    for (std::size_t n = 0; n < N; ++n)
    {
        const double Kn = scenario.K(n);
        const double bn = scenario.beta(n);
        const double Kn1 = Kn + 1.0;

        double interference = 0.0;
        double other_beta = 0.0;
        for (std::size_t i = 0; i < N; ++i)
        {
            if (i == n)
                continue;
            const double Ki = scenario.K(i);
            const double phi0 = phi(scenario.theta(n), scenario.theta(i), config.M0, config.d_over_lambda);
            const double phi1 = phi(scenario.theta(n), scenario.theta(i), config.M1(), config.d_over_lambda);
            const double delta0 = (Kn * Ki * phi0 * phi0 + g.M0 * (Kn + Ki + 1.0)) / (Ki + 1.0);
            const double delta1 = (Kn * Ki * phi1 * phi1 + g.M1 * (Kn + Ki + 1.0)) / (Ki + 1.0);
            interference += scenario.beta(i) * (delta0 + a * a * delta1);
            other_beta += scenario.beta(i);
        }
        const double delta2 = g.M1 * (bn * (Kn * Kn + 4.0 * Kn + 2.0) + Kn1 * Kn1 * other_beta);

        const double num = p_u * bn * ((2.0 * Kn + 1.0) * g.B + Kn1 * Kn1 * g.A * g.A);
        const double den = p_u * Kn1 * interference + Kn1 * Kn1 * g.A + ar * p_u * delta2;
        rates[n] = std::log2(1.0 + num / den);
    }
    return RateReport::from_per_user(std::move(rates), RateMethod::analytic_perfect);
}

RateReport rate_perfect_rayleigh(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm)
{
    check_sizes(scenario, config);
    const double M = config.M;
    const double kappa = config.kappa();
    const double a = aqnm.alpha;
    const double r = aqnm.rho;
    const double gain = a + r * kappa;
    const std::size_t N = scenario.size();

    std::vector<double> rates(N);
    for (std::size_t n = 0; n < N; ++n)
    {
        double other_beta = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            if (i != n)
                other_beta += scenario.beta(i);
        const double bn = scenario.beta(n);
        const double den = 1.0 / config.p_u + other_beta + 2.0 * a * r * (1.0 - kappa) * bn / gain;
        rates[n] = std::log2(1.0 + M * gain * bn / den);
    }
    return RateReport::from_per_user(std::move(rates), RateMethod::analytic_rayleigh_perfect);
}

RateReport rate_perfect_K_infinity(const UserScenario& scenario, const SystemConfig& config,
                                   const AqnmParams& aqnm)
{
    check_sizes(scenario, config);
    const ArrayGains g = array_gains(config, aqnm);
    const double a = aqnm.alpha;
    const double ar = aqnm.alpha * aqnm.rho;
    const double p_u = config.p_u;
    const std::size_t N = scenario.size();

    double total_beta = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        total_beta += scenario.beta(i);

    std::vector<double> rates(N);
    for (std::size_t n = 0; n < N; ++n)
    {
        double interference = 0.0;
        for (std::size_t i = 0; i < N; ++i)
        {
            if (i == n)
                continue;
            const double phi0 = phi(scenario.theta(n), scenario.theta(i), config.M0, config.d_over_lambda);
            const double phi1 = phi(scenario.theta(n), scenario.theta(i), config.M1(), config.d_over_lambda);
            interference += scenario.beta(i) * (phi0 * phi0 + a * a * phi1 * phi1);
        }
        const double num = p_u * scenario.beta(n) * g.A * g.A;
        const double den = p_u * interference + g.A + ar * p_u * g.M1 * total_beta;
        rates[n] = std::log2(1.0 + num / den);
    }
    return RateReport::from_per_user(std::move(rates), RateMethod::limit_k_infinity);
}

double rate_limit_power_scaled_perfect(double E_u, double beta_n, double kappa, const AqnmParams& aqnm)
{
    return std::log2(1.0 + E_u * beta_n * (aqnm.rho * kappa + aqnm.alpha));
}

RateReport rate_imperfect_csi(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm)
{
    check_sizes(scenario, config);
    const double p_p = config.pilot_power();
    if (!(p_p > 0.0))
        throw std::invalid_argument("rate_imperfect_csi: pilot power must be positive");
    const ArrayGains g = array_gains(config, aqnm);
    const double a = aqnm.alpha;
    const double ar = aqnm.alpha * aqnm.rho;
    const double p_u = config.p_u;
    const std::size_t N = scenario.size();

    std::vector<double> eta(N);
    double total_error = 0.0;
    for (std::size_t i = 0; i < N; ++i)
    {
        eta[i] = estimation_quality(p_p, scenario.beta(i));
        total_error += estimation_error_variance(p_p, scenario.beta(i), scenario.K(i));
    }

    std::vector<double> rates(N);
    for (std::size_t n = 0; n < N; ++n)
    {
        const double Kn = scenario.K(n);
        const double bn = scenario.beta(n);
        const double en = eta[n];
        const double Kn1 = Kn + 1.0;

        double sum_delta3 = 0.0;
        double weighted_others = 0.0;
        for (std::size_t i = 0; i < N; ++i)
        {
            if (i == n)
                continue;
            const double Ki = scenario.K(i);
            const double bi = scenario.beta(i);
            const double phi0 = phi(scenario.theta(n), scenario.theta(i), config.M0, config.d_over_lambda);
            const double phi1 = phi(scenario.theta(n), scenario.theta(i), config.M1(), config.d_over_lambda);
            sum_delta3 += bi / (Ki + 1.0) * Kn * Ki * (phi0 * phi0 + a * a * phi1 * phi1) +
                          bi * g.B / (Ki + 1.0) * (Ki * en + Kn * eta[i] + en * eta[i]);
            weighted_others += bi * (Ki + eta[i]) / (Ki + 1.0);
        }
        const double delta4 = bn * (Kn * Kn + 4.0 * Kn * en + 2.0 * en * en) + Kn1 * (Kn + en) * weighted_others;

        const double num = p_u * bn * (g.A * g.A * (Kn + en) * (Kn + en) + g.B * (en * en + 2.0 * Kn * en));
        const double den = g.A * (Kn + en) * Kn1 * (1.0 + p_u * total_error) + p_u * Kn1 * sum_delta3 +
                           ar * p_u * g.M1 * delta4;
        rates[n] = std::log2(1.0 + num / den);
    }
    return RateReport::from_per_user(std::move(rates), RateMethod::analytic_imperfect);
}

RateReport rate_imperfect_rayleigh(const UserScenario& scenario, const SystemConfig& config,
                                   const AqnmParams& aqnm)
{
    check_sizes(scenario, config);
    const double p_p = config.pilot_power();
    if (!(p_p > 0.0))
        throw std::invalid_argument("rate_imperfect_rayleigh: pilot power must be positive");
    const ArrayGains g = array_gains(config, aqnm);
    const double ar = aqnm.alpha * aqnm.rho;
    const double p_u = config.p_u;
    const std::size_t N = scenario.size();

    std::vector<double> eta(N);
    double total_error = 0.0;
    double total_beta_eta = 0.0;
    for (std::size_t i = 0; i < N; ++i)
    {
        const double bi = scenario.beta(i);
        eta[i] = estimation_quality(p_p, bi);
        total_error += bi / (1.0 + p_p * bi);
        total_beta_eta += bi * eta[i];
    }

    std::vector<double> rates(N);
    for (std::size_t n = 0; n < N; ++n)
    {
        const double bn = scenario.beta(n);
        double sum_delta3 = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            if (i != n)
                sum_delta3 += scenario.beta(i) * eta[i] * g.B;
        const double delta4 = bn * eta[n] + total_beta_eta;

        const double num = p_u * bn * eta[n] * (g.A * g.A + g.B);
        const double den = g.A * (1.0 + p_u * total_error) + p_u * sum_delta3 + ar * p_u * g.M1 * delta4;
        rates[n] = std::log2(1.0 + num / den);
    }
    return RateReport::from_per_user(std::move(rates), RateMethod::analytic_rayleigh_imperfect);
}

double rate_limit_power_scaled_imperfect(double E_u, double beta_n, double K_n, int tau, double kappa,
                                         const AqnmParams& aqnm, double gamma, double M)
{
    const double gain = aqnm.rho * kappa + aqnm.alpha;
    const double Mg = std::pow(M, gamma);
    const double value = E_u * beta_n * (Mg * K_n + tau * E_u * beta_n) / (std::pow(M, 2.0 * gamma - 1.0) * (K_n + 1.0));
    return std::log2(1.0 + gain * value);
}

double rate_limit_power_scaled_imperfect_constant(double E_u, double beta_n, double K_n, double kappa,
                                                  const AqnmParams& aqnm)
{
    const double gain = aqnm.rho * kappa + aqnm.alpha;
    return std::log2(1.0 + gain * E_u * beta_n * K_n / (K_n + 1.0));
}

} // namespace mixadc
