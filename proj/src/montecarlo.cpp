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

#include "mixadc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mixadc
{

namespace
{

// sum_m |X(m,n)|^2 * sum_i |T(m,i)|^2 for every column n of X.
Eigen::VectorXd diag_weighted_power(const CMatrix& X, const CMatrix& T)
{
    if (X.rows() == 0)
        return Eigen::VectorXd::Zero(X.cols());
    const Eigen::VectorXd row_power = T.cwiseAbs2().rowwise().sum();
    return X.cwiseAbs2().transpose() * row_power;
}

Eigen::VectorXd mrc_sinr(const CMatrix& gram, const Eigen::VectorXd& extra_noise, double p_u)
{
    const auto N = gram.rows();
    Eigen::VectorXd sinr(N);
    for (Eigen::Index n = 0; n < N; ++n)
    {
        const double desired = gram(n, n).real();
        double interference = 0.0;
        for (Eigen::Index i = 0; i < N; ++i)
            if (i != n)
                interference += std::norm(gram(n, i));
        const double psi = p_u * interference + desired + extra_noise(n);
        sinr(n) = psi > 0.0 ? p_u * desired * desired / psi : 0.0;
    }
    return sinr;
}

CMatrix combined_gram(const CMatrix& X0, const CMatrix& X1, double alpha)
{
    CMatrix gram = X0.adjoint() * X0;
    if (X1.rows() > 0)
        gram.noalias() += alpha * (X1.adjoint() * X1);
    return gram;
}

void check_user(int n, Eigen::Index N)
{
    if (n < 0 || n >= N)
        throw std::out_of_range("user index out of range");
}

} // namespace

void McSettings::validate() const
{
    if (n_realizations < 1)
        throw std::invalid_argument("McSettings: n_realizations must be positive");
    if (workers < 1)
        throw std::invalid_argument("McSettings: workers must be positive");
    if (!(ci_level > 0.0 && ci_level < 1.0))
        throw std::invalid_argument("McSettings: ci_level must lie in (0, 1)");
}

Eigen::VectorXd sinr_perfect_all(const CMatrix& G0, const CMatrix& G1, double p_u, const AqnmParams& aqnm)
{
    if (G0.cols() != G1.cols())
        throw std::invalid_argument("sinr_perfect: G0 and G1 must have the same number of users");
    const CMatrix gram = combined_gram(G0, G1, aqnm.alpha);
    const Eigen::VectorXd quant = (aqnm.alpha * aqnm.rho * p_u) * diag_weighted_power(G1, G1);
    return mrc_sinr(gram, quant, p_u);
}

double sinr_perfect(const CMatrix& G0, const CMatrix& G1, int n, double p_u, const AqnmParams& aqnm)
{
    check_user(n, G0.cols());
    return sinr_perfect_all(G0, G1, p_u, aqnm)(n);
}

Eigen::VectorXd sinr_imperfect_all(const ChannelRealization& truth, const EstimatedChannel& estimate, double p_u,
                                   const AqnmParams& aqnm)
{
    const CMatrix& H0 = estimate.Ghat0;
    const CMatrix& H1 = estimate.Ghat1;
    if (H0.cols() != H1.cols() || truth.G1.rows() != H1.rows() || truth.G1.cols() != H1.cols())
        throw std::invalid_argument("sinr_imperfect: inconsistent channel dimensions");
    if (estimate.error_variance.size() != static_cast<std::size_t>(H0.cols()))
        throw std::invalid_argument("sinr_imperfect: error variance length does not match user count");

    double total_error = 0.0;
    for (double s : estimate.error_variance)
        total_error += s;

    const double a = aqnm.alpha;
    const CMatrix gram = combined_gram(H0, H1, a);
    Eigen::VectorXd extra = (aqnm.alpha * aqnm.rho * p_u) * diag_weighted_power(H1, truth.G1);
    for (Eigen::Index n = 0; n < H0.cols(); ++n)
    {
        const double est_power = H0.col(n).squaredNorm() + a * a * H1.col(n).squaredNorm();
        extra(n) += p_u * est_power * total_error;
    }
    return mrc_sinr(gram, extra, p_u);
}

double sinr_imperfect(const ChannelRealization& truth, const EstimatedChannel& estimate, int n, double p_u,
                      const AqnmParams& aqnm)
{
    check_user(n, estimate.Ghat0.cols());
    return sinr_imperfect_all(truth, estimate, p_u, aqnm)(n);
}

RateReport mc_rate(const UserScenario& scenario, const SystemConfig& config, const AqnmParams& aqnm,
                   CsiMode csi_mode, const McSettings& settings)
{
    settings.validate();
    config.validate();
    if (scenario.size() != static_cast<std::size_t>(config.N))
        throw std::invalid_argument("mc_rate: scenario size does not match config.N");

    const auto R = static_cast<std::size_t>(settings.n_realizations);
    const auto N = static_cast<std::size_t>(config.N);
    std::vector<double> log_rates(R * N);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r)
        {
            RngStream rng = make_stream(settings.seed, StreamDomain::channel, r);
            Eigen::VectorXd sinr;
            if (csi_mode == CsiMode::perfect)
            {
                const ChannelRealization ch = draw_channel(scenario, config, rng);
                sinr = sinr_perfect_all(ch.G0, ch.G1, config.p_u, aqnm);
            }
            else
            {
                const ChannelWithEstimate ch = draw_estimated_channel(scenario, config, rng);
                sinr = sinr_imperfect_all(ch.truth, ch.estimate, config.p_u, aqnm);
            }
            for (std::size_t n = 0; n < N; ++n)
                log_rates[r * N + n] = std::log2(1.0 + sinr(static_cast<Eigen::Index>(n)));
        }
    };

    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(settings.workers), R);
    if (workers <= 1)
    {
        run_range(0, R);
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run_range, R * w / workers, R * (w + 1) / workers);
        for (auto& t : pool)
            t.join();
    }

    // Reduction in realization order keeps results independent of the worker count.
    std::vector<double> mean(N, 0.0);
    double sum_mean = 0.0;
    for (std::size_t r = 0; r < R; ++r)
    {
        double s = 0.0;
        for (std::size_t n = 0; n < N; ++n)
        {
            mean[n] += log_rates[r * N + n];
            s += log_rates[r * N + n];
        }
        sum_mean += s;
    }
    const double inv_R = 1.0 / static_cast<double>(R);
    for (double& m : mean)
        m *= inv_R;
    sum_mean *= inv_R;

    std::vector<double> var(N, 0.0);
    double sum_var = 0.0;
    for (std::size_t r = 0; r < R; ++r)
    {
        double s = 0.0;
        for (std::size_t n = 0; n < N; ++n)
        {
            const double d = log_rates[r * N + n] - mean[n];
            var[n] += d * d;
            s += log_rates[r * N + n];
        }
        sum_var += (s - sum_mean) * (s - sum_mean);
    }

    std::vector<double> stderr_user(N, 0.0);
    double stderr_sum = 0.0;
    if (R > 1)
    {
        const double denom = static_cast<double>(R - 1) * static_cast<double>(R);
        for (std::size_t n = 0; n < N; ++n)
            stderr_user[n] = std::sqrt(var[n] / denom);
        stderr_sum = std::sqrt(sum_var / denom);
    }

    RateReport report = RateReport::from_per_user(
        std::move(mean), csi_mode == CsiMode::perfect ? RateMethod::mc_perfect : RateMethod::mc_imperfect);
    report.mc_stderr = std::move(stderr_user);
    report.sum_stderr = stderr_sum;
    return report;
}

double confidence_halfwidth(double stderr_value, double level)
{
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("confidence_halfwidth: level must lie in (0, 1)");
    // Solve erfc(z / sqrt 2) = 1 - level by bisection.
    const double target = 1.0 - level;
    double lo = 0.0, hi = 40.0;
    for (int it = 0; it < 200; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (std::erfc(mid / std::sqrt(2.0)) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi) * stderr_value;
}

} // namespace mixadc
