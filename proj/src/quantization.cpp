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

#include "mixadc/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mixadc/scenario.hpp"

namespace mixadc
{

namespace
{

double normal_pdf(double x)
{
    if (std::isinf(x))
        return 0.0;
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi);
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// x * pdf(x), zero at the infinite ends.
double x_pdf(double x)
{
    if (std::isinf(x))
        return 0.0;
    return x * normal_pdf(x);
}

struct CellMoments
{
    double p;  // P(a < y <= b)
    double m1; // E[y; cell]
    double m2; // E[y^2; cell]
};

CellMoments cell_moments(double a, double b)
{
    // Tail-safe probability: use the upper tail when both ends are positive.
    double p = 0.0;
    if (a >= 0.0)
        p = normal_cdf(-a) - normal_cdf(-b);
    else
        p = normal_cdf(b) - normal_cdf(a);
    const double m1 = normal_pdf(a) - normal_pdf(b);
    const double m2 = p + x_pdf(a) - x_pdf(b);
    return {p, m1, m2};
}

std::vector<double> midpoints(const std::vector<double>& levels)
{
    std::vector<double> t(levels.size() - 1);
    for (std::size_t k = 0; k + 1 < levels.size(); ++k)
        t[k] = 0.5 * (levels[k] + levels[k + 1]);
    return t;
}

} // namespace

double distortion_factor_approx(int b)
{
    if (b < 1)
        throw std::invalid_argument("distortion_factor_approx: b must be positive");
    return 0.5 * pi * std::sqrt(3.0) * std::ldexp(1.0, -2 * b);
}

double distortion_factor(int b)
{
    if (b < 1 || b > kMaxBits)
        throw std::invalid_argument("distortion_factor: unsupported bit count " + std::to_string(b));
    if (b <= static_cast<int>(kDistortionTable.size()))
        return kDistortionTable[static_cast<std::size_t>(b - 1)];
    return distortion_factor_approx(b);
}

AqnmParams AqnmParams::from_bits(int b)
{
    const double rho = distortion_factor(b);
    return {b, rho, 1.0 - rho};
}

AqnmParams AqnmParams::from_rho(double rho)
{
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("AqnmParams: rho must lie in [0, 1)");
    return {0, rho, 1.0 - rho};
}

Eigen::VectorXd quantization_noise_covariance_diag(const Eigen::MatrixXcd& G1, double p_u, const AqnmParams& aqnm)
{
    const Eigen::VectorXd row_power = G1.cwiseAbs2().rowwise().sum();
    return (aqnm.alpha * aqnm.rho) * (p_u * row_power.array() + 1.0).matrix();
}

ScalarQuantizer::ScalarQuantizer(std::vector<double> levels, std::vector<double> thresholds)
    : levels_(std::move(levels)), thresholds_(std::move(thresholds))
{
    if (levels_.empty())
        throw std::invalid_argument("ScalarQuantizer: at least one level is required");
    if (thresholds_.size() + 1 != levels_.size())
        throw std::invalid_argument("ScalarQuantizer: need exactly one threshold fewer than levels");
    for (std::size_t k = 1; k < thresholds_.size(); ++k)
        if (!(thresholds_[k] > thresholds_[k - 1]))
            throw std::invalid_argument("ScalarQuantizer: thresholds must be strictly increasing");
}

ScalarQuantizer ScalarQuantizer::identity()
{
    ScalarQuantizer q({0.0}, {});
    q.levels_.clear();
    return q;
}

double ScalarQuantizer::operator()(double y) const
{
    if (is_identity())
        return y;
    const auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), y);
    return levels_[static_cast<std::size_t>(it - thresholds_.begin())];
}

double ScalarQuantizer::gaussian_distortion() const
{
    if (is_identity())
        return 0.0;
    constexpr double inf = std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t k = 0; k < levels_.size(); ++k)
    {
        const double a = k == 0 ? -inf : thresholds_[k - 1];
        const double b = k + 1 == levels_.size() ? inf : thresholds_[k];
        const CellMoments c = cell_moments(a, b);
        const double l = levels_[k];
        d += c.m2 - 2.0 * l * c.m1 + l * l * c.p;
    }
    return d;
}

LloydMaxResult lloyd_max_refine(std::vector<double> levels, int max_iter, double tol)
{
    if (levels.empty())
        throw std::invalid_argument("lloyd_max_refine: at least one level is required");
    if (!std::is_sorted(levels.begin(), levels.end()) ||
        std::adjacent_find(levels.begin(), levels.end()) != levels.end())
        throw std::invalid_argument("lloyd_max_refine: initial levels must be sorted and distinct");

    constexpr double inf = std::numeric_limits<double>::infinity();
    LloydMaxResult result{ScalarQuantizer(levels, midpoints(levels)), 0.0, 0, {}};

    for (int it = 1; it <= max_iter; ++it)
    {
        const std::vector<double> thresholds = midpoints(levels);
        double max_step = 0.0;
        for (std::size_t k = 0; k < levels.size(); ++k)
        {
            const double a = k == 0 ? -inf : thresholds[k - 1];
            const double b = k + 1 == levels.size() ? inf : thresholds[k];
            const CellMoments c = cell_moments(a, b);
            if (!(c.p > 0.0))
                throw std::runtime_error("lloyd_max_refine: empty quantization cell");
            const double centroid = c.m1 / c.p;
            max_step = std::max(max_step, std::abs(centroid - levels[k]));
            levels[k] = centroid;
        }
        ScalarQuantizer q(levels, midpoints(levels));
        result.distortion_history.push_back(q.gaussian_distortion());
        result.quantizer = std::move(q);
        result.iterations = it;
        if (max_step <= tol)
        {
            result.distortion = result.distortion_history.back();
            return result;
        }
    }
    throw std::runtime_error("lloyd_max_refine: no convergence within " + std::to_string(max_iter) +
                             " iterations");
}

LloydMaxResult lloyd_max_design(int b, int max_iter, double tol)
{
    if (b < 1 || b > 5)
        throw std::invalid_argument("lloyd_max_design: supported range is 1..5 bits");
    const int n_levels = 1 << b;
    const double width = 8.0 / n_levels;
    std::vector<double> levels(static_cast<std::size_t>(n_levels));
    for (int k = 0; k < n_levels; ++k)
        levels[static_cast<std::size_t>(k)] = -4.0 + (k + 0.5) * width;
    return lloyd_max_refine(std::move(levels), max_iter, tol);
}

double empirical_distortion(const ScalarQuantizer& q, std::int64_t n_samples, RngStream& rng)
{
    if (n_samples < 10000)
        throw std::invalid_argument("empirical_distortion: at least 10^4 samples are required");
    std::normal_distribution<double> dist(0.0, 1.0);
    double err = 0.0;
    double power = 0.0;
    for (std::int64_t i = 0; i < n_samples; ++i)
    {
        const double y = dist(rng);
        const double e = y - q(y);
        err += e * e;
        power += y * y;
    }
    return err / power;
}

} // namespace mixadc
