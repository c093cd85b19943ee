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

#ifndef MIXADC_QUANTIZATION_HPP
#define MIXADC_QUANTIZATION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "mixadc/rng.hpp"

namespace mixadc
{

// Lloyd-Max distortion factors of a unit-variance Gaussian source, b = 1..5.
inline constexpr std::array<double, 5> kDistortionTable = {0.3634, 0.1175, 0.03454, 0.009497, 0.002499};

inline constexpr int kMaxBits = 12;

// Distortion factor rho for b bits: tabulated for b <= 5, (pi*sqrt(3)/2) * 2^(-2b) above.
double distortion_factor(int b);

// High-resolution approximation (pi*sqrt(3)/2) * 2^(-2b), valid for any b >= 1.
double distortion_factor_approx(int b);

// Linearized ADC: Q(y) ~ alpha*y + n_q, alpha = 1 - rho.
struct AqnmParams
{
    int bits = 0; // 0 marks an ideal (unquantized) converter
    double rho = 0.0;
    double alpha = 1.0;

    static AqnmParams from_bits(int b);
    static AqnmParams from_rho(double rho);
    static AqnmParams ideal() { return {}; }
};

// Entry m: alpha*rho*(p_u * sum_n |G1(m,n)|^2 + 1), the diagonal of the quantization-noise covariance.
Eigen::VectorXd quantization_noise_covariance_diag(const Eigen::MatrixXcd& G1, double p_u, const AqnmParams& aqnm);

class ScalarQuantizer
{
  public:
    ScalarQuantizer(std::vector<double> levels, std::vector<double> thresholds);

    // Pass-through quantizer, Q(y) = y.
    static ScalarQuantizer identity();

    double operator()(double y) const;

    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& thresholds() const { return thresholds_; }
    bool is_identity() const { return levels_.empty(); }

    // Mean-square error against a unit-variance Gaussian source, by exact integration.
    double gaussian_distortion() const;

  private:
    std::vector<double> levels_;
    std::vector<double> thresholds_;
};

struct LloydMaxResult
{
    ScalarQuantizer quantizer;
    double distortion = 0.0;
    int iterations = 0;
    std::vector<double> distortion_history;
};

// Lloyd iteration for a unit-variance real Gaussian source. Levels start on a
// uniform grid over [-4, 4]. Throws std::runtime_error on non-convergence.
LloydMaxResult lloyd_max_design(int b, int max_iter = 100000, double tol = 1e-12);

// Same iteration from caller-provided initial levels (sorted, distinct).
LloydMaxResult lloyd_max_refine(std::vector<double> initial_levels, int max_iter = 100000, double tol = 1e-12);

// E{|y - Q(y)|^2} / E{|y|^2} over i.i.d. N(0,1) samples.
double empirical_distortion(const ScalarQuantizer& q, std::int64_t n_samples, RngStream& rng);

} // namespace mixadc

#endif
