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

#include "mixadc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mixadc/analytic.hpp"
#include "mixadc/channel.hpp"
#include "mixadc/montecarlo.hpp"
#include "mixadc/power.hpp"
#include "mixadc/quantization.hpp"
#include "mixadc/rng.hpp"
#include "mixadc/scenario.hpp"
#include "mixadc/sweep.hpp"

namespace mixadc
{

namespace
{

class Recorder
{
  public:
    explicit Recorder(ValidationReport& report) : report_(report) {}

    void at_most(std::string module, std::string name, double measured, double tolerance, std::string detail = {})
    {
        push(std::move(module), std::move(name), measured, tolerance, "<=", measured <= tolerance, std::move(detail));
    }

    void at_least(std::string module, std::string name, double measured, double bound, std::string detail = {})
    {
        push(std::move(module), std::move(name), measured, bound, ">=", measured >= bound, std::move(detail));
    }

    void check(std::string module, std::string name, bool ok, std::string detail = {})
    {
        push(std::move(module), std::move(name), ok ? 0.0 : 1.0, 0.0, "==", ok, std::move(detail));
    }

  private:
    void push(std::string module, std::string name, double measured, double tolerance, std::string cmp, bool ok,
              std::string detail)
    {
        ValidationCheck c;
        c.module = std::move(module);
        c.name = std::move(name);
        c.measured = measured;
        c.tolerance = tolerance;
        c.comparison = std::move(cmp);
        c.passed = ok && std::isfinite(measured);
        c.detail = std::move(detail);
        report_.checks.push_back(std::move(c));
    }

    ValidationReport& report_;
};

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
}

double max_rel(const RateReport& a, const RateReport& b)
{
    double m = 0.0;
    for (std::size_t n = 0; n < a.per_user_rate.size(); ++n)
        m = std::max(m, rel(a.per_user_rate[n], b.per_user_rate[n]));
    return m;
}

double sinr_of(double rate)
{
    return std::exp2(rate) - 1.0;
}

UserScenario ladder_users(double K)
{
    return fixed_user_scenario({1.0, 0.7, 0.4, 1.3}, {-0.9, -0.2, 0.35, 1.1}, std::vector<double>(4, K));
}

SystemConfig ladder_config(int M, int M0, double p_u, int tau = 4)
{
    SystemConfig c;
    c.M = M;
    c.M0 = M0;
    c.N = 4;
    c.b = 2;
    c.p_u = p_u;
    c.tau = tau;
    return c;
}

// Unquantized Rician MRC rate with one array of M antennas.
std::vector<double> unquantized_rician(const UserScenario& s, int M, double p_u, double d)
{
    std::vector<double> out(s.size());
    for (std::size_t n = 0; n < s.size(); ++n)
    {
        const double Kn = s.K(n);
        double interference = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
        {
            if (i == n)
                continue;
            const double f = phi(s.theta(n), s.theta(i), M, d);
            interference += s.beta(i) * (Kn * s.K(i) * f * f + M * (Kn + s.K(i) + 1.0)) / (s.K(i) + 1.0);
        }
        const double num = p_u * s.beta(n) * ((2.0 * Kn + 1.0) * M + (Kn + 1.0) * (Kn + 1.0) * M * M);
        const double den = p_u * (Kn + 1.0) * interference + (Kn + 1.0) * (Kn + 1.0) * M;
        out[n] = std::log2(1.0 + num / den);
    }
    return out;
}

void scenario_checks(Recorder& rec, std::uint64_t seed)
{
    const GeometryParams geom;
    int violations = 0;
    for (std::uint64_t k = 0; k < 20; ++k)
    {
        const UserGeometry g = sample_user_geometry(50, geom, seed + k);
        for (std::size_t n = 0; n < g.distance_m.size(); ++n)
        {
            const double beta = large_scale_gain(g.distance_m[n], g.shadowing_db[n], geom);
            if (!(beta > 0.0) || g.distance_m[n] < geom.r_min_m || !inside_hexagon(g.x_m[n], g.y_m[n], geom.cell_radius_m))
                ++violations;
        }
    }
    rec.at_most("scenario", "positive gains, distances at least r_min, users inside the cell", violations, 0);

    const UserGeometry g = sample_user_geometry(100000, geom, seed);
    double mean = 0.0;
    for (double s : g.shadowing_db)
        mean += s;
    mean /= static_cast<double>(g.shadowing_db.size());
    double var = 0.0;
    for (double s : g.shadowing_db)
        var += (s - mean) * (s - mean);
    const double sd = std::sqrt(var / static_cast<double>(g.shadowing_db.size() - 1));
    rec.at_most("scenario", "shadowing mean (dB) over 1e5 draws", std::abs(mean), 0.1);
    rec.at_most("scenario", "shadowing std deviation from 8 dB over 1e5 draws", std::abs(sd - geom.shadowing_std_db),
                0.2);

    int bad = 0;
    for (int M = 1; M <= 64; ++M)
        for (int M0 = 0; M0 <= M; ++M0)
        {
            SystemConfig c;
            c.M = M;
            c.M0 = M0;
            c.validate();
            if (c.kappa() < 0.0 || c.kappa() > 1.0 || c.M0 + c.M1() != c.M)
                ++bad;
        }
    rec.at_most("scenario", "kappa in [0,1] and M0 + M1 = M", bad, 0);
}

void channel_checks(Recorder& rec, std::uint64_t seed)
{
    const UserScenario s = fixed_user_scenario({1.0, 0.5}, {0.3, -0.5}, {3.0, 1.0});
    SystemConfig c;
    c.M = 8;
    c.M0 = 4;
    c.N = 2;
    c.p_u = 1.0;
    c.tau = 2;

    const int draws = 100000;
    double fourth0 = 0.0, fourth1 = 0.0, cross0 = 0.0, cross1 = 0.0;
    RngStream rng = make_stream(seed, StreamDomain::validation, 10);
    for (int r = 0; r < draws; ++r)
    {
        const ChannelRealization ch = draw_channel(s, c, rng);
        fourth0 += std::pow(ch.G0.col(0).squaredNorm(), 2);
        fourth1 += std::pow(ch.G1.col(0).squaredNorm(), 2);
        cross0 += std::norm(ch.G0.col(0).dot(ch.G0.col(1)));
        cross1 += std::norm(ch.G1.col(0).dot(ch.G1.col(1)));
    }
    const double inv = 1.0 / draws;
    auto fourth_closed = [&](double Mj) {
        const double K = s.K(0), b = s.beta(0);
        return b * b / ((K + 1) * (K + 1)) * (Mj * Mj * (K + 1) * (K + 1) + Mj * (2 * K + 1));
    };
    auto cross_closed = [&](int Mj) {
        const double Kn = s.K(0), Ki = s.K(1);
        const double f = phi(s.theta(0), s.theta(1), Mj, c.d_over_lambda);
        return s.beta(0) * s.beta(1) / ((Kn + 1) * (Ki + 1)) * (Kn * Ki * f * f + Mj * (Kn + Ki + 1));
    };
    rec.at_most("channel", "fourth moment of high-resolution column norm", rel(fourth0 * inv, fourth_closed(c.M0)), 0.03);
    rec.at_most("channel", "fourth moment of low-resolution column norm", rel(fourth1 * inv, fourth_closed(c.M1())), 0.03);
    rec.at_most("channel", "cross-user correlation, high-resolution group", rel(cross0 * inv, cross_closed(c.M0)), 0.03);
    rec.at_most("channel", "cross-user correlation, low-resolution group", rel(cross1 * inv, cross_closed(c.M1())), 0.03);

    // Two-sample comparison of the channel implied by the estimate and the direct draw.
    const int pairs = 50000;
    RngStream ra = make_stream(seed, StreamDomain::validation, 11);
    RngStream rb = make_stream(seed, StreamDomain::validation, 12);
    CMatrix mean_a = CMatrix::Zero(c.M, c.N), mean_b = CMatrix::Zero(c.M, c.N);
    Eigen::VectorXd p2a = Eigen::VectorXd::Zero(c.N), p2b = p2a, p4a = p2a, p4b = p2a;
    for (int r = 0; r < pairs; ++r)
    {
        const CMatrix A = draw_channel(s, c, ra).stacked();
        const CMatrix B = draw_estimated_channel(s, c, rb).truth.stacked();
        mean_a += A;
        mean_b += B;
        for (int n = 0; n < c.N; ++n)
        {
            const double na = A.col(n).squaredNorm(), nb = B.col(n).squaredNorm();
            p2a(n) += na;
            p2b(n) += nb;
            p4a(n) += na * na;
            p4b(n) += nb * nb;
        }
    }
    double first = 0.0, second = 0.0;
    for (int n = 0; n < c.N; ++n)
    {
        const double scale = std::sqrt(s.beta(n) * c.M);
        first = std::max(first, (mean_a.col(n) - mean_b.col(n)).norm() / pairs / scale);
        second = std::max({second, rel(p2b(n), p2a(n)), rel(p4b(n), p4a(n))});
    }
    rec.at_most("channel", "estimate-plus-error mean matches direct draw", first, 0.03);
    rec.at_most("channel", "estimate-plus-error second and fourth moments match direct draw", second, 0.03);

    double prefix = 0.0;
    for (double theta : {-1.2, -0.3, 0.0, 0.7, 1.5})
    {
        const CVector full = los_steering(theta, 40, 0.5);
        const CVector head = los_steering(theta, 17, 0.5);
        prefix = std::max(prefix, (full.head(17) - head).cwiseAbs().maxCoeff());
    }
    rec.at_most("channel", "steering vector prefix property", prefix, 0.0);
}

void quantization_checks(Recorder& rec, const ValidationOptions& opt)
{
    int decreasing = 0;
    for (int b = 1; b < kMaxBits; ++b)
        if (!(distortion_factor(b + 1) < distortion_factor(b)))
            ++decreasing;
    rec.at_most("quantization", "distortion factor strictly decreasing in b", decreasing, 0);

    const std::array<double, 5> table = opt.reference_table.value_or(kDistortionTable);
    for (int b = 1; b <= 5; ++b)
    {
        const LloydMaxResult lm = lloyd_max_design(b);
        std::ostringstream d;
        d << "designed " << lm.distortion << ", reference " << table[b - 1];
        rec.at_most("quantization", "Lloyd-Max distortion vs reference table, b=" + std::to_string(b),
                    std::abs(lm.distortion - table[b - 1]), 2e-3, d.str());
    }

    rec.at_most("quantization", "high-resolution approximation error at b=5",
                rel(distortion_factor_approx(5), kDistortionTable[4]), 0.08);

    const ScalarQuantizer q1 = lloyd_max_design(1).quantizer;
    RngStream rng = make_stream(opt.seed, StreamDomain::validation, 20);
    const double emp = empirical_distortion(q1, 1000000, rng);
    rec.at_most("quantization", "empirical 1-bit distortion over 1e6 samples", std::abs(emp - 0.3634), 0.005,
                "measured " + format_double(emp));

    const UserScenario s = fixed_user_scenario({1.0, 0.3, 2.0}, {0.1, -0.4, 0.9}, {2.0, 0.0, 5.0});
    SystemConfig c;
    c.M = 12;
    c.M0 = 5;
    c.N = 3;
    RngStream crng = make_stream(opt.seed, StreamDomain::validation, 21);
    const ChannelRealization ch = draw_channel(s, c, crng);
    double floor_gap = std::numeric_limits<double>::infinity();
    double linear = 0.0;
    for (int b = 1; b <= 5; ++b)
    {
        const AqnmParams aq = AqnmParams::from_bits(b);
        const Eigen::VectorXd d1 = quantization_noise_covariance_diag(ch.G1, 1.5, aq);
        const Eigen::VectorXd d2 = quantization_noise_covariance_diag(ch.G1, 3.0, aq);
        const double ar = aq.alpha * aq.rho;
        floor_gap = std::min(floor_gap, (d1.array() - ar).minCoeff());
        for (Eigen::Index m = 0; m < d1.size(); ++m)
            linear = std::max(linear, rel(d2(m) - ar, 2.0 * (d1(m) - ar)));
    }
    rec.at_least("quantization", "noise covariance entries at least alpha*rho", floor_gap, 0.0);
    rec.at_most("quantization", "noise covariance linear in p_u", linear, 1e-12);
}

void analytic_checks(Recorder& rec)
{
    const AqnmParams aq = AqnmParams::from_bits(2);

    {
        // At K = 0 the full expression keeps the B/A^2 term that the compact Rayleigh form drops.
        const UserScenario s = ladder_users(0.0);
        const SystemConfig c = ladder_config(64, 24, 5.0);
        const RateReport full = rate_perfect_csi(s, c, aq);
        const RateReport compact = rate_perfect_rayleigh(s, c, aq);
        const double A = c.M0 + aq.alpha * c.M1();
        const double B = c.M0 + aq.alpha * aq.alpha * c.M1();
        double gap = 0.0;
        for (std::size_t n = 0; n < s.size(); ++n)
            gap = std::max(gap, rel(sinr_of(full.per_user_rate[n]) / sinr_of(compact.per_user_rate[n]),
                                    1.0 + B / (A * A)));
        rec.at_most("analytic", "Rician form at K=0 equals Rayleigh form times (1 + B/A^2)", gap, 1e-10);

        const SystemConfig big = ladder_config(100000, 37500, 5.0);
        rec.at_most("analytic", "Rician form at K=0 approaches Rayleigh form, M=1e5",
                    max_rel(rate_perfect_csi(s, big, aq), rate_perfect_rayleigh(s, big, aq)), 1e-4);

        rec.at_most("analytic", "imperfect-CSI form at K=0 equals its Rayleigh form",
                    max_rel(rate_imperfect_csi(s, c, aq), rate_imperfect_rayleigh(s, c, aq)), 1e-10);
    }
    {
        const UserScenario s = fixed_user_scenario({1.0, 0.7, 0.4, 1.3}, {-0.9, -0.2, 0.35, 1.1}, {0.0, 2.0, 10.0, 0.5});
        SystemConfig c = ladder_config(48, 48, 3.0);
        const RateReport r = rate_perfect_csi(s, c, AqnmParams::ideal());
        const std::vector<double> ref = unquantized_rician(s, c.M, c.p_u, c.d_over_lambda);
        double gap = 0.0;
        for (std::size_t n = 0; n < ref.size(); ++n)
            gap = std::max(gap, rel(r.per_user_rate[n], ref[n]));
        rec.at_most("analytic", "unquantized single-array form", gap, 1e-10);

        SystemConfig mixed = ladder_config(48, 20, 10.0, 10000000);
        rec.at_most("analytic", "imperfect-CSI form tends to perfect-CSI form at p_p=1e8",
                    max_rel(rate_imperfect_csi(s, mixed, aq), rate_perfect_csi(s, mixed, aq)), 1e-4);
    }
    {
        const UserScenario s = ladder_users(1e6);
        const SystemConfig c = ladder_config(64, 24, 5.0);
        rec.at_most("analytic", "K=1e6 against strong-LoS limit",
                    max_rel(rate_perfect_csi(s, c, aq), rate_perfect_K_infinity(s, c, aq)), 1e-3);
    }
    {
        const double E_u = 10.0;
        const int M = 1000000;
        double gap = 0.0, gap_imp = 0.0;
        for (double kappa : {0.0, 0.5, 1.0})
        {
            const UserScenario s = ladder_users(db_to_linear(10.0));
            SystemConfig c = ladder_config(M, static_cast<int>(std::lround(kappa * M)), E_u / M);
            const RateReport r = rate_perfect_csi(s, c, aq);
            for (std::size_t n = 0; n < s.size(); ++n)
            {
                gap = std::max(gap, rel(r.per_user_rate[n],
                                        rate_limit_power_scaled_perfect(E_u, s.beta(n), c.kappa(), aq)));
                gap_imp = std::max(gap_imp,
                                   rel(rate_limit_power_scaled_imperfect(E_u, s.beta(n), s.K(n), c.tau, c.kappa(), aq, 1.0, M),
                                       rate_limit_power_scaled_imperfect_constant(E_u, s.beta(n), s.K(n), c.kappa(), aq)));
            }
        }
        rec.at_most("analytic", "p_u = E_u/M at M=1e6 against power-scaling limit", gap, 5e-3);
        rec.at_most("analytic", "imperfect power-scaling expression at M=1e6 against its constant", gap_imp, 5e-3);
    }
    {
        int violations = 0;
        for (int b = 1; b <= kMaxBits; ++b)
        {
            const AqnmParams q = AqnmParams::from_bits(b);
            double prev = -1.0;
            for (int k = 0; k <= 20; ++k)
            {
                const double v = rate_limit_power_scaled_perfect(10.0, 1.0, k / 20.0, q);
                if (!(v > prev))
                    ++violations;
                prev = v;
            }
        }
        double prev = -1.0;
        for (int k = 0; k <= 20; ++k)
        {
            const double a = k / 20.0;
            AqnmParams q;
            q.alpha = a;
            q.rho = 1.0 - a;
            const double v = rate_limit_power_scaled_perfect(10.0, 1.0, 0.3, q);
            if (!(v > prev))
                ++violations;
            prev = v;
        }
        rec.at_most("analytic", "power-scaling limit strictly increasing in kappa and alpha", violations, 0);
    }
    {
        int violations = 0;
        const UserScenario s = ladder_users(db_to_linear(5.0));
        std::vector<double> prev(s.size(), -1.0);
        for (int db = -20; db <= 30; ++db)
        {
            const RateReport r = rate_perfect_csi(s, ladder_config(64, 24, db_to_linear(db)), aq);
            for (std::size_t n = 0; n < s.size(); ++n)
            {
                if (r.per_user_rate[n] < prev[n])
                    ++violations;
                prev[n] = r.per_user_rate[n];
            }
        }
        rec.at_most("analytic", "perfect-CSI rate non-decreasing in p_u", violations, 0);
    }
}

void montecarlo_checks(Recorder& rec, std::uint64_t seed)
{
    const UserScenario s = fixed_user_scenario({1.0, 0.6, 1.4, 0.8}, {-0.7, -0.1, 0.4, 1.0}, std::vector<double>(4, 2.0));
    SystemConfig c;
    c.M = 32;
    c.M0 = 16;
    c.N = 4;
    c.b = 1;
    c.p_u = 5.0;
    c.tau = 4;
    const AqnmParams aq = AqnmParams::from_bits(1);

    int bad = 0;
    for (std::size_t r = 0; r < 200; ++r)
    {
        RngStream rng = make_stream(seed, StreamDomain::validation, 1000 + r);
        const ChannelWithEstimate ch = draw_estimated_channel(s, c, rng);
        const Eigen::VectorXd a = sinr_perfect_all(ch.truth.G0, ch.truth.G1, c.p_u, aq);
        const Eigen::VectorXd b = sinr_imperfect_all(ch.truth, ch.estimate, c.p_u, aq);
        for (Eigen::Index n = 0; n < a.size(); ++n)
            for (double v : {a(n), b(n)})
                if (!(v >= 0.0) || !std::isfinite(std::log2(1.0 + v)))
                    ++bad;
    }
    rec.at_most("montecarlo", "per-realization SINR non-negative with finite rate", bad, 0);

    {
        SystemConfig full = c;
        full.M0 = full.M;
        McSettings mc;
        mc.n_realizations = 300;
        mc.seed = seed;
        const RateReport r = mc_rate(s, full, AqnmParams::ideal(), CsiMode::perfect, mc);
        std::vector<double> ref(s.size(), 0.0);
        for (std::int64_t k = 0; k < mc.n_realizations; ++k)
        {
            RngStream rng = make_stream(seed, StreamDomain::channel, static_cast<std::uint64_t>(k));
            const CMatrix G = draw_channel(s, full, rng).G0;
            for (int n = 0; n < full.N; ++n)
            {
                const double gn = G.col(n).squaredNorm();
                double interference = 0.0;
                for (int i = 0; i < full.N; ++i)
                    if (i != n)
                        interference += std::norm(G.col(n).dot(G.col(i)));
                ref[n] += std::log2(1.0 + full.p_u * gn * gn / (full.p_u * interference + gn));
            }
        }
        double gap = 0.0;
        for (std::size_t n = 0; n < ref.size(); ++n)
            gap = std::max(gap, rel(r.per_user_rate[n], ref[n] / mc.n_realizations));
        rec.at_most("montecarlo", "unquantized full-resolution MC equals plain MRC MC", gap, 1e-12);
    }
    {
        McSettings mc;
        mc.n_realizations = 2000;
        mc.seed = seed;
        const RateReport p = mc_rate(s, c, aq, CsiMode::perfect, mc);
        const RateReport i = mc_rate(s, c, aq, CsiMode::imperfect, mc);
        const double se = std::hypot(*p.sum_stderr, *i.sum_stderr);
        rec.at_most("montecarlo", "imperfect-CSI rate below perfect-CSI rate (combined std errors)",
                    (i.sum_rate - p.sum_rate) / se, 3.0);
    }
    {
        McSettings a, b;
        a.n_realizations = 5000;
        b.n_realizations = 10000;
        a.seed = b.seed = seed;
        const RateReport ra = mc_rate(s, c, aq, CsiMode::perfect, a);
        const RateReport rb = mc_rate(s, c, aq, CsiMode::perfect, b);
        rec.at_most("montecarlo", "5000 vs 10000 realizations (combined std errors)",
                    std::abs(ra.sum_rate - rb.sum_rate) / std::hypot(*ra.sum_stderr, *rb.sum_stderr), 2.0);
    }
}

void power_checks(Recorder& rec)
{
    const PowerParams p;
    SystemConfig c;
    c.M = 200;
    c.M0 = 0;
    c.b = 1;
    rec.at_most("power", "total power at M=200, M0=0, b=1 equals 2034.5 mW",
                std::abs(total_power(c, 12, p).total - 2.0345), 1e-12);

    int violations = 0;
    for (int b = 1; b <= 11; ++b)
    {
        double prev = 0.0;
        for (int M = 10; M <= 400; M += 10)
        {
            SystemConfig x;
            x.M = M;
            x.M0 = M / 2;
            x.b = b;
            const double t = total_power(x, 12, p).total;
            if (!(t > prev))
                ++violations;
            prev = t;
        }
        prev = 0.0;
        for (int M0 = 0; M0 <= 200; ++M0)
        {
            SystemConfig x;
            x.M = 200;
            x.M0 = M0;
            x.b = b;
            const double t = total_power(x, 12, p).total;
            if (!(t > prev))
                ++violations;
            prev = t;
        }
    }
    for (int M0 : {0, 50, 199})
    {
        double prev = 0.0;
        for (int b = 2; b <= 12; ++b)
        {
            SystemConfig x;
            x.M = 200;
            x.M0 = M0;
            x.b = b;
            const double t = total_power(x, 12, p).total;
            if (!(t > prev))
                ++violations;
            prev = t;
        }
    }
    rec.at_most("power", "total power strictly increasing in M, M0 and b", violations, 0);

    SweepSpec spec = default_sweep_spec(SweepKind::ee_vs_b);
    spec.cases = parse_cases("M0=100 M1=100");
    spec.normalized_beta = true;
    const SweepResult res = run_sweep(spec);
    double best = -1.0;
    int best_b = 0;
    for (const auto& row : res.rows)
        if (row.ee_bits_per_joule > best)
            best = row.ee_bits_per_joule, best_b = row.b;
    const bool interior = best_b > 1 && best_b < 12;
    rec.check("power", "energy efficiency vs b has an interior maximum (M0=M1=100, p_u=-10 dB)", interior,
              "maximizing b = " + std::to_string(best_b));
}

void experiment_checks(Recorder& rec, std::uint64_t seed)
{
    SweepSpec spec = default_sweep_spec(SweepKind::rate_vs_M);
    spec.grid = {8, 16};
    spec.N = 3;
    spec.n_realizations = 20;
    spec.csi_imperfect = true;
    spec.seed = seed;
    auto csv = [](const SweepSpec& s) {
        std::ostringstream out;
        write_csv(out, run_sweep(s));
        return out.str();
    };
    spec.workers = 1;
    const std::string one = csv(spec);
    spec.workers = 3;
    const std::string three = csv(spec);
    rec.check("experiments", "sweep output independent of worker count", one == three);

    KeyValues kv;
    for (const auto& [k, v] : sweep_metadata(spec))
        kv.set(k, v);
    SweepSpec replay = default_sweep_spec(SweepKind::rate_vs_pu);
    apply_key_values(replay, kv);
    rec.check("experiments", "sweep rerun from recorded metadata reproduces output", csv(replay) == one);
}

} // namespace

bool ValidationReport::all_passed() const
{
    return failures() == 0;
}

std::size_t ValidationReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const ValidationCheck& c) { return !c.passed; }));
}

ValidationReport run_validation(const ValidationOptions& options)
{
    ValidationReport report;
    Recorder rec(report);
    scenario_checks(rec, options.seed);
    channel_checks(rec, options.seed);
    quantization_checks(rec, options);
    analytic_checks(rec);
    montecarlo_checks(rec, options.seed);
    power_checks(rec);
    experiment_checks(rec, options.seed);
    return report;
}

void write_validation_json(std::ostream& out, const ValidationReport& report)
{
    nlohmann::ordered_json doc;
    doc["passed"] = report.all_passed();
    doc["failures"] = report.failures();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
    {
        nlohmann::ordered_json j;
        j["module"] = c.module;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["measured"] = c.measured;
        j["comparison"] = c.comparison;
        j["tolerance"] = c.tolerance;
        if (!c.detail.empty())
            j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    doc["checks"] = std::move(checks);
    out << doc.dump(2) << "\n";
}

void write_validation_text(std::ostream& out, const ValidationReport& report)
{
    for (const auto& c : report.checks)
    {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.module << ": " << c.name << "  measured=" << c.measured
            << " " << c.comparison << " " << c.tolerance;
        if (!c.detail.empty())
            out << "  (" << c.detail << ")";
        out << "\n";
    }
    out << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
}

} // namespace mixadc
