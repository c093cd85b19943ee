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

// Acceptance suite: one pass/fail line per criterion, plus the measurements
// behind it. Run with --criterion k to evaluate a single criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mixadc/analytic.hpp"
#include "mixadc/config_file.hpp"
#include "mixadc/montecarlo.hpp"
#include "mixadc/power.hpp"
#include "mixadc/quantization.hpp"
#include "mixadc/rng.hpp"
#include "mixadc/scenario.hpp"
#include "mixadc/sweep.hpp"

using namespace mixadc;

namespace
{

constexpr std::uint64_t kSeed = 42;

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

int worker_count()
{
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

bool verdict(int k, bool ok, const std::string& summary)
{
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", k, summary.c_str());
    std::fflush(stdout);
    return ok;
}

void note(const std::string& line)
{
    std::printf("    %s\n", line.c_str());
}

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

UserScenario reference_users(double K)
{
    const UserScenario s = sample_user_scenario(10, GeometryParams{}, KAssignment::uniform(K), kSeed);
    return with_unit_gains(s);
}

SystemConfig reference_config(int M0, int M1, double pu_db, int b = 1)
{
    SystemConfig c;
    c.M = M0 + M1;
    c.M0 = M0;
    c.N = 10;
    c.b = b;
    c.p_u = db_to_linear(pu_db);
    c.tau = 10;
    return c;
}

// Runs the rate-vs-pu sweep and compares each Monte Carlo row with its analytic row.
bool agreement(int k, bool imperfect, double tolerance)
{
    const auto t0 = std::chrono::steady_clock::now();
    SweepSpec spec = default_sweep_spec(SweepKind::rate_vs_pu);
    spec.grid = {-10, -5, 0, 5, 10};
    spec.M = 200;
    spec.N = 10;
    spec.b = 1;
    spec.K_db = 10.0;
    spec.normalized_beta = true;
    spec.seed = kSeed;
    spec.n_realizations = 2000;
    spec.run_analytic = true;
    spec.run_mc = true;
    spec.csi_perfect = !imperfect;
    spec.csi_imperfect = imperfect;
    spec.workers = worker_count();
    const SweepResult res = run_sweep(spec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string analytic = imperfect ? "analytic-imperfect" : "analytic-perfect";
    const std::string mc = imperfect ? "mc-imperfect" : "mc-perfect";
    double worst = 0.0;
    int failing = 0, points = 0;
    for (const auto& row : res.rows)
    {
        if (row.method != mc)
            continue;
        const auto a = std::find_if(res.rows.begin(), res.rows.end(), [&](const SweepRow& r) {
            return r.method == analytic && r.axis_value == row.axis_value && r.case_label == row.case_label;
        });
        const double gap = std::abs(row.sum_rate - a->sum_rate) / row.sum_rate;
        worst = std::max(worst, gap);
        ++points;
        if (gap > tolerance)
            ++failing;
        std::ostringstream line;
        line << "p_u=" << row.axis_value << " dB  " << row.case_label << "  mc=" << fmt("%.4f", row.sum_rate)
             << " (se " << fmt("%.4f", row.stderr_sum.value_or(0.0)) << ")  analytic=" << fmt("%.4f", a->sum_rate)
             << "  gap=" << fmt("%.2f", 100.0 * gap) << "%" << (gap > tolerance ? "  <-- over" : "");
        note(line.str());
    }
    std::ostringstream s;
    s << (imperfect ? "imperfect" : "perfect") << "-CSI analytic vs Monte Carlo, worst gap "
      << fmt("%.2f", 100.0 * worst) << "% (limit " << fmt("%.0f", 100.0 * tolerance) << "%), " << failing << "/"
      << points << " points over, " << fmt("%.1f", secs) << " s";
    return verdict(k, failing == 0 && points == 20, s.str());
}

// Single-array unquantized Rician MRC rate written out directly.
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
            const double x = 2.0 * pi * d * (std::sin(s.theta(n)) - std::sin(s.theta(i)));
            const double f = std::abs(std::sin(x / 2.0)) < 1e-12 ? M : std::sin(M * x / 2.0) / std::sin(x / 2.0);
            interference += s.beta(i) * (Kn * s.K(i) * f * f + M * (Kn + s.K(i) + 1.0)) / (s.K(i) + 1.0);
        }
        const double signal = (2.0 * Kn + 1.0) * M + (Kn + 1.0) * (Kn + 1.0) * M * M;
        out[n] = std::log2(1.0 + p_u * s.beta(n) * signal / (p_u * (Kn + 1.0) * interference + (Kn + 1.0) * (Kn + 1.0) * M));
    }
    return out;
}

double worst_rel(const std::vector<double>& a, const std::vector<double>& b)
{
    double w = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n)
        w = std::max(w, rel(a[n], b[n]));
    return w;
}

bool criterion3()
{
    const AqnmParams aq = AqnmParams::from_bits(1);
    bool all = true;
    auto sub = [&](const std::string& name, double measured, double limit) {
        const bool ok = measured <= limit;
        all = all && ok;
        note(std::string(ok ? "ok    " : "FAILED") + "  " + name + ": " + fmt("%.3e", measured) + " (limit " +
             fmt("%.0e", limit) + ")");
    };

    const UserScenario rayleigh = reference_users(0.0);
    const UserScenario rician = reference_users(10.0);
    for (int M0 : {0, 100, 200})
    {
        const SystemConfig c = reference_config(M0, 200 - M0, 10.0);
        const std::string tag = " [M0=" + std::to_string(M0) + "]";
        sub("perfect-CSI form at K=0 vs compact Rayleigh form" + tag,
            worst_rel(rate_perfect_csi(rayleigh, c, aq).per_user_rate,
                      rate_perfect_rayleigh(rayleigh, c, aq).per_user_rate),
            1e-10);
        sub("imperfect-CSI form at K=0 vs its Rayleigh form" + tag,
            worst_rel(rate_imperfect_csi(rayleigh, c, aq).per_user_rate,
                      rate_imperfect_rayleigh(rayleigh, c, aq).per_user_rate),
            1e-10);
        SystemConfig pilots = c;
        pilots.tau = static_cast<int>(1e8 / c.p_u);
        sub("imperfect-CSI form at p_p=1e8 vs perfect-CSI form" + tag,
            worst_rel(rate_imperfect_csi(rician, pilots, aq).per_user_rate,
                      rate_perfect_csi(rician, pilots, aq).per_user_rate),
            1e-4);
    }
    const SystemConfig full = reference_config(200, 0, 10.0);
    sub("kappa=1, alpha=1 vs unquantized Rician form",
        worst_rel(rate_perfect_csi(rician, full, AqnmParams::ideal()).per_user_rate,
                  unquantized_rician(rician, 200, full.p_u, full.d_over_lambda)),
        1e-10);
    return verdict(3, all, "special-case algebra");
}

bool criterion4()
{
    const auto t0 = std::chrono::steady_clock::now();
    const AqnmParams aq = AqnmParams::from_bits(1);
    double k_gap = 0.0, pu_gap = 0.0, imp_gap = 0.0;
    const double E_u = 10.0;
    const int M = 1000000;
    for (int M0 : {0, 100, 200})
    {
        const SystemConfig c = reference_config(M0, 200 - M0, 10.0);
        k_gap = std::max(k_gap, worst_rel(rate_perfect_csi(reference_users(1e6), c, aq).per_user_rate,
                                          rate_perfect_K_infinity(reference_users(1e6), c, aq).per_user_rate));
    }
    for (double kappa : {0.0, 0.5, 1.0})
    {
        const UserScenario s = reference_users(10.0);
        SystemConfig c = reference_config(0, M, 0.0);
        c.M0 = static_cast<int>(std::lround(kappa * M));
        c.p_u = E_u / M;
        const RateReport r = rate_perfect_csi(s, c, aq);
        for (std::size_t n = 0; n < s.size(); ++n)
        {
            pu_gap = std::max(pu_gap, rel(r.per_user_rate[n], rate_limit_power_scaled_perfect(E_u, s.beta(n), kappa, aq)));
            imp_gap = std::max(imp_gap, rel(rate_limit_power_scaled_imperfect(E_u, s.beta(n), s.K(n), c.tau, kappa, aq, 1.0, M),
                                            rate_limit_power_scaled_imperfect_constant(E_u, s.beta(n), s.K(n), kappa, aq)));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    note("K=1e6 vs strong-LoS limit: " + fmt("%.3e", k_gap) + " (limit 1e-3)");
    note("p_u=E_u/M, M=1e6 vs power-scaling limit: " + fmt("%.3e", pu_gap) + " (limit 5e-3)");
    note("imperfect power-scaling, gamma=1, M=1e6 vs its constant: " + fmt("%.3e", imp_gap) + " (limit 5e-3)");
    note("elapsed " + fmt("%.3f", secs) + " s");
    return verdict(4, k_gap <= 1e-3 && pu_gap <= 5e-3 && imp_gap <= 5e-3 && secs < 1.0, "asymptotic limits");
}

bool criterion5()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int b = 1; b <= 5; ++b)
    {
        const double d = lloyd_max_design(b).distortion;
        const double gap = std::abs(d - kDistortionTable[b - 1]);
        worst = std::max(worst, gap);
        note("b=" + std::to_string(b) + " Lloyd-Max " + fmt("%.6f", d) + " vs table " +
             fmt("%.6f", kDistortionTable[b - 1]));
    }
    RngStream rng = make_stream(kSeed, StreamDomain::validation, 5);
    const double emp = empirical_distortion(lloyd_max_design(1).quantizer, 1000000, rng);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    note("empirical 1-bit distortion over 1e6 samples: " + fmt("%.5f", emp));
    note("elapsed " + fmt("%.2f", secs) + " s");
    return verdict(5, worst <= 2e-3 && std::abs(emp - 0.3634) <= 0.005 && secs < 30.0,
                   "quantizer oracle, worst table gap " + fmt("%.2e", worst));
}

bool criterion6()
{
    SystemConfig c;
    c.M = 200;
    c.M0 = 0;
    c.b = 1;
    const PowerParams p;
    const double watts = total_power(c, 12, p).total;
    const double expected = 22.5e-3 + 200 * (5.4e-3 + 3e-3 + 2 * 0.3e-3) + 400 * 15e-15 * 1e9 * 2 + 200e-3;
    const bool exact = std::abs(watts - 2.0345) <= 1e-12 && std::abs(watts - expected) <= 1e-12;
    note("total power " + fmt("%.10f", watts * 1e3) + " mW (expected 2034.5 mW)");

    SweepSpec spec = default_sweep_spec(SweepKind::ee_vs_b);
    spec.grid = parse_grid("1:1:12");
    spec.cases = parse_cases("M0=100 M1=100");
    spec.K_db = 10.0;
    spec.N = 10;
    spec.pu_db = -10.0;
    spec.normalized_beta = true;
    spec.seed = kSeed;
    const SweepResult res = run_sweep(spec);
    int best_b = 0;
    double best = -1.0;
    std::ostringstream curve;
    for (const auto& r : res.rows)
    {
        curve << " b=" << r.b << ":" << fmt("%.4g", r.ee_bits_per_joule);
        if (r.ee_bits_per_joule > best)
            best = r.ee_bits_per_joule, best_b = r.b;
    }
    note("EE (bits/J) vs b, M0=M1=100:" + curve.str());
    note("maximizing b = " + std::to_string(best_b));
    return verdict(6, exact && best_b > 1 && best_b < 12, "power model and EE interior maximum");
}

bool criterion7()
{
    const AqnmParams aq = AqnmParams::from_bits(1);
    const UserScenario s = reference_users(db_to_linear(30.0));
    double worst = 0.0;
    for (int M0 : {200, 100, 0})
    {
        const SystemConfig c = reference_config(M0, 200 - M0, 10.0);
        const double rate = rate_perfect_csi(s, c, aq).sum_rate;
        const double limit = rate_perfect_K_infinity(s, c, aq).sum_rate;
        const double gap = rel(rate, limit);
        worst = std::max(worst, gap);
        note("M0=" + std::to_string(M0) + " M1=" + std::to_string(200 - M0) + "  K=30 dB " + fmt("%.4f", rate) +
             " vs limit " + fmt("%.4f", limit) + "  gap " + fmt("%.3f", 100 * gap) + "%");
    }
    return verdict(7, worst <= 0.02, "rate-vs-K saturation, worst gap " + fmt("%.3f", 100 * worst) + "%");
}

std::string sweep_csv(const SweepSpec& spec)
{
    std::ostringstream out;
    write_csv(out, run_sweep(spec));
    return out.str();
}

bool criterion8()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("mixadc_acceptance_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir);
    bool all = true;
    for (SweepKind kind : all_sweep_kinds())
    {
        SweepSpec spec = default_sweep_spec(kind);
        spec.n_realizations = 30;
        spec.seed = 1234567;
        spec.csi_imperfect = true;
        spec.users = UsersMode::per_point;
        if (spec.grid.size() > 4)
            spec.grid.resize(4);
        spec.workers = 1;
        const std::string serial = sweep_csv(spec);
        spec.workers = 4;
        const std::string parallel = sweep_csv(spec);

        const fs::path file = dir / (std::string(sweep_kind_name(kind)) + ".csv");
        {
            std::ofstream(file, std::ios::binary) << serial;
        }
        SweepSpec replay = default_sweep_spec(SweepKind::rate_vs_pu);
        apply_key_values(replay, load_key_values(file));
        replay.workers = 3;
        const std::string replayed = sweep_csv(replay);

        const bool ok = serial == parallel && serial == replayed;
        all = all && ok;
        note(std::string(sweep_kind_name(kind)) + ": 1 vs 4 workers " + (serial == parallel ? "identical" : "DIFFER") +
             ", replay from metadata " + (serial == replayed ? "identical" : "DIFFERS"));
    }
    fs::remove_all(dir);
    return verdict(8, all, "determinism across worker counts and metadata replay");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Evaluate a single criterion (1-8)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<bool()>> criteria = {
        [] { return agreement(1, false, 0.05); },
        [] { return agreement(2, true, 0.07); },
        criterion3,
        criterion4,
        criterion5,
        criterion6,
        criterion7,
        criterion8,
    };
    int failed = 0;
    for (int k = 1; k <= 8; ++k)
    {
        if (only != 0 && k != only)
            continue;
        try
        {
            if (!criteria[k - 1]())
                ++failed;
        }
        catch (const std::exception& e)
        {
            verdict(k, false, std::string("exception: ") + e.what());
            ++failed;
        }
    }
    return failed == 0 ? 0 : 1;
}
