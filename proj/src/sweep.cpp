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

#include "mixadc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "mixadc/analytic.hpp"
#include "mixadc/montecarlo.hpp"
#include "mixadc/quantization.hpp"
#include "mixadc/rng.hpp"

namespace mixadc
{

namespace
{

struct KindInfo
{
    SweepKind kind;
    std::string_view name;
    std::string_view axis;
};

constexpr KindInfo kKinds[] = {
    {SweepKind::rate_vs_pu, "rate-vs-pu", "pu_db"},
    {SweepKind::rate_vs_b, "rate-vs-b", "b"},
    {SweepKind::rate_vs_M, "rate-vs-M", "M"},
    {SweepKind::rate_vs_K, "rate-vs-K", "K_db"},
    {SweepKind::power_scaling, "power-scaling", "M"},
    {SweepKind::ee_vs_b, "ee-vs-b", "b"},
    {SweepKind::ee_vs_M, "ee-vs-M", "M"},
    {SweepKind::tradeoff_ee_rate, "tradeoff-ee-rate", "b"},
    {SweepKind::tradeoff_power_rate, "tradeoff-power-rate", "b"},
};

const KindInfo& info(SweepKind kind)
{
    for (const auto& k : kKinds)
        if (k.kind == kind)
            return k;
    throw std::logic_error("unknown sweep kind");
}

bool axis_is_M(SweepKind kind)
{
    return info(kind).axis == "M";
}

bool axis_is_b(SweepKind kind)
{
    return info(kind).axis == "b";
}

std::string trim_copy(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string format_db(double db)
{
    return format_double(db);
}

double K_from_db(double K_db)
{
    return std::isinf(K_db) && K_db < 0 ? 0.0 : db_to_linear(K_db);
}

std::string methods_text(const SweepSpec& s)
{
    std::string out;
    auto add = [&](const char* m) {
        if (!out.empty())
            out += ",";
        out += m;
    };
    if (s.run_analytic)
        add("analytic");
    if (s.run_mc)
        add("mc");
    if (s.run_limits)
        add("limits");
    return out;
}

std::string csi_text(const SweepSpec& s)
{
    if (s.csi_perfect && s.csi_imperfect)
        return "both";
    return s.csi_perfect ? "perfect" : "imperfect";
}

std::string grid_text(const std::vector<double>& grid)
{
    std::string out;
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        if (k)
            out += ",";
        out += format_double(grid[k]);
    }
    return out;
}

std::vector<double> integer_range(int lo, int hi)
{
    std::vector<double> v;
    for (int x = lo; x <= hi; ++x)
        v.push_back(x);
    return v;
}

SweepCase fixed_case(int M0, int M1, std::optional<double> K_db = std::nullopt)
{
    SweepCase c;
    c.M0 = M0;
    c.M1 = M1;
    c.K_db = K_db;
    return c;
}

SweepCase kappa_case(double kappa)
{
    SweepCase c;
    c.kappa = kappa;
    return c;
}

// Everything needed to evaluate one (axis value, case) point.
struct PointSetup
{
    SystemConfig config;
    double K_db;
    double pu_db;
};

PointSetup resolve_point(const SweepSpec& spec, double x, const SweepCase& c)
{
    PointSetup p;
    SystemConfig& cfg = p.config;
    cfg.M = spec.M;
    cfg.N = spec.N;
    cfg.b = spec.b;
    cfg.d_over_lambda = spec.d_over_lambda;
    cfg.W_hz = spec.W_hz;
    cfg.tau = spec.tau > 0 ? spec.tau : spec.N;
    p.K_db = c.K_db.value_or(spec.K_db);
    p.pu_db = spec.pu_db;

    switch (spec.kind)
    {
    case SweepKind::rate_vs_pu:
        p.pu_db = x;
        break;
    case SweepKind::rate_vs_K:
        p.K_db = x;
        break;
    case SweepKind::rate_vs_M:
    case SweepKind::ee_vs_M:
    case SweepKind::power_scaling:
        cfg.M = static_cast<int>(std::lround(x));
        break;
    case SweepKind::rate_vs_b:
    case SweepKind::ee_vs_b:
    case SweepKind::tradeoff_ee_rate:
    case SweepKind::tradeoff_power_rate:
        cfg.b = static_cast<int>(std::lround(x));
        break;
    }

    if (c.kappa)
    {
        cfg.M0 = static_cast<int>(std::lround(*c.kappa * cfg.M));
    }
    else
    {
        const int M0 = c.M0.value_or(cfg.M - c.M1.value_or(0));
        const int M1 = c.M1.value_or(cfg.M - M0);
        cfg.M = M0 + M1;
        cfg.M0 = M0;
    }

    double p_u = db_to_linear(p.pu_db);
    if (spec.kind == SweepKind::power_scaling)
    {
        p_u = db_to_linear(spec.E_u_db) / std::pow(static_cast<double>(cfg.M), spec.gamma);
        p.pu_db = linear_to_db(p_u);
    }
    cfg.p_u = p_u;
    cfg.validate();
    return p;
}

UserScenario base_users(const SweepSpec& spec, std::size_t axis_index)
{
    std::uint64_t seed = spec.seed;
    if (spec.users == UsersMode::per_point)
        seed = splitmix64(spec.seed + 0x5EEDULL + axis_index);
    UserScenario s = sample_user_scenario(spec.N, spec.geometry, KAssignment::uniform(0.0), seed);
    return spec.normalized_beta ? with_unit_gains(s) : s;
}

UserScenario with_uniform_K(const UserScenario& base, double K)
{
    return UserScenario(std::vector<double>(base.beta().begin(), base.beta().end()),
                        std::vector<double>(base.theta().begin(), base.theta().end()),
                        std::vector<double>(base.size(), K));
}

std::vector<SweepRow> evaluate_point(const SweepSpec& spec, std::size_t axis_index, double x, const SweepCase& c,
                                     const UserScenario& users)
{
    const PointSetup p = resolve_point(spec, x, c);
    const SystemConfig& cfg = p.config;
    const double K = K_from_db(p.K_db);
    const UserScenario scenario = with_uniform_K(users, K);
    const AqnmParams aqnm = AqnmParams::from_bits(cfg.b);
    const PowerBreakdown power = total_power(cfg, spec.b_high, spec.power);

    std::vector<SweepRow> rows;
    auto emit = [&](const RateReport& report, std::int64_t realizations) {
        SweepRow r;
        r.sweep_kind = std::string(sweep_kind_name(spec.kind));
        r.axis_name = std::string(info(spec.kind).axis);
        r.axis_value = x;
        r.case_label = c.label();
        r.method = std::string(method_tag(report.method));
        r.M = cfg.M;
        r.M0 = cfg.M0;
        r.M1 = cfg.M1();
        r.N = cfg.N;
        r.b = cfg.b;
        r.K_db = p.K_db;
        r.pu_db = p.pu_db;
        r.tau = cfg.tau;
        r.kappa = cfg.kappa();
        r.sum_rate = report.sum_rate;
        r.per_user_rate = report.per_user_rate;
        r.stderr_sum = report.sum_stderr;
        r.p_total_w = power.total;
        r.ee_bits_per_joule = energy_efficiency(report, cfg, power);
        r.seed = spec.seed;
        r.n_realizations = realizations;
        rows.push_back(std::move(r));
    };

    if (spec.run_analytic)
    {
        if (spec.csi_perfect)
            emit(rate_perfect_csi(scenario, cfg, aqnm), 0);
        if (spec.csi_imperfect)
            emit(rate_imperfect_csi(scenario, cfg, aqnm), 0);
    }
    if (spec.run_mc)
    {
        McSettings mc;
        mc.n_realizations = spec.n_realizations;
        mc.seed = spec.seed;
        mc.workers = 1;
        if (spec.csi_perfect)
            emit(mc_rate(scenario, cfg, aqnm, CsiMode::perfect, mc), spec.n_realizations);
        if (spec.csi_imperfect)
            emit(mc_rate(scenario, cfg, aqnm, CsiMode::imperfect, mc), spec.n_realizations);
    }
    if (spec.run_limits)
    {
        if (spec.kind == SweepKind::rate_vs_K && spec.csi_perfect)
        {
            emit(rate_perfect_K_infinity(scenario, cfg, aqnm), 0);
        }
        else if (spec.kind == SweepKind::power_scaling)
        {
            const double E_u = db_to_linear(spec.E_u_db);
            if (spec.csi_perfect && spec.gamma == 1.0)
            {
                std::vector<double> rates(scenario.size());
                for (std::size_t n = 0; n < rates.size(); ++n)
                    rates[n] = rate_limit_power_scaled_perfect(E_u, scenario.beta(n), cfg.kappa(), aqnm);
                emit(RateReport::from_per_user(std::move(rates), RateMethod::limit_power_scaled_perfect), 0);
            }
            if (spec.csi_imperfect)
            {
                std::vector<double> rates(scenario.size());
                for (std::size_t n = 0; n < rates.size(); ++n)
                    rates[n] = rate_limit_power_scaled_imperfect(E_u, scenario.beta(n), scenario.K(n), cfg.tau,
                                                                 cfg.kappa(), aqnm, spec.gamma, cfg.M);
                emit(RateReport::from_per_user(std::move(rates), RateMethod::limit_power_scaled_imperfect), 0);
            }
        }
    }
    (void)axis_index;
    return rows;
}

} // namespace

std::string_view sweep_kind_name(SweepKind kind)
{
    return info(kind).name;
}

SweepKind parse_sweep_kind(std::string_view name)
{
    for (const auto& k : kKinds)
        if (k.name == name)
            return k.kind;
    throw std::invalid_argument("unknown sweep kind '" + std::string(name) + "'");
}

const std::vector<SweepKind>& all_sweep_kinds()
{
    static const std::vector<SweepKind> kinds = [] {
        std::vector<SweepKind> v;
        for (const auto& k : kKinds)
            v.push_back(k.kind);
        return v;
    }();
    return kinds;
}

std::string SweepCase::label() const
{
    std::string out;
    if (kappa)
        out = "kappa=" + format_double(*kappa);
    else
    {
        if (M0)
            out += "M0=" + std::to_string(*M0);
        if (M1)
            out += std::string(out.empty() ? "" : " ") + "M1=" + std::to_string(*M1);
    }
    if (K_db)
        out += std::string(out.empty() ? "" : " ") + "K_db=" + format_db(*K_db);
    return out;
}

std::vector<SweepCase> parse_cases(const std::string& text)
{
    std::vector<SweepCase> cases;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';'))
    {
        item = trim_copy(item);
        if (item.empty())
            continue;
        SweepCase c;
        std::istringstream fields(item);
        std::string field;
        while (fields >> field)
        {
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("case '" + item + "': expected name=value fields");
            const std::string key = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            if (key == "M0")
                c.M0 = static_cast<int>(parse_int(value, "M0"));
            else if (key == "M1")
                c.M1 = static_cast<int>(parse_int(value, "M1"));
            else if (key == "kappa")
                c.kappa = parse_double(value, "kappa");
            else if (key == "K_db")
                c.K_db = parse_double(value, "K_db");
            else
                throw std::invalid_argument("case '" + item + "': unknown field '" + key + "'");
        }
        if (c.kappa && (c.M0 || c.M1))
            throw std::invalid_argument("case '" + item + "': give either kappa or M0/M1, not both");
        if (c.kappa && !(*c.kappa >= 0.0 && *c.kappa <= 1.0))
            throw std::invalid_argument("case '" + item + "': kappa must lie in [0, 1]");
        if ((c.M0 && *c.M0 < 0) || (c.M1 && *c.M1 < 0))
            throw std::invalid_argument("case '" + item + "': antenna counts must be non-negative");
        cases.push_back(c);
    }
    return cases;
}

std::string format_cases(const std::vector<SweepCase>& cases)
{
    std::string out;
    for (std::size_t k = 0; k < cases.size(); ++k)
    {
        if (k)
            out += "; ";
        out += cases[k].label();
    }
    return out;
}

std::vector<double> parse_grid(const std::string& text)
{
    std::vector<double> grid;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        item = trim_copy(item);
        if (item.empty())
            continue;
        const auto c1 = item.find(':');
        if (c1 == std::string::npos)
        {
            grid.push_back(parse_double(item, "grid"));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("grid range '" + item + "' must be start:step:stop");
        const double start = parse_double(item.substr(0, c1), "grid");
        const double step = parse_double(item.substr(c1 + 1, c2 - c1 - 1), "grid");
        const double stop = parse_double(item.substr(c2 + 1), "grid");
        if (!(step > 0.0))
            throw std::invalid_argument("grid range '" + item + "' needs a positive step");
        const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
        for (long long k = 0; k <= count; ++k)
            grid.push_back(start + static_cast<double>(k) * step);
    }
    return grid;
}

void SweepSpec::validate() const
{
    if (grid.empty())
        throw std::invalid_argument("sweep: axis grid is empty");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1]))
            throw std::invalid_argument("sweep: axis grid must be strictly increasing");
    if (!run_analytic && !run_mc && !run_limits)
        throw std::invalid_argument("sweep: at least one method is required");
    if (!csi_perfect && !csi_imperfect)
        throw std::invalid_argument("sweep: at least one CSI mode is required");
    if (cases.empty())
        throw std::invalid_argument("sweep: at least one case is required");
    if (run_limits && kind != SweepKind::rate_vs_K && kind != SweepKind::power_scaling)
        throw std::invalid_argument("sweep: method 'limits' is only defined for rate-vs-K and power-scaling");
    if (axis_is_M(kind))
    {
        for (double x : grid)
            if (x < 1.0 || x != std::floor(x))
                throw std::invalid_argument("sweep: antenna grid values must be positive integers");
        for (const auto& c : cases)
            if (!c.kappa)
                throw std::invalid_argument("sweep: antenna sweeps need kappa cases, got '" + c.label() + "'");
    }
    if (axis_is_b(kind))
        for (double x : grid)
            if (x < 1.0 || x > kMaxBits || x != std::floor(x))
                throw std::invalid_argument("sweep: bit grid values must be integers in 1..12");
    if (kind == SweepKind::rate_vs_K)
        for (const auto& c : cases)
            if (c.K_db)
                throw std::invalid_argument("sweep: rate-vs-K cases cannot override K");
    if (run_mc && n_realizations < 1)
        throw std::invalid_argument("sweep: realizations must be positive");
    if (workers < 1)
        throw std::invalid_argument("sweep: workers must be positive");
    if (b_high < 1 || b_high > 32)
        throw std::invalid_argument("sweep: b_high out of range");
    geometry.validate();
    power.validate();
}

SweepSpec default_sweep_spec(SweepKind kind)
{
    SweepSpec s;
    s.kind = kind;
    const std::vector<SweepCase> fig2 = {fixed_case(200, 0), fixed_case(100, 100), fixed_case(0, 200),
                                         fixed_case(128, 0)};
    const std::vector<SweepCase> kappas = {kappa_case(0.0), kappa_case(0.5), kappa_case(1.0)};
    const std::vector<double> antennas = {25, 50, 100, 200, 400, 800};
    switch (kind)
    {
    case SweepKind::rate_vs_pu:
        s.grid = {-10, -5, 0, 5, 10, 15, 20};
        s.cases = fig2;
        s.run_mc = true;
        break;
    case SweepKind::rate_vs_b:
        s.grid = integer_range(1, 10);
        s.cases = {fixed_case(100, 100, -std::numeric_limits<double>::infinity()),
                   fixed_case(50, 150, -std::numeric_limits<double>::infinity()), fixed_case(100, 100, 10.0),
                   fixed_case(50, 150, 10.0)};
        s.run_mc = true;
        break;
    case SweepKind::rate_vs_M:
        s.grid = antennas;
        s.cases = kappas;
        s.run_mc = true;
        break;
    case SweepKind::power_scaling:
        s.grid = antennas;
        s.cases = kappas;
        s.run_mc = true;
        s.run_limits = true;
        break;
    case SweepKind::rate_vs_K:
        s.grid = parse_grid("-10:5:30");
        s.cases = {fixed_case(200, 0), fixed_case(100, 100), fixed_case(0, 200)};
        s.run_mc = true;
        s.run_limits = true;
        break;
    case SweepKind::ee_vs_b:
        s.grid = integer_range(1, 12);
        s.pu_db = -10.0;
        s.cases = {fixed_case(200, 0), fixed_case(100, 100), fixed_case(50, 150), fixed_case(0, 200)};
        break;
    case SweepKind::ee_vs_M:
        s.grid = {10, 20, 30, 40, 50, 75, 100, 150, 200, 300, 400};
        s.pu_db = 0.0;
        s.cases = kappas;
        break;
    case SweepKind::tradeoff_ee_rate:
        s.grid = integer_range(1, 12);
        s.cases = {fixed_case(50, 150, 0.0), fixed_case(50, 150, 10.0), fixed_case(0, 200, 0.0),
                   fixed_case(0, 200, 10.0)};
        break;
    case SweepKind::tradeoff_power_rate:
        s.grid = integer_range(1, 12);
        s.cases = {fixed_case(0, 200), fixed_case(20, 180), fixed_case(50, 150)};
        break;
    }
    return s;
}

void apply_key_values(SweepSpec& s, const KeyValues& kv)
{
    static const std::vector<std::string> known = {
        "tool", "version", "axis", "kind", "grid", "cases", "methods", "csi", "M", "N", "b", "k_db", "pu_db",
        "tau", "d_over_lambda", "bandwidth_hz", "e_u_db", "gamma", "normalized_beta", "users", "cell_radius_m",
        "r_min_m", "pathloss_exponent", "shadowing_std_db", "p_lo_w", "p_lna_w", "p_h_w", "p_m_w", "p_agc_w",
        "p_bb_w", "fom_w", "f_s_hz", "b_high", "seed", "realizations", "workers"};
    for (const auto& [key, value] : kv.entries())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("config: unknown key '" + key + "'");

    if (const auto* v = kv.find("kind"))
    {
        const SweepKind kind = parse_sweep_kind(*v);
        if (kind != s.kind)
        {
            const SweepSpec keep = s;
            s = default_sweep_spec(kind);
            s.seed = keep.seed;
            s.n_realizations = keep.n_realizations;
            s.workers = keep.workers;
        }
    }
    if (const auto* v = kv.find("grid"))
        s.grid = parse_grid(*v);
    if (const auto* v = kv.find("cases"))
        s.cases = parse_cases(*v);
    if (const auto* v = kv.find("methods"))
    {
        s.run_analytic = s.run_mc = s.run_limits = false;
        std::istringstream in(*v);
        std::string m;
        while (std::getline(in, m, ','))
        {
            m = trim_copy(m);
            if (m == "analytic")
                s.run_analytic = true;
            else if (m == "mc")
                s.run_mc = true;
            else if (m == "limits")
                s.run_limits = true;
            else if (!m.empty())
                throw std::invalid_argument("unknown method '" + m + "'");
        }
    }
    if (const auto* v = kv.find("csi"))
    {
        if (*v == "perfect")
            s.csi_perfect = true, s.csi_imperfect = false;
        else if (*v == "imperfect")
            s.csi_perfect = false, s.csi_imperfect = true;
        else if (*v == "both")
            s.csi_perfect = true, s.csi_imperfect = true;
        else
            throw std::invalid_argument("config: csi must be perfect, imperfect or both");
    }
    if (const auto* v = kv.find("users"))
    {
        if (*v == "fixed")
            s.users = UsersMode::fixed;
        else if (*v == "per-point")
            s.users = UsersMode::per_point;
        else
            throw std::invalid_argument("config: users must be fixed or per-point");
    }
    s.M = static_cast<int>(kv.get_int("M", s.M));
    s.N = static_cast<int>(kv.get_int("N", s.N));
    s.b = static_cast<int>(kv.get_int("b", s.b));
    s.K_db = kv.get_double("k_db", s.K_db);
    s.pu_db = kv.get_double("pu_db", s.pu_db);
    s.tau = static_cast<int>(kv.get_int("tau", s.tau));
    s.d_over_lambda = kv.get_double("d_over_lambda", s.d_over_lambda);
    s.W_hz = kv.get_double("bandwidth_hz", s.W_hz);
    s.E_u_db = kv.get_double("e_u_db", s.E_u_db);
    s.gamma = kv.get_double("gamma", s.gamma);
    s.normalized_beta = kv.get_bool("normalized_beta", s.normalized_beta);
    s.geometry.cell_radius_m = kv.get_double("cell_radius_m", s.geometry.cell_radius_m);
    s.geometry.r_min_m = kv.get_double("r_min_m", s.geometry.r_min_m);
    s.geometry.pathloss_exponent = kv.get_double("pathloss_exponent", s.geometry.pathloss_exponent);
    s.geometry.shadowing_std_db = kv.get_double("shadowing_std_db", s.geometry.shadowing_std_db);
    s.power.P_LO = kv.get_double("p_lo_w", s.power.P_LO);
    s.power.P_LNA = kv.get_double("p_lna_w", s.power.P_LNA);
    s.power.P_H = kv.get_double("p_h_w", s.power.P_H);
    s.power.P_M = kv.get_double("p_m_w", s.power.P_M);
    s.power.P_AGC = kv.get_double("p_agc_w", s.power.P_AGC);
    s.power.P_BB = kv.get_double("p_bb_w", s.power.P_BB);
    s.power.FOM_W = kv.get_double("fom_w", s.power.FOM_W);
    s.power.f_s = kv.get_double("f_s_hz", s.power.f_s);
    s.b_high = static_cast<int>(kv.get_int("b_high", s.b_high));
    if (const auto* v = kv.find("seed"))
    {
        const std::string t = trim_copy(*v);
        char* end = nullptr;
        errno = 0;
        const unsigned long long seed = std::strtoull(t.c_str(), &end, 10);
        if (t.empty() || t[0] == '-' || end != t.c_str() + t.size() || errno == ERANGE)
            throw std::invalid_argument("config: seed must be an unsigned 64-bit integer");
        s.seed = seed;
    }
    s.n_realizations = kv.get_int("realizations", s.n_realizations);
    s.workers = static_cast<int>(kv.get_int("workers", s.workers));
}

std::vector<std::pair<std::string, std::string>> sweep_metadata(const SweepSpec& s)
{
    std::vector<std::pair<std::string, std::string>> m;
    auto put = [&](std::string k, std::string v) { m.emplace_back(std::move(k), std::move(v)); };
    put("tool", "mixadc");
    put("version", std::string(kToolVersion));
    put("kind", std::string(sweep_kind_name(s.kind)));
    put("axis", std::string(info(s.kind).axis));
    put("grid", grid_text(s.grid));
    put("cases", format_cases(s.cases));
    put("methods", methods_text(s));
    put("csi", csi_text(s));
    put("M", std::to_string(s.M));
    put("N", std::to_string(s.N));
    put("b", std::to_string(s.b));
    put("k_db", format_double(s.K_db));
    put("pu_db", format_double(s.pu_db));
    put("tau", std::to_string(s.tau));
    put("d_over_lambda", format_double(s.d_over_lambda));
    put("bandwidth_hz", format_double(s.W_hz));
    put("e_u_db", format_double(s.E_u_db));
    put("gamma", format_double(s.gamma));
    put("normalized_beta", s.normalized_beta ? "true" : "false");
    put("users", s.users == UsersMode::fixed ? "fixed" : "per-point");
    put("cell_radius_m", format_double(s.geometry.cell_radius_m));
    put("r_min_m", format_double(s.geometry.r_min_m));
    put("pathloss_exponent", format_double(s.geometry.pathloss_exponent));
    put("shadowing_std_db", format_double(s.geometry.shadowing_std_db));
    put("p_lo_w", format_double(s.power.P_LO));
    put("p_lna_w", format_double(s.power.P_LNA));
    put("p_h_w", format_double(s.power.P_H));
    put("p_m_w", format_double(s.power.P_M));
    put("p_agc_w", format_double(s.power.P_AGC));
    put("p_bb_w", format_double(s.power.P_BB));
    put("fom_w", format_double(s.power.FOM_W));
    put("f_s_hz", format_double(s.power.f_s));
    put("b_high", std::to_string(s.b_high));
    put("seed", std::to_string(s.seed));
    put("realizations", std::to_string(s.n_realizations));
    return m;
}

SweepResult run_sweep(const SweepSpec& spec)
{
    spec.validate();

    SweepResult result;
    result.metadata = sweep_metadata(spec);

    const std::size_t n_axis = spec.grid.size();
    const std::size_t n_cases = spec.cases.size();
    const std::size_t n_points = n_axis * n_cases;

    std::vector<UserScenario> users;
    users.reserve(n_axis);
    for (std::size_t a = 0; a < n_axis; ++a)
    {
        if (spec.users == UsersMode::fixed && a > 0)
            users.push_back(users.front());
        else
            users.push_back(base_users(spec, a));
    }

    // Points are independent; each writes its own slot and slots are joined in order.
    std::vector<std::vector<SweepRow>> slots(n_points);
    std::vector<std::exception_ptr> errors(n_points);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next.fetch_add(1); k < n_points; k = next.fetch_add(1))
        {
            const std::size_t a = k / n_cases;
            const std::size_t c = k % n_cases;
            try
            {
                slots[k] = evaluate_point(spec, a, spec.grid[a], spec.cases[c], users[a]);
            }
            catch (...)
            {
                errors[k] = std::current_exception();
            }
        }
    };
    const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(spec.workers), n_points);
    if (n_threads <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    for (auto& slot : slots)
        for (auto& row : slot)
            result.rows.push_back(std::move(row));
    return result;
}

namespace
{

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
    {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string per_user_json(const std::vector<double>& v)
{
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
    {
        if (k)
            out += ",";
        out += format_double(v[k]);
    }
    return out + "]";
}

} // namespace

void write_csv(std::ostream& out, const SweepResult& result)
{
    for (const auto& [k, v] : result.metadata)
        out << "# " << k << "=" << v << "\n";
    out << kCsvHeader << "\n";
    for (const auto& r : result.rows)
    {
        out << csv_field(r.sweep_kind) << ',' << csv_field(r.axis_name) << ',' << format_double(r.axis_value) << ','
            << csv_field(r.case_label) << ',' << csv_field(r.method) << ',' << r.M << ',' << r.M0 << ',' << r.M1
            << ',' << r.N << ',' << r.b << ',' << format_double(r.K_db) << ',' << format_double(r.pu_db) << ','
            << r.tau << ',' << format_double(r.kappa) << ',' << format_double(r.sum_rate) << ','
            << csv_field(per_user_json(r.per_user_rate)) << ','
            << (r.stderr_sum ? format_double(*r.stderr_sum) : std::string()) << ',' << format_double(r.p_total_w)
            << ',' << format_double(r.ee_bits_per_joule) << ',' << r.seed << ',' << r.n_realizations << "\n";
    }
}

void write_json(std::ostream& out, const SweepResult& result)
{
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : result.metadata)
        meta[k] = v;
    doc["metadata"] = meta;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    auto number = [](double x) -> nlohmann::ordered_json {
        if (std::isfinite(x))
            return x;
        return format_double(x);
    };
    for (const auto& r : result.rows)
    {
        nlohmann::ordered_json j;
        j["sweep_kind"] = r.sweep_kind;
        j["axis_name"] = r.axis_name;
        j["axis_value"] = r.axis_value;
        j["case_label"] = r.case_label;
        j["method"] = r.method;
        j["M"] = r.M;
        j["M0"] = r.M0;
        j["M1"] = r.M1;
        j["N"] = r.N;
        j["b"] = r.b;
        j["K_db"] = number(r.K_db);
        j["pu_db"] = number(r.pu_db);
        j["tau"] = r.tau;
        j["kappa"] = r.kappa;
        j["sum_rate_bpshz"] = r.sum_rate;
        j["per_user_rate"] = r.per_user_rate;
        j["stderr_bpshz"] = r.stderr_sum ? nlohmann::ordered_json(*r.stderr_sum) : nlohmann::ordered_json(nullptr);
        j["p_total_w"] = r.p_total_w;
        j["ee_bits_per_joule"] = r.ee_bits_per_joule;
        j["seed"] = r.seed;
        j["n_realizations"] = r.n_realizations;
        rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

} // namespace mixadc
