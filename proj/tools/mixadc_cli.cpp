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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixadc/config_file.hpp"
#include "mixadc/power.hpp"
#include "mixadc/quantization.hpp"
#include "mixadc/sweep.hpp"
#include "mixadc/validation.hpp"

namespace
{

using namespace mixadc;

struct CommonFlags
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> realizations;
    std::optional<int> workers;
    std::string out;
    std::string format = "csv";
    bool normalized_beta = false;
};

// Writes to --out when given, stdout otherwise.
template <typename F>
void emit(const std::string& path, F&& write)
{
    if (path.empty() || path == "-")
    {
        write(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write(file);
    if (!file)
        throw std::runtime_error("failed writing '" + path + "'");
}

int run_sweep_command(const std::string& kind_name, const CommonFlags& f)
{
    KeyValues kv;
    if (!f.config.empty())
        kv = load_key_values(f.config);

    std::string name = kind_name;
    if (name.empty())
    {
        const std::string* k = kv.find("kind");
        if (!k)
            throw std::invalid_argument("sweep: give a kind or a config with a 'kind' entry");
        name = *k;
    }
    SweepSpec spec = default_sweep_spec(parse_sweep_kind(name));
    if (const std::string* k = kv.find("kind"); k && *k != name)
        throw std::invalid_argument("sweep: kind '" + name + "' conflicts with config kind '" + *k + "'");
    apply_key_values(spec, kv);

    if (f.seed)
        spec.seed = *f.seed;
    if (f.realizations)
        spec.n_realizations = *f.realizations;
    if (f.workers)
        spec.workers = *f.workers;
    if (f.normalized_beta)
        spec.normalized_beta = true;

    const SweepResult result = run_sweep(spec);
    emit(f.out, [&](std::ostream& os) {
        if (f.format == "json")
            write_json(os, result);
        else
            write_csv(os, result);
    });
    return 0;
}

int run_validate_command(const CommonFlags& f, const std::string& table)
{
    ValidationOptions opt;
    if (f.seed)
        opt.seed = *f.seed;
    if (!table.empty())
    {
        const std::vector<double> v = parse_double_list(table, "reference table");
        if (v.size() != 5)
            throw std::invalid_argument("validate: the reference table needs 5 values (b = 1..5)");
        std::array<double, 5> t{};
        std::copy(v.begin(), v.end(), t.begin());
        opt.reference_table = t;
    }
    const ValidationReport report = run_validation(opt);
    emit(f.out, [&](std::ostream& os) {
        if (f.format == "json")
            write_validation_json(os, report);
        else
            write_validation_text(os, report);
    });
    return report.all_passed() ? 0 : 1;
}

int run_quantizer_table(const CommonFlags& f)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream text;
    text << "b,rho,alpha,rho_approx,lloyd_max_distortion\n";
    for (int b = 1; b <= kMaxBits; ++b)
    {
        const AqnmParams aq = AqnmParams::from_bits(b);
        std::optional<double> lm;
        if (b <= 5)
            lm = lloyd_max_design(b).distortion;
        text << b << ',' << format_double(aq.rho) << ',' << format_double(aq.alpha) << ','
             << format_double(distortion_factor_approx(b)) << ',' << (lm ? format_double(*lm) : "") << "\n";
        nlohmann::ordered_json j;
        j["b"] = b;
        j["rho"] = aq.rho;
        j["alpha"] = aq.alpha;
        j["rho_approx"] = distortion_factor_approx(b);
        j["lloyd_max_distortion"] = lm ? nlohmann::ordered_json(*lm) : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(j));
    }
    emit(f.out, [&](std::ostream& os) {
        if (f.format == "json")
            os << rows.dump(2) << "\n";
        else
            os << text.str();
    });
    return 0;
}

int run_power_report(const CommonFlags& f, int M, int M0, int b, int b_high)
{
    KeyValues kv;
    if (!f.config.empty())
        kv = load_key_values(f.config);
    PowerParams p;
    p.P_LO = kv.get_double("p_lo_w", p.P_LO);
    p.P_LNA = kv.get_double("p_lna_w", p.P_LNA);
    p.P_H = kv.get_double("p_h_w", p.P_H);
    p.P_M = kv.get_double("p_m_w", p.P_M);
    p.P_AGC = kv.get_double("p_agc_w", p.P_AGC);
    p.P_BB = kv.get_double("p_bb_w", p.P_BB);
    p.FOM_W = kv.get_double("fom_w", p.FOM_W);
    p.f_s = kv.get_double("f_s_hz", p.f_s);
    p.validate();

    SystemConfig c;
    c.M = M;
    c.M0 = M0;
    c.b = b;
    c.validate();
    const PowerBreakdown br = total_power(c, b_high, p);

    const std::pair<const char*, double> parts[] = {
        {"lo_w", br.lo},           {"rf_chains_w", br.rf_chains}, {"agc_w", br.agc},   {"adc_high_w", br.adc_high},
        {"adc_low_w", br.adc_low}, {"baseband_w", br.baseband},   {"total_w", br.total}};
    emit(f.out, [&](std::ostream& os) {
        if (f.format == "json")
        {
            nlohmann::ordered_json j;
            j["M"] = M;
            j["M0"] = M0;
            j["b"] = b;
            j["b_high"] = b_high;
            for (const auto& [k, v] : parts)
                j[k] = v;
            os << j.dump(2) << "\n";
        }
        else
        {
            os << "component,watts\n";
            for (const auto& [k, v] : parts)
                os << k << ',' << format_double(v) << "\n";
        }
    });
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mixed-ADC massive MIMO uplink rate and energy-efficiency tool"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mixadc::kToolVersion));

    CommonFlags flags;
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", flags.out, "Output path (default stdout)");
        cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    };

    std::string kind;
    auto* sweep = app.add_subcommand("sweep", "Run a named parameter sweep");
    sweep->add_option("kind", kind, "Sweep kind (rate-vs-pu, rate-vs-b, rate-vs-M, rate-vs-K, power-scaling, "
                                    "ee-vs-b, ee-vs-M, tradeoff-ee-rate, tradeoff-power-rate)");
    sweep->add_option("--config", flags.config, "Key-value config, or a previous sweep CSV to replay")
        ->check(CLI::ExistingFile);
    sweep->add_option("--seed", flags.seed, "Master seed");
    sweep->add_option("--realizations", flags.realizations, "Monte Carlo realizations per point")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--workers", flags.workers, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--normalized-beta", flags.normalized_beta, "Set every large-scale gain to 1");
    add_output(sweep);

    std::string table;
    auto* validate = app.add_subcommand("validate", "Run the self-consistency checks");
    validate->add_option("--seed", flags.seed, "Master seed");
    validate->add_option("--reference-table", table, "Override the b=1..5 distortion reference (comma list)");
    add_output(validate);

    auto* qtable = app.add_subcommand("quantizer-table", "Print distortion factors and Lloyd-Max results");
    add_output(qtable);

    int M = 200, M0 = 0, b = 1, b_high = 12;
    auto* power = app.add_subcommand("power-report", "Print the receiver power breakdown");
    power->add_option("--config", flags.config, "Key-value config with power constants")->check(CLI::ExistingFile);
    power->add_option("--M", M, "Antennas");
    power->add_option("--M0", M0, "High-resolution antennas");
    power->add_option("--b", b, "Low-resolution ADC bits");
    power->add_option("--b-high", b_high, "High-resolution ADC bits");
    add_output(power);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*sweep)
            return run_sweep_command(kind, flags);
        if (*validate)
        {
            if (flags.format == "csv")
                flags.format = "text";
            return run_validate_command(flags, table);
        }
        if (*qtable)
            return run_quantizer_table(flags);
        if (*power)
            return run_power_report(flags, M, M0, b, b_high);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
