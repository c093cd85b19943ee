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

#ifndef MIXADC_SWEEP_HPP
#define MIXADC_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixadc/config_file.hpp"
#include "mixadc/power.hpp"
#include "mixadc/scenario.hpp"

namespace mixadc
{

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class SweepKind
{
    rate_vs_pu,
    rate_vs_b,
    rate_vs_M,
    rate_vs_K,
    power_scaling,
    ee_vs_b,
    ee_vs_M,
    tradeoff_ee_rate,
    tradeoff_power_rate,
};

std::string_view sweep_kind_name(SweepKind kind);
SweepKind parse_sweep_kind(std::string_view name);
const std::vector<SweepKind>& all_sweep_kinds();

// One curve of a sweep. Antennas are fixed (M0, M1) or a fraction kappa of the
// axis/base M. K_db overrides the base Rician factor; -inf is Rayleigh.
struct SweepCase
{
    std::optional<int> M0;
    std::optional<int> M1;
    std::optional<double> kappa;
    std::optional<double> K_db;

    std::string label() const;
};

// "M0=100 M1=100; kappa=0.5 K_db=10" -> cases.
std::vector<SweepCase> parse_cases(const std::string& text);
std::string format_cases(const std::vector<SweepCase>& cases);

// Comma list or start:step:stop ranges ("1:1:12, 16").
std::vector<double> parse_grid(const std::string& text);

enum class UsersMode
{
    fixed,     // one user draw for the whole sweep
    per_point, // fresh users at every axis value
};

struct SweepSpec
{
    SweepKind kind = SweepKind::rate_vs_pu;
    std::vector<double> grid;
    std::vector<SweepCase> cases;
    bool run_analytic = true;
    bool run_mc = false;
    bool run_limits = false;
    bool csi_perfect = true;
    bool csi_imperfect = false;

    // Base system; axis values and cases override parts of it.
    int M = 200;
    int N = 10;
    int b = 1;
    double K_db = 10.0;
    double pu_db = 10.0;
    int tau = 0; // 0 means tau = N
    double d_over_lambda = 0.5;
    double W_hz = 1e9;

    double E_u_db = 10.0; // power-scaling sweeps: p_u = E_u / M
    double gamma = 1.0;

    bool normalized_beta = false;
    UsersMode users = UsersMode::fixed;
    GeometryParams geometry;

    PowerParams power;
    int b_high = 12;

    std::uint64_t seed = 42;
    std::int64_t n_realizations = 2000;
    int workers = 1; // not part of the output; results do not depend on it

    void validate() const;
};

// Figure-analogue defaults for each kind.
SweepSpec default_sweep_spec(SweepKind kind);

// Applies overrides from key/value pairs (config file or sweep metadata).
void apply_key_values(SweepSpec& spec, const KeyValues& kv);

// Canonical metadata; feeding it back through apply_key_values reproduces the spec.
std::vector<std::pair<std::string, std::string>> sweep_metadata(const SweepSpec& spec);

struct SweepRow
{
    std::string sweep_kind;
    std::string axis_name;
    double axis_value = 0.0;
    std::string case_label;
    std::string method;
    int M = 0;
    int M0 = 0;
    int M1 = 0;
    int N = 0;
    int b = 0;
    double K_db = 0.0;
    double pu_db = 0.0;
    int tau = 0;
    double kappa = 0.0;
    double sum_rate = 0.0;
    std::vector<double> per_user_rate;
    std::optional<double> stderr_sum;
    double p_total_w = 0.0;
    double ee_bits_per_joule = 0.0;
    std::uint64_t seed = 0;
    std::int64_t n_realizations = 0;
};

struct SweepResult
{
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<SweepRow> rows;
};

SweepResult run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "sweep_kind,axis_name,axis_value,case_label,method,M,M0,M1,N,b,K_db,pu_db,tau,kappa,sum_rate_bpshz,"
    "per_user_rate_json,stderr_bpshz,p_total_w,ee_bits_per_joule,seed,n_realizations";

void write_csv(std::ostream& out, const SweepResult& result);
void write_json(std::ostream& out, const SweepResult& result);

} // namespace mixadc

#endif
