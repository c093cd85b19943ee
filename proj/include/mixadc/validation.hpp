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

#ifndef MIXADC_VALIDATION_HPP
#define MIXADC_VALIDATION_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mixadc
{

struct ValidationCheck
{
    std::string module;
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string comparison; // how measured is compared against tolerance, e.g. "<=" or ">="
    bool passed = false;
    std::string detail;
};

struct ValidationReport
{
    std::vector<ValidationCheck> checks;

    bool all_passed() const;
    std::size_t failures() const;
};

struct ValidationOptions
{
    std::uint64_t seed = 42;
    // Reference distortion factors for b = 1..5 used by the Lloyd-Max cross-check.
    std::optional<std::array<double, 5>> reference_table;
};

ValidationReport run_validation(const ValidationOptions& options = {});

void write_validation_json(std::ostream& out, const ValidationReport& report);
void write_validation_text(std::ostream& out, const ValidationReport& report);

} // namespace mixadc

#endif
