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

#ifndef MIXADC_CONFIG_FILE_HPP
#define MIXADC_CONFIG_FILE_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace mixadc
{

// Ordered key=value pairs. Later entries override earlier ones on lookup.
class KeyValues
{
  public:
    void set(std::string key, std::string value);
    bool contains(const std::string& key) const;
    const std::string* find(const std::string& key) const;

    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

// INI/TOML-style text: "key = value" lines, '#' or ';' comments, optional
// [section] headers (ignored), optional double quotes around values.
KeyValues parse_key_values(const std::string& text);

// Sweep outputs are accepted too: their "# key=value" metadata header is read
// back, which reproduces the run that wrote them.
KeyValues load_key_values(const std::filesystem::path& path);

double parse_double(const std::string& text, const std::string& what);
long long parse_int(const std::string& text, const std::string& what);
std::vector<double> parse_double_list(const std::string& text, const std::string& what);

// Round-trip formatting (%.17g).
std::string format_double(double value);

} // namespace mixadc

#endif
