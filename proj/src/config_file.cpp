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

#include "mixadc/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mixadc
{

namespace
{

std::string trim(const std::string& s)
{
    const auto first = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    const auto last = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return first < last ? std::string(first, last) : std::string();
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

constexpr const char* kMetadataMarker = "# tool=mixadc";

} // namespace

void KeyValues::set(std::string key, std::string value)
{
    entries_.emplace_back(std::move(key), std::move(value));
}

bool KeyValues::contains(const std::string& key) const
{
    return find(key) != nullptr;
}

const std::string* KeyValues::find(const std::string& key) const
{
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        if (it->first == key)
            return &it->second;
    return nullptr;
}

double KeyValues::get_double(const std::string& key, double fallback) const
{
    const std::string* v = find(key);
    return v ? parse_double(*v, key) : fallback;
}

long long KeyValues::get_int(const std::string& key, long long fallback) const
{
    const std::string* v = find(key);
    return v ? parse_int(*v, key) : fallback;
}

bool KeyValues::get_bool(const std::string& key, bool fallback) const
{
    const std::string* v = find(key);
    if (!v)
        return fallback;
    const std::string s = lower(*v);
    if (s == "true" || s == "1" || s == "yes" || s == "on")
        return true;
    if (s == "false" || s == "0" || s == "no" || s == "off")
        return false;
    throw std::invalid_argument("config: '" + key + "' expects a boolean, got '" + *v + "'");
}

std::string KeyValues::get_string(const std::string& key, const std::string& fallback) const
{
    const std::string* v = find(key);
    return v ? *v : fallback;
}

KeyValues parse_key_values(const std::string& text)
{
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';' || t[0] == '[')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        kv.set(std::move(key), std::move(value));
    }
    return kv;
}

KeyValues load_key_values(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    if (text.rfind(kMetadataMarker, 0) != 0)
        return parse_key_values(text);

    // Sweep output: strip the "# " prefix from the metadata block, ignore the table.
    std::istringstream lines(text);
    std::string line;
    std::string meta;
    while (std::getline(lines, line))
    {
        if (line.rfind("# ", 0) != 0)
            break;
        meta += line.substr(2) + "\n";
    }
    return parse_key_values(meta);
}

double parse_double(const std::string& text, const std::string& what)
{
    const std::string t = trim(text);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
        throw std::invalid_argument("config: '" + what + "' expects a number, got '" + text + "'");
    return v;
}

long long parse_int(const std::string& text, const std::string& what)
{
    const std::string t = trim(text);
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
        throw std::invalid_argument("config: '" + what + "' expects an integer, got '" + text + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what)
{
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
    {
        if (trim(item).empty())
            continue;
        out.push_back(parse_double(item, what));
    }
    return out;
}

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace mixadc
