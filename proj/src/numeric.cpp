// Copyright 2026 The cohmzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohmzi/numeric.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace cohmzi {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// Consumes an unsigned decimal literal starting at pos; returns its end.
/// from_chars alone would also take "inf", "nan" and hex forms, so the
/// accepted span is delimited by hand first.
std::size_t scan_real(std::string_view s, std::size_t pos) {
    std::size_t i = pos;
    bool digits = false;
    while (i < s.size() && is_digit(s[i])) {
        ++i;
        digits = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) {
            ++i;
            digits = true;
        }
    }
    if (!digits) {
        return pos;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
            ++j;
        }
        if (j < s.size() && is_digit(s[j])) {
            while (j < s.size() && is_digit(s[j])) {
                ++j;
            }
            i = j;
        }
    }
    return i;
}

double read_real(std::string_view s, std::size_t begin, std::size_t end) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data() + begin, s.data() + end, value);
    if (ec != std::errc{} || ptr != s.data() + end) {
        throw NumberFormatError("number out of range: '" + std::string(s) + "'", begin);
    }
    return value;
}

}  // namespace

double parse_number(std::string_view text) {
    const std::string quoted = "'" + std::string(text) + "'";
    if (text.empty()) {
        throw NumberFormatError("empty number", 0);
    }
    std::size_t pos = 0;
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1.0 : 1.0;
        ++pos;
    }

    double coefficient = 1.0;
    bool has_coefficient = false;
    const std::size_t real_end = scan_real(text, pos);
    if (real_end != pos) {
        coefficient = read_real(text, pos, real_end);
        has_coefficient = true;
        pos = real_end;
        if (pos == text.size()) {
            const double value = sign * coefficient;
            if (!std::isfinite(value)) {
                throw NumberFormatError("number is not finite: " + quoted, 0);
            }
            return value;
        }
        if (text[pos] == '*') {
            ++pos;
        }
    }

    if (text.substr(pos, 2) != "pi") {
        throw NumberFormatError(has_coefficient ? "malformed pi-expression " + quoted
                                                : "malformed number " + quoted,
                                pos);
    }
    pos += 2;

    double denominator = 1.0;
    if (pos < text.size()) {
        if (text[pos] != '/') {
            throw NumberFormatError("malformed pi-expression " + quoted, pos);
        }
        ++pos;
        const std::size_t den_end = scan_real(text, pos);
        if (den_end == pos || den_end != text.size()) {
            throw NumberFormatError("malformed pi-expression " + quoted, den_end == pos ? pos : den_end);
        }
        denominator = read_real(text, pos, den_end);
        if (denominator == 0.0) {
            throw NumberFormatError("division by zero in " + quoted, pos);
        }
    }

    const double value = sign * coefficient * std::numbers::pi / denominator;
    if (!std::isfinite(value)) {
        throw NumberFormatError("number is not finite: " + quoted, 0);
    }
    return value;
}

std::string format_roundtrip(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_17g(double value) {
    std::array<char, 40> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

}  // namespace cohmzi
