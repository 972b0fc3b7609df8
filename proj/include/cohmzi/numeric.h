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

#ifndef COHMZI_NUMERIC_H
#define COHMZI_NUMERIC_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohmzi {

/// Failure to read a numeric literal. offset is the 0-based position inside
/// the literal where reading stopped making sense.
class NumberFormatError : public std::invalid_argument {
public:
    NumberFormatError(const std::string &what, std::size_t offset)
        : std::invalid_argument(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Reads a number of the shared netlist / command-line numeric sublanguage:
///
///   number   := [sign] (real | pi_expr)
///   pi_expr  := [real ['*']] 'pi' ['/' real]
///   real     := decimal literal with optional exponent, e.g. 80e6, 3.125e-9
///
/// so `pi`, `-pi/4`, `2*pi`, `4pi` and `3pi/4` are accepted, while `pi*2`,
/// `2/pi`, `pi+1`, `inf` and `nan` are not. Results must be finite.
double parse_number(std::string_view text);

/// Shortest decimal text that reads back to exactly the same double.
std::string format_roundtrip(double value);

/// Fixed 17-significant-digit text (%.17g); also reads back exactly.
std::string format_17g(double value);

}  // namespace cohmzi

#endif
