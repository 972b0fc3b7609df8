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

#ifndef COHMZI_NETLIST_H
#define COHMZI_NETLIST_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohmzi/optics.h"
#include "cohmzi/pulse.h"

namespace cohmzi::netlist {

// Grammar reference (.mzi files)
//
//   source intensity=<num> freq=<num>
//   bs
//   phase arm=<upper|lower> value=<num>
//   aom arm=<upper|lower> delta=<num> duration=<num> sign=<+1|-1>
//
// One statement per line, `#` starts a comment, blank lines are ignored. The
// source line must precede every element and appear once. Keywords are
// case-sensitive ASCII; numbers use the sublanguage of cohmzi::parse_number.
// Mirrors are not elements: they add the same phase to both arms, which drops
// out of every intensity.

enum class Arm { Upper, Lower };

struct Source {
    double intensity = 1.0;
    double carrier_hz = 1.0;
    friend bool operator==(const Source &, const Source &) = default;
};

struct BeamSplitter {
    friend bool operator==(const BeamSplitter &, const BeamSplitter &) = default;
};

struct PhaseShift {
    Arm arm = Arm::Upper;
    double value = 0.0;
    friend bool operator==(const PhaseShift &, const PhaseShift &) = default;
};

struct Aom {
    Arm arm = Arm::Upper;
    AomDrive drive;
    friend bool operator==(const Aom &a, const Aom &b) {
        return a.arm == b.arm && a.drive.delta_hz == b.drive.delta_hz &&
               a.drive.duration_s == b.drive.duration_s && a.drive.sign == b.drive.sign;
    }
};

using ElementSpec = std::variant<BeamSplitter, PhaseShift, Aom>;

/// A parsed circuit. elements are in source-to-detector order.
struct CircuitSpec {
    Source source;
    std::vector<ElementSpec> elements;
    friend bool operator==(const CircuitSpec &, const CircuitSpec &) = default;
};

enum class ErrorKind {
    UnknownElement,
    UnknownParameter,
    MissingParameter,
    DuplicateParameter,
    MalformedParameter,
    MalformedNumber,
    InvalidValue,
    MissingSource,
    DuplicateSource,
    EmptyCircuit,
    InvalidCharacter,
};

const char *to_string(ErrorKind kind);

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(ErrorKind kind, const std::string &detail, int line, int column);

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string &detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
    int line_;
    int column_;
};

/// Throws ParseError.
CircuitSpec parse(std::string_view text);

/// Canonical text form; parse(serialize(c)) == c for every valid c.
std::string serialize(const CircuitSpec &circuit);

struct LoweredCircuit {
    TransferMatrix matrix;
    FieldState input;
    /// Number of matrices composed after folding.
    std::size_t stage_count = 0;
};

/// Composes the circuit in file order. With fold_phases, each run of adjacent
/// phase/aom elements becomes one diagonal whose arm phases are summed.
LoweredCircuit lower(const CircuitSpec &circuit, bool fold_phases = true);

/// Sets the scan phase. The last upper-arm `phase` element in the arm segment
/// that ends at the final beam splitter takes the value `zeta`; if that
/// segment has none, one is inserted right before the splitter (appended when
/// the circuit has no splitter).
CircuitSpec with_zeta(CircuitSpec circuit, double zeta);

}  // namespace cohmzi::netlist

#endif
