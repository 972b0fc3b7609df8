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

#include "cohmzi/netlist.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "cohmzi/numeric.h"

namespace cohmzi::netlist {

const char *to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownElement: return "unknown-element";
        case ErrorKind::UnknownParameter: return "unknown-parameter";
        case ErrorKind::MissingParameter: return "missing-parameter";
        case ErrorKind::DuplicateParameter: return "duplicate-parameter";
        case ErrorKind::MalformedParameter: return "malformed-parameter";
        case ErrorKind::MalformedNumber: return "malformed-number";
        case ErrorKind::InvalidValue: return "invalid-value";
        case ErrorKind::MissingSource: return "missing-source";
        case ErrorKind::DuplicateSource: return "duplicate-source";
        case ErrorKind::EmptyCircuit: return "empty-circuit";
        case ErrorKind::InvalidCharacter: return "invalid-character";
    }
    return "unknown";
}

ParseError::ParseError(ErrorKind kind, const std::string &detail, int line, int column)
    : std::runtime_error(detail + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      kind_(kind),
      detail_(detail),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

struct Param {
    std::string_view value;
    int key_column;
    int value_column;
};

class LineParser {
public:
    LineParser(int line_no, std::vector<Token> tokens) : line_(line_no), tokens_(std::move(tokens)) {}

    const Token &head() const { return tokens_.front(); }

    /// Splits key=value tokens and checks them against the allowed key set.
    void read_params(std::initializer_list<std::string_view> allowed) {
        for (std::size_t i = 1; i < tokens_.size(); ++i) {
            const Token &tok = tokens_[i];
            const std::size_t eq = tok.text.find('=');
            if (eq == std::string_view::npos || eq == 0 || eq + 1 == tok.text.size()) {
                fail(ErrorKind::MalformedParameter, "expected key=value, got '" + std::string(tok.text) + "'",
                     tok.column);
            }
            const std::string_view key = tok.text.substr(0, eq);
            bool known = false;
            for (std::string_view a : allowed) {
                known = known || a == key;
            }
            if (!known) {
                fail(ErrorKind::UnknownParameter,
                     "unknown parameter '" + std::string(key) + "' for '" + std::string(head().text) + "'",
                     tok.column);
            }
            if (params_.count(key) != 0) {
                fail(ErrorKind::DuplicateParameter, "duplicate parameter '" + std::string(key) + "'", tok.column);
            }
            params_[key] = Param{tok.text.substr(eq + 1), tok.column, tok.column + static_cast<int>(eq) + 1};
        }
    }

    const Param &require(std::string_view key) const {
        auto it = params_.find(key);
        if (it == params_.end()) {
            fail(ErrorKind::MissingParameter,
                 "missing parameter '" + std::string(key) + "' for '" + std::string(head().text) + "'",
                 head().column);
        }
        return it->second;
    }

    double number(std::string_view key) const {
        const Param &p = require(key);
        try {
            return parse_number(p.value);
        } catch (const NumberFormatError &e) {
            fail(ErrorKind::MalformedNumber, e.what(), p.value_column + static_cast<int>(e.offset()));
        }
    }

    double positive(std::string_view key) const {
        const double v = number(key);
        if (!(v > 0.0)) {
            fail(ErrorKind::InvalidValue, "parameter '" + std::string(key) + "' must be > 0", require(key).value_column);
        }
        return v;
    }

    Arm arm() const {
        const Param &p = require("arm");
        if (p.value == "upper") {
            return Arm::Upper;
        }
        if (p.value == "lower") {
            return Arm::Lower;
        }
        fail(ErrorKind::InvalidValue, "arm must be 'upper' or 'lower', got '" + std::string(p.value) + "'",
             p.value_column);
    }

    int sign() const {
        const double v = number("sign");
        if (v != 1.0 && v != -1.0) {
            fail(ErrorKind::InvalidValue, "sign must be +1 or -1", require("sign").value_column);
        }
        return v > 0 ? +1 : -1;
    }

    [[noreturn]] void fail(ErrorKind kind, const std::string &detail, int column) const {
        throw ParseError(kind, detail, line_, column);
    }

private:
    int line_;
    std::vector<Token> tokens_;
    std::map<std::string_view, Param, std::less<>> params_;
};

std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const unsigned char c = static_cast<unsigned char>(line[i]);
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            const unsigned char d = static_cast<unsigned char>(line[i]);
            if (d < 0x21 || d > 0x7e) {
                throw ParseError(ErrorKind::InvalidCharacter, "non-ASCII or control character", line_no,
                                 static_cast<int>(i) + 1);
            }
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

}  // namespace

CircuitSpec parse(std::string_view text) {
    CircuitSpec circuit;
    bool have_source = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<Token> tokens = tokenize(line, line_no);
        if (tokens.empty()) {
            continue;
        }

        LineParser lp(line_no, std::move(tokens));
        const std::string_view kind = lp.head().text;
        if (kind == "source") {
            if (have_source) {
                lp.fail(ErrorKind::DuplicateSource, "duplicate source line", lp.head().column);
            }
            lp.read_params({"intensity", "freq"});
            circuit.source.intensity = lp.positive("intensity");
            circuit.source.carrier_hz = lp.positive("freq");
            have_source = true;
            continue;
        }

        ElementSpec element;
        if (kind == "bs") {
            lp.read_params({});
            element = BeamSplitter{};
        } else if (kind == "phase") {
            lp.read_params({"arm", "value"});
            element = PhaseShift{lp.arm(), lp.number("value")};
        } else if (kind == "aom") {
            lp.read_params({"arm", "delta", "duration", "sign"});
            Aom aom;
            aom.arm = lp.arm();
            aom.drive.delta_hz = lp.number("delta");
            if (aom.drive.delta_hz < 0.0) {
                lp.fail(ErrorKind::InvalidValue, "parameter 'delta' must be >= 0", lp.require("delta").value_column);
            }
            aom.drive.duration_s = lp.positive("duration");
            aom.drive.sign = lp.sign();
            element = aom;
        } else {
            lp.fail(ErrorKind::UnknownElement, "unknown element '" + std::string(kind) + "'", lp.head().column);
        }
        if (!have_source) {
            lp.fail(ErrorKind::MissingSource, "element before source line", lp.head().column);
        }
        circuit.elements.push_back(element);
    }

    const int last_line = std::max(line_no, 1);
    if (!have_source) {
        throw ParseError(ErrorKind::MissingSource, "missing source line", last_line, 1);
    }
    if (circuit.elements.empty()) {
        throw ParseError(ErrorKind::EmptyCircuit, "circuit has no elements", last_line, 1);
    }
    return circuit;
}

namespace {

const char *arm_name(Arm arm) { return arm == Arm::Upper ? "upper" : "lower"; }

}  // namespace

std::string serialize(const CircuitSpec &circuit) {
    std::ostringstream out;
    out << "source intensity=" << format_roundtrip(circuit.source.intensity)
        << " freq=" << format_roundtrip(circuit.source.carrier_hz) << '\n';
    for (const ElementSpec &e : circuit.elements) {
        if (std::holds_alternative<BeamSplitter>(e)) {
            out << "bs\n";
        } else if (const auto *p = std::get_if<PhaseShift>(&e)) {
            out << "phase arm=" << arm_name(p->arm) << " value=" << format_roundtrip(p->value) << '\n';
        } else if (const auto *a = std::get_if<Aom>(&e)) {
            out << "aom arm=" << arm_name(a->arm) << " delta=" << format_roundtrip(a->drive.delta_hz)
                << " duration=" << format_roundtrip(a->drive.duration_s) << " sign=" << (a->drive.sign > 0 ? "+1" : "-1")
                << '\n';
        }
    }
    return out.str();
}

namespace {

/// (arm, phase) contributed by a single-arm element, or nullopt for a splitter.
std::optional<std::pair<Arm, double>> arm_phase(const ElementSpec &e) {
    if (const auto *p = std::get_if<PhaseShift>(&e)) {
        return std::pair{p->arm, p->value};
    }
    if (const auto *a = std::get_if<Aom>(&e)) {
        return std::pair{a->arm, aom_phase(a->drive)};
    }
    return std::nullopt;
}

TransferMatrix single_arm(Arm arm, double phase) {
    return arm == Arm::Upper ? make_phase_pair(phase, 0.0) : make_phase_pair(0.0, phase);
}

}  // namespace

LoweredCircuit lower(const CircuitSpec &circuit, bool fold_phases) {
    std::vector<TransferMatrix> stages;
    stages.reserve(circuit.elements.size());
    double upper = 0.0;
    double lower = 0.0;
    bool pending = false;
    auto flush = [&] {
        if (pending) {
            stages.push_back(make_phase_pair(upper, lower));
            upper = lower = 0.0;
            pending = false;
        }
    };

    for (const ElementSpec &e : circuit.elements) {
        const auto phase = arm_phase(e);
        if (!phase) {
            flush();
            stages.push_back(make_beam_splitter());
            continue;
        }
        if (!fold_phases) {
            stages.push_back(single_arm(phase->first, phase->second));
            continue;
        }
        (phase->first == Arm::Upper ? upper : lower) += phase->second;
        pending = true;
    }
    flush();

    LoweredCircuit out;
    out.matrix = compose(stages);
    out.input = FieldState{ComplexAmp{std::sqrt(circuit.source.intensity), 0.0}, ComplexAmp{0.0, 0.0},
                           circuit.source.carrier_hz};
    out.stage_count = stages.size();
    return out;
}

CircuitSpec with_zeta(CircuitSpec circuit, double zeta) {
    auto &elements = circuit.elements;
    std::size_t last_bs = elements.size();
    for (std::size_t i = elements.size(); i-- > 0;) {
        if (std::holds_alternative<BeamSplitter>(elements[i])) {
            last_bs = i;
            break;
        }
    }
    for (std::size_t i = last_bs; i-- > 0;) {
        if (std::holds_alternative<BeamSplitter>(elements[i])) {
            break;
        }
        if (auto *p = std::get_if<PhaseShift>(&elements[i]); p != nullptr && p->arm == Arm::Upper) {
            p->value = zeta;
            return circuit;
        }
    }
    elements.insert(elements.begin() + static_cast<std::ptrdiff_t>(last_bs), PhaseShift{Arm::Upper, zeta});
    return circuit;
}

}  // namespace cohmzi::netlist
