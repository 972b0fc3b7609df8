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

#include "cohmzi/cli.h"

#include <cmath>
#include <numbers>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohmzi/check.h"
#include "cohmzi/netlist.h"
#include "cohmzi/numeric.h"
#include "cohmzi/sweep.h"

namespace cohmzi::cli {

namespace {

/// A usage problem that maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An I/O problem that maps to exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double number_arg(const std::string &flag, const std::string &text) {
    try {
        return parse_number(text);
    } catch (const NumberFormatError &e) {
        throw UsageError(flag + ": " + e.what());
    }
}

ZetaGrid parse_range(const std::string &text, int steps) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos) {
        throw UsageError("--zeta: expected <start>:<end>, got '" + text + "'");
    }
    return {number_arg("--zeta", text.substr(0, colon)), number_arg("--zeta", text.substr(colon + 1)), steps};
}

/// period=..,duty=..,n=..,spp=..[,delta=..,duration=..]
PulseMode parse_pulse_block(const std::string &text, std::optional<double> dphi_on) {
    PulseMode mode;
    mode.duty = 0.5;
    mode.n_periods = 10;
    mode.samples_per_period = 20;
    std::optional<double> delta;
    std::optional<double> duration;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--pulse: expected key=value, got '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        const double v = number_arg("--pulse " + key, item.substr(eq + 1));
        auto as_int = [&](double x) {
            if (x != std::floor(x) || std::abs(x) > 1e9) {
                throw UsageError("--pulse " + key + ": expected an integer");
            }
            return static_cast<int>(x);
        };
        if (key == "period") {
            mode.period_s = v;
        } else if (key == "duty") {
            mode.duty = v;
        } else if (key == "n") {
            mode.n_periods = as_int(v);
        } else if (key == "spp") {
            mode.samples_per_period = as_int(v);
        } else if (key == "delta") {
            delta = v;
        } else if (key == "duration") {
            duration = v;
        } else {
            throw UsageError("--pulse: unknown key '" + key + "'");
        }
    }
    if (delta.has_value() != duration.has_value()) {
        throw UsageError("--pulse: delta and duration must be given together");
    }
    if (delta && dphi_on) {
        throw UsageError("--pulse: give either delta/duration or --dphi-on, not both");
    }
    if (delta) {
        try {
            mode.dphi_on = symmetric_aom_delta_phi(*delta, *duration);
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--pulse: ") + e.what());
        }
    } else {
        mode.dphi_on = dphi_on.value_or(std::numbers::pi);
    }
    return mode;
}

void emit(const std::string &payload, const std::string &out_path, std::ostream &out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + out_path + "' for writing");
    }
    file << payload;
    if (!file.flush()) {
        throw IoError("failed writing '" + out_path + "'");
    }
}

std::string read_file(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

nlohmann::json complex_json(ComplexAmp c) {
    return {{"re", c.real()}, {"im", c.imag()}, {"abs", std::abs(c)}, {"arg", std::arg(c)}};
}

struct SweepArgs {
    std::string zeta = "0:4pi";
    int steps = 401;
    std::string i0 = "1";
    std::optional<std::string> dphi;
    std::optional<std::string> pulse;
    std::optional<std::string> dphi_on;
    std::string format = "csv";
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> jitter_std;
    int threads = 0;
};

int cmd_sweep(const SweepArgs &a, std::ostream &out) {
    SweepPlan plan;
    plan.grid = parse_range(a.zeta, a.steps);
    plan.i0 = number_arg("--i0", a.i0);
    const std::optional<double> dphi_on =
        a.dphi_on ? std::optional<double>(number_arg("--dphi-on", *a.dphi_on)) : std::nullopt;
    const double jitter = a.jitter_std ? number_arg("--jitter-std", *a.jitter_std) : 0.0;

    if (a.pulse) {
        if (a.dphi) {
            throw UsageError("--dphi is the static mode; use --dphi-on with --pulse");
        }
        PulseMode mode = parse_pulse_block(*a.pulse, dphi_on);
        mode.jitter_std = jitter;
        mode.seed = a.seed.value_or(0);
        plan.mode = mode;
    } else {
        if (dphi_on || a.jitter_std) {
            throw UsageError("--dphi-on and --jitter-std require --pulse");
        }
        plan.mode = StaticMode{a.dphi ? number_arg("--dphi", *a.dphi) : 0.0};
    }

    std::vector<SweepRecord> records;
    try {
        records = sweep_parallel(plan, a.threads);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    } catch (const DegenerateCorrelation &e) {
        throw UsageError(std::string(e.what()) + " (a port is dark for the whole train)");
    }
    emit(a.format == "json" ? to_json(records) : to_csv(records), a.out, out);
    return kExitOk;
}

int cmd_eval(const std::string &path, const std::optional<std::string> &zeta_text, std::ostream &out) {
    const std::string text = read_file(path);
    netlist::CircuitSpec circuit;
    try {
        circuit = netlist::parse(text);
    } catch (const netlist::ParseError &e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                         netlist::to_string(e.kind()) + ": " + e.what());
    }
    std::optional<double> zeta;
    if (zeta_text) {
        zeta = number_arg("--zeta", *zeta_text);
        circuit = netlist::with_zeta(std::move(circuit), *zeta);
    }
    const netlist::LoweredCircuit lowered = netlist::lower(circuit);
    const FieldState result = apply(lowered.matrix, lowered.input);

    nlohmann::json j;
    j["netlist"] = path;
    if (zeta) {
        j["zeta"] = *zeta;
    }
    j["i0"] = circuit.source.intensity;
    j["carrier_hz"] = circuit.source.carrier_hz;
    j["i_a"] = intensity(result, Port::A);
    j["i_b"] = intensity(result, Port::B);
    j["e_a"] = complex_json(result.port_a);
    j["e_b"] = complex_json(result.port_b);
    const TransferMatrix &m = lowered.matrix;
    j["matrix"] = nlohmann::json::array({nlohmann::json::array({complex_json(m.m00), complex_json(m.m01)}),
                                         nlohmann::json::array({complex_json(m.m10), complex_json(m.m11)})});
    j["unitary"] = is_unitary(m, 1e-12);
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_check(const std::optional<std::string> &perturb, std::ostream &out) {
    CheckOptions options;
    if (perturb) {
        options.beam_splitter.m00 += number_arg("--perturb-bs", *perturb);
    }
    bool all = true;
    for (const PropertyResult &r : run_property_checks(options)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    out << (all ? "all properties hold\n" : "property failures detected\n");
    return all ? kExitOk : kExitPropertyFailure;
}

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

/// Fills options that were not given on the command line from `key = value`
/// lines. Keys are flag names without the leading dashes; `#` starts a comment.
void apply_config_file(CLI::App &sub, const std::string &path) {
    std::istringstream in(read_file(path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = path + ":" + std::to_string(line_no);
        if (eq == std::string::npos) {
            throw UsageError(where + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        CLI::Option *opt = key == "config" ? nullptr : sub.get_option_no_throw("--" + key);
        if (opt == nullptr || value.empty()) {
            throw UsageError(where + ": unknown or empty key '" + key + "'");
        }
        if (opt->count() > 0) {
            continue;
        }
        try {
            opt->add_result(value);
            opt->run_callback();
        } catch (const CLI::Error &e) {
            throw UsageError(where + ": " + e.what());
        }
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Phase-controlled Mach-Zehnder interferometer simulator", "cohmzi"};
    app.require_subcommand(1);

    SweepArgs sweep;
    CLI::App *sub_sweep = app.add_subcommand("sweep", "Sweep the scan phase zeta and emit (zeta, i_a, i_b, g2)");
    std::string config_path;
    sub_sweep->add_option("--config", config_path, "File of `key = value` lines using the flag names");
    sub_sweep->add_option("--zeta", sweep.zeta, "Scan range <start>:<end>, e.g. 0:4pi")->capture_default_str();
    sub_sweep->add_option("--steps", sweep.steps, "Grid points, endpoints included")->capture_default_str();
    sub_sweep->add_option("--i0", sweep.i0, "Input intensity")->capture_default_str();
    auto *dphi_opt = sub_sweep->add_option("--dphi", sweep.dphi, "Static phase difference (default 0)");
    auto *pulse_opt =
        sub_sweep->add_option("--pulse", sweep.pulse, "Pulse train: period=,duty=,n=,spp=[,delta=,duration=]");
    dphi_opt->excludes(pulse_opt);
    sub_sweep->add_option("--dphi-on", sweep.dphi_on, "Phase difference while rf is ON (default pi)");
    sub_sweep->add_option("--format", sweep.format, "Output encoding")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub_sweep->add_option("--out", sweep.out, "Write to this file instead of standard output");
    sub_sweep->add_option("--seed", sweep.seed, "Seed for the zeta jitter generator")->envname("COHMZI_SEED");
    sub_sweep->add_option("--jitter-std", sweep.jitter_std, "Gaussian jitter on zeta per sample (radians)");
    sub_sweep->add_option("--threads", sweep.threads, "OpenMP threads (0 = runtime default)");

    std::string eval_path;
    std::optional<std::string> eval_zeta;
    CLI::App *sub_eval = app.add_subcommand("eval", "Evaluate a .mzi netlist and print a JSON result");
    sub_eval->add_option("netlist", eval_path, "Path to the netlist")->required();
    sub_eval->add_option("--zeta", eval_zeta, "Override the scan phase before the final splitter");

    std::optional<std::string> perturb;
    CLI::App *sub_check = app.add_subcommand("check", "Run the built-in invariant suite");
    sub_check->add_option("--perturb-bs", perturb, "Add this offset to the splitter's (0,0) entry")
        ->group("");

    std::vector<const char *> argv;
    argv.push_back("cohmzi");
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sub_sweep->parsed()) {
            if (!config_path.empty()) {
                apply_config_file(*sub_sweep, config_path);
            }
            return cmd_sweep(sweep, out);
        }
        if (sub_eval->parsed()) {
            return cmd_eval(eval_path, eval_zeta, out);
        }
        return cmd_check(perturb, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

}  // namespace cohmzi::cli
