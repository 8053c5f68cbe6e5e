// Copyright 2026 The telesim Authors
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

#include "telesim/cli.h"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "telesim/capacities.h"
#include "telesim/channel_metrics.h"
#include "telesim/errors.h"
#include "telesim/json_io.h"
#include "telesim/pauli_damping.h"
#include "telesim/teleport_sim.h"

namespace telesim::cli {

namespace {

using nlohmann::json;

/// Malformed or missing input; maps to exit code 2.
class InputError : public std::runtime_error {
   public:
    explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

struct Options {
    std::optional<double> gamma;
    std::optional<double> eta;
    std::optional<double> s30;
    std::string resource_path;
    std::string classical_path;
    std::string grid;
    std::string pauli;
    bool squared = false;
    bool damping = false;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string format = "json";
};

std::string num(double value) {
    return fmt::format("{:.17g}", value);
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

ClassicalChannel load_classical(const Options &o) {
    try {
        return classical_channel_from_json(read_json_file(o.classical_path));
    } catch (const SchemaError &e) {
        throw InputError(e.what());
    }
}

TwoQubitState load_resource(const Options &o) {
    if (!o.resource_path.empty()) {
        try {
            return two_qubit_state_from_json(read_json_file(o.resource_path));
        } catch (const SchemaError &e) {
            throw InputError(e.what());
        }
    }
    if (!o.gamma) {
        throw InputError("a resource is required: pass --gamma or --resource");
    }
    return TwoQubitState(choi_amplitude_damping(*o.gamma).matrix());
}

double require_gamma(const Options &o) {
    if (!o.gamma) {
        throw InputError("--gamma is required");
    }
    return *o.gamma;
}

/// Classical channel from --classical or the squared-channel preset.
ClassicalChannel classical_source(const Options &o) {
    if (o.squared) {
        return squared_channel_classical(require_gamma(o));
    }
    if (o.classical_path.empty()) {
        throw InputError("a classical channel is required: pass --classical or --squared");
    }
    return load_classical(o);
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw InputError("malformed grid " + text);
            }
        } catch (const std::logic_error &) {
            throw InputError("malformed grid " + text + ", expected start:stop:step");
        }
    }
    if (parts.size() != 3) {
        throw InputError("malformed grid " + text + ", expected start:stop:step");
    }
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0)) {
        throw InputError("grid step must be positive");
    }
    if (stop < start) {
        throw InputError("grid " + text + " is empty");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> values;
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(start + static_cast<double>(i) * step);
    }
    return values;
}

std::vector<double> parse_pauli(const std::string &text) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::logic_error &) {
            throw InputError("malformed --pauli list " + text);
        }
    }
    if (values.size() != 4) {
        throw InputError("--pauli needs four comma-separated probabilities");
    }
    return values;
}

bool is_pauli_form(const AffineChannel &F) {
    const Mat4 &m = F.F();
    for (int i = 1; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
            if (i != j && std::abs(m(i, j)) >= 1e-12) {
                return false;
            }
        }
    }
    return in_tetrahedron(Vec3(m(1, 1), -m(2, 2), m(3, 3)));
}

std::string cmd_simulate(const Options &o) {
    const TwoQubitState tau = load_resource(o);
    if (o.classical_path.empty() && !o.squared) {
        throw InputError("--classical is required");
    }
    const ClassicalChannel pi = classical_source(o);
    const AffineChannel F = simulated_channel(tau, pi);
    const AffineChannel oracle = oracle_channel(tau, pi);
    const double residual = (F.F() - oracle.F()).cwiseAbs().maxCoeff();
    json j{
        {"F", affine_channel_to_json(F)},
        {"cptp", is_cptp(F)},
        {"pauli", is_pauli_form(F)},
        {"oracle_residual", residual},
    };
    return j.dump(2) + "\n";
}

std::string cmd_region(const Options &o) {
    const double gamma = require_gamma(o);
    double eta;
    if (o.eta && o.s30) {
        throw InputError("pass only one of --eta and --s30");
    }
    if (o.eta) {
        eta = *o.eta;
    } else if (o.s30) {
        eta = std::abs(gamma * *o.s30);
    } else {
        throw InputError("--eta or --s30 is required");
    }
    const SimulabilityRegion region = region_vertices(gamma, eta);
    if (o.format == "csv") {
        std::string text = "q1,q2,q3\n";
        for (const Vec3 &v : region.vertices) {
            text += num(v.x()) + "," + num(v.y()) + "," + num(v.z()) + "\n";
        }
        return text;
    }
    return region_to_json(region).dump(2) + "\n";
}

std::string cmd_bounds(const Options &o) {
    if (o.grid.empty()) {
        throw InputError("--grid start:stop:step is required");
    }
    const auto rows = bounds_curve(parse_grid(o.grid));
    if (o.format == "json") {
        json arr = json::array();
        for (const auto &r : rows) {
            arr.push_back({{"eta", r.eta}, {"gamma", r.gamma}, {"lower_bits", r.lower}, {"upper_bits", r.upper}});
        }
        return arr.dump(2) + "\n";
    }
    std::string text = "eta,gamma,lower_bits,upper_bits\n";
    for (const auto &r : rows) {
        text += num(r.eta) + "," + num(r.gamma) + "," + num(r.lower) + "," + num(r.upper) + "\n";
    }
    return text;
}

std::string cmd_decompose(const Options &o) {
    const double gamma = require_gamma(o);
    const ClassicalChannel pi = classical_source(o);
    const PauliDampingDecomposition d = decompose(gamma, pi);
    json j = decomposition_to_json(d);
    j["gamma"] = gamma;
    if (gamma > 0.0 && gamma < 1.0) {
        j["simulable"] = is_simulable(d, gamma);
    }
    j["F"] = affine_channel_to_json(compose(d));
    return j.dump(2) + "\n";
}

std::string cmd_distance(const Options &o) {
    const double gamma = require_gamma(o);
    const PauliDampingDecomposition d = decompose(gamma, classical_source(o));
    const ClosestPauliResult closest = closest_pauli(d);
    const double trace = channel_trace_distance(compose(d), closest.channel());
    json j{
        {"decomposition", decomposition_to_json(d)},
        {"closest_pauli", closest_pauli_to_json(closest)},
        {"trace_distance", trace},
        {"diamond_distance", diamond_distance_to_closest(d)},
        {"witness", witness_report_to_json(diamond_witness_check(d, o.samples, o.seed))},
    };
    return j.dump(2) + "\n";
}

std::string cmd_covariance(const Options &o) {
    AffineChannel F;
    if (!o.pauli.empty()) {
        const auto p = parse_pauli(o.pauli);
        F = pauli_channel_from_probs(PauliProbabilities({p[0], p[1], p[2], p[3]}));
    } else if (o.damping) {
        F = affine_amplitude_damping(require_gamma(o));
    } else {
        F = simulated_channel(load_resource(o), classical_source(o));
    }
    json j = covariance_report_to_json(check_teleportation_covariance(F));
    j["F"] = affine_channel_to_json(F);
    return j.dump(2) + "\n";
}

void emit(const std::string &text, const Options &o, std::ostream &out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw InputError("cannot write " + o.out_path);
    }
    file << text;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"telesim: noisy teleportation simulation of qubit channels"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", o.out_path, "Output file (default: stdout)");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_gamma = [&](CLI::App *sub) { sub->add_option("--gamma", o.gamma, "Resource damping probability"); };
    auto add_classical = [&](CLI::App *sub) {
        sub->add_option("--classical", o.classical_path, "Classical channel JSON {\"p\": p[l][k]}");
        sub->add_flag("--squared", o.squared, "Use the classical channel generating the squared channel");
    };

    auto *simulate = app.add_subcommand("simulate", "Channel simulated by noisy teleportation");
    add_gamma(simulate);
    simulate->add_option("--resource", o.resource_path, "Two-qubit resource JSON (rho or a/b/T)");
    add_classical(simulate);
    add_common(simulate);

    auto *region = app.add_subcommand("region", "Vertices of the simulable Pauli region");
    add_gamma(region);
    region->add_option("--eta", o.eta, "Damping parameter of the decomposition");
    region->add_option("--s30", o.s30, "S30 of the classical channel (eta = gamma |S30|)");
    add_common(region);

    auto *bounds = app.add_subcommand("bounds", "Capacity bounds of the squared channel");
    bounds->add_option("--grid", o.grid, "Gamma grid start:stop:step");
    add_common(bounds);
    o.format = "json";

    auto *dec = app.add_subcommand("decompose", "Pauli-damping decomposition (u, eta, q)");
    add_gamma(dec);
    add_classical(dec);
    add_common(dec);

    auto *dist = app.add_subcommand("distance", "Distance to the closest Pauli channel");
    add_gamma(dist);
    add_classical(dist);
    dist->add_option("--samples", o.samples, "Random probes for the diamond witness");
    dist->add_option("--seed", o.seed, "Seed for the diamond witness");
    add_common(dist);

    auto *cov = app.add_subcommand("covariance", "Numeric teleportation-covariance check");
    add_gamma(cov);
    cov->add_option("--resource", o.resource_path, "Two-qubit resource JSON (rho or a/b/T)");
    add_classical(cov);
    cov->add_option("--pauli", o.pauli, "Pauli channel p0,p1,p2,p3");
    cov->add_flag("--damping", o.damping, "Amplitude damping channel with --gamma");
    add_common(cov);

    std::vector<const char *> argv{"telesim"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "telesim: " << e.what() << "\n";
        return kExitInputError;
    }
    // Tabular outputs default to CSV.
    if (bounds->parsed() && bounds->count("--format") == 0) {
        o.format = "csv";
    }
    if (region->parsed() && region->count("--format") == 0) {
        o.format = "csv";
    }

    try {
        std::string text;
        if (simulate->parsed()) {
            text = cmd_simulate(o);
        } else if (region->parsed()) {
            text = cmd_region(o);
        } else if (bounds->parsed()) {
            text = cmd_bounds(o);
        } else if (dec->parsed()) {
            text = cmd_decompose(o);
        } else if (dist->parsed()) {
            text = cmd_distance(o);
        } else {
            text = cmd_covariance(o);
        }
        emit(text, o, out);
        return kExitOk;
    } catch (const InputError &e) {
        err << "telesim: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        err << "telesim: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::domain_error &e) {
        err << "telesim: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace telesim::cli
