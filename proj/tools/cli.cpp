// Copyright 2026 The fourq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourq/catalog.hpp"
#include "fourq/entanglement.hpp"
#include "fourq/equivalence.hpp"
#include "fourq/error.hpp"
#include "fourq/invariants.hpp"
#include "fourq/local_ops.hpp"
#include "fourq/state.hpp"

namespace fourq::cli {

namespace {

/// Raised for problems that are the caller's fault (exit code 2).
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    std::uint64_t seed = 42;
    std::uint64_t samples = 1000;
    unsigned threads = 0;
    std::string ops;
    std::string subset;
    std::string catalog_name;
    std::vector<std::string> state_files;
    std::vector<std::string> state_names;
    std::vector<std::string> positional_states;

    [[nodiscard]] ComplexTolerance tolerance() const { return {abs_tol, rel_tol}; }
};

/// --state / --named options of one subcommand, plus optional positionals.
struct StateOptions {
    CLI::Option *file = nullptr;
    CLI::Option *named = nullptr;
    CLI::Option *positional = nullptr;
};

StateOptions add_state_options(CLI::App &sub, CliConfig &cfg) {
    StateOptions opts;
    opts.file = sub.add_option("--state", cfg.state_files, "fourq-state-v1 JSON file")
                    ->allow_extra_args(false);
    opts.named = sub.add_option("--named", cfg.state_names, "catalog state name")
                     ->allow_extra_args(false);
    return opts;
}

void add_tolerance_options(CLI::App &sub, CliConfig &cfg) {
    sub.add_option("--abs-tol", cfg.abs_tol, "absolute tolerance")->capture_default_str();
    sub.add_option("--rel-tol", cfg.rel_tol, "relative tolerance")->capture_default_str();
}

PureState4 load_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open state file \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_state(buf.str());
    } catch (const Error &e) {
        throw UsageError(path + ": " + e.what());
    }
}

/// States in command-line order, whichever option supplied them.
std::vector<PureState4> collect_states(const CLI::App &sub, const StateOptions &opts) {
    std::vector<PureState4> states;
    std::map<const CLI::Option *, std::size_t> cursor;
    for (const CLI::Option *op : sub.parse_order()) {
        if (op != opts.file && op != opts.named && op != opts.positional) {
            continue;
        }
        const std::string &value = op->results().at(cursor[op]++);
        if (op == opts.file) {
            states.push_back(load_file(value));
        } else if (op == opts.named || has_named_state(value)) {
            states.push_back(named_state(value));
        } else {
            states.push_back(load_file(value));
        }
    }
    return states;
}

std::vector<PureState4> require_states(const CLI::App &sub, const StateOptions &opts,
                                       std::size_t count) {
    auto states = collect_states(sub, opts);
    if (states.size() != count) {
        throw UsageError(sub.get_name() + " needs exactly " + std::to_string(count) +
                         " state(s) via --state FILE or --named NAME, got " +
                         std::to_string(states.size()));
    }
    return states;
}

std::vector<int> parse_subset(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            const int q = std::stoi(token, &used);
            if (used != token.size()) {
                throw UsageError("");
            }
            out.push_back(q);
        } catch (const std::exception &) {
            throw UsageError("--subset expects comma-separated qubit indices, got \"" + text +
                             "\"");
        }
    }
    return out;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CliConfig cfg;
    CLI::App app{"Four-qubit SLOCC invariants, local operators and equivalence checks", "fourq"};
    app.require_subcommand(1);

    auto *invariants_cmd = app.add_subcommand("invariants", "print the invariant fingerprint");
    const auto invariants_states = add_state_options(*invariants_cmd, cfg);

    auto *compare_cmd = app.add_subcommand("compare", "compare two fingerprints");
    const auto compare_states = add_state_options(*compare_cmd, cfg);
    add_tolerance_options(*compare_cmd, cfg);

    auto *apply_cmd = app.add_subcommand("apply", "apply a quartet of named gates");
    apply_cmd->add_option("--ops", cfg.ops, "four gates, e.g. \"H,H,H,I\"")->required();
    const auto apply_states = add_state_options(*apply_cmd, cfg);

    auto *witness_cmd =
        app.add_subcommand("check-witness", "check that the gates map state A onto state B");
    witness_cmd->add_option("--ops", cfg.ops, "four gates, e.g. \"H,H,H,I\"")->required();
    auto witness_states = add_state_options(*witness_cmd, cfg);
    witness_states.positional =
        witness_cmd->add_option("states", cfg.positional_states, "catalog names or state files");
    add_tolerance_options(*witness_cmd, cfg);

    auto *marginals_cmd = app.add_subcommand("marginals", "marginal purity report");
    const auto marginals_states = add_state_options(*marginals_cmd, cfg);
    marginals_cmd->add_option("--subset", cfg.subset, "kept qubits, e.g. \"1,2\"");

    auto *orbit_cmd = app.add_subcommand("orbit-test", "random SL orbit invariance report");
    const auto orbit_states = add_state_options(*orbit_cmd, cfg);
    orbit_cmd->add_option("--samples", cfg.samples, "number of random quartets")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}))
        ->capture_default_str();
    orbit_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    orbit_cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    orbit_cmd->add_option("--rel-tol", cfg.rel_tol, "pass threshold")->capture_default_str();

    auto *catalog_cmd = app.add_subcommand("catalog", "built-in named states");
    catalog_cmd->require_subcommand(1);
    auto *catalog_list = catalog_cmd->add_subcommand("list", "list catalog names");
    auto *catalog_show = catalog_cmd->add_subcommand("show", "print a catalog state");
    catalog_show->add_option("name", cfg.catalog_name, "catalog name")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("fourq");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*invariants_cmd) {
            const auto s = require_states(*invariants_cmd, invariants_states, 1).front();
            out << fingerprint_to_json(fingerprint(s), inv_N(s)) << '\n';
            return kExitOk;
        }
        if (*compare_cmd) {
            const auto tol = cfg.tolerance();
            const auto states = require_states(*compare_cmd, compare_states, 2);
            const auto verdict =
                compare_fingerprints(fingerprint(states[0]), fingerprint(states[1]), tol);
            out << verdict_to_json(verdict) << '\n';
            return verdict.kind == VerdictKind::InvariantEquivalent ? kExitOk : kExitNegative;
        }
        if (*apply_cmd) {
            const auto q = parse_gate_string(cfg.ops);
            const auto s = require_states(*apply_cmd, apply_states, 1).front();
            out << serialize_state(apply_quartet(q, s));
            return kExitOk;
        }
        if (*witness_cmd) {
            const auto tol = cfg.tolerance();
            const auto q = parse_gate_string(cfg.ops);
            const auto states = require_states(*witness_cmd, witness_states, 2);
            const bool ok = verify_witness(states[0], states[1], q, tol);
            nlohmann::ordered_json j;
            j["ops"] = cfg.ops;
            j["witness"] = ok;
            out << j.dump(2) << '\n';
            return ok ? kExitOk : kExitNegative;
        }
        if (*marginals_cmd) {
            const auto s = require_states(*marginals_cmd, marginals_states, 1).front();
            if (cfg.subset.empty()) {
                out << entanglement_report_to_json(max_entanglement_report(s)) << '\n';
                return kExitOk;
            }
            const auto rdm = partial_trace(s, parse_subset(cfg.subset));
            nlohmann::ordered_json j;
            j["subset"] = rdm.kept();
            j["purity"] = purity(rdm);
            out << j.dump(2) << '\n';
            return kExitOk;
        }
        if (*orbit_cmd) {
            const ComplexTolerance tol(cfg.abs_tol, cfg.rel_tol);
            const auto s = require_states(*orbit_cmd, orbit_states, 1).front();
            const auto report = orbit_invariance_report(s, cfg.samples, cfg.seed, cfg.threads);
            out << orbit_report_to_json(report) << '\n';
            return report.worst() <= tol.rel_tol() ? kExitOk : kExitNegative;
        }
        if (*catalog_list) {
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const auto &e : catalog_entries()) {
                list.push_back({{"name", e.name}, {"provenance", e.provenance}});
            }
            nlohmann::ordered_json j;
            j["states"] = list;
            out << j.dump(2) << '\n';
            return kExitOk;
        }
        if (*catalog_show) {
            out << serialize_state(named_state(cfg.catalog_name));
            return kExitOk;
        }
    } catch (const UsageError &e) {
        err << "fourq: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "fourq: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace fourq::cli
