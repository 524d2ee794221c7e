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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "fourq/catalog.hpp"
#include "fourq/state.hpp"
#include "oracles.hpp"

using namespace fourq;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string &name, const std::string &contents) {
    const auto dir = std::filesystem::temp_directory_path() / "fourq_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << contents;
    return path;
}

cplx as_complex(const json &pair) { return {pair[0].get<double>(), pair[1].get<double>()}; }

} // namespace

TEST_CASE("cli invariants", "[cli]") {
    const auto r = run({"invariants", "--named", "chi"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(std::abs(as_complex(j["H"])) < 1e-12);
    CHECK(std::abs(as_complex(j["L"]) + 1.0 / 16.0) < 1e-12);
    CHECK(std::abs(as_complex(j["M"]) - 1.0 / 16.0) < 1e-12);
    CHECK(std::abs(as_complex(j["Dxt"])) < 1e-12);
    CHECK(j.contains("N3"));

    const auto file = write_temp("chi.json", serialize_state(named_state("chi")));
    const auto from_file = run({"invariants", "--state", file.string()});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == r.out);
}

TEST_CASE("cli compare", "[cli]") {
    const auto eq = run({"compare", "--named", "chi", "--named", "phi_m1"});
    CHECK(eq.code == 0);
    const auto j = json::parse(eq.out);
    CHECK(j["kind"] == "InvariantEquivalent");
    CHECK(std::abs(as_complex(j["lambda"]) - 1.0) <= 1e-9);

    const auto ne = run({"compare", "--named", "chi", "--named", "ghz4"});
    CHECK(ne.code == 1);
    CHECK(json::parse(ne.out)["kind"] == "NotEquivalent");

    const auto dg = run({"compare", "--named", "zero_ket", "--named", "w4"});
    CHECK(dg.code == 1);
    CHECK(json::parse(dg.out)["kind"] == "DegenerateInconclusive");
    CHECK(json::parse(dg.out)["lambda"].is_null());

    // Mixed sources keep command-line order: state 2 = 2 * chi gives lambda 4.
    const auto doubled = write_temp("chi2.json", serialize_state(named_state("chi").scaled(2.0)));
    const auto mixed = run({"compare", "--state", doubled.string(), "--named", "chi"});
    CHECK(mixed.code == 0);
    CHECK(std::abs(as_complex(json::parse(mixed.out)["lambda"]) - 0.25) < 1e-12);
    const auto mixed_rev = run({"compare", "--named", "chi", "--state", doubled.string()});
    CHECK(std::abs(as_complex(json::parse(mixed_rev.out)["lambda"]) - 4.0) < 1e-12);

    CHECK(run({"compare", "--named", "chi"}).code == 2);
    CHECK(run({"compare", "--named", "chi", "--named", "phi_m1", "--abs-tol", "0"}).code == 2);
    CHECK(run({"compare", "--named", "chi", "--named", "phi_m1", "--rel-tol", "1e-6"}).code ==
          0);
}

TEST_CASE("cli apply and check-witness", "[cli]") {
    const auto r = run({"apply", "--ops", "H,H,H,I", "--named", "chi"});
    REQUIRE(r.code == 0);
    const auto out = parse_state(r.out);
    CHECK(testing::max_abs_diff(out, named_state("phi_m1")) < 1e-12);

    const auto r2 = run({"apply", "--ops", "X,H,H,H", "--named", "chi"});
    CHECK(testing::max_abs_diff(parse_state(r2.out), named_state("phi_m2")) < 1e-12);

    CHECK(run({"apply", "--ops", "H,H,H", "--named", "chi"}).code == 2);
    CHECK(run({"apply", "--ops", "H,H,H,T", "--named", "chi"}).code == 2);
    CHECK(run({"apply", "--named", "chi"}).code == 2);

    const auto w = run({"check-witness", "--ops", "H,H,H,I", "chi", "phi_m1"});
    CHECK(w.code == 0);
    CHECK(json::parse(w.out)["witness"] == true);

    const auto phi_file = write_temp("phi_m2.json", serialize_state(named_state("phi_m2")));
    CHECK(run({"check-witness", "--ops", "X,H,H,H", "chi", phi_file.string()}).code == 0);
    CHECK(run({"check-witness", "--ops", "X,H,H,H", "--named", "chi", "--state",
               phi_file.string()})
              .code == 0);

    const auto no = run({"check-witness", "--ops", "I,I,I,I", "chi", "phi_m1"});
    CHECK(no.code == 1);
    CHECK(json::parse(no.out)["witness"] == false);
    CHECK(run({"check-witness", "--ops", "I,I,I,I", "chi"}).code == 2);
}

TEST_CASE("cli marginals", "[cli]") {
    const auto r = run({"marginals", "--named", "phi_m1"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    for (const char *q : {"1", "2", "3", "4"}) {
        CHECK(std::abs(j["single"][q].get<double>() - 0.5) < 1e-12);
    }
    CHECK(j["pairs"].size() == 6);
    CHECK(j["maximally_mixed_singles"] == true);

    const auto sub = run({"marginals", "--named", "ghz4", "--subset", "2,1"});
    CHECK(sub.code == 0);
    CHECK(json::parse(sub.out)["subset"] == json::array({1, 2}));
    CHECK(std::abs(json::parse(sub.out)["purity"].get<double>() - 0.5) < 1e-12);

    CHECK(run({"marginals", "--named", "chi", "--subset", "1,x"}).code == 2);
    CHECK(run({"marginals", "--named", "chi", "--subset", "1,1"}).code == 2);
    CHECK(run({"marginals", "--named", "chi", "--subset", "5"}).code == 2);
}

TEST_CASE("cli orbit-test", "[cli]") {
    const std::vector<std::string> args{"orbit-test", "--named", "chi", "--samples", "100",
                                        "--seed", "7"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = json::parse(a.out);
    CHECK(j["samples"] == 100);
    CHECK(j["seed"] == 7);
    for (const char *name : {"H", "L", "M", "N", "Dxt"}) {
        CHECK(j[name]["max_rel_dev"].get<double>() <= 1e-9);
    }
    CHECK(run({"orbit-test", "--named", "chi", "--samples", "0"}).code == 2);
}

TEST_CASE("cli catalog", "[cli]") {
    const auto list = run({"catalog", "list"});
    CHECK(list.code == 0);
    const auto j = json::parse(list.out);
    CHECK(j["states"].size() == 7);
    CHECK(j["states"][0]["name"] == "chi");

    const auto show = run({"catalog", "show", "phi_m1"});
    CHECK(show.code == 0);
    CHECK(show.out == serialize_state(named_state("phi_m1")));
    CHECK(run({"catalog", "show", "nope"}).code == 2);
    CHECK(run({"catalog"}).code == 2);
}

TEST_CASE("cli usage and input errors", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"invariants", "--named", "chi", "--bogus"}).code == 2);
    CHECK(run({"invariants", "--state", "/nonexistent/fourq.json"}).code == 2);

    const auto bad = write_temp("bad.json", R"({"format": "fourq-state-v1", "amplitudes": [[1,0]]})");
    const auto r = run({"invariants", "--state", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("FormatError") != std::string::npos);
    CHECK(r.out.empty());

    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("orbit-test") != std::string::npos);
}
