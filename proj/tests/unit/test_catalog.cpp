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
#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "fourq/catalog.hpp"
#include "fourq/error.hpp"
#include "fourq/invariants.hpp"

using namespace fourq;

TEST_CASE("catalog amplitudes", "[catalog]") {
    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    const auto &chi = named_state("chi");
    CHECK(std::abs(chi[9] - c) < 1e-16);
    CHECK(std::abs(chi[3] + c) < 1e-16);
    CHECK(std::abs(chi[5] + c) < 1e-16);
    CHECK(chi[1] == cplx{});

    const auto &phi1 = named_state("phi_m1");
    CHECK(phi1[9] == cplx{-0.5});
    CHECK(phi1[0] == cplx{0.5});
    CHECK(phi1[7] == cplx{0.5});
    CHECK(phi1[14] == cplx{0.5});

    const auto &phi2 = named_state("phi_m2");
    CHECK(phi2[7] == cplx{-0.5});
    CHECK(phi2[9] == cplx{0.5});

    const auto &zero = named_state("zero_ket");
    CHECK(zero[0] == cplx{1.0});
    CHECK(zero.norm() == 1.0);

    CHECK(named_state("cluster4")[15] == cplx{-0.5});
}

TEST_CASE("catalog states are unit norm", "[catalog]") {
    CHECK(catalog_entries().size() == 7);
    for (const auto &e : catalog_entries()) {
        INFO(e.name);
        CHECK(std::abs(e.state.norm() - 1.0) <= 1e-15);
        CHECK_FALSE(e.provenance.empty());
        CHECK(has_named_state(e.name));
    }
}

TEST_CASE("chi, phi_m1 and phi_m2 share one fingerprint", "[catalog]") {
    const auto ref = fingerprint(named_state("chi"));
    for (const char *name : {"phi_m1", "phi_m2"}) {
        const auto f = fingerprint(named_state(name));
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(f.components()[i] - ref.components()[i]) <= 1e-12);
        }
    }
}

TEST_CASE("unknown names", "[catalog]") {
    CHECK_FALSE(has_named_state("bell"));
    try {
        (void)named_state("bell");
        FAIL("expected UnknownName");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::UnknownName);
    }
}
