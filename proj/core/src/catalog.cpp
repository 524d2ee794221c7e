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
#include "fourq/catalog.hpp"

#include <algorithm>
#include <initializer_list>
#include <numbers>
#include <utility>

#include "fourq/error.hpp"

namespace fourq {

namespace {

// Amplitudes are written out literally; none are derived from gate identities.
PureState4 from_terms(std::initializer_list<std::pair<std::size_t, double>> terms) {
    PureState4::Amplitudes amps{};
    for (const auto &[index, value] : terms) {
        amps[index] = value;
    }
    return make_state(amps);
}

std::vector<NamedState> build() {
    constexpr double c = std::numbers::sqrt2 / 4.0; // 1/(2 sqrt 2)
    constexpr double h = 0.5;
    constexpr double g = std::numbers::sqrt2 / 2.0; // 1/sqrt 2

    std::vector<NamedState> out;
    out.push_back({"chi",
                   from_terms({{0, c}, {3, -c}, {5, -c}, {6, c}, {9, c}, {10, c}, {12, c}, {15, c}}),
                   "chi state: (|0000>-|0011>-|0101>+|0110>+|1001>+|1010>+|1100>+|1111>)/(2 sqrt 2)"});
    out.push_back({"phi_m1", from_terms({{0, h}, {7, h}, {9, -h}, {14, h}}),
                   "(|0000>+|0111>-|1001>+|1110>)/2"});
    out.push_back({"phi_m2", from_terms({{0, h}, {7, -h}, {9, h}, {14, h}}),
                   "(|0000>-|0111>+|1001>+|1110>)/2"});
    out.push_back({"ghz4", from_terms({{0, g}, {15, g}}), "contrast fixture: (|0000>+|1111>)/sqrt 2"});
    out.push_back({"w4", from_terms({{1, h}, {2, h}, {4, h}, {8, h}}),
                   "contrast fixture: (|0001>+|0010>+|0100>+|1000>)/2"});
    out.push_back({"cluster4", from_terms({{0, h}, {3, h}, {12, h}, {15, -h}}),
                   "contrast fixture: (|0000>+|0011>+|1100>-|1111>)/2"});
    out.push_back({"zero_ket", from_terms({{0, 1.0}}), "contrast fixture: |0000>"});
    return out;
}

} // namespace

const std::vector<NamedState> &catalog_entries() {
    static const std::vector<NamedState> entries = build();
    return entries;
}

bool has_named_state(std::string_view name) {
    return std::ranges::any_of(catalog_entries(),
                               [name](const NamedState &e) { return e.name == name; });
}

const PureState4 &named_state(std::string_view name) {
    for (const auto &e : catalog_entries()) {
        if (e.name == name) {
            return e.state;
        }
    }
    throw Error(ErrorCode::UnknownName, "no catalog state named \"" + std::string(name) + "\"");
}

} // namespace fourq
