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
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fourq/state.hpp"

namespace fourq {

struct NamedState {
    std::string name;
    PureState4 state;
    std::string provenance;
};

/// chi, phi_m1, phi_m2, ghz4, w4, cluster4, zero_ket, in that order.
[[nodiscard]] const std::vector<NamedState> &catalog_entries();

/// Throws UnknownName.
[[nodiscard]] const PureState4 &named_state(std::string_view name);

[[nodiscard]] bool has_named_state(std::string_view name);

} // namespace fourq
