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

#include <array>
#include <span>
#include <string>
#include <vector>

#include "fourq/state.hpp"

namespace fourq {

/// Reduced density matrix of the kept qubits, row-major, dim = 2^|kept|.
/// Kept qubits are sorted ascending; the first kept qubit is the most
/// significant bit of the row index.
class ReducedDensityMatrix {
  public:
    ReducedDensityMatrix(std::vector<int> kept, std::vector<cplx> entries);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<int> &kept() const noexcept { return kept_; }
    [[nodiscard]] cplx operator()(std::size_t r, std::size_t c) const {
        return entries_[r * dim_ + c];
    }
    [[nodiscard]] cplx trace() const;

  private:
    std::vector<int> kept_;
    std::size_t dim_;
    std::vector<cplx> entries_;
};

/// Tr over the complement of `keep` of |psi><psi|, psi normalized first.
/// Throws EmptySubset, QubitOutOfRange or InvalidSubset (duplicates).
[[nodiscard]] ReducedDensityMatrix partial_trace(const PureState4 &state,
                                                 std::span<const int> keep);

/// Tr(rho^2).
[[nodiscard]] double purity(const ReducedDensityMatrix &rdm);

struct EntanglementReport {
    std::array<double, 4> single{}; ///< qubits 1..4
    /// Pairs in the order 12, 13, 14, 23, 24, 34.
    std::array<double, 6> pairs{};
    bool maximally_mixed_singles = false;
};

/// Purities of every single-qubit and two-qubit marginal. A single-qubit
/// marginal counts as maximally mixed when its purity is within 1e-10 of 1/2.
[[nodiscard]] EntanglementReport max_entanglement_report(const PureState4 &state);

[[nodiscard]] std::string entanglement_report_to_json(const EntanglementReport &r);

} // namespace fourq
