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
#include "fourq/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "fourq/error.hpp"
#include "json_util.hpp"

namespace fourq {

namespace {

constexpr double kMaxMixedTol = 1e-10;

constexpr std::array<std::array<int, 2>, 6> kPairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// Scatter the bits of `local` onto the positions of `qubits` (first = MSB).
std::size_t scatter(std::size_t local, const std::vector<int> &qubits) {
    std::size_t index = 0;
    const std::size_t n = qubits.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (((local >> (n - 1 - i)) & 1U) != 0) {
            index |= qubit_mask(qubits[i]);
        }
    }
    return index;
}

} // namespace

ReducedDensityMatrix::ReducedDensityMatrix(std::vector<int> kept, std::vector<cplx> entries)
    : kept_(std::move(kept)), dim_(std::size_t{1} << kept_.size()), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw Error(ErrorCode::WrongLength, "density matrix size does not match kept qubits");
    }
}

cplx ReducedDensityMatrix::trace() const {
    cplx t{};
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ReducedDensityMatrix partial_trace(const PureState4 &state, std::span<const int> keep) {
    if (keep.empty()) {
        throw Error(ErrorCode::EmptySubset, "at least one qubit must be kept");
    }
    std::vector<int> kept(keep.begin(), keep.end());
    std::ranges::sort(kept);
    for (const int q : kept) {
        if (q < 1 || q > 4) {
            throw Error(ErrorCode::QubitOutOfRange, "qubit index must be 1..4");
        }
    }
    if (std::ranges::adjacent_find(kept) != kept.end()) {
        throw Error(ErrorCode::InvalidSubset, "kept qubits must be distinct");
    }
    std::vector<int> env;
    for (int q = 1; q <= 4; ++q) {
        if (!std::ranges::binary_search(kept, q)) {
            env.push_back(q);
        }
    }

    const PureState4 psi = state.normalized();
    const std::size_t dim = std::size_t{1} << kept.size();
    const std::size_t env_dim = std::size_t{1} << env.size();
    std::vector<cplx> rho(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            cplx sum{};
            for (std::size_t e = 0; e < env_dim; ++e) {
                const std::size_t env_bits = scatter(e, env);
                sum += psi[scatter(r, kept) | env_bits] *
                       std::conj(psi[scatter(c, kept) | env_bits]);
            }
            rho[r * dim + c] = sum;
        }
    }
    return {std::move(kept), std::move(rho)};
}

double purity(const ReducedDensityMatrix &rdm) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double p = 0.0;
    for (std::size_t r = 0; r < rdm.dim(); ++r) {
        for (std::size_t c = 0; c < rdm.dim(); ++c) {
            p += std::norm(rdm(r, c));
        }
    }
    return p;
}

EntanglementReport max_entanglement_report(const PureState4 &state) {
    EntanglementReport report;
    bool mixed = true;
    for (int q = 1; q <= 4; ++q) {
        const std::array<int, 1> keep{q};
        const double p = purity(partial_trace(state, keep));
        report.single[static_cast<std::size_t>(q - 1)] = p;
        mixed = mixed && std::abs(p - 0.5) <= kMaxMixedTol;
    }
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        report.pairs[i] = purity(partial_trace(state, kPairs[i]));
    }
    report.maximally_mixed_singles = mixed;
    return report;
}

std::string entanglement_report_to_json(const EntanglementReport &r) {
    nlohmann::ordered_json single;
    for (std::size_t q = 0; q < 4; ++q) {
        single[std::to_string(q + 1)] = r.single[q];
    }
    nlohmann::ordered_json pairs;
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        pairs[std::to_string(kPairs[i][0]) + std::to_string(kPairs[i][1])] = r.pairs[i];
    }
    nlohmann::ordered_json j;
    j["single"] = single;
    j["pairs"] = pairs;
    j["maximally_mixed_singles"] = r.maximally_mixed_singles;
    return j.dump(2);
}

} // namespace fourq
