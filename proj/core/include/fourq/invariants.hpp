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
#include <optional>
#include <string>

#include "fourq/state.hpp"

namespace fourq {

/**
 * @brief The four SLOCC relative invariants (H, L, M, Dxt) of a state.
 *
 * Under a quartet of invertible local operators with determinant product d
 * the components transform as (d H, d^2 L, d^2 M, d^3 Dxt); under
 * determinant-one quartets they are unchanged. `scale` is the squared norm of
 * the source state (0 when unknown); it sets the rounding-noise floor for
 * zero detection so that an all-zero fingerprint stays all-zero.
 */
struct InvariantFingerprint {
    static constexpr std::array<int, 4> kWeights{1, 2, 2, 3};

    cplx H{};
    cplx L{};
    cplx M{};
    cplx Dxt{};
    double scale = 0.0;

    [[nodiscard]] std::array<cplx, 4> components() const { return {H, L, M, Dxt}; }

    friend bool operator==(const InvariantFingerprint &,
                           const InvariantFingerprint &) = default;
};

/// Degree 2: 2 * sum_{k<8} (-1)^popcount(k) a_k a_{15-k}.
[[nodiscard]] cplx inv_H(const PureState4 &state);

/// Degree 4: det of the 4x4 matrix with entry (r, c) = a_{4c + r}.
[[nodiscard]] cplx inv_L(const PureState4 &state);

/// Degree 4: det of the matrix with rows (a0 a8 a2 a10), (a1 a9 a3 a11),
/// (a4 a12 a6 a14), (a5 a13 a7 a15).
///
/// Rows are indexed by (q2, q4) and columns by (q3, q1), which gives
/// inv_M(psi) == -inv_L(swap_qubits(psi, 2, 3)).
[[nodiscard]] cplx inv_M(const PureState4 &state);

/// Degree 4: inv_L of the state with qubits 2 and 4 relabeled. Not part of
/// the fingerprint. With these sign conventions L + M - N == 0.
[[nodiscard]] cplx inv_N(const PureState4 &state);

/// Degree 6: det of the 3x3 matrix of quadratic minors
///   row 1: a0a6-a2a4,  a0a7+a1a6-a2a5-a3a4,  a1a7-a3a5
///   row 2: a0a14+a6a8-a2a12-a4a10,
///          a0a15+a6a9+a1a14+a7a8-a2a13-a3a12-a4a11-a5a10,
///          a1a15+a7a9-a3a13-a5a11
///   row 3: a8a14-a10a12,  a8a15+a9a14-a10a13-a11a12,  a9a15-a11a13
/// The overall sign is the one produced by this row order.
[[nodiscard]] cplx inv_Dxt(const PureState4 &state);

[[nodiscard]] InvariantFingerprint fingerprint(const PureState4 &state);

/// {"H": [re,im], "L": ..., "M": ..., "Dxt": ...} plus "N3" when given.
[[nodiscard]] std::string fingerprint_to_json(const InvariantFingerprint &f,
                                              std::optional<cplx> n = std::nullopt);

} // namespace fourq
