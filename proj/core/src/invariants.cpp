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
#include "fourq/invariants.hpp"

#include <bit>

#include "fourq/linalg.hpp"
#include "json_util.hpp"

namespace fourq {

cplx inv_H(const PureState4 &state) {
    cplx sum{};
    for (unsigned k = 0; k < 8; ++k) {
        const cplx term = state[k] * state[15 - k];
        sum += (std::popcount(k) % 2 == 0) ? term : -term;
    }
    return 2.0 * sum;
}

cplx inv_L(const PureState4 &state) {
    linalg::SquareMatrix<4> m{};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m[r][c] = state[4 * c + r];
        }
    }
    return linalg::determinant(m);
}

cplx inv_M(const PureState4 &state) {
    static constexpr std::array<std::array<std::size_t, 4>, 4> kIndex{{
        {0, 8, 2, 10},
        {1, 9, 3, 11},
        {4, 12, 6, 14},
        {5, 13, 7, 15},
    }};
    linalg::SquareMatrix<4> m{};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m[r][c] = state[kIndex[r][c]];
        }
    }
    return linalg::determinant(m);
}

cplx inv_N(const PureState4 &state) { return inv_L(swap_qubits(state, 2, 4)); }

cplx inv_Dxt(const PureState4 &s) {
    const auto a = [&s](std::size_t k) { return s[k]; };
    const linalg::SquareMatrix<3> m{{
        {a(0) * a(6) - a(2) * a(4),
         a(0) * a(7) + a(1) * a(6) - a(2) * a(5) - a(3) * a(4),
         a(1) * a(7) - a(3) * a(5)},
        {a(0) * a(14) + a(6) * a(8) - a(2) * a(12) - a(4) * a(10),
         a(0) * a(15) + a(6) * a(9) + a(1) * a(14) + a(7) * a(8) -
             a(2) * a(13) - a(3) * a(12) - a(4) * a(11) - a(5) * a(10),
         a(1) * a(15) + a(7) * a(9) - a(3) * a(13) - a(5) * a(11)},
        {a(8) * a(14) - a(10) * a(12),
         a(8) * a(15) + a(9) * a(14) - a(10) * a(13) - a(11) * a(12),
         a(9) * a(15) - a(11) * a(13)},
    }};
    return linalg::determinant(m);
}

InvariantFingerprint fingerprint(const PureState4 &state) {
    return {inv_H(state), inv_L(state), inv_M(state), inv_Dxt(state),
            state.norm() * state.norm()};
}

std::string fingerprint_to_json(const InvariantFingerprint &f,
                                std::optional<cplx> n) {
    nlohmann::ordered_json j;
    j["H"] = detail::complex_json(f.H);
    j["L"] = detail::complex_json(f.L);
    j["M"] = detail::complex_json(f.M);
    j["Dxt"] = detail::complex_json(f.Dxt);
    if (n) {
        j["N3"] = detail::complex_json(*n);
    }
    return j.dump(2);
}

} // namespace fourq
