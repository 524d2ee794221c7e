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

// Test-only reference computations. Nothing here calls into the library's
// invariant or operator code paths; they exist to check those paths.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "fourq/rng.hpp"
#include "fourq/state.hpp"

namespace fourq::testing {

using Amps = std::array<cplx, 16>;

inline Amps amps_of(const PureState4 &s) { return s.amplitudes(); }

/// Leibniz sum over all N! permutations.
template <std::size_t N>
cplx leibniz_det(const std::array<std::array<cplx, N>, N> &m) {
    std::array<std::size_t, N> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    cplx total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = i + 1; j < N; ++j) {
                if (perm[i] > perm[j]) {
                    ++inversions;
                }
            }
        }
        cplx term = (inversions % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < N; ++i) {
            term *= m[i][perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// H written out term by term as printed: 2(a0a15 - a1a14 - a2a13 + a3a12
/// - a4a11 + a5a10 + a6a9 - a7a8).
inline cplx oracle_H(const Amps &a) {
    return 2.0 * (a[0] * a[15] - a[1] * a[14] - a[2] * a[13] + a[3] * a[12] - a[4] * a[11] +
                  a[5] * a[10] + a[6] * a[9] - a[7] * a[8]);
}

inline cplx oracle_L(const Amps &a) {
    return leibniz_det<4>({{{a[0], a[4], a[8], a[12]},
                            {a[1], a[5], a[9], a[13]},
                            {a[2], a[6], a[10], a[14]},
                            {a[3], a[7], a[11], a[15]}}});
}

inline cplx oracle_M(const Amps &a) {
    return leibniz_det<4>({{{a[0], a[8], a[2], a[10]},
                            {a[1], a[9], a[3], a[11]},
                            {a[4], a[12], a[6], a[14]},
                            {a[5], a[13], a[7], a[15]}}});
}

/// Explicit bit-permutation: out[q1 q2 q3 q4] = in[q with bits i, j swapped].
inline Amps oracle_swap(const Amps &a, int i, int j) {
    Amps out{};
    for (int k = 0; k < 16; ++k) {
        std::array<int, 4> bits{(k >> 3) & 1, (k >> 2) & 1, (k >> 1) & 1, k & 1};
        std::swap(bits[static_cast<std::size_t>(i - 1)], bits[static_cast<std::size_t>(j - 1)]);
        const int src = bits[0] * 8 + bits[1] * 4 + bits[2] * 2 + bits[3];
        out[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(src)];
    }
    return out;
}

/// Four printed rows of the degree-6 matrix, with rows 2 and 3 merged.
inline cplx oracle_Dxt(const Amps &a) {
    const std::array<cplx, 3> r1{a[0] * a[6] - a[2] * a[4],
                                 a[0] * a[7] + a[1] * a[6] - a[2] * a[5] - a[3] * a[4],
                                 a[1] * a[7] - a[3] * a[5]};
    const std::array<cplx, 3> r2{a[0] * a[14] + a[6] * a[8],
                                 a[0] * a[15] + a[6] * a[9] + a[1] * a[14] + a[7] * a[8],
                                 a[1] * a[15] + a[7] * a[9]};
    const std::array<cplx, 3> r3{-a[2] * a[12] - a[4] * a[10],
                                 -a[2] * a[13] - a[3] * a[12] - a[4] * a[11] - a[5] * a[10],
                                 -a[3] * a[13] - a[5] * a[11]};
    const std::array<cplx, 3> r4{a[8] * a[14] - a[10] * a[12],
                                 a[8] * a[15] + a[9] * a[14] - a[10] * a[13] - a[11] * a[12],
                                 a[9] * a[15] - a[11] * a[13]};
    return leibniz_det<3>(
        {{r1, {r2[0] + r3[0], r2[1] + r3[1], r2[2] + r3[2]}, r4}});
}

using Mat2 = std::array<std::array<cplx, 2>, 2>;
using Mat16 = std::vector<std::vector<cplx>>;

/// A (x) B (x) C (x) D as a dense 16x16 matrix; factor 0 acts on the MSB.
inline Mat16 kron4(const std::array<Mat2, 4> &f) {
    Mat16 m(16, std::vector<cplx>(16));
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            cplx v = 1.0;
            for (int q = 0; q < 4; ++q) {
                const int shift = 3 - q;
                v *= f[static_cast<std::size_t>(q)][static_cast<std::size_t>((r >> shift) & 1)]
                      [static_cast<std::size_t>((c >> shift) & 1)];
            }
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
    }
    return m;
}

inline Amps matvec(const Mat16 &m, const Amps &a) {
    Amps out{};
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            out[r] += m[r][c] * a[c];
        }
    }
    return out;
}

/// Full 16x16 |psi><psi| of the normalized state, then summed over the
/// complement of `keep` by direct enumeration of all 16x16 index pairs.
inline std::vector<std::vector<cplx>> oracle_reduced(const Amps &raw, const std::vector<int> &keep) {
    double n2 = 0.0;
    for (const auto &z : raw) {
        n2 += std::norm(z);
    }
    const double n = std::sqrt(n2);
    const std::size_t dim = std::size_t{1} << keep.size();
    std::vector<std::vector<cplx>> rho(dim, std::vector<cplx>(dim));
    const auto bit = [](int k, int q) { return (k >> (4 - q)) & 1; };
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            bool env_equal = true;
            for (int q = 1; q <= 4; ++q) {
                if (std::find(keep.begin(), keep.end(), q) == keep.end() && bit(r, q) != bit(c, q)) {
                    env_equal = false;
                }
            }
            if (!env_equal) {
                continue;
            }
            std::size_t rr = 0;
            std::size_t cc = 0;
            for (int q : keep) {
                rr = (rr << 1U) | static_cast<std::size_t>(bit(r, q));
                cc = (cc << 1U) | static_cast<std::size_t>(bit(c, q));
            }
            rho[rr][cc] += raw[static_cast<std::size_t>(r)] / n *
                           std::conj(raw[static_cast<std::size_t>(c)] / n);
        }
    }
    return rho;
}

inline PureState4 random_state(Rng &rng, bool normalize = true) {
    Amps a{};
    for (auto &z : a) {
        z = rng.complex_normal();
    }
    const auto s = make_state(a);
    return normalize ? s.normalized() : s;
}

inline double max_abs_diff(const PureState4 &a, const PureState4 &b) {
    double d = 0.0;
    for (std::size_t k = 0; k < 16; ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

} // namespace fourq::testing
