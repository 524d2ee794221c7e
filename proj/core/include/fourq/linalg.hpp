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
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

namespace fourq::linalg {

template <std::size_t N>
using SquareMatrix = std::array<std::array<std::complex<double>, N>, N>;

/// Determinant by Gaussian elimination with partial (row) pivoting.
template <std::size_t N>
[[nodiscard]] std::complex<double> determinant(SquareMatrix<N> m) {
    std::complex<double> det{1.0, 0.0};
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) {
                pivot = r;
            }
        }
        if (m[pivot][col] == std::complex<double>{}) {
            return {};
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < N; ++r) {
            const auto factor = m[r][col] / m[col][col];
            for (std::size_t c = col + 1; c < N; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    return det;
}

} // namespace fourq::linalg
