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
#include <string>
#include <string_view>

#include "fourq/rng.hpp"
#include "fourq/state.hpp"

namespace fourq {

/// Invertible 2x2 complex operator acting on one qubit.
class LocalOperator {
  public:
    static constexpr double kMinAbsDet = 1e-12;

    /// Row-major entries [[m00, m01], [m10, m11]]. Throws NonFinite or
    /// SingularOperator (|det| < kMinAbsDet).
    LocalOperator(cplx m00, cplx m01, cplx m10, cplx m11);

    [[nodiscard]] cplx operator()(std::size_t row, std::size_t col) const {
        return m_[2 * row + col];
    }
    [[nodiscard]] cplx det() const noexcept { return det_; }

    [[nodiscard]] LocalOperator adjoint() const;
    [[nodiscard]] LocalOperator scaled(cplx factor) const;

    friend LocalOperator operator*(const LocalOperator &a, const LocalOperator &b);
    friend bool operator==(const LocalOperator &, const LocalOperator &) = default;

  private:
    std::array<cplx, 4> m_;
    cplx det_;
};

/// One local operator per qubit, position 0 acting on qubit 1.
class LocalOperatorQuartet {
  public:
    explicit LocalOperatorQuartet(const std::array<LocalOperator, 4> &ops);

    [[nodiscard]] const std::array<LocalOperator, 4> &ops() const noexcept {
        return ops_;
    }
    /// Operator on qubit `qubit` (1..4).
    [[nodiscard]] const LocalOperator &on(int qubit) const;
    [[nodiscard]] cplx det_product() const noexcept { return det_product_; }

  private:
    std::array<LocalOperator, 4> ops_;
    cplx det_product_;
};

enum class Gate { I, X, Y, Z, H };

[[nodiscard]] LocalOperator gate(Gate g);

/// Named gate from {I, X, Y, Z, H}; throws UnknownGate otherwise.
[[nodiscard]] LocalOperator gate(std::string_view name);

/// Parses "G,G,G,G" with each G in {I, X, Y, Z, H}; position = qubit.
[[nodiscard]] LocalOperatorQuartet parse_gate_string(std::string_view text);

/// Applies `op` to qubit `qubit` (1..4). Throws QubitOutOfRange.
[[nodiscard]] PureState4 apply_single(const LocalOperator &op, int qubit,
                                      const PureState4 &state);

/// op_1 (x) op_2 (x) op_3 (x) op_4 applied to `state`.
[[nodiscard]] PureState4 apply_quartet(const LocalOperatorQuartet &q,
                                       const PureState4 &state);

/// Haar-random SU(2) element from a normalized complex Gaussian pair.
[[nodiscard]] LocalOperator random_su2(Rng &rng);

/// Complex Gaussian matrix with |det| >= 0.1, rescaled by the principal
/// det^{-1/2} so that det == 1.
[[nodiscard]] LocalOperator random_sl2(Rng &rng);

/// Complex Gaussian matrix, resampled while |det| < 0.1.
[[nodiscard]] LocalOperator random_gl2(Rng &rng);

} // namespace fourq
