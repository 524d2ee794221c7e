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
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace fourq {

using cplx = std::complex<double>;

inline constexpr std::size_t kNumQubits = 4;
inline constexpr std::size_t kDim = 16;

/// Absolute and relative tolerances used by every comparison in the library.
/// Both must be strictly positive and finite.
class ComplexTolerance {
  public:
    ComplexTolerance() = default;
    ComplexTolerance(double abs_tol, double rel_tol);

    [[nodiscard]] double abs_tol() const noexcept { return abs_tol_; }
    [[nodiscard]] double rel_tol() const noexcept { return rel_tol_; }

  private:
    double abs_tol_ = 1e-10;
    double rel_tol_ = 1e-9;
};

/**
 * @brief Pure state of four qubits held as 16 complex amplitudes.
 *
 * Amplitude k multiplies the basis ket |q1 q2 q3 q4> with
 * k = 8 q1 + 4 q2 + 2 q3 + q4, so qubit 1 is the most significant bit.
 * States are not normalized on construction; norm() reports the Euclidean
 * norm of the stored amplitudes.
 */
class PureState4 {
  public:
    using Amplitudes = std::array<cplx, kDim>;

    /// Throws WrongLength, NonFinite or ZeroState.
    static PureState4 make(std::span<const cplx> amplitudes);

    [[nodiscard]] const cplx &operator[](std::size_t k) const {
        return amps_[k];
    }
    [[nodiscard]] const Amplitudes &amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] double norm() const noexcept { return norm_; }

    /// Copy of this state scaled by a nonzero complex factor.
    [[nodiscard]] PureState4 scaled(cplx factor) const;

    /// Copy of this state divided by its norm.
    [[nodiscard]] PureState4 normalized() const;

    friend bool operator==(const PureState4 &, const PureState4 &) = default;

  private:
    PureState4(const Amplitudes &amps, double norm) : amps_(amps), norm_(norm) {}

    Amplitudes amps_{};
    double norm_ = 0.0;
};

[[nodiscard]] inline PureState4 make_state(std::span<const cplx> amplitudes) {
    return PureState4::make(amplitudes);
}

/// 8 q1 + 4 q2 + 2 q3 + q4. Each argument must be 0 or 1.
[[nodiscard]] constexpr std::size_t basis_index(unsigned q1, unsigned q2,
                                                unsigned q3, unsigned q4) {
    return (q1 << 3U) | (q2 << 2U) | (q3 << 1U) | q4;
}

/// Bit mask of qubit `qubit` (1..4) inside a basis index.
[[nodiscard]] constexpr std::size_t qubit_mask(int qubit) {
    return std::size_t{1} << static_cast<unsigned>(kNumQubits - qubit);
}

[[nodiscard]] cplx inner_product(const PureState4 &bra, const PureState4 &ket);

[[nodiscard]] bool equal_up_to_global_phase(const PureState4 &a,
                                            const PureState4 &b,
                                            const ComplexTolerance &tol = {});

/// Relabels qubits i and j (1..4): a'_{..q_i..q_j..} = a_{..q_j..q_i..}.
[[nodiscard]] PureState4 swap_qubits(const PureState4 &state, int i, int j);

/// Renders the fourq-state-v1 JSON document.
[[nodiscard]] std::string serialize_state(const PureState4 &state);

/// Parses a fourq-state-v1 JSON document. Throws Error{FormatError} with the
/// offending line or field on malformed input.
[[nodiscard]] PureState4 parse_state(std::string_view text);

} // namespace fourq
