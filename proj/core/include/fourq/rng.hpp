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
#include <cstdint>
#include <optional>

namespace fourq {

/**
 * @brief Counter-based Philox4x32-10 stream.
 *
 * A stream is identified by (seed, stream id); draws are a pure function of
 * (seed, stream id, position), so identical construction reproduces the
 * same sequence bit for bit on any thread. Parallel work derives one stream
 * per work item instead of sharing a generator.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : seed_(seed), stream_(stream) {}

    /// Independent child stream; distinct indices give distinct streams.
    [[nodiscard]] Rng split(std::uint64_t index) const noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Standard normal (Box-Muller).
    double normal() noexcept;

    /// Standard complex normal: E|z|^2 = 1, real and imaginary parts
    /// independent N(0, 1/2).
    std::complex<double> complex_normal() noexcept;

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream() const noexcept { return stream_; }

  private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 2> block_{};
    int remaining_ = 0;
    std::optional<double> spare_normal_;
};

namespace detail {
/// One Philox4x32-10 block for counter `ctr` under `key`.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept;
} // namespace detail

} // namespace fourq
