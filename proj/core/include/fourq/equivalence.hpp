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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fourq/invariants.hpp"
#include "fourq/local_ops.hpp"
#include "fourq/state.hpp"

namespace fourq {

enum class VerdictKind { InvariantEquivalent, NotEquivalent, DegenerateInconclusive };

[[nodiscard]] std::string_view to_string(VerdictKind kind) noexcept;

/// Result of a weighted-projective fingerprint comparison.
///
/// InvariantEquivalent is a necessary condition for SLOCC equivalence and is
/// sufficient only for generic states; `reason` always states this.
struct EquivalenceVerdict {
    VerdictKind kind = VerdictKind::NotEquivalent;
    std::optional<cplx> lambda; ///< present iff kind == InvariantEquivalent
    std::string reason;
};

/// Weighted scale s(f) = max(|H|, |L|^(1/2), |M|^(1/2), |Dxt|^(1/3)).
[[nodiscard]] double weighted_scale(const InvariantFingerprint &f);

/// Component-wise zero pattern: component i is zero when
/// |c_i| < max(abs_tol * s(f)^w_i, 8 * eps * f.scale^w_i). The second term
/// is a rounding-noise floor; it keeps an all-zero fingerprint computed from
/// a large-norm state all-zero. All entries true when s(f) == 0.
[[nodiscard]] std::array<bool, 4> zero_pattern(const InvariantFingerprint &f,
                                               const ComplexTolerance &tol);

/// True when v == (lambda H, lambda^2 L, lambda^2 M, lambda^3 Dxt) of u
/// for every component that is nonzero in either fingerprint, to rel_tol.
[[nodiscard]] bool satisfies_weighted_scaling(const InvariantFingerprint &u,
                                              const InvariantFingerprint &v, cplx lambda,
                                              const ComplexTolerance &tol);

/**
 * @brief Decides whether v is a weighted rescaling of u.
 *
 * Zero patterns are compared first (mismatch: NotEquivalent; both all-zero:
 * DegenerateInconclusive). Otherwise lambda is solved from the lowest-weight
 * nonzero component, trying every root of the matching degree, and the first
 * candidate consistent with all nonzero components is returned.
 */
[[nodiscard]] EquivalenceVerdict compare_fingerprints(const InvariantFingerprint &u,
                                                      const InvariantFingerprint &v,
                                                      const ComplexTolerance &tol = {});

/// (d H, d^2 L, d^2 M, d^3 Dxt), scale multiplied by |d|. Throws
/// ZeroDeterminant for d == 0.
[[nodiscard]] InvariantFingerprint covariance_predict(const InvariantFingerprint &f,
                                                      cplx det_product);

/// True iff apply_quartet(q, a) is proportional to b by a nonzero scalar.
[[nodiscard]] bool verify_witness(const PureState4 &a, const PureState4 &b,
                                  const LocalOperatorQuartet &q,
                                  const ComplexTolerance &tol = {});

/// Deviation measure used for invariance checks:
/// |x - y| / max(|x|, |y|, abs_floor / rel_tol). A result <= rel_tol means
/// "relative error <= rel_tol, or absolute error <= abs_floor when both
/// values are small".
[[nodiscard]] double invariant_deviation(cplx x, cplx y, double rel_tol = 1e-9,
                                         double abs_floor = 1e-12);

struct InvariantDeviation {
    std::string_view name;
    double max_rel_dev = 0.0;
    std::uint64_t worst_sample = 0;
};

struct OrbitReport {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// H, L, M, N, Dxt in that order.
    std::array<InvariantDeviation, 5> invariants{};

    [[nodiscard]] double worst() const;
};

/**
 * @brief Monte Carlo check of invariance along a random SL(2)^4 orbit.
 *
 * Sample i draws its four operators from Rng(seed, i), so the report only
 * depends on (state, samples, seed). Samples are evaluated on up to
 * `threads` workers (0 = hardware concurrency) and merged in index order.
 */
[[nodiscard]] OrbitReport orbit_invariance_report(const PureState4 &state,
                                                  std::uint64_t samples, std::uint64_t seed,
                                                  unsigned threads = 0);

/// The quartet used for orbit sample `index` under `seed`.
[[nodiscard]] LocalOperatorQuartet orbit_sample_quartet(std::uint64_t seed,
                                                        std::uint64_t index);

[[nodiscard]] std::string verdict_to_json(const EquivalenceVerdict &v);
[[nodiscard]] std::string orbit_report_to_json(const OrbitReport &r);

} // namespace fourq
