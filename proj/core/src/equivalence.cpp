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
#include "fourq/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "fourq/error.hpp"
#include "json_util.hpp"

namespace fourq {

namespace {

constexpr std::array<std::string_view, 4> kComponentNames{"H", "L", "M", "Dxt"};

constexpr std::string_view kCaveat =
    "equal invariants are necessary for SLOCC equivalence and sufficient only "
    "for generic states";

// Rounding noise in a degree-2w invariant measures about eps * |psi|^(2w);
// generic nonzero values sit well above 8 eps * |psi|^(2w).
constexpr double kNoiseFactor = 8 * std::numeric_limits<double>::epsilon();

cplx ipow(cplx z, int n) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
        r *= z;
    }
    return r;
}

std::string pattern_text(const std::array<bool, 4> &zeros) {
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i != 0) {
            s += ", ";
        }
        s += std::string(kComponentNames[i]) + (zeros[i] ? "=0" : "!=0");
    }
    return s;
}

} // namespace

std::string_view to_string(VerdictKind kind) noexcept {
    switch (kind) {
    case VerdictKind::InvariantEquivalent:
        return "InvariantEquivalent";
    case VerdictKind::NotEquivalent:
        return "NotEquivalent";
    case VerdictKind::DegenerateInconclusive:
        return "DegenerateInconclusive";
    }
    return "Unknown";
}

double weighted_scale(const InvariantFingerprint &f) {
    return std::max({std::abs(f.H), std::sqrt(std::abs(f.L)), std::sqrt(std::abs(f.M)),
                     std::cbrt(std::abs(f.Dxt))});
}

std::array<bool, 4> zero_pattern(const InvariantFingerprint &f,
                                 const ComplexTolerance &tol) {
    const double s = weighted_scale(f);
    const auto comps = f.components();
    std::array<bool, 4> zeros{};
    for (std::size_t i = 0; i < 4; ++i) {
        const int w = InvariantFingerprint::kWeights[i];
        const double threshold = std::max(tol.abs_tol() * std::pow(s, w),
                                          kNoiseFactor * std::pow(f.scale, w));
        zeros[i] = !(std::abs(comps[i]) >= threshold) || s == 0.0;
    }
    return zeros;
}

bool satisfies_weighted_scaling(const InvariantFingerprint &u, const InvariantFingerprint &v,
                                cplx lambda, const ComplexTolerance &tol) {
    const auto zu = zero_pattern(u, tol);
    const auto zv = zero_pattern(v, tol);
    const auto cu = u.components();
    const auto cv = v.components();
    for (std::size_t i = 0; i < 4; ++i) {
        if (zu[i] != zv[i]) {
            return false;
        }
        if (zu[i]) {
            continue;
        }
        const cplx predicted = ipow(lambda, InvariantFingerprint::kWeights[i]) * cu[i];
        const double scale = std::max(std::abs(predicted), std::abs(cv[i]));
        if (std::abs(cv[i] - predicted) > tol.rel_tol() * scale) {
            return false;
        }
    }
    return true;
}

EquivalenceVerdict compare_fingerprints(const InvariantFingerprint &u,
                                        const InvariantFingerprint &v,
                                        const ComplexTolerance &tol) {
    const auto zu = zero_pattern(u, tol);
    const auto zv = zero_pattern(v, tol);
    const auto all_zero = [](const std::array<bool, 4> &z) {
        return std::ranges::all_of(z, [](bool b) { return b; });
    };

    if (zu != zv) {
        return {VerdictKind::NotEquivalent, std::nullopt,
                "zero-pattern mismatch (" + pattern_text(zu) + " vs " + pattern_text(zv) +
                    "); " + std::string(kCaveat)};
    }
    if (all_zero(zu)) {
        return {VerdictKind::DegenerateInconclusive, std::nullopt,
                "both fingerprints are all-zero; invariants cannot separate these "
                "orbits; " +
                    std::string(kCaveat)};
    }

    const auto cu = u.components();
    const auto cv = v.components();
    std::size_t lead = 0;
    while (zu[lead]) {
        ++lead;
    }
    const int weight = InvariantFingerprint::kWeights[lead];
    const cplx ratio = cv[lead] / cu[lead];
    const cplx principal = weight == 1 ? ratio : std::pow(ratio, 1.0 / weight);

    for (int k = 0; k < weight; ++k) {
        const cplx root_of_unity = std::polar(1.0, 2.0 * std::numbers::pi * k / weight);
        const cplx lambda = principal * root_of_unity;
        if (satisfies_weighted_scaling(u, v, lambda, tol)) {
            return {VerdictKind::InvariantEquivalent, lambda,
                    "fingerprints agree up to weighted rescaling; " + std::string(kCaveat)};
        }
    }
    return {VerdictKind::NotEquivalent, std::nullopt,
            "scale inconsistency: no lambda matches all nonzero components; " +
                std::string(kCaveat)};
}

InvariantFingerprint covariance_predict(const InvariantFingerprint &f, cplx det_product) {
    if (det_product == cplx{}) {
        throw Error(ErrorCode::ZeroDeterminant, "determinant product is zero");
    }
    const cplx d = det_product;
    return {d * f.H, d * d * f.L, d * d * f.M, d * d * d * f.Dxt, std::abs(d) * f.scale};
}

bool verify_witness(const PureState4 &a, const PureState4 &b, const LocalOperatorQuartet &q,
                    const ComplexTolerance &tol) {
    const PureState4 t = apply_quartet(q, a);
    std::size_t pivot = 0;
    double b_max = 0.0;
    for (std::size_t k = 0; k < kDim; ++k) {
        if (std::abs(t[k]) > std::abs(t[pivot])) {
            pivot = k;
        }
        b_max = std::max(b_max, std::abs(b[k]));
    }
    const cplx scalar = b[pivot] / t[pivot];
    if (scalar == cplx{}) {
        return false;
    }
    const double bound = tol.abs_tol() * b_max;
    for (std::size_t k = 0; k < kDim; ++k) {
        if (std::abs(b[k] - scalar * t[k]) > bound) {
            return false;
        }
    }
    return true;
}

double invariant_deviation(cplx x, cplx y, double rel_tol, double abs_floor) {
    const double denom = std::max({std::abs(x), std::abs(y), abs_floor / rel_tol});
    return std::abs(x - y) / denom;
}

double OrbitReport::worst() const {
    double w = 0.0;
    for (const auto &inv : invariants) {
        w = std::max(w, inv.max_rel_dev);
    }
    return w;
}

LocalOperatorQuartet orbit_sample_quartet(std::uint64_t seed, std::uint64_t index) {
    Rng rng(seed, index);
    const LocalOperator a = random_sl2(rng);
    const LocalOperator b = random_sl2(rng);
    const LocalOperator c = random_sl2(rng);
    const LocalOperator d = random_sl2(rng);
    return LocalOperatorQuartet({a, b, c, d});
}

namespace {

using FiveInvariants = std::array<cplx, 5>;

FiveInvariants five_invariants(const PureState4 &s) {
    return {inv_H(s), inv_L(s), inv_M(s), inv_N(s), inv_Dxt(s)};
}

} // namespace

OrbitReport orbit_invariance_report(const PureState4 &state, std::uint64_t samples,
                                    std::uint64_t seed, unsigned threads) {
    const FiveInvariants base = five_invariants(state);
    std::vector<std::array<double, 5>> devs(samples);

    const auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto moved = five_invariants(apply_quartet(orbit_sample_quartet(seed, i), state));
            for (std::size_t j = 0; j < 5; ++j) {
                devs[i][j] = invariant_deviation(base[j], moved[j]);
            }
        }
    };

    unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(samples, 1)));
    if (workers <= 1) {
        work(0, samples);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (samples + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(samples, w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(samples, begin + chunk);
            pool.emplace_back(work, begin, end);
        }
    }

    OrbitReport report;
    report.samples = samples;
    report.seed = seed;
    constexpr std::array<std::string_view, 5> kNames{"H", "L", "M", "N", "Dxt"};
    for (std::size_t j = 0; j < 5; ++j) {
        report.invariants[j].name = kNames[j];
    }
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            if (devs[i][j] > report.invariants[j].max_rel_dev) {
                report.invariants[j].max_rel_dev = devs[i][j];
                report.invariants[j].worst_sample = i;
            }
        }
    }
    return report;
}

std::string verdict_to_json(const EquivalenceVerdict &v) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(v.kind));
    j["lambda"] = v.lambda ? detail::complex_json(*v.lambda) : nlohmann::ordered_json(nullptr);
    j["reason"] = v.reason;
    return j.dump(2);
}

std::string orbit_report_to_json(const OrbitReport &r) {
    nlohmann::ordered_json j;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    for (const auto &inv : r.invariants) {
        j[std::string(inv.name)] = {{"max_rel_dev", inv.max_rel_dev},
                                    {"worst_sample", inv.worst_sample}};
    }
    return j.dump(2);
}

} // namespace fourq
