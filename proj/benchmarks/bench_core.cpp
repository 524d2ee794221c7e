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
#include <array>

#include <benchmark/benchmark.h>

#include "fourq/catalog.hpp"
#include "fourq/entanglement.hpp"
#include "fourq/equivalence.hpp"
#include "fourq/invariants.hpp"
#include "fourq/local_ops.hpp"
#include "fourq/rng.hpp"

namespace {

fourq::PureState4 random_state(fourq::Rng &rng) {
    std::array<fourq::cplx, fourq::kDim> a{};
    for (auto &z : a) {
        z = rng.complex_normal();
    }
    return fourq::make_state(a).normalized();
}

void BM_Fingerprint(benchmark::State &st) {
    fourq::Rng rng(1);
    const auto psi = random_state(rng);
    for (auto _ : st) {
        benchmark::DoNotOptimize(fourq::fingerprint(psi));
    }
}
BENCHMARK(BM_Fingerprint);

void BM_InvDxt(benchmark::State &st) {
    fourq::Rng rng(2);
    const auto psi = random_state(rng);
    for (auto _ : st) {
        benchmark::DoNotOptimize(fourq::inv_Dxt(psi));
    }
}
BENCHMARK(BM_InvDxt);

void BM_ApplyQuartet(benchmark::State &st) {
    fourq::Rng rng(3);
    const auto psi = random_state(rng);
    const auto q = fourq::orbit_sample_quartet(3, 0);
    for (auto _ : st) {
        benchmark::DoNotOptimize(fourq::apply_quartet(q, psi));
    }
}
BENCHMARK(BM_ApplyQuartet);

void BM_PartialTracePair(benchmark::State &st) {
    fourq::Rng rng(4);
    const auto psi = random_state(rng);
    const std::array<int, 2> kept{1, 3};
    for (auto _ : st) {
        benchmark::DoNotOptimize(fourq::partial_trace(psi, kept));
    }
}
BENCHMARK(BM_PartialTracePair);

void BM_Compare(benchmark::State &st) {
    const auto u = fourq::fingerprint(fourq::named_state("chi"));
    const auto v = fourq::fingerprint(fourq::named_state("phi_m2"));
    for (auto _ : st) {
        benchmark::DoNotOptimize(fourq::compare_fingerprints(u, v));
    }
}
BENCHMARK(BM_Compare);

void BM_OrbitReport(benchmark::State &st) {
    const auto &chi = fourq::named_state("chi");
    const auto samples = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(fourq::orbit_invariance_report(chi, samples, 42, 1));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_OrbitReport)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
