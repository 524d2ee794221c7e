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
#include "fourq/local_ops.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "fourq/error.hpp"

namespace fourq {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

constexpr double kGaussianMinAbsDet = 0.1;

} // namespace

LocalOperator::LocalOperator(cplx m00, cplx m01, cplx m10, cplx m11)
    : m_{m00, m01, m10, m11}, det_(m00 * m11 - m01 * m10) {
    for (const cplx z : m_) {
        if (!finite(z)) {
            throw Error(ErrorCode::NonFinite, "operator entry is not finite");
        }
    }
    if (!(std::abs(det_) >= kMinAbsDet)) {
        throw Error(ErrorCode::SingularOperator,
                    "operator determinant below 1e-12 in magnitude");
    }
}

LocalOperator LocalOperator::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

LocalOperator LocalOperator::scaled(cplx factor) const {
    return {factor * m_[0], factor * m_[1], factor * m_[2], factor * m_[3]};
}

LocalOperator operator*(const LocalOperator &a, const LocalOperator &b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

LocalOperatorQuartet::LocalOperatorQuartet(const std::array<LocalOperator, 4> &ops)
    : ops_(ops),
      det_product_(ops[0].det() * ops[1].det() * ops[2].det() * ops[3].det()) {
    if (det_product_ == cplx{}) {
        throw Error(ErrorCode::SingularOperator, "determinant product underflows to zero");
    }
}

const LocalOperator &LocalOperatorQuartet::on(int qubit) const {
    if (qubit < 1 || qubit > 4) {
        throw Error(ErrorCode::QubitOutOfRange, "qubit index must be 1..4");
    }
    return ops_[static_cast<std::size_t>(qubit - 1)];
}

LocalOperator gate(Gate g) {
    const cplx i{0.0, 1.0};
    const double h = std::numbers::sqrt2 / 2.0;
    switch (g) {
    case Gate::I:
        return {1.0, 0.0, 0.0, 1.0};
    case Gate::X:
        return {0.0, 1.0, 1.0, 0.0};
    case Gate::Y:
        return {0.0, -i, i, 0.0};
    case Gate::Z:
        return {1.0, 0.0, 0.0, -1.0};
    case Gate::H:
        return {h, h, h, -h};
    }
    throw Error(ErrorCode::UnknownGate, "unknown gate enumerator");
}

LocalOperator gate(std::string_view name) {
    if (name == "I") {
        return gate(Gate::I);
    }
    if (name == "X") {
        return gate(Gate::X);
    }
    if (name == "Y") {
        return gate(Gate::Y);
    }
    if (name == "Z") {
        return gate(Gate::Z);
    }
    if (name == "H") {
        return gate(Gate::H);
    }
    throw Error(ErrorCode::UnknownGate, "unknown gate \"" + std::string(name) + "\"");
}

LocalOperatorQuartet parse_gate_string(std::string_view text) {
    std::vector<LocalOperator> ops;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start);
        while (!token.empty() && token.front() == ' ') {
            token.remove_prefix(1);
        }
        while (!token.empty() && token.back() == ' ') {
            token.remove_suffix(1);
        }
        ops.push_back(gate(token));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (ops.size() != 4) {
        throw Error(ErrorCode::WrongLength,
                    "gate string needs 4 comma-separated gates, got " +
                        std::to_string(ops.size()));
    }
    return LocalOperatorQuartet({ops[0], ops[1], ops[2], ops[3]});
}

PureState4 apply_single(const LocalOperator &op, int qubit, const PureState4 &state) {
    if (qubit < 1 || qubit > 4) {
        throw Error(ErrorCode::QubitOutOfRange, "qubit index must be 1..4");
    }
    const std::size_t mask = qubit_mask(qubit);
    PureState4::Amplitudes out{};
    for (std::size_t k0 = 0; k0 < kDim; ++k0) {
        if ((k0 & mask) != 0) {
            continue;
        }
        const std::size_t k1 = k0 | mask;
        const cplx a0 = state[k0];
        const cplx a1 = state[k1];
        out[k0] = op(0, 0) * a0 + op(0, 1) * a1;
        out[k1] = op(1, 0) * a0 + op(1, 1) * a1;
    }
    return make_state(out);
}

PureState4 apply_quartet(const LocalOperatorQuartet &q, const PureState4 &state) {
    PureState4 out = state;
    for (int qubit = 1; qubit <= 4; ++qubit) {
        out = apply_single(q.on(qubit), qubit, out);
    }
    return out;
}

LocalOperator random_su2(Rng &rng) {
    while (true) {
        const cplx alpha = rng.complex_normal();
        const cplx beta = rng.complex_normal();
        const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
        if (n == 0.0) {
            continue;
        }
        const cplx a = alpha / n;
        const cplx b = beta / n;
        return {a, -std::conj(b), b, std::conj(a)};
    }
}

namespace {

std::array<cplx, 4> gaussian_matrix(Rng &rng) {
    while (true) {
        std::array<cplx, 4> m{rng.complex_normal(), rng.complex_normal(),
                              rng.complex_normal(), rng.complex_normal()};
        if (std::abs(m[0] * m[3] - m[1] * m[2]) >= kGaussianMinAbsDet) {
            return m;
        }
    }
}

} // namespace

LocalOperator random_sl2(Rng &rng) {
    const auto m = gaussian_matrix(rng);
    const cplx det = m[0] * m[3] - m[1] * m[2];
    const cplx s = 1.0 / std::sqrt(det);
    return {s * m[0], s * m[1], s * m[2], s * m[3]};
}

LocalOperator random_gl2(Rng &rng) {
    const auto m = gaussian_matrix(rng);
    return {m[0], m[1], m[2], m[3]};
}

} // namespace fourq
