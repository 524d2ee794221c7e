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
#include "fourq/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "fourq/error.hpp"

namespace fourq {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::WrongLength:
        return "WrongLength";
    case ErrorCode::NonFinite:
        return "NonFinite";
    case ErrorCode::ZeroState:
        return "ZeroState";
    case ErrorCode::FormatError:
        return "FormatError";
    case ErrorCode::UnknownGate:
        return "UnknownGate";
    case ErrorCode::QubitOutOfRange:
        return "QubitOutOfRange";
    case ErrorCode::SingularOperator:
        return "SingularOperator";
    case ErrorCode::UnknownName:
        return "UnknownName";
    case ErrorCode::EmptySubset:
        return "EmptySubset";
    case ErrorCode::InvalidSubset:
        return "InvalidSubset";
    case ErrorCode::ZeroDeterminant:
        return "ZeroDeterminant";
    case ErrorCode::InvalidTolerance:
        return "InvalidTolerance";
    }
    return "Unknown";
}

ComplexTolerance::ComplexTolerance(double abs_tol, double rel_tol)
    : abs_tol_(abs_tol), rel_tol_(rel_tol) {
    if (!(std::isfinite(abs_tol) && abs_tol > 0.0) ||
        !(std::isfinite(rel_tol) && rel_tol > 0.0)) {
        throw Error(ErrorCode::InvalidTolerance,
                    "tolerances must be positive and finite");
    }
}

PureState4 PureState4::make(std::span<const cplx> amplitudes) {
    if (amplitudes.size() != kDim) {
        throw Error(ErrorCode::WrongLength,
                    "expected 16 amplitudes, got " +
                        std::to_string(amplitudes.size()));
    }
    Amplitudes amps{};
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < kDim; ++k) {
        const cplx a = amplitudes[k];
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NonFinite,
                        "amplitude " + std::to_string(k) + " is not finite");
        }
        amps[k] = a;
        sum_sq += std::norm(a);
    }
    if (std::ranges::all_of(amps, [](cplx a) { return a == cplx{}; })) {
        throw Error(ErrorCode::ZeroState, "all amplitudes are zero");
    }
    const double norm = std::sqrt(sum_sq);
    if (!std::isfinite(norm)) {
        throw Error(ErrorCode::NonFinite, "state norm overflows");
    }
    return PureState4(amps, norm);
}

PureState4 PureState4::scaled(cplx factor) const {
    Amplitudes out{};
    std::ranges::transform(amps_, out.begin(),
                           [factor](cplx a) { return factor * a; });
    return make(out);
}

PureState4 PureState4::normalized() const { return scaled(1.0 / norm_); }

cplx inner_product(const PureState4 &bra, const PureState4 &ket) {
    cplx sum{};
    for (std::size_t k = 0; k < kDim; ++k) {
        sum += std::conj(bra[k]) * ket[k];
    }
    return sum;
}

namespace {

std::size_t argmax_magnitude(const PureState4 &s) {
    const auto &amps = s.amplitudes();
    const auto it = std::ranges::max_element(
        amps, [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
    return static_cast<std::size_t>(it - amps.begin());
}

double max_magnitude(const PureState4 &s) {
    return std::abs(s[argmax_magnitude(s)]);
}

} // namespace

bool equal_up_to_global_phase(const PureState4 &a, const PureState4 &b,
                              const ComplexTolerance &tol) {
    const std::size_t pivot = argmax_magnitude(b);
    const cplx ratio = a[pivot] / b[pivot];
    const cplx phase =
        std::abs(ratio) > 0.0 ? ratio / std::abs(ratio) : cplx{1.0, 0.0};

    const double bound = tol.abs_tol() * max_magnitude(a);
    for (std::size_t k = 0; k < kDim; ++k) {
        if (std::abs(a[k] - phase * b[k]) > bound) {
            return false;
        }
    }
    return true;
}

PureState4 swap_qubits(const PureState4 &state, int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4) {
        throw Error(ErrorCode::QubitOutOfRange, "qubit index must be 1..4");
    }
    const std::size_t mi = qubit_mask(i);
    const std::size_t mj = qubit_mask(j);
    PureState4::Amplitudes out{};
    for (std::size_t k = 0; k < kDim; ++k) {
        std::size_t src = k & ~(mi | mj);
        if ((k & mi) != 0) {
            src |= mj;
        }
        if ((k & mj) != 0) {
            src |= mi;
        }
        out[k] = state[src];
    }
    return make_state(out);
}

namespace {

// %.17g keeps every double exact on re-parse; integral values get ".0" so
// the document reads as floating point.
std::string render_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

[[noreturn]] void format_error(const std::string &what) {
    throw Error(ErrorCode::FormatError, what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + byte, '\n'));
}

} // namespace

std::string serialize_state(const PureState4 &state) {
    std::string out = "{\n  \"format\": \"fourq-state-v1\",\n  \"amplitudes\": [\n";
    for (std::size_t k = 0; k < kDim; ++k) {
        out += "    [" + render_double(state[k].real()) + ", " +
               render_double(state[k].imag()) + "]";
        out += (k + 1 < kDim) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

PureState4 parse_state(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        format_error("line " + std::to_string(line_of(text, e.byte)) +
                     ": invalid JSON (" + e.what() + ")");
    }
    if (!doc.is_object()) {
        format_error("top level: expected an object");
    }
    const auto fmt = doc.find("format");
    if (fmt == doc.end() || !fmt->is_string()) {
        format_error("field \"format\": missing or not a string");
    }
    if (fmt->get<std::string>() != "fourq-state-v1") {
        format_error("field \"format\": unsupported value \"" +
                     fmt->get<std::string>() + "\"");
    }
    const auto arr = doc.find("amplitudes");
    if (arr == doc.end() || !arr->is_array()) {
        format_error("field \"amplitudes\": missing or not an array");
    }
    if (arr->size() != kDim) {
        format_error("field \"amplitudes\": expected 16 entries, got " +
                     std::to_string(arr->size()));
    }
    PureState4::Amplitudes amps{};
    for (std::size_t k = 0; k < kDim; ++k) {
        const auto &pair = (*arr)[k];
        const std::string where = "field \"amplitudes[" + std::to_string(k) + "]\"";
        if (!pair.is_array() || pair.size() != 2) {
            format_error(where + ": expected [re, im]");
        }
        if (!pair[0].is_number() || !pair[1].is_number()) {
            format_error(where + ": components must be numbers");
        }
        amps[k] = cplx{pair[0].get<double>(), pair[1].get<double>()};
    }
    return make_state(amps);
}

} // namespace fourq
