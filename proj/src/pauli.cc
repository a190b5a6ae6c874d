// Copyright 2026 The qmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmem/pauli.h"

#include <stdexcept>

namespace qmem {

namespace {
void require_same_size(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli dimension mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
}
}  // namespace

PauliOperator::PauliOperator(BitVector x_part, BitVector z_part) : x_(std::move(x_part)), z_(std::move(z_part)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("x and z parts must have equal length");
    }
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    PauliOperator result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set(q, PauliKind::X);
                break;
            case 'Y':
                result.set(q, PauliKind::Y);
                break;
            case 'Z':
                result.set(q, PauliKind::Z);
                break;
            default:
                throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[q]) + "'");
        }
    }
    return result;
}

PauliOperator PauliOperator::on(size_t num_qubits, std::span<const size_t> qubits, PauliKind kind) {
    PauliOperator result(num_qubits);
    for (size_t q : qubits) {
        if (q >= num_qubits) {
            throw std::out_of_range("qubit index out of range");
        }
        result.set(q, kind);
    }
    return result;
}

void PauliOperator::set(size_t q, PauliKind kind) {
    auto k = static_cast<uint8_t>(kind);
    x_.set(q, k & 1);
    z_.set(q, k & 2);
}

void PauliOperator::apply(size_t q, PauliKind kind) {
    auto k = static_cast<uint8_t>(kind);
    if (k & 1) {
        x_.flip(q);
    }
    if (k & 2) {
        z_.flip(q);
    }
}

size_t PauliOperator::weight() const {
    size_t total = 0;
    auto xw = x_.words();
    auto zw = z_.words();
    for (size_t k = 0; k < xw.size(); k++) {
        total += std::popcount(xw[k] | zw[k]);
    }
    return total;
}

std::vector<size_t> PauliOperator::support() const { return (x_ | z_).ones(); }

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    require_same_size(*this, other);
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    PauliOperator r = *this;
    r *= other;
    return r;
}

std::string PauliOperator::str() const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    std::string out(num_qubits(), 'I');
    for (size_t q = 0; q < out.size(); q++) {
        out[q] = kChars[static_cast<uint8_t>(at(q))];
    }
    return out;
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    require_same_size(a, b);
    return a.x_part().dot(b.z_part()) == a.z_part().dot(b.x_part());
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) { return a * b; }

}  // namespace qmem
