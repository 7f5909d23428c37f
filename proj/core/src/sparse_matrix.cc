// Copyright 2026 The dictenc Authors
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

#include "dictenc/sparse_matrix.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "dictenc/errors.h"

namespace dictenc {

SparseMatrix::SparseMatrix(unsigned n, std::vector<Triplet> triplets) : n_(n), triplets_(std::move(triplets)) {
    if (n_ >= 63) {
        throw CapacityError("SparseMatrix: qubit count " + std::to_string(n_) + " too large");
    }
    std::set<std::pair<Index, Index>> seen;
    for (const auto &t : triplets_) {
        if (!is_finite(t.value)) {
            throw DomainError("SparseMatrix: non-finite value");
        }
        if (t.value == Complex{}) {
            throw DomainError("SparseMatrix: explicit zero at (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ")");
        }
        if (t.row >= dim() || t.col >= dim()) {
            throw DomainError("SparseMatrix: index (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                              ") outside dimension " + std::to_string(dim()));
        }
        if (!seen.emplace(t.row, t.col).second) {
            throw DomainError("SparseMatrix: duplicate coordinate (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ")");
        }
    }
}

Complex SparseMatrix::at(Index row, Index col) const {
    for (const auto &t : triplets_) {
        if (t.row == row && t.col == col) {
            return t.value;
        }
    }
    return {};
}

SparseMatrix SparseMatrix::canonical() const {
    std::vector<Triplet> sorted = triplets_;
    std::sort(sorted.begin(), sorted.end(), [](const Triplet &a, const Triplet &b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    return SparseMatrix(n_, std::move(sorted));
}

double frobenius_norm(const SparseMatrix &a) {
    double total = 0;
    for (const auto &t : a.triplets()) {
        total += std::norm(t.value);
    }
    return std::sqrt(total);
}

DenseMatrix to_dense(const SparseMatrix &a, unsigned cap) {
    if (a.qubits() > cap) {
        throw CapacityError("to_dense: " + std::to_string(a.qubits()) + " qubits exceeds dense cap " +
                            std::to_string(cap));
    }
    DenseMatrix m(a.dim());
    for (const auto &t : a.triplets()) {
        m(t.row, t.col) = t.value;
    }
    return m;
}

SparseMatrix from_dense(const DenseMatrix &m) {
    if (!is_power_of_two(m.dim())) {
        throw DomainError("from_dense: dimension " + std::to_string(m.dim()) + " is not a power of two");
    }
    std::vector<Triplet> triplets;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (m(r, c) != Complex{}) {
                triplets.push_back({m(r, c), r, c});
            }
        }
    }
    return SparseMatrix(ceil_log2(m.dim()), std::move(triplets));
}

}  // namespace dictenc
