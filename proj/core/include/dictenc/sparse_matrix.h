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

#ifndef DICTENC_SPARSE_MATRIX_H
#define DICTENC_SPARSE_MATRIX_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dictenc/numerics.h"

namespace dictenc {

using Index = std::uint64_t;

struct Triplet {
    Complex value;
    Index row;
    Index col;

    bool operator==(const Triplet &) const = default;
};

/// Default qubit cap for dense materialization of a SparseMatrix.
inline constexpr unsigned kDenseMatrixCap = 10;

/// Coordinate-format complex matrix of dimension 2^n x 2^n.
///
/// Invariants (checked on construction): every value is finite and nonzero,
/// every index is below 2^n, and no (row, col) pair repeats.
class SparseMatrix {
   public:
    SparseMatrix() = default;
    SparseMatrix(unsigned n, std::vector<Triplet> triplets);

    unsigned qubits() const {
        return n_;
    }
    Index dim() const {
        return Index{1} << n_;
    }
    std::size_t nnz() const {
        return triplets_.size();
    }
    bool empty() const {
        return triplets_.empty();
    }
    std::span<const Triplet> triplets() const {
        return triplets_;
    }

    /// Value at (row, col), zero when absent. Linear scan; use for small checks only.
    Complex at(Index row, Index col) const;

    /// Same triplets in row-major (row, col) order, the order the MatrixMarket reader produces.
    SparseMatrix canonical() const;

    bool operator==(const SparseMatrix &) const = default;

   private:
    unsigned n_ = 0;
    std::vector<Triplet> triplets_;
};

/// sqrt(sum |value|^2), accumulated in triplet order.
double frobenius_norm(const SparseMatrix &a);

/// Dense materialization. Refuses when n exceeds `cap`.
DenseMatrix to_dense(const SparseMatrix &a, unsigned cap = kDenseMatrixCap);

/// Nonzero entries of a dense matrix, row-major order. Dimension must be a power of two.
SparseMatrix from_dense(const DenseMatrix &m);

/// Parses a MatrixMarket coordinate file (real or complex, general or symmetric).
///
/// Indices become 0-based, symmetric storage is expanded, explicit zeros are
/// dropped and the dimension is padded up to the next power of two.
SparseMatrix load_matrix_market(std::istream &in);
SparseMatrix load_matrix_market(std::string_view text);
SparseMatrix load_matrix_market_file(const std::string &path);

/// Emits `%%MatrixMarket matrix coordinate {real|complex} general` with 1-based indices.
/// The field is `real` when every imaginary part is zero.
void write_matrix_market(std::ostream &out, const SparseMatrix &a);
std::string to_matrix_market(const SparseMatrix &a);

}  // namespace dictenc

#endif
