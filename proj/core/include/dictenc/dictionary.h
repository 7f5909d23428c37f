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

#ifndef DICTENC_DICTIONARY_H
#define DICTENC_DICTIONARY_H

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dictenc/sparse_matrix.h"

namespace dictenc {

/// One key of the dictionary: a shared nonzero value and the column -> row map
/// i = c(j) over the item's column set.
struct DataItem {
    Complex value;
    std::map<Index, Index> rows_by_column;

    std::size_t size() const {
        return rows_by_column.size();
    }
    bool operator==(const DataItem &) const = default;
};

/// Dictionary of a 2^n x 2^n matrix. Each item's map must be injective
/// (no two columns share a row) and coordinate sets of items are disjoint.
struct Dictionary {
    unsigned n = 0;
    std::vector<DataItem> items;

    /// s0, the number of data items.
    std::size_t item_count() const {
        return items.size();
    }
    /// m = ceil(log2 s0), width of the index register.
    unsigned index_bits() const {
        return ceil_log2(items.size());
    }
    /// s, the number of encoded nonzeros.
    std::size_t nnz() const;

    bool operator==(const Dictionary &) const = default;
};

/// Dictionary variant for non-negative symmetric matrices. Each item holds at
/// most one row per column; for a fixed column, the rows held by different
/// items are distinct, so l -> c_j(l) is injective. Row-injectivity within an
/// item is not required.
struct HermitianDictionary {
    unsigned n = 0;
    std::vector<DataItem> items;

    std::size_t item_count() const {
        return items.size();
    }
    unsigned index_bits() const {
        return ceil_log2(items.size());
    }
    std::size_t nnz() const;

    bool operator==(const HermitianDictionary &) const = default;
};

enum class ViolationKind {
    kZeroValue,
    kOutOfRange,
    kInjectivity,
    kDisjointness,
    kCoverage,
    kValueMismatch,
    kDimensionMismatch,
    kNotRealNonNegative,
    kCapacity,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const {
        return violations.empty();
    }
    std::size_t count(ViolationKind kind) const;
    std::string summary() const;
};

/// Structural checks that need no reference matrix: nonzero values, index
/// range, per-item injectivity, cross-item disjointness.
ValidationReport validate(const Dictionary &d);

/// Full check against `a`: the structural checks plus value consistency
/// (|item value - a_ij| <= value_tol) and coverage of every nonzero of `a`.
ValidationReport validate(const Dictionary &d, const SparseMatrix &a, double value_tol = 0);

enum class MatchingMode {
    /// Bipartite edge coloring: each value class splits into exactly max-degree items.
    kExact,
    /// Repeated maximal-matching extraction; may exceed the minimum.
    kGreedy,
};

struct BuildOptions {
    /// 0 groups values by exact equality; otherwise a triplet joins the first
    /// class whose representative lies within value_tol, and the item carries
    /// the representative.
    double value_tol = 0;
    MatchingMode matching = MatchingMode::kExact;
};

/// Classifies the nonzeros of `a` into data items. Items are ordered by
/// descending |value|, ties broken by their smallest (column, row) coordinate.
Dictionary build_dictionary(const SparseMatrix &a, const BuildOptions &options = {});

/// Sum of |A_l| over all items.
double subnormalization(const Dictionary &d);
double subnormalization(const HermitianDictionary &d);

/// Matrix represented by the dictionary, triplets in row-major order.
SparseMatrix to_matrix(const Dictionary &d);
SparseMatrix to_matrix(const HermitianDictionary &d);

/// Hermitian-variant dictionary of a non-negative real symmetric matrix.
/// Throws DomainError for asymmetric, negative or complex input and
/// CapacityError when more than 2^n items would be needed.
HermitianDictionary hermitianize(const SparseMatrix &a);

ValidationReport validate(const HermitianDictionary &d);
ValidationReport validate(const HermitianDictionary &d, const SparseMatrix &a);

/// `{ "n": int, "items": [ { "value": [re, im], "map": [[j, i], ...] }, ... ] }`
std::string dictionary_to_json(const Dictionary &d);
/// Parses and structurally validates. Throws ParseError on malformed text or
/// on any structural violation.
Dictionary dictionary_from_json(std::string_view text);

/// Same layout with an extra `"kind": "hermitian"` member.
std::string hermitian_dictionary_to_json(const HermitianDictionary &d);
HermitianDictionary hermitian_dictionary_from_json(std::string_view text);

}  // namespace dictenc

#endif
