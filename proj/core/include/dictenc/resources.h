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

#ifndef DICTENC_RESOURCES_H
#define DICTENC_RESOURCES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dictenc/dictionary.h"
#include "dictenc/sparse_matrix.h"

namespace dictenc {

// Cost models use unit leading constants. Values tagged `_model` are
// never mixed with measured counts.

enum class Protocol {
    kDictionary,
    kPrepUnprep,
    kFrobeniusCsp,
};
std::string_view to_string(Protocol protocol);

struct SbmCost {
    double depth = 0;
    double ancilla = 0;
};

/// depth = log2(index_bits * sparsity * word_bits), ancilla = the product.
SbmCost sbm_cost(std::uint64_t index_bits, std::uint64_t word_bits, std::uint64_t sparsity);

struct ResourceReport {
    Protocol protocol = Protocol::kDictionary;
    double depth_model = 0;
    double ancilla_model = 0;
    double subnormalization = 0;
    /// depth_model * subnormalization.
    double time_metric = 0;
    std::optional<std::size_t> measured_depth;
    std::optional<std::size_t> measured_ancilla;
    std::optional<std::size_t> measured_gates;
    /// measured_depth * subnormalization, when measured.
    std::optional<double> measured_time_metric;
    std::vector<std::string> warnings;

    std::string to_json() const;
};

/// 3 log2((L+n+1) n s) + L + 2 with L = ceil(log2 s0); ancilla
/// 3 (L+n+1) n s + 2^L. Warns when L > n.
ResourceReport dictionary_cost(unsigned n, std::uint64_t s, std::uint64_t s0, double subnormalization = 1.0);

/// depth n 2^(n/2), ancilla 4^n / n. Throws InapplicableError unless
/// ceil(log2 D) <= ceil(log2 S_c) and ceil(log2 D) <= ceil(log2 S_r).
ResourceReport prep_unprep_cost(unsigned n, std::uint64_t distinct, std::uint64_t multiplicity, std::uint64_t max_col,
                                std::uint64_t max_row, std::int64_t invalid_count, double subnormalization = 1.0);

/// depth n + log2(n s), ancilla 2^(2n).
ResourceReport csp_cost(unsigned n, std::uint64_t s, double subnormalization = 1.0);

/// Matrix statistics of the PREP/UNPREP protocol.
struct PrepUnprepParameters {
    /// D, number of distinct nonzero values.
    std::uint64_t distinct = 0;
    /// M, largest multiplicity of a single value.
    std::uint64_t multiplicity = 0;
    /// S_c, S_r: largest column and row nonzero counts.
    std::uint64_t max_col = 0;
    std::uint64_t max_row = 0;
    /// 2^(ceil log D + ceil log M) - s.
    std::int64_t invalid_count = 0;
    /// sqrt(S_c S_r) / D * sum over distinct values |A_d|.
    double subnormalization = 0;
};
PrepUnprepParameters prep_unprep_parameters(const SparseMatrix &a);

struct CompareOptions {
    /// Measure the decomposed dictionary circuit when its non-pool width is
    /// at most this.
    unsigned measure_cap = 14;
};

struct ComparisonRow {
    ResourceReport report;
    bool applicable = true;
    std::string note;
};

/// One row per protocol: dictionary, prep-unprep, frobenius-csp.
std::vector<ComparisonRow> compare(const SparseMatrix &a, const Dictionary &d, const CompareOptions &options = {});

/// protocol,depth_model,ancilla_model,subnorm,time_metric,measured_depth,measured_gates
std::string comparison_csv(const std::vector<ComparisonRow> &rows);
std::string comparison_text(const std::vector<ComparisonRow> &rows);

}  // namespace dictenc

#endif
