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

#include "dictenc/dictionary.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "dictenc/errors.h"
#include "edge_coloring.h"

namespace dictenc {
namespace {

std::string coord(Index row, Index col) {
    return "(" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

void add(ValidationReport &report, ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
}

// Range, disjointness, and optionally per-item row injectivity.
ValidationReport check_structure(unsigned n, const std::vector<DataItem> &items, bool require_injective) {
    ValidationReport report;
    Index dim = Index{1} << n;
    std::map<std::pair<Index, Index>, std::size_t> owner;
    for (std::size_t l = 0; l < items.size(); ++l) {
        const auto &item = items[l];
        if (!is_finite(item.value) || item.value == Complex{}) {
            add(report, ViolationKind::kZeroValue, "item " + std::to_string(l) + " has a zero or non-finite value");
        }
        std::map<Index, Index> column_of_row;
        for (const auto &[col, row] : item.rows_by_column) {
            if (row >= dim || col >= dim) {
                add(report, ViolationKind::kOutOfRange,
                    "item " + std::to_string(l) + " coordinate " + coord(row, col) + " outside dimension " +
                        std::to_string(dim));
                continue;
            }
            if (require_injective) {
                auto [it, fresh] = column_of_row.emplace(row, col);
                if (!fresh) {
                    add(report, ViolationKind::kInjectivity,
                        "item " + std::to_string(l) + " maps columns " + std::to_string(it->second) + " and " +
                            std::to_string(col) + " to row " + std::to_string(row));
                }
            }
            auto [it, fresh] = owner.emplace(std::pair(row, col), l);
            if (!fresh) {
                add(report, ViolationKind::kDisjointness,
                    "items " + std::to_string(it->second) + " and " + std::to_string(l) + " both hold " +
                        coord(row, col));
            }
        }
    }
    return report;
}

void check_against(ValidationReport &report, unsigned n, const std::vector<DataItem> &items, const SparseMatrix &a,
                   double value_tol) {
    if (a.qubits() != n) {
        add(report, ViolationKind::kDimensionMismatch,
            "dictionary has n = " + std::to_string(n) + ", matrix has n = " + std::to_string(a.qubits()));
        return;
    }
    std::map<std::pair<Index, Index>, Complex> entries;
    for (const auto &t : a.triplets()) {
        entries.emplace(std::pair(t.row, t.col), t.value);
    }
    std::map<std::pair<Index, Index>, bool> covered;
    for (std::size_t l = 0; l < items.size(); ++l) {
        for (const auto &[col, row] : items[l].rows_by_column) {
            auto it = entries.find({row, col});
            Complex actual = it == entries.end() ? Complex{} : it->second;
            if (std::abs(actual - items[l].value) > value_tol) {
                std::ostringstream msg;
                msg << "item " << l << " claims value " << items[l].value << " at " << coord(row, col)
                    << " but the matrix holds " << actual;
                add(report, ViolationKind::kValueMismatch, msg.str());
            }
            covered[{row, col}] = true;
        }
    }
    for (const auto &[rc, v] : entries) {
        if (!covered.contains(rc)) {
            add(report, ViolationKind::kCoverage, "nonzero at " + coord(rc.first, rc.second) + " is in no item");
        }
    }
}

struct ValueClass {
    Complex representative;
    std::vector<internal::Edge> edges;
};

std::vector<ValueClass> group_by_value(const SparseMatrix &a, double value_tol) {
    std::vector<ValueClass> classes;
    std::map<std::pair<double, double>, std::size_t> exact;
    // Column-major edge order keeps the coloring deterministic and independent
    // of how the caller ordered the triplets.
    SparseMatrix sorted = a.canonical();
    std::vector<Triplet> ordered(sorted.triplets().begin(), sorted.triplets().end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const Triplet &x, const Triplet &y) { return x.col < y.col; });
    for (const auto &t : ordered) {
        std::size_t k = classes.size();
        if (value_tol == 0) {
            auto [it, fresh] = exact.emplace(std::pair(t.value.real(), t.value.imag()), k);
            k = it->second;
        } else {
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (std::abs(classes[c].representative - t.value) <= value_tol) {
                    k = c;
                    break;
                }
            }
        }
        if (k == classes.size()) {
            classes.push_back({t.value, {}});
        }
        classes[k].edges.emplace_back(t.row, t.col);
    }
    return classes;
}

std::pair<Index, Index> first_coordinate(const DataItem &item) {
    if (item.rows_by_column.empty()) {
        return {0, 0};
    }
    const auto &[col, row] = *item.rows_by_column.begin();
    return {col, row};
}

void order_items(std::vector<DataItem> &items) {
    std::stable_sort(items.begin(), items.end(), [](const DataItem &x, const DataItem &y) {
        double ax = std::abs(x.value);
        double ay = std::abs(y.value);
        if (ax != ay) {
            return ax > ay;
        }
        return first_coordinate(x) < first_coordinate(y);
    });
}

SparseMatrix items_to_matrix(unsigned n, const std::vector<DataItem> &items) {
    std::map<std::pair<Index, Index>, Complex> entries;
    for (std::size_t l = 0; l < items.size(); ++l) {
        for (const auto &[col, row] : items[l].rows_by_column) {
            if (!entries.emplace(std::pair(row, col), items[l].value).second) {
                throw DomainError("to_matrix: coordinate " + coord(row, col) + " appears in more than one item");
            }
        }
    }
    std::vector<Triplet> triplets;
    triplets.reserve(entries.size());
    for (const auto &[rc, v] : entries) {
        triplets.push_back({v, rc.first, rc.second});
    }
    return SparseMatrix(n, std::move(triplets));
}

std::size_t count_entries(const std::vector<DataItem> &items) {
    std::size_t total = 0;
    for (const auto &item : items) {
        total += item.size();
    }
    return total;
}

}  // namespace

std::size_t Dictionary::nnz() const {
    return count_entries(items);
}

std::size_t HermitianDictionary::nnz() const {
    return count_entries(items);
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::kZeroValue:
            return "zero-value";
        case ViolationKind::kOutOfRange:
            return "out-of-range";
        case ViolationKind::kInjectivity:
            return "injectivity";
        case ViolationKind::kDisjointness:
            return "disjointness";
        case ViolationKind::kCoverage:
            return "coverage";
        case ViolationKind::kValueMismatch:
            return "value-mismatch";
        case ViolationKind::kDimensionMismatch:
            return "dimension-mismatch";
        case ViolationKind::kNotRealNonNegative:
            return "not-real-non-negative";
        case ViolationKind::kCapacity:
            return "capacity";
    }
    return "unknown";
}

std::size_t ValidationReport::count(ViolationKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation &v) { return v.kind == kind; }));
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto &v : violations) {
        out += std::string(to_string(v.kind)) + ": " + v.message + "\n";
    }
    return out;
}

ValidationReport validate(const Dictionary &d) {
    return check_structure(d.n, d.items, true);
}

ValidationReport validate(const Dictionary &d, const SparseMatrix &a, double value_tol) {
    ValidationReport report = validate(d);
    check_against(report, d.n, d.items, a, value_tol);
    return report;
}

Dictionary build_dictionary(const SparseMatrix &a, const BuildOptions &options) {
    if (a.empty()) {
        throw DomainError("build_dictionary: matrix has no nonzeros");
    }
    if (options.value_tol < 0) {
        throw DomainError("build_dictionary: value_tol must be non-negative");
    }
    Dictionary d;
    d.n = a.qubits();
    for (const auto &cls : group_by_value(a, options.value_tol)) {
        std::vector<std::size_t> part = options.matching == MatchingMode::kExact
                                            ? internal::bipartite_edge_coloring(cls.edges)
                                            : internal::greedy_matching_decomposition(cls.edges);
        std::size_t parts = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
        std::vector<DataItem> local(parts, DataItem{cls.representative, {}});
        for (std::size_t e = 0; e < cls.edges.size(); ++e) {
            const auto &[row, col] = cls.edges[e];
            local[part[e]].rows_by_column.emplace(col, row);
        }
        for (auto &item : local) {
            if (!item.rows_by_column.empty()) {
                d.items.push_back(std::move(item));
            }
        }
    }
    order_items(d.items);
    return d;
}

double subnormalization(const Dictionary &d) {
    double total = 0;
    for (const auto &item : d.items) {
        total += std::abs(item.value);
    }
    return total;
}

double subnormalization(const HermitianDictionary &d) {
    double total = 0;
    for (const auto &item : d.items) {
        total += std::abs(item.value);
    }
    return total;
}

SparseMatrix to_matrix(const Dictionary &d) {
    return items_to_matrix(d.n, d.items);
}

SparseMatrix to_matrix(const HermitianDictionary &d) {
    return items_to_matrix(d.n, d.items);
}

HermitianDictionary hermitianize(const SparseMatrix &a) {
    std::map<std::pair<Index, Index>, Complex> entries;
    for (const auto &t : a.triplets()) {
        if (t.value.imag() != 0 || t.value.real() < 0) {
            std::ostringstream msg;
            msg << "hermitianize: entry " << t.value << " at " << coord(t.row, t.col) << " is not real non-negative";
            throw DomainError(msg.str());
        }
        entries.emplace(std::pair(t.row, t.col), t.value);
    }
    for (const auto &[rc, v] : entries) {
        auto mirror = entries.find({rc.second, rc.first});
        if (mirror == entries.end() || mirror->second != v) {
            throw DomainError("hermitianize: matrix is not symmetric at " + coord(rc.first, rc.second));
        }
    }

    HermitianDictionary hd;
    hd.n = a.qubits();
    // Within a value class the k-th entry of each column (in row order) goes
    // to the class's k-th item; the class then needs exactly its largest
    // column count of items.
    std::map<double, std::map<Index, std::vector<Index>>> classes;
    for (const auto &[rc, v] : entries) {
        classes[v.real()][rc.second].push_back(rc.first);
    }
    for (const auto &[value, columns] : classes) {
        std::size_t width = 0;
        for (const auto &[col, rows] : columns) {
            width = std::max(width, rows.size());
        }
        std::vector<DataItem> local(width, DataItem{Complex(value, 0), {}});
        for (const auto &[col, rows] : columns) {
            for (std::size_t k = 0; k < rows.size(); ++k) {
                local[k].rows_by_column.emplace(col, rows[k]);
            }
        }
        for (auto &item : local) {
            hd.items.push_back(std::move(item));
        }
    }
    order_items(hd.items);
    if (hd.items.size() > a.dim()) {
        throw CapacityError("hermitianize: " + std::to_string(hd.items.size()) + " items exceed 2^n = " +
                            std::to_string(a.dim()));
    }
    return hd;
}

ValidationReport validate(const HermitianDictionary &d) {
    ValidationReport report = check_structure(d.n, d.items, false);
    for (std::size_t l = 0; l < d.items.size(); ++l) {
        Complex v = d.items[l].value;
        if (v.imag() != 0 || v.real() < 0) {
            add(report, ViolationKind::kNotRealNonNegative, "item " + std::to_string(l) + " value is not real >= 0");
        }
    }
    std::map<std::pair<Index, Index>, Complex> entries;
    for (const auto &item : d.items) {
        for (const auto &[col, row] : item.rows_by_column) {
            entries.emplace(std::pair(row, col), item.value);
        }
    }
    for (const auto &[rc, v] : entries) {
        auto mirror = entries.find({rc.second, rc.first});
        if (mirror == entries.end() || mirror->second != v) {
            add(report, ViolationKind::kValueMismatch,
                "represented matrix is not symmetric at " + coord(rc.first, rc.second));
        }
    }
    if (d.items.size() > (Index{1} << d.n)) {
        add(report, ViolationKind::kCapacity,
            std::to_string(d.items.size()) + " items exceed 2^n = " + std::to_string(Index{1} << d.n));
    }
    return report;
}

ValidationReport validate(const HermitianDictionary &d, const SparseMatrix &a) {
    ValidationReport report = validate(d);
    check_against(report, d.n, d.items, a, 0);
    return report;
}

}  // namespace dictenc
