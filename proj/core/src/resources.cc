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

#include "dictenc/resources.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "dictenc/errors.h"
#include "dictenc/synthesis.h"
#include "json.hpp"

namespace dictenc {

std::string_view to_string(Protocol protocol) {
    switch (protocol) {
        case Protocol::kDictionary:
            return "dictionary";
        case Protocol::kPrepUnprep:
            return "prep-unprep";
        case Protocol::kFrobeniusCsp:
            return "frobenius-csp";
    }
    return "unknown";
}

namespace {

void require_positive(std::uint64_t v, const char *what, const char *who) {
    if (v == 0) {
        throw DomainError(std::string(who) + ": " + what + " must be positive");
    }
}

ResourceReport make_report(Protocol protocol, double depth, double ancilla, double subnorm) {
    ResourceReport r;
    r.protocol = protocol;
    r.depth_model = depth;
    r.ancilla_model = ancilla;
    r.subnormalization = subnorm;
    r.time_metric = depth * subnorm;
    return r;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

SbmCost sbm_cost(std::uint64_t index_bits, std::uint64_t word_bits, std::uint64_t sparsity) {
    require_positive(index_bits, "index_bits", "sbm_cost");
    require_positive(word_bits, "word_bits", "sbm_cost");
    require_positive(sparsity, "sparsity", "sbm_cost");
    double product = static_cast<double>(index_bits) * static_cast<double>(sparsity) * static_cast<double>(word_bits);
    return {std::log2(product), product};
}

ResourceReport dictionary_cost(unsigned n, std::uint64_t s, std::uint64_t s0, double subnormalization) {
    require_positive(n, "n", "dictionary_cost");
    require_positive(s, "s", "dictionary_cost");
    require_positive(s0, "s0", "dictionary_cost");
    double l = ceil_log2(s0);
    double width = (l + n + 1) * n * static_cast<double>(s);
    ResourceReport r = make_report(Protocol::kDictionary, 3 * std::log2(width) + l + 2, 3 * width + std::exp2(l),
                                   subnormalization);
    if (l > n) {
        r.warnings.push_back("ceil(log2 s0) = " + fmt(l) + " exceeds n = " + std::to_string(n) +
                             "; outside the modelled regime");
    }
    r.warnings.push_back("additive constant 2 (stages 1 and 5) is a model convention");
    return r;
}

ResourceReport prep_unprep_cost(unsigned n, std::uint64_t distinct, std::uint64_t multiplicity, std::uint64_t max_col,
                                std::uint64_t max_row, std::int64_t invalid_count, double subnormalization) {
    require_positive(n, "n", "prep_unprep_cost");
    require_positive(distinct, "D", "prep_unprep_cost");
    require_positive(multiplicity, "M", "prep_unprep_cost");
    require_positive(max_col, "S_c", "prep_unprep_cost");
    require_positive(max_row, "S_r", "prep_unprep_cost");
    unsigned log_d = ceil_log2(distinct);
    if (log_d > ceil_log2(max_col) || log_d > ceil_log2(max_row)) {
        throw InapplicableError("prep_unprep_cost: ceil(log2 D) = " + std::to_string(log_d) +
                                " exceeds ceil(log2 S_c) = " + std::to_string(ceil_log2(max_col)) +
                                " or ceil(log2 S_r) = " + std::to_string(ceil_log2(max_row)));
    }
    double nd = n;
    ResourceReport r = make_report(Protocol::kPrepUnprep, nd * std::exp2(nd / 2), std::exp2(2 * nd) / nd,
                                   subnormalization);
    if (invalid_count < 0) {
        r.warnings.push_back("negative invalid-entry count " + std::to_string(invalid_count));
    }
    return r;
}

ResourceReport csp_cost(unsigned n, std::uint64_t s, double subnormalization) {
    require_positive(n, "n", "csp_cost");
    require_positive(s, "s", "csp_cost");
    double nd = n;
    return make_report(Protocol::kFrobeniusCsp, nd + std::log2(nd * static_cast<double>(s)), std::exp2(2 * nd),
                       subnormalization);
}

PrepUnprepParameters prep_unprep_parameters(const SparseMatrix &a) {
    if (a.empty()) {
        throw DomainError("prep_unprep_parameters: matrix is empty");
    }
    auto less = [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    };
    std::map<Complex, std::uint64_t, decltype(less)> counts(less);
    std::map<Index, std::uint64_t> cols;
    std::map<Index, std::uint64_t> rows;
    for (const auto &t : a.triplets()) {
        ++counts[t.value];
        ++cols[t.col];
        ++rows[t.row];
    }
    PrepUnprepParameters p;
    p.distinct = counts.size();
    double value_sum = 0;
    for (const auto &[v, c] : counts) {
        p.multiplicity = std::max(p.multiplicity, c);
        value_sum += std::abs(v);
    }
    for (const auto &[k, c] : cols) {
        p.max_col = std::max(p.max_col, c);
    }
    for (const auto &[k, c] : rows) {
        p.max_row = std::max(p.max_row, c);
    }
    p.invalid_count = static_cast<std::int64_t>(std::uint64_t{1} << (ceil_log2(p.distinct) + ceil_log2(p.multiplicity))) -
                      static_cast<std::int64_t>(a.nnz());
    p.subnormalization =
        std::sqrt(static_cast<double>(p.max_col) * static_cast<double>(p.max_row)) / static_cast<double>(p.distinct) *
        value_sum;
    return p;
}

std::vector<ComparisonRow> compare(const SparseMatrix &a, const Dictionary &d, const CompareOptions &options) {
    unsigned n = std::max(a.qubits(), 1u);
    std::uint64_t s = std::max<std::uint64_t>(a.nnz(), 1);
    std::vector<ComparisonRow> rows;

    ComparisonRow dict{dictionary_cost(n, s, std::max<std::size_t>(d.item_count(), 1), subnormalization(d)), true, ""};
    std::size_t width = 2 * d.n + 1 + d.index_bits();
    if (width <= options.measure_cap) {
        BlockEncoding be = decompose(assemble(d));
        std::size_t measured = depth(be.circuit);
        dict.report.measured_depth = measured;
        dict.report.measured_gates = count_gates(be.circuit).total();
        dict.report.measured_ancilla = be.ancilla_count;
        dict.report.measured_time_metric = static_cast<double>(measured) * dict.report.subnormalization;
    } else {
        dict.note = "not measured: " + std::to_string(width) + " qubits above the measurement cap";
    }
    rows.push_back(std::move(dict));

    PrepUnprepParameters p = prep_unprep_parameters(a);
    try {
        rows.push_back({prep_unprep_cost(n, p.distinct, p.multiplicity, p.max_col, p.max_row, p.invalid_count,
                                         p.subnormalization),
                        true, ""});
    } catch (const InapplicableError &e) {
        ComparisonRow row;
        row.report.protocol = Protocol::kPrepUnprep;
        row.report.subnormalization = p.subnormalization;
        row.applicable = false;
        row.note = e.what();
        rows.push_back(std::move(row));
    }

    rows.push_back({csp_cost(n, s, frobenius_norm(a)), true, ""});
    return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows) {
    std::ostringstream out;
    out << "protocol,depth_model,ancilla_model,subnorm,time_metric,measured_depth,measured_gates\n";
    for (const auto &row : rows) {
        const auto &r = row.report;
        out << to_string(r.protocol) << ",";
        if (row.applicable) {
            out << fmt(r.depth_model) << "," << fmt(r.ancilla_model) << ",";
        } else {
            out << "NA,NA,";
        }
        out << fmt(r.subnormalization) << "," << (row.applicable ? fmt(r.time_metric) : "NA") << ",";
        out << (r.measured_depth ? std::to_string(*r.measured_depth) : "") << ",";
        out << (r.measured_gates ? std::to_string(*r.measured_gates) : "") << "\n";
    }
    return out.str();
}

std::string comparison_text(const std::vector<ComparisonRow> &rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-14s %14s %16s %12s %14s %10s %10s\n", "protocol", "depth_model",
                  "ancilla_model", "subnorm", "time_metric", "depth", "gates");
    out << line;
    for (const auto &row : rows) {
        const auto &r = row.report;
        std::string depth = r.measured_depth ? std::to_string(*r.measured_depth) : "-";
        std::string gates = r.measured_gates ? std::to_string(*r.measured_gates) : "-";
        if (row.applicable) {
            std::snprintf(line, sizeof(line), "%-14s %14.4f %16.4g %12.6f %14.4f %10s %10s\n",
                          std::string(to_string(r.protocol)).c_str(), r.depth_model, r.ancilla_model,
                          r.subnormalization, r.time_metric, depth.c_str(), gates.c_str());
        } else {
            std::snprintf(line, sizeof(line), "%-14s %14s %16s %12.6f %14s %10s %10s\n",
                          std::string(to_string(r.protocol)).c_str(), "n/a", "n/a", r.subnormalization, "n/a",
                          depth.c_str(), gates.c_str());
        }
        out << line;
        if (!row.note.empty()) {
            out << "  note: " << row.note << "\n";
        }
    }
    return out.str();
}

std::string ResourceReport::to_json() const {
    nlohmann::ordered_json j;
    j["protocol"] = to_string(protocol);
    j["depth_model"] = depth_model;
    j["ancilla_model"] = ancilla_model;
    j["subnormalization"] = subnormalization;
    j["time_metric"] = time_metric;
    j["measured_depth"] = measured_depth ? nlohmann::ordered_json(*measured_depth) : nullptr;
    j["measured_ancilla"] = measured_ancilla ? nlohmann::ordered_json(*measured_ancilla) : nullptr;
    j["measured_gates"] = measured_gates ? nlohmann::ordered_json(*measured_gates) : nullptr;
    j["measured_time_metric"] = measured_time_metric ? nlohmann::ordered_json(*measured_time_metric) : nullptr;
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
}

}  // namespace dictenc
