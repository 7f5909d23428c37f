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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "dictenc/errors.h"
#include "dictenc/sparse_matrix.h"

namespace dictenc {
namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split_ws(const std::string &line) {
    std::istringstream ss(line);
    std::vector<std::string> words;
    std::string w;
    while (ss >> w) {
        words.push_back(w);
    }
    return words;
}

double parse_double(const std::string &word, std::size_t line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError("expected a number, got '" + word + "'", line);
    }
    return value;
}

Index parse_index(const std::string &word, std::size_t line) {
    Index value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError("expected a non-negative integer, got '" + word + "'", line);
    }
    return value;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SparseMatrix load_matrix_market(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError("empty input", 1);
    }
    ++line_no;
    auto header = split_ws(lowercase(line));
    if (header.size() != 5 || header[0] != "%%matrixmarket" || header[1] != "matrix") {
        throw ParseError("expected '%%MatrixMarket matrix <format> <field> <symmetry>' header", line_no);
    }
    if (header[2] != "coordinate") {
        throw UnsupportedFormatError("only coordinate format is supported, got '" + header[2] + "'", line_no);
    }
    bool is_complex = false;
    if (header[3] == "complex") {
        is_complex = true;
    } else if (header[3] == "pattern") {
        throw UnsupportedFormatError("pattern matrices carry no values", line_no);
    } else if (header[3] != "real" && header[3] != "integer") {
        throw ParseError("unknown field '" + header[3] + "'", line_no);
    }
    bool symmetric = false;
    if (header[4] == "symmetric") {
        symmetric = true;
    } else if (header[4] == "hermitian" || header[4] == "skew-symmetric") {
        throw UnsupportedFormatError("symmetry '" + header[4] + "' is not supported", line_no);
    } else if (header[4] != "general") {
        throw ParseError("unknown symmetry '" + header[4] + "'", line_no);
    }

    std::vector<std::string> size_words;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%') {
            continue;
        }
        size_words = split_ws(line);
        break;
    }
    if (size_words.size() != 3) {
        throw ParseError("expected size line 'rows cols entries'", line_no);
    }
    Index rows = parse_index(size_words[0], line_no);
    Index cols = parse_index(size_words[1], line_no);
    Index declared = parse_index(size_words[2], line_no);
    if (rows == 0 || cols == 0) {
        throw ParseError("matrix dimensions must be positive", line_no);
    }
    if (symmetric && rows != cols) {
        throw ParseError("symmetric matrix must be square", line_no);
    }
    unsigned n = ceil_log2(std::max(rows, cols));

    std::map<std::pair<Index, Index>, Complex> entries;
    std::map<std::pair<Index, Index>, std::size_t> origin;
    Index seen = 0;
    auto insert = [&](Index r, Index c, Complex v) {
        auto [it, fresh] = origin.emplace(std::pair(r, c), line_no);
        if (!fresh) {
            throw ParseError("duplicate coordinate (" + std::to_string(r + 1) + ", " + std::to_string(c + 1) +
                                 "), first seen on line " + std::to_string(it->second),
                             line_no);
        }
        entries.emplace(std::pair(r, c), v);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%') {
            continue;
        }
        auto words = split_ws(line);
        std::size_t expected = is_complex ? 4 : 3;
        if (words.size() != expected) {
            throw ParseError("expected " + std::to_string(expected) + " fields, got " + std::to_string(words.size()),
                             line_no);
        }
        Index i = parse_index(words[0], line_no);
        Index j = parse_index(words[1], line_no);
        if (i < 1 || i > rows || j < 1 || j > cols) {
            throw ParseError("index (" + words[0] + ", " + words[1] + ") out of range", line_no);
        }
        Complex v(parse_double(words[2], line_no), is_complex ? parse_double(words[3], line_no) : 0.0);
        if (!is_finite(v)) {
            throw ParseError("non-finite value", line_no);
        }
        ++seen;
        insert(i - 1, j - 1, v);
        if (symmetric && i != j) {
            insert(j - 1, i - 1, v);
        }
    }
    if (seen != declared) {
        throw ParseError("header declares " + std::to_string(declared) + " entries, found " + std::to_string(seen),
                         line_no);
    }

    std::vector<Triplet> triplets;
    triplets.reserve(entries.size());
    for (const auto &[coord, v] : entries) {
        if (v != Complex{}) {
            triplets.push_back({v, coord.first, coord.second});
        }
    }
    return SparseMatrix(n, std::move(triplets));
}

SparseMatrix load_matrix_market(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_matrix_market(in);
}

SparseMatrix load_matrix_market_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return load_matrix_market(in);
}

void write_matrix_market(std::ostream &out, const SparseMatrix &a) {
    bool any_imag = std::any_of(a.triplets().begin(), a.triplets().end(),
                                [](const Triplet &t) { return t.value.imag() != 0; });
    out << "%%MatrixMarket matrix coordinate " << (any_imag ? "complex" : "real") << " general\n";
    out << a.dim() << ' ' << a.dim() << ' ' << a.nnz() << '\n';
    for (const auto &t : a.triplets()) {
        out << (t.row + 1) << ' ' << (t.col + 1) << ' ' << format_double(t.value.real());
        if (any_imag) {
            out << ' ' << format_double(t.value.imag());
        }
        out << '\n';
    }
}

std::string to_matrix_market(const SparseMatrix &a) {
    std::ostringstream out;
    write_matrix_market(out, a);
    return out.str();
}

}  // namespace dictenc
