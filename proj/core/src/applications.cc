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

#include "dictenc/applications.h"

#include <cmath>
#include <initializer_list>
#include <map>

#include "dictenc/errors.h"

namespace dictenc {

namespace {

void require_nonzero(Complex v, const std::string &what) {
    if (v == Complex(0) || !is_finite(v)) {
        throw DomainError(what + " must be finite and nonzero");
    }
}

Instance finish(Dictionary d, const char *who) {
    ValidationReport report = validate(d);
    if (!report.ok()) {
        throw DomainError(std::string(who) + ": generated dictionary is invalid: " + report.summary());
    }
    SparseMatrix m = to_matrix(d);
    return {std::move(m), std::move(d)};
}

// Adds (j + offset, j) for j in [lo, hi] whose residue mod 4 is listed
// (all residues when the list is empty).
void add_range(DataItem &item, std::int64_t offset, std::int64_t lo, std::int64_t hi,
               std::initializer_list<int> residues = {}) {
    for (std::int64_t j = lo; j <= hi; ++j) {
        bool keep = residues.size() == 0;
        for (int r : residues) {
            keep = keep || j % 4 == r;
        }
        if (keep) {
            item.rows_by_column[static_cast<Index>(j)] = static_cast<Index>(j + offset);
        }
    }
}

void add_points(DataItem &item, std::int64_t offset, std::initializer_list<std::int64_t> cols) {
    for (std::int64_t j : cols) {
        item.rows_by_column[static_cast<Index>(j)] = static_cast<Index>(j + offset);
    }
}

}  // namespace

Instance gen_cyclic_laplacian(unsigned n, Complex alpha1, Complex alpha2, Complex alpha3) {
    if (n < 2) {
        throw DomainError("gen_cyclic_laplacian: n must be at least 2");
    }
    if (n >= 63) {
        throw CapacityError("gen_cyclic_laplacian: n too large");
    }
    require_nonzero(alpha1, "gen_cyclic_laplacian: alpha1");
    require_nonzero(alpha2, "gen_cyclic_laplacian: alpha2");
    require_nonzero(alpha3, "gen_cyclic_laplacian: alpha3");
    Index dim = Index{1} << n;
    Dictionary d{n, {{alpha1, {}}, {alpha2, {}}, {alpha3, {}}}};
    for (Index j = 0; j < dim; ++j) {
        d.items[0].rows_by_column[j] = j;
        d.items[1].rows_by_column[j] = (j + 1) % dim;
        d.items[2].rows_by_column[j] = (j + dim - 1) % dim;
    }
    return finish(std::move(d), "gen_cyclic_laplacian");
}

Instance gen_laplacian2d(std::uint64_t nx, std::uint64_t ny, double dx, double dy) {
    if (nx < 2 || ny < 2 || !is_power_of_two(nx) || !is_power_of_two(ny)) {
        throw DomainError("gen_laplacian2d: grid sizes must be powers of two >= 2, got " + std::to_string(nx) + "x" +
                          std::to_string(ny));
    }
    if (!(dx > 0) || !(dy > 0) || !std::isfinite(dx) || !std::isfinite(dy)) {
        throw DomainError("gen_laplacian2d: grid spacings must be positive");
    }
    unsigned n = ceil_log2(nx * ny);
    if (n >= 63) {
        throw CapacityError("gen_laplacian2d: grid too large");
    }
    double a1 = 1 / (dx * dx);
    double a2 = 1 / (dy * dy);
    double a0 = -2 * (a1 + a2);
    Index dim = nx * ny;
    Dictionary d{n, {{a0, {}}, {a1, {}}, {a1, {}}, {a2, {}}, {a2, {}}}};
    for (Index j = 0; j < dim; ++j) {
        d.items[0].rows_by_column[j] = j;
        if (j % nx != 0) {
            d.items[1].rows_by_column[j] = j - 1;
        }
        if (j % nx != nx - 1) {
            d.items[2].rows_by_column[j] = j + 1;
        }
        if (j >= nx) {
            d.items[3].rows_by_column[j] = j - nx;
        }
        if (j + nx < dim) {
            d.items[4].rows_by_column[j] = j + nx;
        }
    }
    return finish(std::move(d), "gen_laplacian2d");
}

namespace {

void check_gep(const GepParameters &p) {
    if (p.n1 < 2 || p.n2 < 2) {
        throw DomainError("gen_gep_matrices: N1 and N2 must be at least 2");
    }
    if (p.n1 > (std::uint64_t{1} << 40) || p.n2 > (std::uint64_t{1} << 40)) {
        throw CapacityError("gen_gep_matrices: layer counts too large");
    }
    for (std::size_t k = 0; k < p.a.size(); ++k) {
        require_nonzero(p.a[k], "gen_gep_matrices: a" + std::to_string(k));
    }
    for (std::size_t k = 0; k < p.b.size(); ++k) {
        require_nonzero(p.b[k], "gen_gep_matrices: b" + std::to_string(k));
    }
}

Dictionary gep_a(const GepParameters &p, unsigned n) {
    const std::int64_t n1 = static_cast<std::int64_t>(p.n1);
    const std::int64_t n2 = static_cast<std::int64_t>(p.n2);
    const auto &a = p.a;
    std::vector<DataItem> it(19);
    const int value_of[19] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 8, 9, 10, 11, 12};
    for (int k = 0; k < 19; ++k) {
        it[k].value = a[value_of[k]];
    }
    add_range(it[0], 2, 0, 4 * n1 - 1);
    add_range(it[1], 4, 0, 4 * n1 - 3, {0, 1});
    add_range(it[2], 0, 4, 4 * n1 + 1, {0, 1});
    add_range(it[3], 1, 1, 4 * n1 - 3, {1});
    add_range(it[4], -3, 5, 4 * n1 + 1, {1});
    add_range(it[5], 1, 4 * n1 + 4, 4 * n1 + n2 + 2);
    add_points(it[5], 0, {4 * n1 + 2, 4 * n1 + 3});
    add_points(it[5], -2, {2, 3});
    add_range(it[6], -1, 4 * n1 + 4, 4 * n1 + n2 + 4);
    add_range(it[7], 0, 2, 4 * n1 - 2, {2});
    add_range(it[8], -4, 6, 4 * n1 + 2, {2});
    add_range(it[9], -4, 7, 4 * n1 + 3, {3});
    add_range(it[10], 0, 3, 4 * n1 - 1, {3});
    add_range(it[11], -3, 7, 4 * n1 + 3, {3});
    add_range(it[12], 1, 3, 4 * n1 - 1, {3});
    add_range(it[13], -2, 4, 4 * n1 + 3);
    add_points(it[14], 3, {4 * n1 + 1});
    add_points(it[15], 0, {4 * n1 + 4});
    add_range(it[16], 0, 4 * n1 + 5, 4 * n1 + n2 + 3);
    add_points(it[17], 1, {4 * n1 + n2 + 3});
    add_points(it[18], 0, {4 * n1 + n2 + 4});
    return {n, std::move(it)};
}

Dictionary gep_b(const GepParameters &p, unsigned n) {
    const std::int64_t n1 = static_cast<std::int64_t>(p.n1);
    const std::int64_t n2 = static_cast<std::int64_t>(p.n2);
    const auto &b = p.b;
    std::vector<DataItem> it(9);
    const int value_of[9] = {0, 0, 1, 1, 2, 2, 3, 4, 5};
    for (int k = 0; k < 9; ++k) {
        it[k].value = b[value_of[k]];
    }
    add_range(it[0], 3, 0, 4 * n1 - 4, {0});
    add_range(it[1], -1, 4, 4 * n1, {0});
    add_range(it[2], 3, 2, 4 * n1 - 2, {2});
    add_range(it[3], -1, 6, 4 * n1 + 2, {2});
    add_range(it[4], 4, 0, 4 * n1 - 4, {0});
    add_range(it[5], 0, 4, 4 * n1, {0});
    add_points(it[6], 0, {4 * n1 + 4});
    add_range(it[7], 0, 4 * n1 + 5, 4 * n1 + n2 + 3);
    add_points(it[8], 0, {4 * n1 + n2 + 4});
    return {n, std::move(it)};
}

Dictionary checked(Dictionary d, const char *which) {
    ValidationReport report = validate(d);
    if (!report.ok()) {
        throw DomainError(std::string("gen_gep_matrices: table ") + which + " index sets collide: " +
                          report.summary());
    }
    return d;
}

}  // namespace

GepInstance gen_gep_matrices(const GepParameters &p) {
    check_gep(p);
    GepInstance out;
    out.natural_dim = 4 * p.n1 + p.n2 + 5;
    unsigned n = ceil_log2(out.natural_dim);
    Dictionary da = checked(gep_a(p, n), "A");
    Dictionary db = checked(gep_b(p, n), "B");
    out.a = {to_matrix(da), std::move(da)};
    out.b = {to_matrix(db), std::move(db)};
    return out;
}

SparseMatrix gep_stencil_matrix(const GepParameters &p, char which) {
    check_gep(p);
    if (which != 'A' && which != 'B') {
        throw std::invalid_argument("gep_stencil_matrix: which must be 'A' or 'B'");
    }
    const Index n1 = p.n1;
    const Index n2 = p.n2;
    const Index dim = 4 * n1 + n2 + 5;
    const bool is_a = which == 'A';
    const auto &a = p.a;
    const auto &b = p.b;
    const Complex z = 0;
    std::map<std::pair<Index, Index>, Complex> cells;
    auto place = [&](Index r0, Index c0, const std::vector<std::vector<Complex>> &block) {
        for (Index r = 0; r < block.size(); ++r) {
            for (Index c = 0; c < block[r].size(); ++c) {
                if (block[r][c] != z) {
                    cells[{r0 + r, c0 + c}] = block[r][c];
                }
            }
        }
    };
    std::vector<std::vector<Complex>> s0, s1, s2, s3, s4;
    if (is_a) {
        s0 = {{z, z, a[3], z}, {z, z, z, a[3]}};
        s1 = {{a[0], a[2], a[4], z, a[7], a[2], a[4], z},
              {z, a[0], z, a[5], z, a[7], z, a[5]},
              {a[1], z, a[0], a[6], a[1], z, a[7], a[6]},
              {z, a[1], z, a[0], z, a[1], z, a[7]}};
        s2 = {{a[3], a[10], a[3]}};
        s3 = {{z, z, a[3], z, z, z}, {z, z, z, a[3], a[3], z}, {z, a[8], z, z, a[9], a[3]}};
        s4 = {{a[11], a[12]}};
    } else {
        s0 = {{z, z, z, z}, {z, z, z, z}};
        s1 = {{z, z, z, z, z, z, z, z},
              {b[0], z, z, b[0], z, z, z, z},
              {b[2], z, z, b[2], z, z, z, z},
              {z, z, b[1], z, z, b[1], z, z}};
        s2 = {{z, b[4], z}};
        s3 = {{z, z, z, z, z, z}, {z, z, z, z, z, z}, {z, z, z, z, b[3], z}};
        s4 = {{z, b[5]}};
    }
    place(0, 0, s0);
    for (Index k = 0; k < n1; ++k) {
        place(4 * k + 2, 4 * k, s1);
    }
    place(4 * n1 + 2, 4 * n1, s3);
    for (Index r = 4 * n1 + 5; r <= 4 * n1 + n2 + 3; ++r) {
        place(r, r - 1, s2);
    }
    place(dim - 1, dim - 2, s4);
    std::vector<Triplet> triplets;
    for (const auto &[rc, v] : cells) {
        triplets.push_back({v, rc.first, rc.second});
    }
    return SparseMatrix(ceil_log2(dim), std::move(triplets));
}

std::vector<StencilMismatch> gep_stencil_mismatches(const GepParameters &p) {
    GepInstance inst = gen_gep_matrices(p);
    std::vector<StencilMismatch> out;
    for (char which : {'A', 'B'}) {
        const SparseMatrix &table = which == 'A' ? inst.a.matrix : inst.b.matrix;
        SparseMatrix stencil = gep_stencil_matrix(p, which);
        std::map<std::pair<Index, Index>, std::pair<Complex, Complex>> both;
        for (const auto &t : stencil.triplets()) {
            both[{t.row, t.col}].first = t.value;
        }
        for (const auto &t : table.triplets()) {
            both[{t.row, t.col}].second = t.value;
        }
        for (const auto &[rc, v] : both) {
            if (v.first != v.second) {
                out.push_back({which, rc.first, rc.second, v.first, v.second});
            }
        }
    }
    return out;
}

}  // namespace dictenc
