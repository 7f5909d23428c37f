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

#ifndef DICTENC_APPLICATIONS_H
#define DICTENC_APPLICATIONS_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dictenc/dictionary.h"
#include "dictenc/sparse_matrix.h"

namespace dictenc {

struct Instance {
    SparseMatrix matrix;
    Dictionary dictionary;
};

/// Weighted directed cycle on 2^n vertices: diagonal alpha1, (j+1 mod 2^n, j)
/// alpha2, (j-1 mod 2^n, j) alpha3. Three items in that order. n >= 2.
Instance gen_cyclic_laplacian(unsigned n, Complex alpha1, Complex alpha2, Complex alpha3);

/// Five-point Laplacian on an nx-by-ny grid, index a + b nx. Items: diagonal
/// A0, (j-1, j) and (j+1, j) with value A1 = 1/dx^2 skipping the row edges,
/// (j-nx, j) and (j+nx, j) with value A2 = 1/dy^2.
Instance gen_laplacian2d(std::uint64_t nx, std::uint64_t ny, double dx, double dy);

struct GepParameters {
    std::uint64_t n1 = 2;
    std::uint64_t n2 = 2;
    std::array<Complex, 13> a{};
    std::array<Complex, 6> b{};
};

struct GepInstance {
    Instance a;
    Instance b;
    /// 4 n1 + n2 + 5.
    std::uint64_t natural_dim = 0;
};

/// Dictionaries of the two ocean-acoustics matrices, built item by item
/// (19 items for A, 9 for B) and padded to the next power of two.
GepInstance gen_gep_matrices(const GepParameters &p);

/// Dense placement of the submatrix stencils A^(0..4) or B^(0..4).
SparseMatrix gep_stencil_matrix(const GepParameters &p, char which);

struct StencilMismatch {
    char matrix;
    Index row;
    Index col;
    Complex stencil;
    Complex table;
};

/// Coordinates where the stencil placement and the table-built matrix disagree.
std::vector<StencilMismatch> gep_stencil_mismatches(const GepParameters &p);

}  // namespace dictenc

#endif
