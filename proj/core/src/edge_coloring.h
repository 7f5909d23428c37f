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

#ifndef DICTENC_SRC_EDGE_COLORING_H
#define DICTENC_SRC_EDGE_COLORING_H

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dictenc/sparse_matrix.h"

namespace dictenc::internal {

/// (row, col) edge of a bipartite graph. Edges must be distinct.
using Edge = std::pair<Index, Index>;

/// Proper edge coloring of a simple bipartite graph with exactly max-degree
/// colors (Konig's theorem), by alternating-path recoloring. Returns one
/// color per edge, in input order.
std::vector<std::size_t> bipartite_edge_coloring(std::span<const Edge> edges);

/// Partition into matchings by repeatedly peeling a maximal matching in input
/// order. Returns one class per edge.
std::vector<std::size_t> greedy_matching_decomposition(std::span<const Edge> edges);

/// Largest row or column degree.
std::size_t max_degree(std::span<const Edge> edges);

}  // namespace dictenc::internal

#endif
