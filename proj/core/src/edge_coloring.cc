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

#include "edge_coloring.h"

#include <algorithm>
#include <unordered_map>

namespace dictenc::internal {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Vertices: rows occupy [0, rows), columns [rows, rows + cols).
struct Graph {
    std::vector<std::size_t> edge_u;
    std::vector<std::size_t> edge_v;
    std::size_t vertex_count = 0;
};

Graph index_vertices(std::span<const Edge> edges) {
    std::unordered_map<Index, std::size_t> row_ids;
    std::unordered_map<Index, std::size_t> col_ids;
    for (const auto &[r, c] : edges) {
        row_ids.emplace(r, row_ids.size());
        col_ids.emplace(c, col_ids.size());
    }
    Graph g;
    g.vertex_count = row_ids.size() + col_ids.size();
    for (const auto &[r, c] : edges) {
        g.edge_u.push_back(row_ids[r]);
        g.edge_v.push_back(row_ids.size() + col_ids[c]);
    }
    return g;
}

}  // namespace

std::size_t max_degree(std::span<const Edge> edges) {
    std::unordered_map<Index, std::size_t> row_deg;
    std::unordered_map<Index, std::size_t> col_deg;
    std::size_t best = 0;
    for (const auto &[r, c] : edges) {
        best = std::max({best, ++row_deg[r], ++col_deg[c]});
    }
    return best;
}

std::vector<std::size_t> bipartite_edge_coloring(std::span<const Edge> edges) {
    std::size_t colors = max_degree(edges);
    Graph g = index_vertices(edges);
    // slot[v * colors + k] = edge at vertex v carrying color k.
    std::vector<std::size_t> slot(g.vertex_count * colors, kNone);
    std::vector<std::size_t> color(edges.size(), kNone);

    auto free_color = [&](std::size_t v) {
        for (std::size_t k = 0; k < colors; ++k) {
            if (slot[v * colors + k] == kNone) {
                return k;
            }
        }
        return kNone;
    };
    auto other_end = [&](std::size_t e, std::size_t v) { return g.edge_u[e] == v ? g.edge_v[e] : g.edge_u[e]; };

    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::size_t u = g.edge_u[e];
        std::size_t v = g.edge_v[e];
        std::size_t a = free_color(u);
        std::size_t b = free_color(v);
        if (slot[v * colors + a] != kNone) {
            // Walk the a/b alternating path from v and swap its colors. In a
            // bipartite graph the path cannot end at u, so a stays free at u.
            std::vector<std::size_t> path;
            std::size_t at = v;
            std::size_t want = a;
            while (slot[at * colors + want] != kNone) {
                std::size_t f = slot[at * colors + want];
                path.push_back(f);
                at = other_end(f, at);
                want = want == a ? b : a;
            }
            for (std::size_t f : path) {
                slot[g.edge_u[f] * colors + color[f]] = kNone;
                slot[g.edge_v[f] * colors + color[f]] = kNone;
            }
            for (std::size_t f : path) {
                color[f] = color[f] == a ? b : a;
                slot[g.edge_u[f] * colors + color[f]] = f;
                slot[g.edge_v[f] * colors + color[f]] = f;
            }
        }
        color[e] = a;
        slot[u * colors + a] = e;
        slot[v * colors + a] = e;
    }
    return color;
}

std::vector<std::size_t> greedy_matching_decomposition(std::span<const Edge> edges) {
    Graph g = index_vertices(edges);
    std::vector<std::size_t> cls(edges.size(), kNone);
    std::size_t remaining = edges.size();
    for (std::size_t round = 0; remaining > 0; ++round) {
        std::vector<bool> used(g.vertex_count, false);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (cls[e] != kNone || used[g.edge_u[e]] || used[g.edge_v[e]]) {
                continue;
            }
            cls[e] = round;
            used[g.edge_u[e]] = used[g.edge_v[e]] = true;
            --remaining;
        }
    }
    return cls;
}

}  // namespace dictenc::internal
