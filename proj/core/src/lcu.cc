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

#include <map>

#include "dictenc/errors.h"
#include "dictenc/synthesis.h"

namespace dictenc {

LcuForm export_lcu(const Dictionary &d) {
    Index dim = Index{1} << d.n;
    LcuForm form;
    form.n = d.n;
    for (std::size_t l = 0; l < d.items.size(); ++l) {
        const auto &map = d.items[l].rows_by_column;
        if (map.size() != dim) {
            Index missing = 0;
            while (map.contains(missing)) {
                ++missing;
            }
            throw NotLcuExpressibleError("export_lcu: item " + std::to_string(l) + " does not cover column " +
                                             std::to_string(missing),
                                         l, missing, missing);
        }
        Index mask = map.begin()->second ^ map.begin()->first;
        for (const auto &[j, i] : map) {
            if ((i ^ j) != mask) {
                throw NotLcuExpressibleError("export_lcu: item " + std::to_string(l) + " has xor displacement " +
                                                 std::to_string(mask) + " at column " +
                                                 std::to_string(map.begin()->first) + " but " +
                                                 std::to_string(i ^ j) + " at column " + std::to_string(j),
                                             l, map.begin()->first, j);
            }
        }
        form.values.push_back(d.items[l].value);
        form.coefficients.push_back(principal_sqrt(d.items[l].value));
        form.masks.push_back(mask);
    }
    return form;
}

SparseMatrix LcuForm::reconstruct() const {
    Index dim = Index{1} << n;
    std::map<std::pair<Index, Index>, Complex> acc;
    for (std::size_t l = 0; l < values.size(); ++l) {
        for (Index j = 0; j < dim; ++j) {
            acc[{j ^ masks[l], j}] += values[l];
        }
    }
    std::vector<Triplet> triplets;
    for (const auto &[rc, v] : acc) {
        if (v != Complex(0)) {
            triplets.push_back({v, rc.first, rc.second});
        }
    }
    return SparseMatrix(n, std::move(triplets));
}

}  // namespace dictenc
