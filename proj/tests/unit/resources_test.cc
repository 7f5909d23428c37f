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

#include <gtest/gtest.h>

#include <cmath>

#include "dictenc/errors.h"
#include "test_util.h"

namespace dictenc {
namespace {

using testing::Rng;

SparseMatrix cyclic(unsigned n, Complex a1, Complex a2, Complex a3) {
    Index dim = Index{1} << n;
    std::vector<Triplet> t;
    for (Index j = 0; j < dim; ++j) {
        t.push_back({a1, j, j});
        t.push_back({a2, (j + 1) % dim, j});
        t.push_back({a3, (j + dim - 1) % dim, j});
    }
    return SparseMatrix(n, t);
}

TEST(Sbm, Examples) {
    SbmCost trivial = sbm_cost(1, 1, 1);
    EXPECT_EQ(trivial.depth, 0);
    EXPECT_EQ(trivial.ancilla, 1);
    SbmCost c = sbm_cost(7, 4, 24);
    EXPECT_NEAR(c.depth, std::log2(672.0), 1e-12);
    EXPECT_NEAR(c.depth, 9.39, 5e-3);
    EXPECT_EQ(c.ancilla, 672);
    EXPECT_THROW(sbm_cost(0, 1, 1), DomainError);
}

TEST(Sbm, DoublingSparsityAddsOne) {
    Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        auto i = 1 + testing::below(rng, 20);
        auto w = 1 + testing::below(rng, 20);
        auto s = 1 + testing::below(rng, 1000);
        EXPECT_NEAR(sbm_cost(i, w, 2 * s).depth - sbm_cost(i, w, s).depth, 1, 1e-12);
    }
}

TEST(DictionaryCost, CyclicExample) {
    ResourceReport r = dictionary_cost(3, 24, 3);
    // 3 log2((2 + 3 + 1) * 3 * 24) + 2 + 2
    double expected = 3 * std::log2(432.0) + 4;
    EXPECT_NEAR(r.depth_model, expected, 1e-12);
    EXPECT_NEAR(r.depth_model, 30.2647, 1e-4);
    EXPECT_NEAR(r.ancilla_model, 3 * 432.0 + 4, 1e-12);
    EXPECT_EQ(r.protocol, Protocol::kDictionary);
    EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(DictionaryCost, RegimeWarning) {
    EXPECT_EQ(dictionary_cost(1, 4, 4).warnings.size(), 2u);
    EXPECT_THROW(dictionary_cost(0, 1, 1), DomainError);
    EXPECT_THROW(dictionary_cost(1, 0, 1), DomainError);
    ResourceReport minimal = dictionary_cost(1, 1, 1);
    EXPECT_GT(minimal.depth_model, 0);
    EXPECT_TRUE(std::isfinite(minimal.depth_model));
}

TEST(DictionaryCost, Monotone) {
    Rng rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 1 + static_cast<unsigned>(testing::below(rng, 12));
        auto s = 1 + testing::below(rng, 5000);
        auto s0 = 1 + testing::below(rng, 64);
        double base = dictionary_cost(n, s, s0).depth_model;
        EXPECT_LE(base, dictionary_cost(n + 1, s, s0).depth_model);
        EXPECT_LE(base, dictionary_cost(n, s + 1, s0).depth_model);
        EXPECT_LE(base, dictionary_cost(n, s, s0 + 1).depth_model);
    }
}

TEST(DictionaryCost, LinearGrowthInN) {
    for (unsigned n = 3; n <= 12; ++n) {
        double ratio = dictionary_cost(2 * n, 3 << (2 * n), 3).depth_model / dictionary_cost(n, 3 << n, 3).depth_model;
        EXPECT_GT(ratio, 1);
        EXPECT_LT(ratio, 2.5);
    }
}

TEST(TimeMetric, Consistency) {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned n = 1 + static_cast<unsigned>(testing::below(rng, 10));
        double alpha = testing::uniform(rng, 0.1, 50);
        for (const ResourceReport &r :
             {dictionary_cost(n, 1 + testing::below(rng, 100), 1 + testing::below(rng, 8), alpha),
              prep_unprep_cost(n, 1, 2, 3, 3, 0, alpha), csp_cost(n, 1 + testing::below(rng, 100), alpha)}) {
            EXPECT_NEAR(r.time_metric, r.depth_model * r.subnormalization, 1e-12 * r.time_metric);
        }
    }
}

TEST(PrepUnprepCost, Examples) {
    ResourceReport r = prep_unprep_cost(4, 1, 24, 3, 3, 0);
    EXPECT_NEAR(r.depth_model, 16, 1e-12);
    EXPECT_NEAR(r.ancilla_model, 64, 1e-12);
    for (unsigned n = 1; n < 20; ++n) {
        double a = prep_unprep_cost(n, 1, 1, 1, 1, 0).depth_model;
        double b = prep_unprep_cost(n + 2, 1, 1, 1, 1, 0).depth_model;
        EXPECT_NEAR(b / a, 2.0 * (n + 2) / n, 1e-12);
    }
    EXPECT_THROW(prep_unprep_cost(3, 4, 1, 2, 4, 0), InapplicableError);
    EXPECT_NO_THROW(prep_unprep_cost(3, 4, 1, 4, 4, 0));
    EXPECT_EQ(prep_unprep_cost(3, 1, 1, 1, 1, -2).warnings.size(), 1u);
}

TEST(PrepUnprepParameters, Cyclic) {
    PrepUnprepParameters p = prep_unprep_parameters(cyclic(3, 1, 2, 3));
    EXPECT_EQ(p.distinct, 3u);
    EXPECT_EQ(p.multiplicity, 8u);
    EXPECT_EQ(p.max_col, 3u);
    EXPECT_EQ(p.max_row, 3u);
    EXPECT_EQ(p.invalid_count, 32 - 24);
    EXPECT_NEAR(p.subnormalization, 3.0 / 3 * 6, 1e-12);
}

TEST(CspCost, Examples) {
    EXPECT_NEAR(csp_cost(4, 24).depth_model, 4 + std::log2(96.0), 1e-12);
    EXPECT_NEAR(csp_cost(4, 24).depth_model, 10.58, 5e-3);
    EXPECT_EQ(csp_cost(1, 1).depth_model, 1);
    for (unsigned n = 1; n < 20; ++n) {
        EXPECT_NEAR(csp_cost(n + 1, 5).ancilla_model / csp_cost(n, 5).ancilla_model, 4, 1e-12);
    }
    EXPECT_THROW(csp_cost(1, 0), DomainError);
}

TEST(Compare, Cyclic) {
    SparseMatrix a = cyclic(3, 1, 1, 1);
    Dictionary d = build_dictionary(a);
    auto rows = compare(a, d);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].report.protocol, Protocol::kDictionary);
    EXPECT_NEAR(rows[0].report.subnormalization, 3, 1e-12);
    ASSERT_TRUE(rows[0].report.measured_depth.has_value());
    EXPECT_GT(*rows[0].report.measured_depth, 0u);
    EXPECT_NEAR(*rows[0].report.measured_time_metric, *rows[0].report.measured_depth * 3.0, 1e-9);
    EXPECT_TRUE(rows[1].applicable);
    EXPECT_NEAR(rows[1].report.subnormalization, 3, 1e-12);
    EXPECT_NEAR(rows[1].report.depth_model, 3 * std::pow(2.0, 1.5), 1e-12);
    EXPECT_EQ(rows[2].report.protocol, Protocol::kFrobeniusCsp);
    EXPECT_NEAR(rows[2].report.subnormalization, std::sqrt(24.0), 1e-12);
    EXPECT_LT(rows[0].report.subnormalization, rows[2].report.subnormalization);
}

TEST(Compare, AllDistinctIsInapplicable) {
    SparseMatrix a(1, {{1, 0, 0}, {2, 0, 1}, {3, 1, 0}, {4, 1, 1}});
    auto rows = compare(a, build_dictionary(a));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_FALSE(rows[1].applicable);
    EXPECT_FALSE(rows[1].note.empty());
    std::string csv = comparison_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "protocol,depth_model,ancilla_model,subnorm,time_metric,measured_depth,measured_gates");
    EXPECT_NE(csv.find("prep-unprep,NA,NA,"), std::string::npos);
    EXPECT_NE(comparison_text(rows).find("n/a"), std::string::npos);
}

TEST(Compare, IdentityAndCap) {
    SparseMatrix id(2, {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 3, 3}});
    auto rows = compare(id, build_dictionary(id));
    EXPECT_NEAR(rows[0].report.subnormalization, 1, 1e-12);
    EXPECT_NEAR(rows[2].report.subnormalization, 2, 1e-12);
    CompareOptions options;
    options.measure_cap = 2;
    auto unmeasured = compare(id, build_dictionary(id), options);
    EXPECT_FALSE(unmeasured[0].report.measured_depth.has_value());
    EXPECT_FALSE(unmeasured[0].note.empty());
    std::string csv = comparison_csv(unmeasured);
    EXPECT_NE(csv.find("\ndictionary,"), std::string::npos);
    EXPECT_NE(csv.find(",,\n"), std::string::npos);
}

TEST(Compare, RatioShrinksWithN) {
    double previous = 1e300;
    for (unsigned n = 3; n <= 12; ++n) {
        double ratio = dictionary_cost(n, 3 << n, 3).depth_model / prep_unprep_cost(n, 1, 3 << n, 3, 3, 0).depth_model;
        EXPECT_LT(ratio, previous);
        previous = ratio;
    }
    EXPECT_LT(previous, 0.1);
}

TEST(ResourceReport, Json) {
    std::string j = dictionary_cost(3, 24, 3).to_json();
    EXPECT_NE(j.find("\"protocol\": \"dictionary\""), std::string::npos);
    EXPECT_NE(j.find("\"measured_depth\": null"), std::string::npos);
    EXPECT_EQ(to_string(Protocol::kPrepUnprep), "prep-unprep");
}

}  // namespace
}  // namespace dictenc
