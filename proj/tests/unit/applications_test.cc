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

#include <gtest/gtest.h>

#include <cmath>

#include "dictenc/errors.h"
#include "dictenc/synthesis.h"
#include "test_util.h"

namespace dictenc {
namespace {

using testing::Rng;

TEST(Cyclic, ReferenceLayout) {
    Instance inst = gen_cyclic_laplacian(3, 3, 2, 1);
    // Row 0 of the figure reads [a1, a3, 0, 0, 0, 0, 0, a2].
    const char *rows[8] = {"13000002", "21300000", "02130000", "00213000",
                           "00021300", "00002130", "00000213", "30000021"};
    auto m = testing::dense_oracle(inst.matrix);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            double expect = rows[i][j] == '0' ? 0 : 4 - (rows[i][j] - '0');
            EXPECT_EQ(m[i][j], Complex(expect)) << i << "," << j;
        }
    }
    EXPECT_EQ(inst.dictionary.item_count(), 3u);
    EXPECT_EQ(inst.matrix.nnz(), 24u);
    EXPECT_EQ(subnormalization(inst.dictionary), 6);
    EXPECT_TRUE(validate(inst.dictionary, inst.matrix).ok());
}

TEST(Cyclic, EqualWeights) {
    Instance inst = gen_cyclic_laplacian(3, 1, 1, 1);
    EXPECT_EQ(inst.dictionary.item_count(), 3u);
    EXPECT_TRUE(validate(inst.dictionary, inst.matrix).ok());
    Dictionary built = build_dictionary(inst.matrix);
    EXPECT_TRUE(validate(built, inst.matrix).ok());
}

TEST(Cyclic, BelowFrobenius) {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned n = 2 + trial % 4;
        Instance inst = gen_cyclic_laplacian(n, testing::random_complex(rng), testing::random_complex(rng),
                                             testing::random_complex(rng));
        EXPECT_LE(subnormalization(inst.dictionary), frobenius_norm(inst.matrix) * (1 + 1e-12));
    }
}

TEST(Cyclic, Errors) {
    EXPECT_THROW(gen_cyclic_laplacian(1, 1, 1, 1), DomainError);
    EXPECT_THROW(gen_cyclic_laplacian(3, 0, 1, 1), DomainError);
}

TEST(Cyclic, Encodes) {
    for (unsigned n = 2; n <= 4; ++n) {
        Instance inst = gen_cyclic_laplacian(n, 1, Complex(0, 1), -2);
        VerificationReport r = verify_block_encoding(assemble(inst.dictionary), inst.matrix);
        EXPECT_TRUE(r.passed) << r.to_json();
    }
}

TEST(Laplacian2d, FourByFour) {
    Instance inst = gen_laplacian2d(4, 4, 1, 1);
    EXPECT_EQ(inst.matrix.qubits(), 4u);
    EXPECT_EQ(inst.dictionary.item_count(), 5u);
    EXPECT_EQ(inst.matrix.nnz(), 64u);
    EXPECT_EQ(subnormalization(inst.dictionary), 8);
    EXPECT_TRUE(validate(inst.dictionary, inst.matrix).ok());
    auto m = testing::dense_oracle(inst.matrix);
    // Interior points (1,1), (2,1), (1,2), (2,2).
    for (int j : {5, 6, 9, 10}) {
        Complex sum = 0;
        for (int k = 0; k < 16; ++k) {
            sum += m[j][k];
        }
        EXPECT_EQ(sum, Complex(0)) << j;
    }
    // Independent stencil oracle.
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            int j = a + 4 * b;
            EXPECT_EQ(m[j][j], Complex(-4));
            if (a > 0) {
                EXPECT_EQ(m[j - 1][j], Complex(1));
            }
            if (a < 3) {
                EXPECT_EQ(m[j + 1][j], Complex(1));
            }
            if (b > 0) {
                EXPECT_EQ(m[j - 4][j], Complex(1));
            }
            if (b < 3) {
                EXPECT_EQ(m[j + 4][j], Complex(1));
            }
        }
    }
}

TEST(Laplacian2d, ItemColumnSets) {
    Instance inst = gen_laplacian2d(4, 4, 1, 1);
    // The item that moves j to j - 1 skips columns with mod(j, 4) = 0.
    bool found = false;
    for (const auto &item : inst.dictionary.items) {
        const auto &map = item.rows_by_column;
        if (map.empty() || map.begin()->second + 1 != map.begin()->first) {
            continue;
        }
        found = true;
        EXPECT_EQ(map.size(), 12u);
        for (const auto &[j, i] : map) {
            EXPECT_NE(j % 4, 0u);
            EXPECT_EQ(i, j - 1);
        }
    }
    EXPECT_TRUE(found);
}

TEST(Laplacian2d, Spacings) {
    Instance inst = gen_laplacian2d(2, 4, 0.5, 2);
    double a1 = 4;
    double a2 = 0.25;
    EXPECT_NEAR(subnormalization(inst.dictionary), 2 * (a1 + a2) + 2 * (a1 + a2), 1e-12);
    EXPECT_TRUE(validate(inst.dictionary, inst.matrix).ok());
    EXPECT_THROW(gen_laplacian2d(3, 4, 1, 1), DomainError);
    EXPECT_THROW(gen_laplacian2d(4, 4, 0, 1), DomainError);
}

TEST(Laplacian2d, Encodes) {
    Instance inst = gen_laplacian2d(4, 4, 1, 1);
    VerificationReport r = verify_block_encoding(assemble(inst.dictionary), inst.matrix);
    EXPECT_TRUE(r.passed) << r.to_json();
}

GepParameters random_gep(Rng &rng, std::uint64_t n1, std::uint64_t n2) {
    GepParameters p;
    p.n1 = n1;
    p.n2 = n2;
    for (auto &v : p.a) {
        v = testing::random_complex(rng);
    }
    for (auto &v : p.b) {
        v = testing::random_complex(rng);
    }
    return p;
}

TEST(Gep, ItemCountsAndAlpha) {
    Rng rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        GepParameters p = random_gep(rng, 2 + trial % 3, 2 + trial % 4);
        GepInstance g = gen_gep_matrices(p);
        EXPECT_EQ(g.natural_dim, 4 * p.n1 + p.n2 + 5);
        EXPECT_EQ(g.a.matrix.qubits(), ceil_log2(g.natural_dim));
        EXPECT_EQ(g.a.dictionary.item_count(), 19u);
        EXPECT_EQ(g.b.dictionary.item_count(), 9u);
        double alpha_a = std::abs(p.a[0]);
        for (int k = 1; k <= 6; ++k) {
            alpha_a += 2 * std::abs(p.a[k]);
        }
        for (int k = 7; k <= 12; ++k) {
            alpha_a += std::abs(p.a[k]);
        }
        double alpha_b = 2 * (std::abs(p.b[0]) + std::abs(p.b[1]) + std::abs(p.b[2])) + std::abs(p.b[3]) +
                         std::abs(p.b[4]) + std::abs(p.b[5]);
        EXPECT_NEAR(subnormalization(g.a.dictionary), alpha_a, 1e-12);
        EXPECT_NEAR(subnormalization(g.b.dictionary), alpha_b, 1e-12);
        EXPECT_TRUE(validate(g.a.dictionary, g.a.matrix).ok());
        EXPECT_TRUE(validate(g.b.dictionary, g.b.matrix).ok());
        // Padding stays zero.
        for (const auto &t : g.a.matrix.triplets()) {
            EXPECT_LT(t.row, g.natural_dim);
            EXPECT_LT(t.col, g.natural_dim);
        }
    }
}

TEST(Gep, Errors) {
    GepParameters p;
    p.a.fill(1);
    p.b.fill(1);
    p.n1 = 1;
    EXPECT_THROW(gen_gep_matrices(p), DomainError);
    p.n1 = 2;
    p.a[3] = 0;
    EXPECT_THROW(gen_gep_matrices(p), DomainError);
    EXPECT_THROW(gep_stencil_matrix(p, 'C'), std::invalid_argument);
}

TEST(Gep, StencilComparison) {
    Rng rng(63);
    GepParameters p = random_gep(rng, 2, 3);
    auto mismatches = gep_stencil_mismatches(p);
    for (const auto &m : mismatches) {
        EXPECT_TRUE(m.matrix == 'A' || m.matrix == 'B');
        EXPECT_NE(m.stencil, m.table);
    }
    // The report agrees with a direct comparison of the two matrices.
    for (char which : {'A', 'B'}) {
        auto stencil = testing::dense_oracle(gep_stencil_matrix(p, which));
        GepInstance g = gen_gep_matrices(p);
        auto table = testing::dense_oracle(which == 'A' ? g.a.matrix : g.b.matrix);
        std::size_t direct = 0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j < table.size(); ++j) {
                if (stencil[i][j] != table[i][j]) {
                    ++direct;
                }
            }
        }
        std::size_t reported = 0;
        for (const auto &m : mismatches) {
            reported += m.matrix == which ? 1 : 0;
        }
        EXPECT_EQ(reported, direct) << which;
    }
}

TEST(Gep, Encodes) {
    Rng rng(64);
    GepInstance g = gen_gep_matrices(random_gep(rng, 2, 3));
    for (const Instance *inst : {&g.a, &g.b}) {
        VerificationReport r = verify_block_encoding(assemble(inst->dictionary), inst->matrix);
        EXPECT_TRUE(r.passed) << r.to_json();
    }
}

}  // namespace
}  // namespace dictenc
