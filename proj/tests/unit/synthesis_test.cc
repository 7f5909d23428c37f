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

#include "dictenc/synthesis.h"

#include <gtest/gtest.h>

#include <cmath>

#include "dictenc/errors.h"
#include "test_util.h"

namespace dictenc {
namespace {

using testing::Rng;

StateVector basis_column(const Circuit &c, std::uint64_t k) {
    StateVector out(std::size_t{1} << c.qubit_count());
    for (const auto &[b, a] : apply_to_basis_state(c, k)) {
        out[b] = a;
    }
    return out;
}

StateVector random_amplitudes(Rng &rng, std::size_t dim, double zero_fraction) {
    StateVector v(dim);
    double norm = 0;
    for (auto &a : v) {
        a = testing::uniform(rng, 0, 1) < zero_fraction ? Complex(0) : testing::random_complex(rng);
        norm += std::norm(a);
    }
    if (norm == 0) {
        v[0] = 1;
        norm = 1;
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

// Cyclic dictionary shape on n = 3.
Dictionary cyclic_dictionary(Complex a1, Complex a2, Complex a3) {
    Dictionary d{3, {{a1, {}}, {a2, {}}, {a3, {}}}};
    for (Index j = 0; j < 8; ++j) {
        d.items[0].rows_by_column[j] = j;
        d.items[1].rows_by_column[j] = (j + 1) % 8;
        d.items[2].rows_by_column[j] = (j + 7) % 8;
    }
    return d;
}

TEST(PrepareState, DictionaryAmplitudes) {
    std::vector<DataItem> items{{2, {}}, {1, {}}, {1, {}}};
    StateVector amps = dictionary_amplitudes(items);
    ASSERT_EQ(amps.size(), 4u);
    EXPECT_NEAR(amps[0].real(), std::sqrt(2.0) / 2, 1e-15);
    EXPECT_NEAR(amps[1].real(), 0.5, 1e-15);
    EXPECT_NEAR(amps[2].real(), 0.5, 1e-15);
    EXPECT_EQ(amps[3], Complex(0));
    // Negative values take the principal root.
    StateVector neg = dictionary_amplitudes(std::vector<DataItem>{{-4, {}}});
    ASSERT_EQ(neg.size(), 1u);
    EXPECT_NEAR(std::abs(neg[0] - Complex(0, 1)), 0, 1e-15);
}

TEST(PrepareState, Examples) {
    StateVector amps{std::sqrt(2.0) / 2, 0.5, 0.5, 0};
    EXPECT_LT(std::abs(basis_column(prepare_state(amps), 0)[0] - amps[0]), 1e-14);
    StateVector out = basis_column(prepare_state(amps), 0);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(out[k] - amps[k]), 0, 1e-14);
    }
    StateVector one{Complex(0, 1)};
    EXPECT_NEAR(std::abs(basis_column(prepare_state(one), 0)[0] - Complex(0, 1)), 0, 1e-15);
    StateVector bad{1, 1};
    EXPECT_THROW(prepare_state(bad), DomainError);
}

TEST(PrepareState, RandomStates) {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t bits = 1 + trial % 5;
        StateVector amps = random_amplitudes(rng, std::size_t{1} << bits, trial % 3 == 0 ? 0.6 : 0.0);
        StateVector out = basis_column(prepare_state(amps), 0);
        for (std::size_t k = 0; k < amps.size(); ++k) {
            EXPECT_NEAR(std::abs(out[k] - amps[k]), 0, 1e-12);
        }
    }
}

TEST(PrepareState, PrepUnprepOverlap) {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        Dictionary d = testing::random_dictionary(rng, 2, 2 + trial % 6, 4);
        StateVector amps = dictionary_amplitudes(d.items);
        Circuit prep = prepare_state(amps);
        StateVector conj_amps = amps;
        for (auto &a : conj_amps) {
            a = std::conj(a);
        }
        StateVector unprep = basis_column(prepare_state(conj_amps), 0);
        StateVector prepared = basis_column(prep, 0);
        // <0| UNPREP PREP |0> weighted by the item values is sum |A_l| / alpha = 1.
        Complex overlap = 0;
        for (std::size_t l = 0; l < d.items.size(); ++l) {
            overlap += std::conj(unprep[l]) * prepared[l] * std::abs(d.items[l].value) / d.items[l].value;
        }
        EXPECT_NEAR(std::abs(overlap - Complex(1)), 0, 1e-12);
    }
}

TEST(ControlledPrepareState, EachBranch) {
    Rng rng(43);
    RegisterLayout layout;
    layout.add("c", 2);
    layout.add("t", 2);
    std::vector<StateVector> states;
    for (int k = 0; k < 4; ++k) {
        states.push_back(random_amplitudes(rng, 4, 0.3));
    }
    Circuit c = controlled_prepare_state(states, layout, "c", "t");
    for (std::uint64_t ctl = 0; ctl < 4; ++ctl) {
        StateVector out = basis_column(c, ctl);
        for (std::uint64_t t = 0; t < 4; ++t) {
            EXPECT_NEAR(std::abs(out[ctl | (t << 2)] - states[ctl][t]), 0, 1e-12);
        }
    }
}

TEST(SelectF, Examples) {
    RegisterLayout layout;
    layout.add("s", 2);
    layout.add("w", 2);
    BooleanFunctionTable f{2, 2, {{1, 3}, {2, 0}, {3, 1}}};
    EXPECT_EQ(f.sparsity(), 2u);
    EXPECT_EQ(f(1), 3u);
    EXPECT_EQ(f(0), 0u);
    std::vector<Qubit> sel{0, 1};
    std::vector<Qubit> word{2, 3};
    Circuit c = select_f(f, layout, sel, word);
    EXPECT_EQ(c.gate_count(), 2u);
    EXPECT_EQ(basis_column(c, 1)[1 | (3 << 2)], Complex(1));
    EXPECT_EQ(basis_column(c, 3 | (1 << 2))[3], Complex(1));
    EXPECT_THROW(select_f(f, layout, std::vector<Qubit>{0}, word), std::invalid_argument);
    BooleanFunctionTable wide{2, 2, {{1, 4}}};
    EXPECT_THROW(select_f(wide, layout, sel, word), std::invalid_argument);
}

TEST(SelectF, TruthTable) {
    Rng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned ib = 1 + trial % 4;
        unsigned wb = 1 + trial % 3;
        BooleanFunctionTable f{ib, wb, {}};
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << ib); ++k) {
            if (testing::below(rng, 2) == 1) {
                f.nonzeros[k] = testing::below(rng, std::uint64_t{1} << wb);
            }
        }
        RegisterLayout layout;
        layout.add("s", ib);
        layout.add("w", wb);
        std::vector<Qubit> sel;
        std::vector<Qubit> word;
        for (Qubit q = 0; q < ib; ++q) {
            sel.push_back(q);
        }
        for (Qubit q = 0; q < wb; ++q) {
            word.push_back(ib + q);
        }
        Circuit c = select_f(f, layout, sel, word);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (ib + wb)); ++x) {
            std::uint64_t k = x & ((std::uint64_t{1} << ib) - 1);
            std::uint64_t y = x >> ib;
            std::uint64_t expect = k | ((y ^ f(k)) << ib);
            SparseState out = apply_to_basis_state(c, x);
            ASSERT_EQ(out.size(), 1u);
            EXPECT_EQ(out[0].first, expect);
        }
    }
}

// Expected action of O_c on |j>|0>|0>|l>.
void check_oracle(const Dictionary &d) {
    Circuit oc = build_oc(d);
    unsigned n = d.n;
    unsigned m = d.index_bits();
    ASSERT_EQ(oc.qubit_count(), 2 * n + 1 + m);
    for (std::uint64_t l = 0; l < (std::uint64_t{1} << m); ++l) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
            std::uint64_t in = j | (l << (2 * n + 1));
            std::uint64_t expect = in | (std::uint64_t{1} << (2 * n));
            if (l < d.items.size()) {
                const auto &map = d.items[l].rows_by_column;
                if (auto it = map.find(j); it != map.end()) {
                    expect = it->second | (l << (2 * n + 1));
                }
            }
            SparseState out = apply_to_basis_state(oc, in);
            ASSERT_EQ(out.size(), 1u) << "l=" << l << " j=" << j;
            EXPECT_EQ(out[0].first, expect) << "l=" << l << " j=" << j;
            EXPECT_EQ(out[0].second, Complex(1));
        }
    }
}

TEST(BuildOc, CyclicBranches) {
    Dictionary d = cyclic_dictionary(1, 2, 3);
    check_oracle(d);
    Circuit oc = build_oc(d);
    // Item 1, column 0 lands on row 1 with del clear.
    std::uint64_t in = 0 | (std::uint64_t{1} << 7);
    SparseState out = apply_to_basis_state(oc, in);
    EXPECT_EQ(out[0].first, 1 | (std::uint64_t{1} << 7));
    // Padding index l = 3 flags del.
    in = 5 | (std::uint64_t{3} << 7);
    out = apply_to_basis_state(oc, in);
    EXPECT_EQ(out[0].first, in | (std::uint64_t{1} << 6));
}

TEST(BuildOc, RandomDictionaries) {
    Rng rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned n = 1 + trial % 3;
        Dictionary d = testing::random_dictionary(rng, n, 1 + testing::below(rng, std::size_t{1} << n), 3);
        check_oracle(d);
        // O_c is a permutation on the full space.
        Circuit oc = build_oc(d);
        std::set<std::uint64_t> images;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << oc.qubit_count()); ++x) {
            SparseState out = apply_to_basis_state(oc, x);
            ASSERT_EQ(out.size(), 1u);
            images.insert(out[0].first);
        }
        EXPECT_EQ(images.size(), std::size_t{1} << oc.qubit_count());
    }
}

TEST(BuildOc, RejectsInvalid) {
    Dictionary d{1, {{1, {{0, 1}, {1, 1}}}}};
    EXPECT_THROW(build_oc(d), DomainError);
}

TEST(OracleTables, Keys) {
    OracleTables t = oracle_tables(cyclic_dictionary(1, 2, 3));
    EXPECT_EQ(t.ranging.index_bits, 5u);
    EXPECT_EQ(t.ranging.sparsity(), 24u);
    EXPECT_EQ(t.mapping(0 | (1u << 4)), 1u);
    EXPECT_EQ(t.mapping.sparsity(), 21u);
    EXPECT_EQ(t.uncompute(1 | (1u << 4)), 0u);
    EXPECT_EQ(t.uncompute(2 | (1u << 4)), 1u);
}

void expect_encodes(const BlockEncoding &be, const SparseMatrix &a, double tol = 1e-9) {
    VerificationReport r = verify_block_encoding(be, a);
    EXPECT_TRUE(r.passed) << r.to_json();
    EXPECT_LE(r.epsilon, tol);
    // Independent check through the reference simulator.
    auto oracle = testing::dense_oracle(a);
    for (std::uint64_t j = 0; j < a.dim(); ++j) {
        StateVector e(std::size_t{1} << be.circuit.qubit_count());
        e[j] = 1;
        StateVector out = testing::reference_apply(be.circuit, e);
        for (std::uint64_t i = 0; i < a.dim(); ++i) {
            EXPECT_NEAR(std::abs(be.alpha * out[i] - oracle[i][j]), 0, tol);
        }
    }
}

TEST(Assemble, Cyclic) {
    Dictionary d = cyclic_dictionary(1, Complex(0, 2), -3);
    BlockEncoding be = assemble(d);
    EXPECT_DOUBLE_EQ(be.alpha, 6);
    EXPECT_EQ(be.system_qubits, 3u);
    EXPECT_EQ(be.ancilla_count, 6u);
    expect_encodes(be, to_matrix(d));
}

TEST(Assemble, SingleItem) {
    Dictionary d{2, {{Complex(0, -3), {{0, 0}, {1, 1}, {2, 2}, {3, 3}}}}};
    BlockEncoding be = assemble(d);
    EXPECT_DOUBLE_EQ(be.alpha, 3);
    expect_encodes(be, to_matrix(d));
}

TEST(Assemble, RandomDictionaries) {
    Rng rng(46);
    for (int trial = 0; trial < 25; ++trial) {
        unsigned n = 1 + trial % 3;
        std::size_t items = 1 + testing::below(rng, std::min<std::size_t>(std::size_t{1} << n, 4));
        Dictionary d = testing::random_dictionary(rng, n, items, 4);
        BlockEncoding be = assemble(d);
        ASSERT_LE(be.circuit.qubit_count(), 9u);
        expect_encodes(be, to_matrix(d));
    }
}

TEST(Assemble, DecomposedStillEncodes) {
    Dictionary d = cyclic_dictionary(1, 2, 3);
    BlockEncoding be = decompose(assemble(d));
    for (const auto &g : be.circuit.gates()) {
        ASSERT_TRUE(is_elementary(g));
    }
    VerificationReport r = verify_block_encoding(be, to_matrix(d));
    EXPECT_TRUE(r.passed) << r.to_json();
}

TEST(Hermitian, PauliX) {
    SparseMatrix x(1, {{1, 0, 1}, {1, 1, 0}});
    BlockEncoding be = assemble_hermitian(hermitianize(x));
    EXPECT_TRUE(be.hermitian);
    EXPECT_DOUBLE_EQ(be.alpha, 1);
    expect_encodes(be, x);
    VerificationReport r = verify_block_encoding(be, x);
    ASSERT_TRUE(r.hermiticity_residual.has_value());
    EXPECT_LT(*r.hermiticity_residual, 1e-12);
}

TEST(Hermitian, Identity) {
    SparseMatrix id(2, {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 3, 3}});
    expect_encodes(assemble_hermitian(hermitianize(id)), id);
}

TEST(Hermitian, Tridiagonal) {
    std::vector<Triplet> t;
    for (Index i = 0; i < 4; ++i) {
        t.push_back({2, i, i});
        if (i + 1 < 4) {
            t.push_back({1, i, i + 1});
            t.push_back({1, i + 1, i});
        }
    }
    SparseMatrix a(2, t);
    BlockEncoding be = assemble_hermitian(hermitianize(a));
    EXPECT_DOUBLE_EQ(be.alpha, 4);
    expect_encodes(be, a);
    DenseMatrix u = to_unitary(be.circuit);
    EXPECT_LT(max_abs_diff(u, u.adjoint()), 1e-12);
}

TEST(Lcu, Identity) {
    Dictionary d{2, {{1, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}}}};
    LcuForm f = export_lcu(d);
    ASSERT_EQ(f.masks.size(), 1u);
    EXPECT_EQ(f.masks[0], 0u);
    EXPECT_EQ(f.reconstruct(), to_matrix(d));
}

TEST(Lcu, AntiDiagonal) {
    Dictionary d{2, {{Complex(0, 2), {{0, 3}, {1, 2}, {2, 1}, {3, 0}}}, {-1, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}}}};
    LcuForm f = export_lcu(d);
    EXPECT_EQ(f.masks, (std::vector<Index>{3, 1}));
    EXPECT_NEAR(std::abs(f.coefficients[1] - Complex(0, 1)), 0, 1e-15);
    EXPECT_EQ(f.reconstruct(), to_matrix(d));
}

TEST(Lcu, CyclicRejected) {
    try {
        export_lcu(cyclic_dictionary(1, 2, 3));
        FAIL() << "expected NotLcuExpressibleError";
    } catch (const NotLcuExpressibleError &e) {
        EXPECT_EQ(e.item(), 1u);
    }
    Dictionary partial{1, {{1, {{0, 0}}}}};
    EXPECT_THROW(export_lcu(partial), NotLcuExpressibleError);
}

TEST(Frobenius, IdentityAlpha) {
    SparseMatrix id(1, {{1, 0, 0}, {1, 1, 1}});
    BlockEncoding be = frobenius_baseline(id);
    EXPECT_NEAR(be.alpha, std::sqrt(2.0), 1e-15);
    expect_encodes(be, id);
}

TEST(Frobenius, RankOneAndRandom) {
    SparseMatrix rank1(2, {{1, 0, 0}, {2, 0, 1}, {Complex(0, 1), 0, 3}});
    expect_encodes(frobenius_baseline(rank1), rank1);
    Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        SparseMatrix a = testing::random_sparse(rng, 1 + trial % 3, 0.5);
        if (a.empty()) {
            continue;
        }
        BlockEncoding be = frobenius_baseline(a);
        EXPECT_NEAR(be.alpha, frobenius_norm(a), 1e-12);
        expect_encodes(be, a);
        expect_encodes(decompose(be), a);
    }
}

TEST(Verify, CorruptedAlpha) {
    Dictionary d = cyclic_dictionary(1, 2, 3);
    BlockEncoding be = assemble(d);
    be.alpha *= 1.5;
    VerificationReport r = verify_block_encoding(be, to_matrix(d));
    EXPECT_FALSE(r.passed);
    EXPECT_NEAR(r.epsilon, 1.5, 1e-9);
}

TEST(Verify, Sampled) {
    Dictionary d = cyclic_dictionary(1, 2, 3);
    VerifyOptions options;
    options.sampled = true;
    options.sample_columns = 3;
    VerificationReport r = verify_block_encoding(assemble(d), to_matrix(d), options);
    EXPECT_TRUE(r.sampled);
    EXPECT_FALSE(r.full_unitary);
    EXPECT_EQ(r.columns_checked, 3u);
    EXPECT_TRUE(r.passed) << r.to_json();
}

TEST(Verify, DimensionMismatch) {
    Dictionary d = cyclic_dictionary(1, 2, 3);
    EXPECT_THROW(verify_block_encoding(assemble(d), SparseMatrix(2, {{1, 0, 0}})), std::invalid_argument);
}

TEST(ExtractBlock, MatchesMatrix) {
    Dictionary d = cyclic_dictionary(1, 2, 3);
    BlockEncoding be = assemble(d);
    DenseMatrix block = extract_block(be);
    auto oracle = testing::dense_oracle(to_matrix(d));
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_NEAR(std::abs(be.alpha * block(i, j) - oracle[i][j]), 0, 1e-12);
        }
    }
}

}  // namespace
}  // namespace dictenc
