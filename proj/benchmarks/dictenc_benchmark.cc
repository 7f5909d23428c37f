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

#include <benchmark/benchmark.h>

#include "dictenc/applications.h"
#include "dictenc/resources.h"
#include "dictenc/synthesis.h"

namespace dictenc {
namespace {

void BM_BuildDictionaryCyclic(benchmark::State &state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    SparseMatrix a = gen_cyclic_laplacian(n, 3, 2, 1).matrix;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_dictionary(a));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.nnz()));
}
BENCHMARK(BM_BuildDictionaryCyclic)->DenseRange(4, 12, 4);

void BM_BuildDictionaryLaplacian(benchmark::State &state) {
    auto side = static_cast<std::uint64_t>(state.range(0));
    SparseMatrix a = gen_laplacian2d(side, side, 1, 1).matrix;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_dictionary(a));
    }
}
BENCHMARK(BM_BuildDictionaryLaplacian)->Arg(8)->Arg(32);

void BM_Assemble(benchmark::State &state) {
    Dictionary d = gen_cyclic_laplacian(static_cast<unsigned>(state.range(0)), 3, 2, 1).dictionary;
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(d));
    }
}
BENCHMARK(BM_Assemble)->DenseRange(3, 7, 2);

void BM_Decompose(benchmark::State &state) {
    BlockEncoding be = assemble(gen_cyclic_laplacian(static_cast<unsigned>(state.range(0)), 3, 2, 1).dictionary);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(be));
    }
}
BENCHMARK(BM_Decompose)->DenseRange(3, 5, 1);

void BM_ToUnitary(benchmark::State &state) {
    BlockEncoding be = assemble(gen_cyclic_laplacian(3, 3, 2, 1).dictionary);
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_unitary(be.circuit));
    }
}
BENCHMARK(BM_ToUnitary)->Unit(benchmark::kMillisecond);

void BM_BasisSimulation(benchmark::State &state) {
    BlockEncoding be = decompose(assemble(gen_cyclic_laplacian(static_cast<unsigned>(state.range(0)), 3, 2, 1).dictionary));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_to_basis_state(be.circuit, 1));
    }
}
BENCHMARK(BM_BasisSimulation)->DenseRange(3, 5, 1);

void BM_Verify(benchmark::State &state) {
    Instance inst = gen_laplacian2d(4, 4, 1, 1);
    BlockEncoding be = assemble(inst.dictionary);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_block_encoding(be, inst.matrix));
    }
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_QasmRoundTrip(benchmark::State &state) {
    BlockEncoding be = decompose(assemble(gen_cyclic_laplacian(3, 3, 2, 1).dictionary));
    for (auto _ : state) {
        benchmark::DoNotOptimize(import_qasm(export_qasm(be.circuit)));
    }
}
BENCHMARK(BM_QasmRoundTrip)->Unit(benchmark::kMillisecond);

void BM_Compare(benchmark::State &state) {
    Instance inst = gen_cyclic_laplacian(3, 3, 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare(inst.matrix, inst.dictionary));
    }
}
BENCHMARK(BM_Compare)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dictenc

BENCHMARK_MAIN();
