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

#include <iostream>

#include "CLI11.hpp"
#include "cli.h"

int main(int argc, char **argv) {
    using dictenc::cli::RunConfig;
    RunConfig config;
    CLI::App app{"dictenc: dictionary-based block encodings of sparse matrices"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub, const char *out_help = "Output directory (default $DICTENC_OUT_DIR or dictenc_out)") {
        sub->add_option("-o,--out", config.output_dir, out_help);
        sub->add_option("--tol", config.tolerance, "Verification tolerance")->capture_default_str();
        sub->add_option("--cap", config.cap, "Simulation cap in qubits")->capture_default_str();
    };
    auto input_flags = [&](CLI::App *sub) {
        sub->add_flag("--hermitian", config.hermitian, "Build the Hermitian encoding");
        sub->add_option("--value-tol", config.value_tol, "Value grouping tolerance");
        sub->add_flag("--greedy", config.greedy, "Greedy matching instead of exact edge colouring");
    };

    auto *encode = app.add_subcommand("encode", "Build dictionary, circuit and reports from .mtx or dictionary .json");
    encode->add_option("input", config.input)->required();
    common(encode);
    input_flags(encode);
    encode->add_flag("--lcu", config.lcu, "Also write the LCU form");

    auto *verify = app.add_subcommand("verify", "Re-simulate an encode directory");
    verify->add_option("dir", config.input)->required();
    common(verify, "Output directory (default: the encode directory)");
    verify->add_flag("--sampled", config.sampled, "Check a random column subset");

    auto *compare = app.add_subcommand("compare", "Protocol comparison table");
    compare->add_option("input", config.input)->required();
    common(compare);
    input_flags(compare);

    auto *generate = app.add_subcommand("generate", "Emit application instances");
    generate->add_option("kind", config.generate.kind, "cyclic | laplacian2d | gep")->required();
    common(generate);
    generate->add_option("--n", config.generate.n, "cyclic: qubits")->capture_default_str();
    generate->add_option("--alpha", config.generate.alphas, "cyclic: three weights")->expected(3);
    generate->add_option("--nx", config.generate.nx)->capture_default_str();
    generate->add_option("--ny", config.generate.ny)->capture_default_str();
    generate->add_option("--dx", config.generate.dx)->capture_default_str();
    generate->add_option("--dy", config.generate.dy)->capture_default_str();
    generate->add_option("--n1", config.generate.n1)->capture_default_str();
    generate->add_option("--n2", config.generate.n2)->capture_default_str();
    generate->add_option("--seed", config.generate.seed, "gep: random values from this seed (0: a_k = b_k = k+1)");

    auto *exporter = app.add_subcommand("export", "Export one artifact");
    exporter->add_option("input", config.input)->required();
    common(exporter);
    input_flags(exporter);
    exporter->add_option("--format", config.format, "qasm | circuit-json | block-json | lcu")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : dictenc::cli::kInputError;
    }
    config.command = app.get_subcommands().front()->get_name();
    return dictenc::cli::run(config, std::cout, std::cerr);
}
