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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dictenc/applications.h"
#include "dictenc/errors.h"
#include "dictenc/resources.h"
#include "dictenc/synthesis.h"
#include "json.hpp"

namespace dictenc::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

fs::path prepare_dir(const RunConfig &config) {
    fs::path dir = config.output_dir.empty() ? fs::path(default_output_dir()) : fs::path(config.output_dir);
    fs::create_directories(dir);
    return dir;
}

// Either a plain or a Hermitian dictionary, with the matrix it encodes.
struct Loaded {
    SparseMatrix matrix;
    Dictionary dictionary;
    HermitianDictionary hermitian;
    bool is_hermitian = false;
};

Loaded load_input(const RunConfig &config) {
    if (config.input.empty()) {
        throw ParseError("no input file given");
    }
    fs::path path(config.input);
    std::string ext = path.extension().string();
    Loaded in;
    if (ext == ".mtx") {
        in.matrix = load_matrix_market_file(path.string());
        if (in.matrix.empty()) {
            throw DomainError("input matrix has no nonzeros");
        }
        if (config.hermitian) {
            in.hermitian = hermitianize(in.matrix);
            in.is_hermitian = true;
        } else {
            BuildOptions options;
            options.value_tol = config.value_tol;
            options.matching = config.greedy ? MatchingMode::kGreedy : MatchingMode::kExact;
            in.dictionary = build_dictionary(in.matrix, options);
        }
    } else if (ext == ".json") {
        std::string text = read_file(path);
        ordered_json doc;
        try {
            doc = ordered_json::parse(text);
        } catch (const ordered_json::exception &e) {
            throw ParseError(std::string("dictionary JSON: ") + e.what());
        }
        if (doc.is_object() && doc.value("kind", "") == "hermitian") {
            in.hermitian = hermitian_dictionary_from_json(text);
            in.matrix = to_matrix(in.hermitian);
            in.is_hermitian = true;
        } else {
            in.dictionary = dictionary_from_json(text);
            in.matrix = to_matrix(in.dictionary);
        }
    } else {
        throw UnsupportedFormatError("unsupported input '" + config.input + "': expected .mtx or .json");
    }
    return in;
}

BlockEncoding encode(const Loaded &in) {
    return decompose(in.is_hermitian ? assemble_hermitian(in.hermitian) : assemble(in.dictionary));
}

ordered_json parse_json(const std::string &text) {
    return ordered_json::parse(text);
}

std::string lcu_json(const LcuForm &lcu) {
    ordered_json j;
    j["n"] = lcu.n;
    j["terms"] = ordered_json::array();
    for (std::size_t l = 0; l < lcu.values.size(); ++l) {
        j["terms"].push_back({{"value", {lcu.values[l].real(), lcu.values[l].imag()}},
                              {"coefficient", {lcu.coefficients[l].real(), lcu.coefficients[l].imag()}},
                              {"x_mask", lcu.masks[l]}});
    }
    return j.dump(2) + "\n";
}

int cmd_encode(const RunConfig &config, std::ostream &out) {
    Loaded in = load_input(config);
    fs::path dir = prepare_dir(config);
    BlockEncoding be = encode(in);

    std::size_t s0 = in.is_hermitian ? in.hermitian.item_count() : in.dictionary.item_count();
    unsigned n = std::max(in.matrix.qubits(), 1u);
    ResourceReport report = dictionary_cost(n, std::max<std::size_t>(in.matrix.nnz(), 1), s0, be.alpha);
    std::size_t d = depth(be.circuit);
    report.measured_depth = d;
    report.measured_gates = count_gates(be.circuit).total();
    report.measured_ancilla = be.ancilla_count;
    report.measured_time_metric = static_cast<double>(d) * be.alpha;

    ordered_json rep;
    rep["alpha"] = be.alpha;
    rep["n"] = be.system_qubits;
    rep["hermitian"] = be.hermitian;
    rep["item_count"] = s0;
    rep["nnz"] = in.matrix.nnz();
    rep["ancilla_count"] = be.ancilla_count;
    rep["total_qubits"] = be.circuit.qubit_count();
    rep["resources"] = parse_json(report.to_json());

    write_file(dir / "dictionary.json", in.is_hermitian ? hermitian_dictionary_to_json(in.hermitian)
                                                        : dictionary_to_json(in.dictionary));
    write_file(dir / "circuit.qasm", export_qasm(be.circuit));
    write_file(dir / "layout.json", layout_to_json(be.layout()));
    write_file(dir / "report.json", rep.dump(2) + "\n");
    write_file(dir / "matrix.mtx", to_matrix_market(in.matrix));
    if (config.lcu) {
        if (in.is_hermitian) {
            throw DomainError("--lcu needs a plain dictionary, not --hermitian");
        }
        LcuForm lcu = export_lcu(in.dictionary);
        write_file(dir / "lcu.json", lcu_json(lcu));
    }
    out << "encoded " << in.matrix.nnz() << " nonzeros into " << s0 << " items; alpha = " << be.alpha
        << ", qubits = " << be.circuit.qubit_count() << ", depth = " << d << "\n";
    out << "wrote " << dir.string() << "\n";
    return kOk;
}

int cmd_verify(const RunConfig &config, std::ostream &out) {
    if (config.input.empty()) {
        throw ParseError("verify needs the directory written by encode");
    }
    fs::path dir(config.input);
    ordered_json rep;
    try {
        rep = parse_json(read_file(dir / "report.json"));
    } catch (const ordered_json::exception &e) {
        throw ParseError(std::string("report.json: ") + e.what());
    }
    SparseMatrix a = load_matrix_market_file((dir / "matrix.mtx").string());
    Circuit circuit = import_qasm(read_file(dir / "circuit.qasm"));

    BlockEncoding be;
    try {
        be.alpha = rep.at("alpha").get<double>();
        be.system_qubits = rep.at("n").get<unsigned>();
        be.hermitian = rep.at("hermitian").get<bool>();
    } catch (const ordered_json::exception &e) {
        throw ParseError(std::string("report.json: ") + e.what());
    }
    be.circuit = std::move(circuit);
    be.ancilla_count = be.circuit.qubit_count() - be.system_qubits;

    const Register *pool = be.layout().find(kPoolRegister);
    std::size_t logical = be.circuit.qubit_count() - (pool ? pool->size : 0);
    if (logical > config.cap && !config.sampled) {
        throw CapacityError("circuit has " + std::to_string(logical) + " non-pool qubits, above --cap " +
                            std::to_string(config.cap) + "; rerun with --sampled to check a column subset");
    }
    VerifyOptions options;
    options.tol = config.tolerance;
    options.cap = config.cap;
    options.sampled = config.sampled;
    VerificationReport report = verify_block_encoding(be, a, options);
    fs::path out_dir = config.output_dir.empty() ? dir : fs::path(config.output_dir);
    fs::create_directories(out_dir);
    write_file(out_dir / "verification.json", report.to_json());
    out << "epsilon = " << report.epsilon << ", unitarity residual = " << report.unitarity_residual
        << (report.passed ? ", PASS" : ", FAIL") << "\n";
    if (!report.passed) {
        throw VerificationFailure(report.to_json());
    }
    return kOk;
}

int cmd_compare(const RunConfig &config, std::ostream &out) {
    Loaded in = load_input(config);
    if (in.is_hermitian) {
        throw DomainError("compare takes a plain dictionary");
    }
    fs::path dir = prepare_dir(config);
    CompareOptions options;
    options.measure_cap = config.cap;
    auto rows = compare(in.matrix, in.dictionary, options);
    write_file(dir / "comparison.csv", comparison_csv(rows));
    std::string text = comparison_text(rows);
    write_file(dir / "comparison.txt", text);
    out << text;
    return kOk;
}

void write_instance(const fs::path &dir, const std::string &stem, const Instance &inst) {
    write_file(dir / (stem + ".mtx"), to_matrix_market(inst.matrix));
    write_file(dir / (stem + ".dictionary.json"), dictionary_to_json(inst.dictionary));
}

int cmd_generate(const RunConfig &config, std::ostream &out) {
    const GenerateParams &g = config.generate;
    fs::path dir = prepare_dir(config);
    if (g.kind == "cyclic") {
        if (g.alphas.size() != 3) {
            throw DomainError("cyclic needs exactly three --alpha values");
        }
        Instance inst = gen_cyclic_laplacian(g.n, g.alphas[0], g.alphas[1], g.alphas[2]);
        write_instance(dir, "cyclic", inst);
        out << "cyclic: n = " << g.n << ", nnz = " << inst.matrix.nnz() << ", items = " << inst.dictionary.item_count()
            << "\n";
    } else if (g.kind == "laplacian2d") {
        Instance inst = gen_laplacian2d(g.nx, g.ny, g.dx, g.dy);
        write_instance(dir, "laplacian2d", inst);
        out << "laplacian2d: " << g.nx << "x" << g.ny << ", nnz = " << inst.matrix.nnz()
            << ", items = " << inst.dictionary.item_count() << "\n";
    } else if (g.kind == "gep") {
        GepParameters p;
        p.n1 = g.n1;
        p.n2 = g.n2;
        std::mt19937_64 rng(g.seed);
        std::uniform_real_distribution<double> dist(0.5, 2.0);
        for (std::size_t k = 0; k < p.a.size(); ++k) {
            p.a[k] = g.seed == 0 ? Complex(static_cast<double>(k + 1)) : Complex(dist(rng), dist(rng));
        }
        for (std::size_t k = 0; k < p.b.size(); ++k) {
            p.b[k] = g.seed == 0 ? Complex(static_cast<double>(k + 1)) : Complex(dist(rng), dist(rng));
        }
        GepInstance inst = gen_gep_matrices(p);
        write_instance(dir, "gep_A", inst.a);
        write_instance(dir, "gep_B", inst.b);
        ordered_json mismatches = ordered_json::array();
        for (const auto &m : gep_stencil_mismatches(p)) {
            mismatches.push_back({{"matrix", std::string(1, m.matrix)},
                                  {"row", m.row},
                                  {"col", m.col},
                                  {"stencil", {m.stencil.real(), m.stencil.imag()}},
                                  {"table", {m.table.real(), m.table.imag()}}});
        }
        write_file(dir / "gep_stencil_mismatches.json", mismatches.dump(2) + "\n");
        out << "gep: N1 = " << p.n1 << ", N2 = " << p.n2 << ", dim = " << inst.natural_dim << " (padded "
            << inst.a.matrix.dim() << "), nnz A = " << inst.a.matrix.nnz() << ", nnz B = " << inst.b.matrix.nnz()
            << ", stencil mismatches = " << mismatches.size() << "\n";
    } else {
        throw DomainError("unknown generator '" + g.kind + "' (cyclic, laplacian2d, gep)");
    }
    return kOk;
}

int cmd_export(const RunConfig &config, std::ostream &out) {
    Loaded in = load_input(config);
    fs::path dir = prepare_dir(config);
    if (config.format == "lcu") {
        if (in.is_hermitian) {
            throw DomainError("lcu export needs a plain dictionary");
        }
        LcuForm lcu = export_lcu(in.dictionary);
        write_file(dir / "lcu.json", lcu_json(lcu));
    } else {
        BlockEncoding be = encode(in);
        if (config.format == "qasm") {
            write_file(dir / "circuit.qasm", export_qasm(be.circuit));
        } else if (config.format == "circuit-json") {
            write_file(dir / "circuit.json", circuit_to_json(be.circuit));
        } else if (config.format == "block-json") {
            write_file(dir / "block_encoding.json", block_encoding_to_json(be));
        } else {
            throw DomainError("unknown export format '" + config.format + "'");
        }
    }
    out << "exported " << config.format << " to " << dir.string() << "\n";
    return kOk;
}

void report_error(std::ostream &err, const char *kind, const std::string &message, int code) {
    ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    j["exit_code"] = code;
    err << j.dump() << "\n";
}

}  // namespace

std::string default_output_dir() {
    const char *env = std::getenv("DICTENC_OUT_DIR");
    return env != nullptr && *env != '\0' ? env : "dictenc_out";
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        if (!(config.tolerance > 0)) {
            throw DomainError("tolerance must be positive");
        }
        if (config.cap < 1) {
            throw DomainError("cap must be at least 1");
        }
        if (config.command == "encode") {
            return cmd_encode(config, out);
        }
        if (config.command == "verify") {
            return cmd_verify(config, out);
        }
        if (config.command == "compare") {
            return cmd_compare(config, out);
        }
        if (config.command == "generate") {
            return cmd_generate(config, out);
        }
        if (config.command == "export") {
            return cmd_export(config, out);
        }
        throw DomainError("unknown command '" + config.command + "'");
    } catch (const VerificationFailure &e) {
        ordered_json j;
        j["error"] = "verification_failed";
        j["report"] = ordered_json::parse(e.what());
        j["exit_code"] = kVerificationFailed;
        err << j.dump() << "\n";
        return kVerificationFailed;
    } catch (const CapacityError &e) {
        report_error(err, "capacity", e.what(), kCapacityError);
        return kCapacityError;
    } catch (const ParseError &e) {
        report_error(err, "parse", e.what(), kInputError);
        return kInputError;
    } catch (const NotLcuExpressibleError &e) {
        report_error(err, "not_lcu_expressible", e.what(), kInputError);
        return kInputError;
    } catch (const std::invalid_argument &e) {
        report_error(err, "invalid_input", e.what(), kInputError);
        return kInputError;
    } catch (const nlohmann::json::exception &e) {
        report_error(err, "parse", e.what(), kInputError);
        return kInputError;
    } catch (const std::exception &e) {
        report_error(err, "io", e.what(), kInputError);
        return kInputError;
    }
}

}  // namespace dictenc::cli
