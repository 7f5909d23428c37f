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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "dictenc/circuit.h"
#include "dictenc/errors.h"

namespace dictenc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_angle(double a) {
    struct Named {
        double value;
        const char *text;
    };
    static const Named named[] = {{0, "0"},           {kPi, "pi"},         {-kPi, "-pi"},
                                  {kPi / 2, "pi/2"},  {-kPi / 2, "-pi/2"}, {kPi / 4, "pi/4"},
                                  {-kPi / 4, "-pi/4"}};
    for (const auto &n : named) {
        if (std::abs(a - n.value) <= 1e-15) {
            return n.text;
        }
    }
    return format_double(a);
}

class ExprParser {
   public:
    ExprParser(std::string_view text, std::size_t line) : s_(text), line_(line) {
    }

    double parse() {
        double v = sum();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(s_.substr(pos_)) + "'");
        }
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string &what) {
        throw ParseError("qasm: bad angle expression: " + what, line_);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    double sum() {
        double v = product();
        while (true) {
            if (eat('+')) {
                v += product();
            } else if (eat('-')) {
                v -= product();
            } else {
                return v;
            }
        }
    }
    double product() {
        double v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return atom();
    }
    double atom() {
        skip();
        if (eat('(')) {
            double v = sum();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return v;
        }
        if (s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return kPi;
        }
        std::string rest(s_.substr(pos_));
        char *end = nullptr;
        double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) {
            fail("expected a number at '" + rest + "'");
        }
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Qubit parse_operand(std::string_view tok, Qubit total, std::size_t line) {
    tok = trim(tok);
    auto fail = [&](const std::string &why) {
        throw ParseError("qasm: " + why, line);
    };
    if (tok.size() < 4 || tok.substr(0, 2) != "q[" || tok.back() != ']') {
        fail("expected an operand of the form q[k], got '" + std::string(tok) + "'");
    }
    std::string digits(tok.substr(2, tok.size() - 3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        fail("bad qubit index '" + digits + "'");
    }
    unsigned long long k = std::stoull(digits);
    if (k >= total) {
        fail("qubit index " + digits + " out of range");
    }
    return static_cast<Qubit>(k);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(') {
            ++depth;
        } else if (s[k] == ')') {
            --depth;
        } else if (s[k] == sep && depth == 0) {
            out.push_back(s.substr(start, k - start));
            start = k + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

}  // namespace

std::string export_qasm(const Circuit &circuit) {
    std::ostringstream body;
    double phase = circuit.global_phase();
    for (const auto &gate : circuit.gates()) {
        if (!is_elementary(gate)) {
            throw MustDecomposeError("export_qasm: circuit contains a composite " + std::string(gate_name(gate)) +
                                     " gate; decompose first");
        }
        if (const auto *g = std::get_if<gates::SingleQubit>(&gate)) {
            auto e = mat2::euler_zyz(g->matrix);
            phase += e.phase;
            body << "u(" << format_angle(e.theta) << "," << format_angle(e.phi) << "," << format_angle(e.lambda)
                 << ") q[" << g->qubit << "];\n";
        } else {
            const auto &c = std::get<gates::Cnot>(gate);
            body << "cx q[" << c.control << "],q[" << c.target << "];\n";
        }
    }
    phase = std::remainder(phase, 2 * kPi);
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "// global_phase " << format_double(phase) << "\n";
    for (const auto &r : circuit.layout().registers()) {
        out << "// layout " << r.name << " " << r.offset << " " << r.size << "\n";
    }
    out << "qreg q[" << circuit.qubit_count() << "];\n";
    out << body.str();
    return out.str();
}

Circuit import_qasm(std::string_view text) {
    RegisterLayout layout;
    bool saw_layout = false;
    bool saw_qreg = false;
    double phase = 0;
    Circuit circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        auto fail = [&](const std::string &why) {
            throw ParseError("qasm: " + why, line_no);
        };
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("//")) {
            std::istringstream in{std::string(line.substr(2))};
            std::string key;
            in >> key;
            if (key == "global_phase") {
                if (!(in >> phase)) {
                    fail("bad global_phase comment");
                }
            } else if (key == "layout") {
                if (saw_qreg) {
                    fail("layout comment after qreg");
                }
                std::string name;
                Qubit offset = 0;
                Qubit size = 0;
                if (!(in >> name >> offset >> size)) {
                    fail("bad layout comment");
                }
                try {
                    const auto &r = layout.add(name, size);
                    if (r.offset != offset) {
                        fail("layout register '" + name + "' offset does not follow its predecessors");
                    }
                } catch (const std::invalid_argument &e) {
                    fail(e.what());
                }
                saw_layout = true;
            }
            continue;
        }
        if (line.back() != ';') {
            fail("missing ';'");
        }
        line = trim(line.substr(0, line.size() - 1));
        if (line.starts_with("OPENQASM") || line.starts_with("include")) {
            continue;
        }
        if (line.starts_with("qreg")) {
            if (saw_qreg) {
                fail("only one qreg is supported");
            }
            std::string_view decl = trim(line.substr(4));
            if (!decl.starts_with("q[") || decl.back() != ']') {
                fail("expected qreg q[N]");
            }
            std::string digits(decl.substr(2, decl.size() - 3));
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
                fail("bad qreg size");
            }
            Qubit total = static_cast<Qubit>(std::stoul(digits));
            if (!saw_layout) {
                layout.add("q", total);
            } else if (layout.total_qubits() != total) {
                fail("qreg size " + digits + " disagrees with layout comments (" +
                     std::to_string(layout.total_qubits()) + ")");
            }
            circuit = Circuit(layout);
            saw_qreg = true;
            continue;
        }
        if (!saw_qreg) {
            fail("gate before qreg declaration");
        }
        std::size_t name_end = 0;
        while (name_end < line.size() && (std::isalnum(static_cast<unsigned char>(line[name_end])) != 0)) {
            ++name_end;
        }
        std::string name(line.substr(0, name_end));
        std::string_view rest = trim(line.substr(name_end));
        std::vector<double> params;
        if (rest.starts_with("(")) {
            std::size_t close = rest.find(')');
            std::size_t depth = 0;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                if (rest[k] == '(') {
                    ++depth;
                } else if (rest[k] == ')' && --depth == 0) {
                    close = k;
                    break;
                }
            }
            if (close == std::string_view::npos) {
                fail("missing ')'");
            }
            for (auto p : split(rest.substr(1, close - 1), ',')) {
                params.push_back(ExprParser(p, line_no).parse());
            }
            rest = trim(rest.substr(close + 1));
        }
        auto operands = split(rest, ',');
        Qubit total = circuit.qubit_count();
        try {
            if (name == "u" || name == "u3" || name == "U") {
                if (params.size() != 3 || operands.size() != 1) {
                    fail("u takes 3 parameters and 1 operand");
                }
                circuit.append(gates::SingleQubit{parse_operand(operands[0], total, line_no),
                                                  mat2::u3(params[0], params[1], params[2])});
            } else if (name == "x") {
                if (!params.empty() || operands.size() != 1) {
                    fail("x takes 1 operand");
                }
                circuit.append(gates::SingleQubit{parse_operand(operands[0], total, line_no), mat2::pauli_x()});
            } else if (name == "h") {
                if (!params.empty() || operands.size() != 1) {
                    fail("h takes 1 operand");
                }
                circuit.append(gates::SingleQubit{parse_operand(operands[0], total, line_no), mat2::hadamard()});
            } else if (name == "cx" || name == "CX") {
                if (!params.empty() || operands.size() != 2) {
                    fail("cx takes 2 operands");
                }
                circuit.append(gates::Cnot{parse_operand(operands[0], total, line_no),
                                           parse_operand(operands[1], total, line_no), true});
            } else {
                fail("unsupported gate '" + name + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            fail(e.what());
        }
    }
    if (!saw_qreg) {
        throw ParseError("qasm: no qreg declaration", line_no);
    }
    circuit.add_global_phase(phase);
    return circuit;
}

}  // namespace dictenc
