// Copyright 2026 The cnotdihedral authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Exit codes: 0 success, 1 operational failure
// (a verification failure, an unreachable element, an exhausted budget),
// 2 usage or input errors (bad flags, malformed circuit files).

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnotdihedral/canonical.hpp"
#include "cnotdihedral/circuit.hpp"
#include "cnotdihedral/identities.hpp"
#include "cnotdihedral/layers.hpp"
#include "cnotdihedral/rb.hpp"

namespace {

using nlohmann::json;
using namespace cnotdihedral;

bool use_color() {
    static const bool enabled = isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
    return enabled;
}

std::string paint(const std::string &text, const char *code) {
    if (!use_color()) {
        return text;
    }
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Circuit load_circuit(const std::string &path) {
    ParseResult parsed = parse_circuit(read_input(path));
    for (const ParseWarning &w : parsed.warnings) {
        std::cerr << "warning: line " << w.line << ": " << w.message << "\n";
    }
    return parsed.circuit;
}

std::string hex_bytes(const std::string &bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

FormClass class_from_name(const std::string &name) {
    for (FormClass cls : {FormClass::CSDihedral, FormClass::CXLike, FormClass::DoubleCX,
                          FormClass::TripleCX}) {
        if (name == form_class_name(cls)) {
            return cls;
        }
    }
    throw std::invalid_argument("unknown class '" + name + "'");
}

json form_record(const CanonicalForm &f, uint32_t m) {
    return json{{"index", form_index(f, m)}, {"class", form_class_name(f.cls)},
                {"dir", f.dir},             {"k", f.k},
                {"kp", f.kp},               {"l", f.l},
                {"lp", f.lp},               {"e", f.e}};
}

struct EnumerateOpts {
    uint32_t m = 2;
    std::string cls_filter;
    std::string format = "circuits";
    bool json_lines = false;
};

int cmd_enumerate(const EnumerateOpts &opt) {
    std::optional<FormClass> filter;
    if (!opt.cls_filter.empty()) {
        filter = class_from_name(opt.cls_filter);
    }
    uint64_t count = form_count(opt.m);
    for (uint64_t i = 0; i < count; i++) {
        CanonicalForm f = form_from_index(opt.m, i);
        if (filter && f.cls != *filter) {
            continue;
        }
        Circuit c = form_to_circuit(f, opt.m);
        if (opt.json_lines) {
            json rec = form_record(f, opt.m);
            rec["gates"] = serialize_gates_inline(c);
            rec["key"] = hex_bytes(canonical_key(form_to_element(f, opt.m)));
            std::cout << rec.dump() << "\n";
        } else if (opt.format == "circuits") {
            std::cout << serialize_gates_inline(c) << "\n";
        } else if (opt.format == "params") {
            std::printf("%8llu %-12s %3u %2u %2u %6u %6u %6u\n",
                        static_cast<unsigned long long>(i), form_class_name(f.cls), f.dir, f.k,
                        f.kp, f.l, f.lp, f.e);
        } else {  // keys
            std::cout << hex_bytes(canonical_key(form_to_element(f, opt.m))) << "\n";
        }
    }
    return 0;
}

struct ClassifyOpts {
    std::string file = "-";
    bool json_lines = false;
};

int cmd_classify(const ClassifyOpts &opt) {
    Circuit c = load_circuit(opt.file);
    CanonicalForm f = classify(evaluate(c));
    Circuit canonical = form_to_circuit(f, c.m);
    if (opt.json_lines) {
        json rec = form_record(f, c.m);
        rec["canonical"] = serialize_gates_inline(canonical);
        std::cout << rec.dump() << "\n";
        return 0;
    }
    std::cout << "class: " << form_class_name(f.cls) << "\n"
              << "dir: " << unsigned{f.dir} << "\n"
              << "k: " << f.k << "\n"
              << "kp: " << f.kp << "\n"
              << "l: " << f.l << "\n"
              << "lp: " << f.lp << "\n"
              << "e: " << f.e << "\n"
              << "index: " << form_index(f, c.m) << "\n"
              << "canonical: " << serialize_gates_inline(canonical) << "\n";
    return 0;
}

struct GenerateOpts {
    uint32_t n = 2;
    uint32_t m = 2;
    std::string mode = "cx";
    std::optional<uint32_t> rmax;
    uint64_t budget = 10'000'000;
    bool json_lines = false;
};

int cmd_generate(const GenerateOpts &opt) {
    LayerMode mode = opt.mode == "cs" ? LayerMode::CS : LayerMode::CX;
    int code = 0;
    LayerSet set(mode, opt.n, opt.m, opt.budget);
    try {
        set.extend_to(opt.rmax ? *opt.rmax : UINT32_MAX);
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 1;
    }
    std::vector<LayerRow> rows = set.bound_report();
    if (opt.json_lines) {
        for (const LayerRow &row : rows) {
            json rec{{"kind", "layer"},
                     {"r", row.r},
                     {"size", row.size},
                     {"growth_bound", row.growth_bound},
                     {"step_candidates", row.step_candidates},
                     {"step_bound", row.step_bound},
                     {"cum_candidates", row.cum_candidates},
                     {"cum_bound", row.cum_bound}};
            std::cout << rec.dump() << "\n";
        }
        json summary{{"kind", "summary"},
                     {"closed", set.closed()},
                     {"total", set.total()},
                     {"branch_factor", set.branch_factor()}};
        std::cout << summary.dump() << "\n";
        return code;
    }
    std::printf("%4s %12s %14s %14s %16s %16s %18s\n", "r", "size", "growth", "step_cand",
                "step_bound", "cum_cand", "cum_bound");
    for (const LayerRow &row : rows) {
        std::printf("%4u %12llu %14llu %14llu %16llu %16llu %18llu\n", row.r,
                    static_cast<unsigned long long>(row.size),
                    static_cast<unsigned long long>(row.growth_bound),
                    static_cast<unsigned long long>(row.step_candidates),
                    static_cast<unsigned long long>(row.step_bound),
                    static_cast<unsigned long long>(row.cum_candidates),
                    static_cast<unsigned long long>(row.cum_bound));
    }
    std::printf("closed: %s  total: %llu  branch: %llu\n", set.closed() ? "yes" : "no",
                static_cast<unsigned long long>(set.total()),
                static_cast<unsigned long long>(set.branch_factor()));
    return code;
}

struct CostOpts {
    std::string file = "-";
    std::string mode = "cx";
    uint64_t budget = 10'000'000;
    bool json_lines = false;
};

int cmd_cost(const CostOpts &opt) {
    Circuit c = load_circuit(opt.file);
    LayerMode mode = opt.mode == "cs" ? LayerMode::CS : LayerMode::CX;
    LayerSet set(mode, c.n, c.m, opt.budget);
    std::optional<CostWitness> found = set.min_cost(evaluate(c));
    if (!found) {
        std::cerr << "error: element is not reachable with " << opt.mode << " extensions\n";
        return 1;
    }
    if (opt.json_lines) {
        json rec{{"cost", found->cost}, {"witness", serialize_gates_inline(found->circuit)}};
        std::cout << rec.dump() << "\n";
        return 0;
    }
    std::cout << "cost: " << found->cost << "\n"
              << "witness: " << serialize_gates_inline(found->circuit) << "\n";
    return 0;
}

struct VerifyOpts {
    uint32_t m = 2;
    uint32_t n = 2;
    bool json_lines = false;
};

int cmd_verify(const VerifyOpts &opt) {
    VerifyReport report = verify_all(opt.m, opt.n);
    bool ok = true;
    for (const RuleResult &r : report.results) {
        const char *status = r.status == RuleStatus::Pass   ? "pass"
                             : r.status == RuleStatus::Skip ? "skip"
                                                            : "fail";
        if (r.status == RuleStatus::Fail) {
            ok = false;
        }
        if (opt.json_lines) {
            json rec{{"name", r.name},
                     {"status", status},
                     {"instantiations", r.instantiations}};
            if (r.status == RuleStatus::Fail) {
                rec["counterexample"] = r.counterexample;
            }
            std::cout << rec.dump() << "\n";
            continue;
        }
        std::string shown = r.status == RuleStatus::Fail ? paint(status, "31")
                            : r.status == RuleStatus::Pass ? paint(status, "32")
                                                           : std::string(status);
        std::cout << r.name << " " << shown;
        if (r.status == RuleStatus::Fail) {
            std::cout << " " << r.counterexample;
        }
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}

struct RbOpts {
    uint32_t m = 2;
    uint32_t length = 1;
    uint32_t count = 1;
    uint64_t seed = 0;
    bool expand = false;
    std::string out_dir;
    bool json_lines = false;
};

int cmd_rb_seq(const RbOpts &opt) {
    RbOptions options;
    options.m = opt.m;
    options.length = opt.length;
    options.count = opt.count;
    options.seed = opt.seed;
    options.expand_cs = opt.expand;
    std::vector<Circuit> seqs = make_rb_sequences(options);
    if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        for (uint32_t i = 0; i < seqs.size(); i++) {
            char name[32];
            std::snprintf(name, sizeof name, "seq_%04u.circuit", i);
            std::ofstream out(std::filesystem::path(opt.out_dir) / name, std::ios::binary);
            if (!out) {
                throw std::invalid_argument("cannot write into '" + opt.out_dir + "'");
            }
            out << serialize_circuit(seqs[i]);
        }
        return 0;
    }
    for (uint32_t i = 0; i < seqs.size(); i++) {
        if (opt.json_lines) {
            json rec{{"index", i},
                     {"qubits", seqs[i].n},
                     {"m", seqs[i].m},
                     {"gates", serialize_gates_inline(seqs[i])}};
            std::cout << rec.dump() << "\n";
        } else {
            if (i != 0) {
                std::cout << "\n";
            }
            std::cout << serialize_circuit(seqs[i]);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact engine for the group generated by X, T and CX gates"};
    app.require_subcommand(1);

    EnumerateOpts en;
    CLI::App *enumerate = app.add_subcommand(
        "enumerate", "List every two-qubit element as its canonical circuit");
    enumerate->add_option("--m", en.m, "phase modulus (>= 2)")->required();
    enumerate->add_option("--class", en.cls_filter, "restrict to one class")
        ->check(CLI::IsMember({"cs-dihedral", "cx", "double-cx", "triple-cx"}));
    enumerate->add_option("--format", en.format, "output shape")
        ->check(CLI::IsMember({"circuits", "params", "keys"}));
    enumerate->add_flag("--json-lines", en.json_lines, "one JSON record per line");

    ClassifyOpts cl;
    CLI::App *classify_cmd = app.add_subcommand(
        "classify", "Read a two-qubit circuit and print its canonical decomposition");
    classify_cmd->add_option("file", cl.file, "circuit file ('-' for stdin)");
    classify_cmd->add_flag("--json-lines", cl.json_lines, "one JSON record per line");

    GenerateOpts ge;
    CLI::App *generate = app.add_subcommand(
        "generate", "Stratify the group by entangling-gate count and print the table");
    generate->add_option("--n", ge.n, "qubit count")->check(CLI::Range(1, 16));
    generate->add_option("--m", ge.m, "phase modulus (>= 2)")->required();
    generate->add_option("--mode", ge.mode, "counted gate")->check(CLI::IsMember({"cx", "cs"}));
    generate->add_option("--rmax", ge.rmax, "stop after this many layers (default: closure)");
    generate->add_option("--budget", ge.budget, "candidate product cap");
    generate->add_flag("--json-lines", ge.json_lines, "one JSON record per line");

    CostOpts co;
    CLI::App *cost = app.add_subcommand(
        "cost", "Minimal counted-gate cost of a circuit's element, with a witness");
    cost->add_option("file", co.file, "circuit file ('-' for stdin)");
    cost->add_option("--mode", co.mode, "counted gate")->check(CLI::IsMember({"cx", "cs"}));
    cost->add_option("--budget", co.budget, "candidate product cap");
    cost->add_flag("--json-lines", co.json_lines, "one JSON record per line");

    VerifyOpts ve;
    CLI::App *verify = app.add_subcommand("verify", "Check the gate-identity catalog");
    verify->add_option("--m", ve.m, "phase modulus (>= 2)")->required();
    verify->add_option("--n", ve.n, "qubit count (>= 2)");
    verify->add_flag("--json-lines", ve.json_lines, "one JSON record per line");

    RbOpts rb;
    CLI::App *rb_seq = app.add_subcommand(
        "rb-seq", "Emit self-inverting random benchmarking sequences");
    rb_seq->add_option("--m", rb.m, "phase modulus (>= 2)")->required();
    rb_seq->add_option("--length", rb.length, "random steps per sequence")
        ->required()
        ->check(CLI::Range(std::uint32_t{1}, std::numeric_limits<std::uint32_t>::max()));
    rb_seq->add_option("--count", rb.count, "number of sequences")
        ->check(CLI::Range(std::uint32_t{1}, std::numeric_limits<std::uint32_t>::max()));
    rb_seq->add_option("--seed", rb.seed, "generator seed");
    rb_seq->add_flag("--expand-cs", rb.expand, "lower CS powers to the two-CX macro");
    rb_seq->add_option("--output-dir", rb.out_dir, "write one circuit file per sequence");
    rb_seq->add_flag("--json-lines", rb.json_lines, "one JSON record per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate) {
            return cmd_enumerate(en);
        }
        if (*classify_cmd) {
            return cmd_classify(cl);
        }
        if (*generate) {
            return cmd_generate(ge);
        }
        if (*cost) {
            return cmd_cost(co);
        }
        if (*verify) {
            return cmd_verify(ve);
        }
        if (*rb_seq) {
            return cmd_rb_seq(rb);
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
