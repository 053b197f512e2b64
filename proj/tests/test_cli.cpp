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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef CLI_BINARY_PATH
#error "CLI_BINARY_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Run the tool with stdout captured; stderr is discarded so diagnostics do
// not interleave with the stream under test.
RunResult run_cli(const std::string &args, const std::string &stdin_file = "") {
    std::string cmd = std::string("'") + CLI_BINARY_PATH + "' " + args;
    if (!stdin_file.empty()) {
        cmd += " < '" + stdin_file + "'";
    }
    cmd += " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::string write_temp(const std::string &name, const std::string &content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
}

}  // namespace

TEST_CASE("enumerate lists the whole group as circuits") {
    RunResult r = run_cli("enumerate --m 2");
    CHECK(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    CHECK(lines.size() == 96);
    CHECK(lines[0].empty());  // the identity has no gates
    CHECK(r.out.find('\x1b') == std::string::npos);
}

TEST_CASE("enumerate filters by class") {
    RunResult r = run_cli("enumerate --m 2 --class cx");
    CHECK(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    CHECK(lines.size() == 32);
    for (const std::string &line : lines) {
        CHECK(line.find("cx") != std::string::npos);
    }
}

TEST_CASE("enumerate emits parseable JSON records") {
    RunResult r = run_cli("enumerate --m 3 --class triple-cx --json-lines");
    CHECK(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    CHECK(lines.size() == 108);
    for (const std::string &line : lines) {
        nlohmann::json rec = nlohmann::json::parse(line);
        CHECK(rec["class"] == "triple-cx");
        CHECK(rec.contains("index"));
        CHECK(rec.contains("gates"));
        CHECK(rec.contains("key"));
    }
}

TEST_CASE("enumerate params format carries the decomposition fields") {
    RunResult r = run_cli("enumerate --m 2 --format params");
    CHECK(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 96);
    CHECK(lines[0].find("cs-dihedral") != std::string::npos);
    CHECK(lines[95].find("triple-cx") != std::string::npos);
}

TEST_CASE("classify names the swap pattern") {
    std::string file =
        write_temp("cli_swap.circuit", "qubits 2\nm 4\ncx 0 1\ncx 1 0\ncx 0 1\n");
    RunResult r = run_cli("classify '" + file + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("class: triple-cx") != std::string::npos);
    CHECK(r.out.find("canonical: cx 0 1; cx 1 0; cx 0 1") != std::string::npos);

    RunResult js = run_cli("classify --json-lines '" + file + "'");
    CHECK(js.code == 0);
    nlohmann::json rec = nlohmann::json::parse(js.out);
    CHECK(rec["class"] == "triple-cx");
    CHECK(rec["canonical"] == "cx 0 1; cx 1 0; cx 0 1");
}

TEST_CASE("classify reads from stdin") {
    std::string file = write_temp("cli_id.circuit", "qubits 2\nm 2\n");
    RunResult r = run_cli("classify", file);
    CHECK(r.code == 0);
    CHECK(r.out.find("class: cs-dihedral") != std::string::npos);
    CHECK(r.out.find("index: 0") != std::string::npos);
}

TEST_CASE("cost reports minimal counts in both modes") {
    std::string file = write_temp("cli_cs.circuit", "qubits 2\nm 4\ncs 0 1 1\n");
    RunResult pure = run_cli("cost '" + file + "'");
    CHECK(pure.code == 0);
    CHECK(pure.out.find("cost: 2") != std::string::npos);
    CHECK(pure.out.find("witness: ") != std::string::npos);

    RunResult free = run_cli("cost --mode cs '" + file + "'");
    CHECK(free.code == 0);
    CHECK(free.out.find("cost: 1") != std::string::npos);
}

TEST_CASE("cost flags unreachable elements as an operational failure") {
    std::string file = write_temp("cli_cx.circuit", "qubits 2\nm 4\ncx 0 1\n");
    RunResult r = run_cli("cost --mode cs '" + file + "'");
    CHECK(r.code == 1);
}

TEST_CASE("generate prints the closed growth table") {
    RunResult r = run_cli("generate --m 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("closed: yes  total: 96") != std::string::npos);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() >= 5);  // header, four layers, summary
    CHECK(lines[0].find("step_bound") != std::string::npos);
}

TEST_CASE("generate honors a tight budget with a partial table") {
    RunResult r = run_cli("generate --m 8 --budget 300");
    CHECK(r.code == 1);
    CHECK(r.out.find("closed: no") != std::string::npos);
}

TEST_CASE("generate json stream ends with a summary record") {
    RunResult r = run_cli("generate --m 4 --json-lines");
    CHECK(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(!lines.empty());
    nlohmann::json last = nlohmann::json::parse(lines.back());
    CHECK(last["kind"] == "summary");
    CHECK(last["closed"] == true);
    CHECK(last["total"] == 768);
    uint64_t sum = 0;
    for (size_t i = 0; i + 1 < lines.size(); i++) {
        nlohmann::json rec = nlohmann::json::parse(lines[i]);
        CHECK(rec["kind"] == "layer");
        CHECK(rec["step_candidates"].get<uint64_t>() <= rec["step_bound"].get<uint64_t>());
        sum += rec["size"].get<uint64_t>();
    }
    CHECK(sum == 768);
}

TEST_CASE("verify reports every rule as pass or skip") {
    RunResult r = run_cli("verify --m 8 --n 2");
    CHECK(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    CHECK(lines.size() == 23);
    for (const std::string &line : lines) {
        bool ok = line.find(" pass") != std::string::npos ||
                  line.find(" skip") != std::string::npos;
        CHECK(ok);
    }
    CHECK(r.out.find('\x1b') == std::string::npos);  // not a terminal, no color

    RunResult odd = run_cli("verify --m 3");
    CHECK(odd.code == 0);
    CHECK(odd.out.find(" skip") != std::string::npos);
}

TEST_CASE("rb-seq output is reproducible per seed") {
    RunResult a = run_cli("rb-seq --m 8 --length 5 --count 3 --seed 42");
    RunResult b = run_cli("rb-seq --m 8 --length 5 --count 3 --seed 42");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("qubits 2") != std::string::npos);

    RunResult c = run_cli("rb-seq --m 8 --length 5 --count 3 --seed 43");
    CHECK(c.code == 0);
    CHECK(a.out != c.out);
}

TEST_CASE("rb-seq writes sequence files on request") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "cli_rb_out";
    std::filesystem::remove_all(dir);
    RunResult r = run_cli("rb-seq --m 4 --length 3 --count 2 --seed 9 --output-dir '" +
                          dir.string() + "'");
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "seq_0000.circuit"));
    CHECK(std::filesystem::exists(dir / "seq_0001.circuit"));
    std::ifstream in(dir / "seq_0000.circuit");
    std::string first_line;
    std::getline(in, first_line);
    CHECK(first_line == "qubits 2");
}

TEST_CASE("usage problems exit with the input-error code") {
    CHECK(run_cli("enumerate").code == 2);            // missing required --m
    CHECK(run_cli("frobnicate --m 2").code == 2);     // unknown subcommand
    CHECK(run_cli("enumerate --m 2 --class q").code == 2);
    CHECK(run_cli("").code == 2);                     // a subcommand is required
}

TEST_CASE("malformed circuit files exit with the input-error code") {
    std::string file = write_temp("cli_bad.circuit", "qubits 2\nm 4\nfrob 1\n");
    CHECK(run_cli("classify '" + file + "'").code == 2);
    std::string headerless = write_temp("cli_bad2.circuit", "x 0\n");
    CHECK(run_cli("cost '" + headerless + "'").code == 2);
    CHECK(run_cli("classify '/nonexistent/path.circuit'").code == 2);
}

TEST_CASE("three-qubit circuits are rejected by classify but priced by cost") {
    std::string file = write_temp("cli_three.circuit", "qubits 3\nm 2\ncx 0 2\n");
    CHECK(run_cli("classify '" + file + "'").code == 2);
    RunResult r = run_cli("cost '" + file + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("cost: 1") != std::string::npos);
}
