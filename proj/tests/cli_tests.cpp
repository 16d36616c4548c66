// Integration tests that drive the installed binary exactly the way a shell
// script would: spawn, capture stdout, inspect the exit code and the JSON
// report.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunOutcome {
    int exit_code = -1;
    std::string output;
};

RunOutcome run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command =
        (env_prefix.empty() ? "" : env_prefix + " ") + std::string(LICOL_CLI_PATH) + " " + args +
        " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunOutcome outcome;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        outcome.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    outcome.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return outcome;
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "licol_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string read_back(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("generate writes graph files") {
    RunOutcome c4 = run_cli("generate cycle 4");
    CHECK(c4.exit_code == 0);
    CHECK(c4.output == "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");

    RunOutcome k3 = run_cli("generate complete 3");
    CHECK(k3.output == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");

    RunOutcome p3 = run_cli("generate path 3");
    CHECK(p3.output == "p edge 3 2\ne 1 2\ne 2 3\n");

    const std::string out = (scratch_dir() / "c4.col").string();
    CHECK(run_cli("generate cycle 4 -o " + out).exit_code == 0);
    CHECK(read_back(out) == c4.output);

    CHECK(run_cli("generate dodecahedron 4").exit_code == 2);
}

TEST_CASE("solve reports verdicts and honors exit codes") {
    const std::string c4 = write_scratch("solve_c4.col", run_cli("generate cycle 4").output);
    const std::string windows = write_scratch("solve_windows.json", R"({"kind":"interval",
        "gamma":{"1":10,"2":20,"3":30,"4":40},
        "mu":{"1":11,"2":21,"3":31,"4":41}})");

    RunOutcome sat = run_cli("solve gammamu " + c4 + " " + windows);
    CHECK(sat.exit_code == 0);
    json report = json::parse(sat.output);
    CHECK(report["result"]["satisfiable"] == true);
    CHECK(report["result"]["witness"]["1"] == 10);
    CHECK(report["inputs"]["graph"].contains("fnv1a64"));

    const std::string k3 = write_scratch("solve_k3.col", run_cli("generate complete 3").output);
    RunOutcome unsat = run_cli("solve kcolor " + k3 + " --k 2");
    CHECK(unsat.exit_code == 1);
    CHECK(json::parse(unsat.output)["result"]["satisfiable"] == false);

    const std::string p3 = write_scratch("solve_p3.col", run_cli("generate path 3").output);
    const std::string lists = write_scratch("solve_lists.json",
        R"({"kind":"list","lists":{"1":[1,2],"2":[2,3],"3":[2,3]}})");
    CHECK(run_cli("solve list " + p3 + " " + lists).exit_code == 0);

    // Kind mismatch and malformed files are errors.
    CHECK(run_cli("solve mu " + p3 + " " + lists).exit_code == 2);
    const std::string broken = write_scratch("solve_broken.col", "e 1 2\n");
    CHECK(run_cli("solve kcolor " + broken + " --k 2").exit_code == 2);

    // Identical runs give identical reports modulo timing.
    json again = json::parse(run_cli("solve gammamu " + c4 + " " + windows).output);
    report.erase("wall_ms");
    again.erase("wall_ms");
    CHECK(report == again);
}

TEST_CASE("solve precolor and mu models") {
    const std::string p3 = write_scratch("pre_p3.col", run_cli("generate path 3").output);
    const std::string pre = write_scratch("pre.json",
        R"({"kind":"precoloring","fixed":{"2":1},"k":2})");
    RunOutcome r = run_cli("solve precolor " + p3 + " " + pre);
    CHECK(r.exit_code == 0);
    json report = json::parse(r.output);
    CHECK(report["result"]["witness"]["1"] == 2);
    CHECK(report["result"]["witness"]["2"] == 1);
    CHECK(report["result"]["witness"]["3"] == 2);

    const std::string mu = write_scratch("mu.json", R"({"kind":"mu","mu":{"1":1,"2":2,"3":1}})");
    CHECK(run_cli("solve mu " + p3 + " " + mu).exit_code == 0);
}

TEST_CASE("chromatic and count") {
    const std::string k3 = write_scratch("chrom_k3.col", run_cli("generate complete 3").output);
    RunOutcome chrom = run_cli("chromatic " + k3);
    CHECK(chrom.exit_code == 0);
    CHECK(json::parse(chrom.output)["result"]["chromatic_number"] == 3);

    CHECK(run_cli("count 3 2").output == "8\n");
    CHECK(run_cli("count 3 3").output == "1\n");
    CHECK(run_cli("count 20 1").output == "104857600000000000000000000\n");
    CHECK(run_cli("count 2 3").exit_code == 2);
}

TEST_CASE("choosable subcommand") {
    const std::string k3 = write_scratch("choose_k3.col", run_cli("generate complete 3").output);

    CHECK(run_cli("choosable " + k3 + " --model interval --k 3").exit_code == 0);

    const std::string counterexample = (scratch_dir() / "counterexample.json").string();
    RunOutcome no = run_cli("choosable " + k3 + " --model interval --k 2 --emit-counterexample " +
                            counterexample);
    CHECK(no.exit_code == 1);
    json report = json::parse(no.output);
    CHECK(report["result"]["choosable"] == false);
    CHECK(report["result"]["counterexample"]["gamma"]["1"] == 1);
    json emitted = json::parse(read_back(counterexample));
    CHECK(emitted["kind"] == "interval");
    CHECK(emitted["mu"]["3"] == 2);

    const std::string p3 = write_scratch("choose_p3.col", run_cli("generate path 3").output);
    RunOutcome classical = run_cli("choosable " + p3 + " --model classical --k 2 --pool 3");
    CHECK(classical.exit_code == 0);
    CHECK(json::parse(classical.output)["result"]["assignments_checked"] == 27);

    // Budget refusals exit 2; --force overrides; --workers leaves the verdict.
    CHECK(run_cli("choosable " + p3 + " --model interval --k 2 --budget 5").exit_code == 2);
    CHECK(run_cli("choosable " + p3 + " --model interval --k 2 --budget 5 --force").exit_code == 0);
    RunOutcome parallel = run_cli("choosable " + k3 + " --model interval --k 2 --workers 4");
    CHECK(parallel.exit_code == 1);
    CHECK(json::parse(parallel.output)["result"]["counterexample_index"] == 0);

    // LICOL_BUDGET provides the default budget.
    CHECK(run_cli("choosable " + p3 + " --model interval --k 2", "LICOL_BUDGET=5").exit_code == 2);
    CHECK(run_cli("choosable " + p3 + " --model interval --k 2", "LICOL_BUDGET=100").exit_code ==
          0);

    // Both universes and both solver modes are reachable.
    CHECK(run_cli("choosable " + p3 + " --model interval --k 2 --universe normalized")
              .exit_code == 0);
    CHECK(run_cli("choosable " + k3 + " --model interval --k 2 --universe normalized")
              .exit_code == 1);
    RunOutcome literal =
        run_cli("choosable " + p3 + " --model interval --k 2 --solver paper-literal");
    CHECK(literal.exit_code == 0);
    CHECK(json::parse(literal.output)["result"]["stats"]["leaves"] >= 8);
}

TEST_CASE("choosability-number subcommand") {
    const std::string k3 = write_scratch("number_k3.col", run_cli("generate complete 3").output);
    RunOutcome r = run_cli("choosability-number " + k3);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["result"]["choosability_number"] == 3);

    const std::string e3 = write_scratch("number_e3.col", run_cli("generate edgeless 3").output);
    CHECK(json::parse(run_cli("choosability-number " + e3).output)["result"]
              ["choosability_number"] == 1);
    CHECK(json::parse(run_cli("choosability-number " + e3 + " --start-at-2").output)["result"]
              ["choosability_number"] == 2);
}

TEST_CASE("reduce psi emits files that re-solve to the same verdict") {
    const std::string p3 = write_scratch("psi_p3.col", run_cli("generate path 3").output);
    const std::string lists = write_scratch("psi_lists.json",
        R"({"kind":"list","lists":{"1":[2],"2":[1,3],"3":[2]}})");
    const std::string prefix = (scratch_dir() / "psi_out").string();

    RunOutcome direct = run_cli("solve list " + p3 + " " + lists);
    RunOutcome reduce = run_cli("reduce psi " + p3 + " " + lists + " -o " + prefix);
    CHECK(reduce.exit_code == 0);
    json report = json::parse(reduce.output);
    CHECK(report["result"]["aux"]["unsatisfiable"] == false);

    RunOutcome reduced = run_cli("solve gammamu " + prefix + ".col " + prefix + ".intervals.json");
    CHECK(reduced.exit_code == direct.exit_code);

    // An unsatisfiable list instance stays unsatisfiable after reduction.
    const std::string k3 = write_scratch("psi_k3.col", run_cli("generate complete 3").output);
    const std::string tight = write_scratch("psi_tight.json",
        R"({"kind":"list","lists":{"1":[1,2],"2":[1,2],"3":[1,2]}})");
    const std::string prefix2 = (scratch_dir() / "psi_out2").string();
    CHECK(run_cli("solve list " + k3 + " " + tight).exit_code == 1);
    CHECK(run_cli("reduce psi " + k3 + " " + tight + " -o " + prefix2).exit_code == 0);
    CHECK(run_cli("solve gammamu " + prefix2 + ".col " + prefix2 + ".intervals.json").exit_code ==
          1);
}

TEST_CASE("reduce lift") {
    const std::string c4 = write_scratch("lift_c4.col", run_cli("generate cycle 4").output);
    const std::string windows = write_scratch("lift_windows.json", R"({"kind":"interval",
        "gamma":{"1":10,"2":20,"3":30,"4":40},
        "mu":{"1":11,"2":21,"3":31,"4":41}})");
    const std::string coloring = write_scratch("lift_base.json",
        R"({"kind":"coloring","colors":{"1":1,"2":2,"3":1,"4":2}})");

    RunOutcome with_file = run_cli("reduce lift " + c4 + " " + windows + " --coloring " + coloring);
    CHECK(with_file.exit_code == 0);
    json report = json::parse(with_file.output);
    CHECK(report["result"]["coloring"]["1"] == 11);
    CHECK(report["result"]["coloring"]["2"] == 20);
    CHECK(report["result"]["coloring"]["3"] == 31);
    CHECK(report["result"]["coloring"]["4"] == 40);

    RunOutcome computed = run_cli("reduce lift " + c4 + " " + windows);
    CHECK(computed.exit_code == 0);
    CHECK(json::parse(computed.output)["result"]["base_coloring"] == "computed");

    // No 2-coloring exists for K3, so the computed pipeline reports that.
    const std::string k3 = write_scratch("lift_k3.col", run_cli("generate complete 3").output);
    const std::string narrow = write_scratch("lift_narrow.json", R"({"kind":"interval",
        "gamma":{"1":1,"2":1,"3":1},"mu":{"1":2,"2":2,"3":2}})");
    RunOutcome blocked = run_cli("reduce lift " + k3 + " " + narrow);
    CHECK(blocked.exit_code == 1);
    CHECK(json::parse(blocked.output)["result"]["satisfiable"] == false);
}
