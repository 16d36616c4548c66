// Command-line front end for the licol engine. Everything goes through the
// public C API; reports are single JSON documents on stdout so runs can be
// scripted, and --human adds a short summary on stderr.
//
// Exit codes: 0 = satisfiable/choosable/success, 1 = unsatisfiable/not
// choosable, 2 = error (including budget refusals).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "licol/licol.h"

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultBudget = 100000000ULL;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(const std::string& message, int code = 2) {
    throw CliError{code, message};
}

void check(int status) {
    if (status != LICOL_OK)
        die(licol_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        die("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        die("cannot write " + path);
    out << content;
}

std::string fnv1a64(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

ordered_json input_entry(const std::string& path, const std::string& content) {
    return {{"path", path}, {"fnv1a64", fnv1a64(content)}};
}

std::string take_string(char* owned) {
    std::string out = owned ? owned : "";
    licol_string_free(owned);
    return out;
}

struct GraphHandle {
    licol_graph* ptr = nullptr;
    ~GraphHandle() { licol_graph_free(ptr); }
};

struct AssignmentHandle {
    licol_assignment* ptr = nullptr;
    ~AssignmentHandle() { licol_assignment_free(ptr); }
};

struct ResultHandle {
    licol_result* ptr = nullptr;
    ~ResultHandle() { licol_result_free(ptr); }
};

GraphHandle load_graph(const std::string& path, std::string* content_out = nullptr) {
    GraphHandle g;
    std::string content = read_file(path);
    check(licol_graph_parse(content.c_str(), &g.ptr));
    if (content_out)
        *content_out = std::move(content);
    return g;
}

AssignmentHandle load_assignment(const std::string& path, std::string* content_out = nullptr) {
    AssignmentHandle a;
    std::string content = read_file(path);
    check(licol_assignment_parse(content.c_str(), &a.ptr));
    if (content_out)
        *content_out = std::move(content);
    return a;
}

ordered_json result_json(const licol_result* r) {
    char* text = nullptr;
    check(licol_result_to_json(r, &text));
    return ordered_json::parse(take_string(text));
}

void emit_report(const ordered_json& report, bool human, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    if (human)
        std::cerr << summary << "\n";
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("LICOL_BUDGET")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && parsed > 0)
            return parsed;
        std::cerr << "warning: ignoring malformed LICOL_BUDGET=\"" << env << "\"\n";
    }
    return kDefaultBudget;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// --------------------------------------------------------------- subcommands

int cmd_generate(const std::string& family, int a, int b, const std::string& out_path) {
    GraphHandle g;
    check(licol_graph_generate(family.c_str(), a, b, &g.ptr));
    char* text = nullptr;
    check(licol_graph_serialize(g.ptr, &text));
    const std::string serialized = take_string(text);
    if (out_path.empty())
        std::cout << serialized;
    else
        write_file(out_path, serialized);
    return 0;
}

int cmd_solve(const std::string& model, const std::string& graph_path,
              const std::string& assignment_path, int k, const std::string& solver, bool human) {
    std::string graph_text;
    GraphHandle g = load_graph(graph_path, &graph_text);

    ordered_json inputs;
    inputs["graph"] = input_entry(graph_path, graph_text);

    const auto start = std::chrono::steady_clock::now();
    ResultHandle result;
    if (model == "kcolor") {
        if (k < 1)
            die("model kcolor needs --k");
        check(licol_solve_k_coloring(g.ptr, k, solver.c_str(), &result.ptr));
    } else {
        if (assignment_path.empty())
            die("model " + model + " needs an assignment file");
        std::string assignment_text;
        AssignmentHandle a = load_assignment(assignment_path, &assignment_text);
        inputs["assignment"] = input_entry(assignment_path, assignment_text);
        check(licol_solve(g.ptr, a.ptr, model.c_str(), solver.c_str(), &result.ptr));
    }
    const double ms = elapsed_ms(start);

    ordered_json report;
    report["command"] = "solve";
    report["model"] = model;
    if (model == "kcolor")
        report["k"] = k;
    report["options"] = {{"solver", solver}};
    report["inputs"] = inputs;
    report["result"] = result_json(result.ptr);
    report["wall_ms"] = ms;

    const bool yes = licol_result_yes(result.ptr) != 0;
    emit_report(report, human,
                std::string("solve ") + model + ": " + (yes ? "satisfiable" : "unsatisfiable"));
    return yes ? 0 : 1;
}

int cmd_chromatic(const std::string& graph_path, bool human) {
    std::string graph_text;
    GraphHandle g = load_graph(graph_path, &graph_text);
    const auto start = std::chrono::steady_clock::now();
    int chi = 0;
    check(licol_chromatic_number(g.ptr, &chi));
    const double ms = elapsed_ms(start);

    ordered_json report;
    report["command"] = "chromatic";
    report["inputs"] = {{"graph", input_entry(graph_path, graph_text)}};
    report["result"] = {{"chromatic_number", chi}};
    report["wall_ms"] = ms;
    emit_report(report, human, "chromatic number: " + std::to_string(chi));
    return 0;
}

int cmd_choosable(const std::string& graph_path, const std::string& model, int k, int pool,
                  const std::string& universe, const std::string& solver, std::uint64_t budget,
                  bool force, int workers, const std::string& emit_counterexample, bool human) {
    std::string graph_text;
    GraphHandle g = load_graph(graph_path, &graph_text);

    const auto start = std::chrono::steady_clock::now();
    ResultHandle result;
    if (model == "interval") {
        check(licol_choosable_interval(g.ptr, k, universe.c_str(), solver.c_str(), budget,
                                       force ? 1 : 0, workers, &result.ptr));
    } else if (model == "classical") {
        check(licol_choosable_classical(g.ptr, k, pool, solver.c_str(), budget, force ? 1 : 0,
                                        workers, &result.ptr));
    } else {
        die("unknown choosability model \"" + model + "\"");
    }
    const double ms = elapsed_ms(start);

    ordered_json report;
    report["command"] = "choosable";
    report["model"] = model;
    report["k"] = k;
    if (model == "classical")
        report["pool"] = pool > 0 ? pool : licol_graph_vertex_count(g.ptr) * k;
    report["options"] = {{"universe", universe},
                         {"solver", solver},
                         {"budget", budget},
                         {"force", force},
                         {"workers", workers}};
    report["inputs"] = {{"graph", input_entry(graph_path, graph_text)}};
    report["result"] = result_json(result.ptr);
    report["wall_ms"] = ms;

    const bool yes = licol_result_yes(result.ptr) != 0;
    if (!yes && !emit_counterexample.empty()) {
        AssignmentHandle counterexample;
        check(licol_result_counterexample(result.ptr, &counterexample.ptr));
        char* text = nullptr;
        check(licol_assignment_serialize(counterexample.ptr, &text));
        write_file(emit_counterexample, take_string(text));
    }
    emit_report(report, human,
                std::string("choosable (") + model + ", k=" + std::to_string(k) +
                    "): " + (yes ? "yes" : "no"));
    return yes ? 0 : 1;
}

int cmd_choosability_number(const std::string& graph_path, const std::string& universe,
                            const std::string& solver, std::uint64_t budget, bool force,
                            int workers, bool start_at_two, bool human) {
    std::string graph_text;
    GraphHandle g = load_graph(graph_path, &graph_text);
    const auto start = std::chrono::steady_clock::now();
    int number = 0;
    check(licol_choosability_number(g.ptr, universe.c_str(), solver.c_str(), budget,
                                    force ? 1 : 0, workers, start_at_two ? 1 : 0, &number));
    const double ms = elapsed_ms(start);

    ordered_json report;
    report["command"] = "choosability-number";
    report["options"] = {{"universe", universe},
                         {"solver", solver},
                         {"budget", budget},
                         {"force", force},
                         {"workers", workers},
                         {"start_at_two", start_at_two}};
    report["inputs"] = {{"graph", input_entry(graph_path, graph_text)}};
    report["result"] = {{"choosability_number", number}};
    report["wall_ms"] = ms;
    emit_report(report, human, "choosability number: " + std::to_string(number));
    return 0;
}

int cmd_reduce_psi(const std::string& graph_path, const std::string& assignment_path,
                   const std::string& out_prefix, bool human) {
    std::string graph_text, assignment_text;
    GraphHandle g = load_graph(graph_path, &graph_text);
    AssignmentHandle lists = load_assignment(assignment_path, &assignment_text);

    const auto start = std::chrono::steady_clock::now();
    GraphHandle reduced;
    AssignmentHandle interval;
    char* aux_text = nullptr;
    check(licol_reduce_pendant(g.ptr, lists.ptr, &reduced.ptr, &interval.ptr, &aux_text));
    const double ms = elapsed_ms(start);

    char* graph_out = nullptr;
    check(licol_graph_serialize(reduced.ptr, &graph_out));
    const std::string reduced_text = take_string(graph_out);
    char* interval_out = nullptr;
    check(licol_assignment_serialize(interval.ptr, &interval_out));
    const std::string interval_text = take_string(interval_out);
    const std::string aux = take_string(aux_text);

    if (!out_prefix.empty()) {
        write_file(out_prefix + ".col", reduced_text);
        write_file(out_prefix + ".intervals.json", interval_text);
        write_file(out_prefix + ".pendants.json", aux);
    }

    ordered_json report;
    report["command"] = "reduce";
    report["transform"] = "psi";
    report["inputs"] = {{"graph", input_entry(graph_path, graph_text)},
                        {"assignment", input_entry(assignment_path, assignment_text)}};
    report["result"] = {{"graph", reduced_text},
                        {"assignment", ordered_json::parse(interval_text)},
                        {"aux", ordered_json::parse(aux)}};
    report["wall_ms"] = ms;
    emit_report(report, human,
                "pendant reduction: " + std::to_string(licol_graph_vertex_count(reduced.ptr)) +
                    " vertices in the reduced graph");
    return 0;
}

int cmd_reduce_lift(const std::string& graph_path, const std::string& assignment_path,
                    const std::string& coloring_path, const std::string& solver, bool human) {
    std::string graph_text, assignment_text;
    GraphHandle g = load_graph(graph_path, &graph_text);
    AssignmentHandle intervals = load_assignment(assignment_path, &assignment_text);
    const int n = licol_graph_vertex_count(g.ptr);

    ordered_json inputs;
    inputs["graph"] = input_entry(graph_path, graph_text);
    inputs["assignment"] = input_entry(assignment_path, assignment_text);

    const auto start = std::chrono::steady_clock::now();

    // Window length, needed when the base coloring has to be computed here.
    int k = 1;
    {
        ordered_json doc = ordered_json::parse(assignment_text, nullptr, false);
        if (doc.is_object() && doc.contains("gamma") && doc.contains("mu") && n >= 1) {
            const auto& gamma = doc["gamma"];
            const auto& mu = doc["mu"];
            if (gamma.contains("1") && mu.contains("1"))
                k = mu["1"].get<int>() - gamma["1"].get<int>() + 1;
        }
    }

    std::vector<int> base_colors(n, 0);
    ordered_json base_source;
    if (!coloring_path.empty()) {
        std::string coloring_text = read_file(coloring_path);
        inputs["coloring"] = input_entry(coloring_path, coloring_text);
        int* parsed = nullptr;
        size_t count = 0;
        check(licol_coloring_parse(coloring_text.c_str(), &parsed, &count));
        if (static_cast<int>(count) != n) {
            licol_ints_free(parsed);
            die("coloring covers " + std::to_string(count) + " vertices, graph has " +
                std::to_string(n));
        }
        for (int i = 0; i < n; ++i)
            base_colors[i] = parsed[i];
        licol_ints_free(parsed);
        base_source = "file";
    } else {
        ResultHandle base;
        check(licol_solve_k_coloring(g.ptr, k, solver.c_str(), &base.ptr));
        if (!licol_result_yes(base.ptr)) {
            ordered_json report;
            report["command"] = "reduce";
            report["transform"] = "lift";
            report["inputs"] = inputs;
            report["result"] = {{"satisfiable", false},
                                {"reason", "graph admits no " + std::to_string(k) + "-coloring"}};
            report["wall_ms"] = elapsed_ms(start);
            emit_report(report, human, "lift: no base coloring exists");
            return 1;
        }
        for (int v = 1; v <= n; ++v)
            check(licol_result_witness_color(base.ptr, v, &base_colors[v - 1]));
        base_source = "computed";
    }

    int* lifted = nullptr;
    size_t lifted_count = 0;
    std::uint64_t inspected = 0;
    check(licol_modular_lift(g.ptr, intervals.ptr, base_colors.data(), base_colors.size(),
                             &lifted, &lifted_count, &inspected));
    const double ms = elapsed_ms(start);

    ordered_json coloring = ordered_json::object();
    for (size_t i = 0; i < lifted_count; ++i)
        coloring[std::to_string(i + 1)] = lifted[i];
    licol_ints_free(lifted);

    ordered_json report;
    report["command"] = "reduce";
    report["transform"] = "lift";
    report["inputs"] = inputs;
    report["result"] = {{"satisfiable", true},
                        {"base_coloring", base_source},
                        {"k", k},
                        {"coloring", coloring},
                        {"candidates_inspected", inspected}};
    report["wall_ms"] = ms;
    emit_report(report, human, "lift: coloring produced, " + std::to_string(inspected) +
                                   " candidates inspected");
    return 0;
}

int cmd_count(int n, int k) {
    char* decimal = nullptr;
    check(licol_count_interval_assignments(n, k, &decimal));
    std::cout << take_string(decimal) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"licol: list, mu, gamma-mu and window-constrained graph coloring"};
    app.require_subcommand(1);

    bool human = false;
    app.add_flag("--human", human, "also print a prose summary on stderr");

    // generate
    auto* generate = app.add_subcommand("generate", "write a graph from a standard family");
    std::string gen_family, gen_out;
    int gen_a = 0, gen_b = 0;
    generate->add_option("family", gen_family,
                         "path|cycle|complete|complete_bipartite|star|edgeless")
        ->required();
    generate->add_option("a", gen_a, "size (first part size for complete_bipartite)")->required();
    generate->add_option("b", gen_b, "second part size (complete_bipartite only)");
    generate->add_option("-o,--out", gen_out, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "decide one coloring instance");
    std::string solve_model, solve_graph, solve_assignment, solve_solver = "pruned";
    int solve_k = 0;
    solve->add_option("model", solve_model, "list|mu|gammamu|precolor|kcolor")->required();
    solve->add_option("graph", solve_graph, "graph file")->required();
    solve->add_option("assignment", solve_assignment, "assignment file (not for kcolor)");
    solve->add_option("--k", solve_k, "color budget (kcolor)");
    solve->add_option("--solver", solve_solver, "pruned|paper-literal")
        ->check(CLI::IsMember({"pruned", "paper-literal"}));

    // chromatic
    auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number");
    std::string chromatic_graph;
    chromatic->add_option("graph", chromatic_graph, "graph file")->required();

    // choosable
    auto* choosable = app.add_subcommand("choosable", "universal list-assignment check");
    std::string ch_graph, ch_model = "interval", ch_universe = "paper-literal",
                ch_solver = "pruned", ch_emit;
    int ch_k = 0, ch_pool = 0, ch_workers = 1;
    std::uint64_t ch_budget = default_budget();
    bool ch_force = false;
    choosable->add_option("graph", ch_graph, "graph file")->required();
    choosable->add_option("--model", ch_model, "interval|classical")
        ->check(CLI::IsMember({"interval", "classical"}));
    choosable->add_option("--k", ch_k, "list/window size")->required();
    choosable->add_option("--pool", ch_pool, "palette size for classical (default n*k)");
    choosable->add_option("--universe", ch_universe, "paper-literal|normalized")
        ->check(CLI::IsMember({"paper-literal", "normalized"}));
    choosable->add_option("--solver", ch_solver, "pruned|paper-literal")
        ->check(CLI::IsMember({"pruned", "paper-literal"}));
    choosable->add_option("--budget", ch_budget, "max assignments to enumerate");
    choosable->add_flag("--force", ch_force, "run past the budget");
    choosable->add_option("--workers", ch_workers, "parallel scanners (verdict is unaffected)");
    choosable->add_option("--emit-counterexample", ch_emit, "write the failing assignment here");

    // choosability-number
    auto* number = app.add_subcommand("choosability-number",
                                      "smallest k for which the graph is window-choosable");
    std::string num_graph, num_universe = "paper-literal", num_solver = "pruned";
    int num_workers = 1;
    std::uint64_t num_budget = default_budget();
    bool num_force = false, num_start_at_two = false;
    number->add_option("graph", num_graph, "graph file")->required();
    number->add_option("--universe", num_universe, "paper-literal|normalized")
        ->check(CLI::IsMember({"paper-literal", "normalized"}));
    number->add_option("--solver", num_solver, "pruned|paper-literal")
        ->check(CLI::IsMember({"pruned", "paper-literal"}));
    number->add_option("--budget", num_budget, "max assignments per k");
    number->add_flag("--force", num_force, "run past the budget");
    number->add_option("--workers", num_workers, "parallel scanners");
    number->add_flag("--start-at-2", num_start_at_two, "begin the search at k = 2");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "instance transformations");
    reduce->require_subcommand(1);
    auto* psi = reduce->add_subcommand("psi", "list instance -> interval instance via blockers");
    std::string psi_graph, psi_assignment, psi_out;
    psi->add_option("graph", psi_graph, "graph file")->required();
    psi->add_option("assignment", psi_assignment, "list assignment file")->required();
    psi->add_option("-o,--out", psi_out, "write <out>.col, <out>.intervals.json, <out>.pendants.json");
    auto* lift = reduce->add_subcommand("lift", "k-coloring -> coloring inside length-k windows");
    std::string lift_graph, lift_assignment, lift_coloring, lift_solver = "pruned";
    lift->add_option("graph", lift_graph, "graph file")->required();
    lift->add_option("assignment", lift_assignment, "uniform-window interval assignment file")
        ->required();
    lift->add_option("--coloring", lift_coloring,
                     "base coloring file (computed with kcolor when omitted)");
    lift->add_option("--solver", lift_solver, "pruned|paper-literal")
        ->check(CLI::IsMember({"pruned", "paper-literal"}));

    // count
    auto* count = app.add_subcommand("count", "exact number of window assignments, (n-k+1)^n");
    int count_n = 0, count_k = 0;
    count->add_option("n", count_n, "vertex count")->required();
    count->add_option("k", count_k, "window length")->required();

    // Let global flags like --human appear after a subcommand.
    for (CLI::App* sub : {generate, solve, chromatic, choosable, number, reduce, psi, lift, count})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed())
            return cmd_generate(gen_family, gen_a, gen_b, gen_out);
        if (solve->parsed())
            return cmd_solve(solve_model, solve_graph, solve_assignment, solve_k, solve_solver,
                             human);
        if (chromatic->parsed())
            return cmd_chromatic(chromatic_graph, human);
        if (choosable->parsed())
            return cmd_choosable(ch_graph, ch_model, ch_k, ch_pool, ch_universe, ch_solver,
                                 ch_budget, ch_force, ch_workers, ch_emit, human);
        if (number->parsed())
            return cmd_choosability_number(num_graph, num_universe, num_solver, num_budget,
                                           num_force, num_workers, num_start_at_two, human);
        if (reduce->parsed()) {
            if (psi->parsed())
                return cmd_reduce_psi(psi_graph, psi_assignment, psi_out, human);
            if (lift->parsed())
                return cmd_reduce_lift(lift_graph, lift_assignment, lift_coloring, lift_solver,
                                       human);
        }
        if (count->parsed())
            return cmd_count(count_n, count_k);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
