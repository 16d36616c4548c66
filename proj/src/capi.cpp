#include "licol/licol.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "assignment.hpp"
#include "choosability.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "reduction.hpp"
#include "solver.hpp"

struct licol_graph {
    licol::Graph g;
};

struct licol_assignment {
    licol::Assignment a;
};

struct licol_result {
    enum class Kind { Solve, IntervalChoosable, ClassicalChoosable } kind = Kind::Solve;
    licol::SolveResult solve;
    licol::ChoosabilityVerdict interval;
    licol::ListChoosabilityVerdict classical;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return LICOL_OK;
    } catch (const licol::parse_error& e) {
        return fail(LICOL_ERR_PARSE, e.what());
    } catch (const licol::budget_error& e) {
        return fail(LICOL_ERR_BUDGET, e.what());
    } catch (const licol::invalid_argument_error& e) {
        return fail(LICOL_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(LICOL_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

licol::SolveMode parse_solver_mode(const char* mode) {
    const std::string m = mode ? mode : "pruned";
    if (m == "pruned")
        return licol::SolveMode::Pruned;
    if (m == "paper-literal")
        return licol::SolveMode::Literal;
    throw licol::invalid_argument_error("unknown solver mode \"" + m +
                                        "\"; expected \"pruned\" or \"paper-literal\"");
}

licol::UniverseMode parse_universe(const char* universe) {
    const std::string u = universe ? universe : "paper-literal";
    if (u == "paper-literal")
        return licol::UniverseMode::Windowed;
    if (u == "normalized")
        return licol::UniverseMode::Normalized;
    throw licol::invalid_argument_error("unknown universe \"" + u +
                                        "\"; expected \"paper-literal\" or \"normalized\"");
}

licol::ChoosableOptions make_options(const char* universe, const char* solver_mode,
                                     uint64_t budget, int force, int workers) {
    licol::ChoosableOptions opt;
    opt.universe = parse_universe(universe);
    opt.solver = parse_solver_mode(solver_mode);
    if (budget > 0)
        opt.budget = budget;
    opt.force = force != 0;
    opt.workers = workers > 0 ? workers : 1;
    return opt;
}

nlohmann::ordered_json coloring_json(const licol::Coloring& c) {
    nlohmann::ordered_json colors = nlohmann::ordered_json::object();
    for (int v = 1; v <= c.vertex_count(); ++v)
        colors[std::to_string(v)] = c.colors[v];
    return colors;
}

nlohmann::ordered_json assignment_json(const licol::Assignment& a) {
    return nlohmann::ordered_json::parse(licol::serialize_assignment(a));
}

const licol::Coloring* result_witness(const licol_result* r) {
    if (r->kind == licol_result::Kind::Solve && r->solve.witness)
        return &*r->solve.witness;
    return nullptr;
}

} // namespace

extern "C" {

const char* licol_version(void) {
    return "0.1.0";
}

const char* licol_last_error(void) {
    return g_last_error.c_str();
}

int licol_graph_create(int n, const int* edges, size_t edge_count, licol_graph** out) {
    if (!out || (edge_count > 0 && !edges))
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            pairs.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new licol_graph{licol::Graph::from_edge_list(n, pairs)};
    });
}

int licol_graph_generate(const char* family, int a, int b, licol_graph** out) {
    if (!out || !family)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new licol_graph{licol::generate(licol::family_from_name(family), a, b)};
    });
}

int licol_graph_parse(const char* text, licol_graph** out) {
    if (!out || !text)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] { *out = new licol_graph{licol::parse_graph(text)}; });
}

int licol_graph_serialize(const licol_graph* g, char** out_text) {
    if (!g || !out_text)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] { *out_text = copy_string(licol::serialize_graph(g->g)); });
}

int licol_graph_add_pendant(const licol_graph* g, int v, licol_graph** out, int* new_vertex) {
    if (!g || !out)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        auto [graph, added] = licol::add_pendant(g->g, v);
        *out = new licol_graph{std::move(graph)};
        if (new_vertex)
            *new_vertex = added;
    });
}

int licol_graph_vertex_count(const licol_graph* g) {
    return g ? g->g.vertex_count() : -1;
}

int licol_graph_edge_count(const licol_graph* g) {
    return g ? g->g.edge_count() : -1;
}

void licol_graph_free(licol_graph* g) {
    delete g;
}

int licol_assignment_parse(const char* text, licol_assignment** out) {
    if (!out || !text)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] { *out = new licol_assignment{licol::parse_assignment(text)}; });
}

int licol_assignment_serialize(const licol_assignment* a, char** out_text) {
    if (!a || !out_text)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] { *out_text = copy_string(licol::serialize_assignment(a->a)); });
}

const char* licol_assignment_kind(const licol_assignment* a) {
    if (!a)
        return "";
    static thread_local std::string kind;
    kind = licol::kind_name(a->a.kind);
    return kind.c_str();
}

void licol_assignment_free(licol_assignment* a) {
    delete a;
}

int licol_coloring_parse(const char* text, int** out_colors, size_t* out_count) {
    if (!text || !out_colors || !out_count)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        licol::Coloring c = licol::parse_coloring(text);
        const int n = c.vertex_count();
        int* buffer = new int[n > 0 ? n : 1];
        for (int v = 1; v <= n; ++v)
            buffer[v - 1] = c.colors[v];
        *out_colors = buffer;
        *out_count = static_cast<size_t>(n);
    });
}

int licol_solve(const licol_graph* g, const licol_assignment* a, const char* model,
                const char* solver_mode, licol_result** out) {
    if (!g || !a || !model || !out)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        const licol::SolveMode mode = parse_solver_mode(solver_mode);
        const std::string m = model;
        auto* result = new licol_result;
        result->kind = licol_result::Kind::Solve;
        try {
            if (m == "list") {
                if (a->a.kind != licol::AssignmentKind::List)
                    throw licol::invalid_argument_error("model \"list\" needs a list assignment, got " +
                                                        licol::kind_name(a->a.kind));
                result->solve = licol::exists_list_coloring(g->g, a->a.lists, mode);
            } else if (m == "mu") {
                if (a->a.kind != licol::AssignmentKind::Mu)
                    throw licol::invalid_argument_error("model \"mu\" needs a mu assignment, got " +
                                                        licol::kind_name(a->a.kind));
                result->solve = licol::mu_coloring(g->g, a->a.mu, mode);
            } else if (m == "gammamu") {
                if (a->a.kind != licol::AssignmentKind::Interval)
                    throw licol::invalid_argument_error(
                        "model \"gammamu\" needs an interval assignment, got " +
                        licol::kind_name(a->a.kind));
                result->solve = licol::gamma_mu_coloring(g->g, a->a.interval, mode);
            } else if (m == "precolor") {
                if (a->a.kind != licol::AssignmentKind::Precoloring)
                    throw licol::invalid_argument_error(
                        "model \"precolor\" needs a precoloring, got " + licol::kind_name(a->a.kind));
                result->solve = licol::precoloring_extension(g->g, a->a.pre, mode);
            } else {
                throw licol::invalid_argument_error("unknown model \"" + m + "\"");
            }
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

int licol_solve_k_coloring(const licol_graph* g, int k, const char* solver_mode,
                           licol_result** out) {
    if (!g || !out)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        auto* result = new licol_result;
        result->kind = licol_result::Kind::Solve;
        try {
            result->solve = licol::k_coloring(g->g, k, parse_solver_mode(solver_mode));
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

int licol_chromatic_number(const licol_graph* g, int* out) {
    if (!g || !out)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] { *out = licol::chromatic_number(g->g); });
}

int licol_choosable_interval(const licol_graph* g, int k, const char* universe,
                             const char* solver_mode, uint64_t budget, int force, int workers,
                             licol_result** out) {
    if (!g || !out)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        auto opt = make_options(universe, solver_mode, budget, force, workers);
        auto* result = new licol_result;
        result->kind = licol_result::Kind::IntervalChoosable;
        try {
            result->interval = licol::is_k_gamma_mu_choosable(g->g, k, opt);
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

int licol_choosable_classical(const licol_graph* g, int k, int pool, const char* solver_mode,
                              uint64_t budget, int force, int workers, licol_result** out) {
    if (!g || !out)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        licol::ChoosableOptions opt = make_options(nullptr, solver_mode, budget, force, workers);
        const int effective_pool = pool > 0 ? pool : g->g.vertex_count() * k;
        auto* result = new licol_result;
        result->kind = licol_result::Kind::ClassicalChoosable;
        try {
            result->classical = licol::is_k_choosable(g->g, k, effective_pool, opt);
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

int licol_choosability_number(const licol_graph* g, const char* universe,
                              const char* solver_mode, uint64_t budget, int force, int workers,
                              int start_at_two, int* out_k) {
    if (!g || !out_k)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        licol::ChoosabilityNumberOptions opt;
        static_cast<licol::ChoosableOptions&>(opt) =
            make_options(universe, solver_mode, budget, force, workers);
        opt.start_at_two = start_at_two != 0;
        *out_k = licol::gamma_mu_choosability_number(g->g, opt);
    });
}

int licol_reduce_pendant(const licol_graph* g, const licol_assignment* lists,
                         licol_graph** out_graph, licol_assignment** out_interval,
                         char** out_aux_json) {
    if (!g || !lists || !out_graph || !out_interval)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        if (lists->a.kind != licol::AssignmentKind::List)
            throw licol::invalid_argument_error("pendant reduction needs a list assignment, got " +
                                                licol::kind_name(lists->a.kind));
        licol::PendantReduction r = licol::pendant_reduction(g->g, lists->a.lists);

        nlohmann::ordered_json aux;
        aux["c_max"] = r.c_max;
        aux["unsatisfiable"] = r.unsatisfiable;
        nlohmann::ordered_json pendants = nlohmann::ordered_json::array();
        for (const auto& [key, id] : r.pendant_map)
            pendants.push_back({{"vertex", key.first}, {"blocked_color", key.second}, {"pendant", id}});
        aux["pendants"] = std::move(pendants);

        *out_graph = new licol_graph{std::move(r.graph)};
        *out_interval = new licol_assignment{licol::assignment_of(std::move(r.interval))};
        if (out_aux_json)
            *out_aux_json = copy_string(aux.dump(2) + "\n");
    });
}

int licol_modular_lift(const licol_graph* g, const licol_assignment* intervals,
                       const int* colors, size_t color_count, int** out_colors,
                       size_t* out_count, uint64_t* out_inspected) {
    if (!g || !intervals || !colors || !out_colors || !out_count)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        if (intervals->a.kind != licol::AssignmentKind::Interval)
            throw licol::invalid_argument_error("modular lift needs an interval assignment, got " +
                                                licol::kind_name(intervals->a.kind));
        const auto& interval = intervals->a.interval;
        const int n = g->g.vertex_count();
        if (static_cast<int>(color_count) != n)
            throw licol::invalid_argument_error("coloring covers " + std::to_string(color_count) +
                                                " vertices, graph has " + std::to_string(n));
        if (interval.vertex_count() != n)
            throw licol::invalid_argument_error("interval assignment does not cover the graph");

        licol::KIntervalAssignment windows;
        windows.gamma = interval.gamma;
        windows.k = n > 0 ? interval.mu[1] - interval.gamma[1] + 1 : 1;
        for (int v = 1; v <= n; ++v)
            if (interval.mu[v] - interval.gamma[v] + 1 != windows.k)
                throw licol::invalid_argument_error(
                    "window length differs at vertex " + std::to_string(v) + "; all windows must " +
                    "have the same length");

        std::vector<int> coloring(n + 1, 0);
        for (int v = 1; v <= n; ++v)
            coloring[v] = colors[v - 1];
        licol::LiftResult lift =
            licol::modular_lift(g->g, licol::make_coloring(std::move(coloring)), windows);

        int* buffer = new int[n > 0 ? n : 1];
        for (int v = 1; v <= n; ++v)
            buffer[v - 1] = lift.coloring.colors[v];
        *out_colors = buffer;
        *out_count = static_cast<size_t>(n);
        if (out_inspected)
            *out_inspected = lift.candidates_inspected;
    });
}

int licol_count_interval_assignments(int n, int k, char** out_decimal) {
    if (!out_decimal)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] { *out_decimal = copy_string(licol::interval_assignment_count(n, k).str()); });
}

int licol_result_yes(const licol_result* r) {
    if (!r)
        return 0;
    switch (r->kind) {
    case licol_result::Kind::Solve: return r->solve.satisfiable ? 1 : 0;
    case licol_result::Kind::IntervalChoosable: return r->interval.choosable ? 1 : 0;
    case licol_result::Kind::ClassicalChoosable: return r->classical.choosable ? 1 : 0;
    }
    return 0;
}

int licol_result_witness_color(const licol_result* r, int v, int* out_color) {
    if (!r || !out_color)
        return fail(LICOL_ERR_INVALID, "null argument");
    const licol::Coloring* witness = result_witness(r);
    if (!witness)
        return fail(LICOL_ERR_INVALID, "result has no witness");
    if (v < 1 || v > witness->vertex_count())
        return fail(LICOL_ERR_INVALID, "vertex out of range");
    *out_color = witness->colors[v];
    return LICOL_OK;
}

int licol_result_counterexample(const licol_result* r, licol_assignment** out) {
    if (!r || !out)
        return fail(LICOL_ERR_INVALID, "null argument");
    if (r->kind == licol_result::Kind::IntervalChoosable && r->interval.counterexample) {
        *out = new licol_assignment{
            licol::assignment_of(r->interval.counterexample->to_interval())};
        return LICOL_OK;
    }
    if (r->kind == licol_result::Kind::ClassicalChoosable && r->classical.counterexample) {
        *out = new licol_assignment{licol::assignment_of(*r->classical.counterexample)};
        return LICOL_OK;
    }
    return fail(LICOL_ERR_INVALID, "result has no counterexample");
}

uint64_t licol_result_nodes(const licol_result* r) {
    if (!r)
        return 0;
    switch (r->kind) {
    case licol_result::Kind::Solve: return r->solve.stats.nodes;
    case licol_result::Kind::IntervalChoosable: return r->interval.solver_totals.nodes;
    case licol_result::Kind::ClassicalChoosable: return r->classical.solver_totals.nodes;
    }
    return 0;
}

uint64_t licol_result_leaves(const licol_result* r) {
    if (!r)
        return 0;
    switch (r->kind) {
    case licol_result::Kind::Solve: return r->solve.stats.leaves;
    case licol_result::Kind::IntervalChoosable: return r->interval.solver_totals.leaves;
    case licol_result::Kind::ClassicalChoosable: return r->classical.solver_totals.leaves;
    }
    return 0;
}

uint64_t licol_result_assignments_checked(const licol_result* r) {
    if (!r)
        return 0;
    switch (r->kind) {
    case licol_result::Kind::Solve: return 0;
    case licol_result::Kind::IntervalChoosable: return r->interval.assignments_checked;
    case licol_result::Kind::ClassicalChoosable: return r->classical.assignments_checked;
    }
    return 0;
}

int licol_result_to_json(const licol_result* r, char** out_text) {
    if (!r || !out_text)
        return fail(LICOL_ERR_INVALID, "null argument");
    return guarded([&] {
        nlohmann::ordered_json doc;
        switch (r->kind) {
        case licol_result::Kind::Solve: {
            doc["type"] = "solve";
            doc["satisfiable"] = r->solve.satisfiable;
            if (r->solve.witness)
                doc["witness"] = coloring_json(*r->solve.witness);
            doc["stats"] = {{"nodes", r->solve.stats.nodes}, {"leaves", r->solve.stats.leaves}};
            break;
        }
        case licol_result::Kind::IntervalChoosable: {
            doc["type"] = "choosable";
            doc["model"] = "interval";
            doc["choosable"] = r->interval.choosable;
            if (r->interval.counterexample) {
                doc["counterexample"] =
                    assignment_json(licol::assignment_of(r->interval.counterexample->to_interval()));
                doc["counterexample_index"] = r->interval.counterexample_slot;
            }
            doc["assignments_checked"] = r->interval.assignments_checked;
            doc["stats"] = {{"nodes", r->interval.solver_totals.nodes},
                            {"leaves", r->interval.solver_totals.leaves}};
            break;
        }
        case licol_result::Kind::ClassicalChoosable: {
            doc["type"] = "choosable";
            doc["model"] = "classical";
            doc["choosable"] = r->classical.choosable;
            if (r->classical.counterexample) {
                doc["counterexample"] =
                    assignment_json(licol::assignment_of(*r->classical.counterexample));
                doc["counterexample_index"] = r->classical.counterexample_slot;
            }
            doc["assignments_checked"] = r->classical.assignments_checked;
            doc["stats"] = {{"nodes", r->classical.solver_totals.nodes},
                            {"leaves", r->classical.solver_totals.leaves}};
            break;
        }
        }
        *out_text = copy_string(doc.dump(2) + "\n");
    });
}

void licol_result_free(licol_result* r) {
    delete r;
}

void licol_string_free(char* s) {
    delete[] s;
}

void licol_ints_free(int* p) {
    delete[] p;
}

} // extern "C"
