#include "assignment.hpp"

#include <algorithm>

#include <json.hpp>

#include "errors.hpp"

namespace licol {

namespace {

void require_positive(int value, const char* what) {
    if (value < 1)
        throw invalid_argument_error(std::string(what) + " must be >= 1, got " +
                                     std::to_string(value));
}

// Per-vertex maps in documents are keyed by decimal vertex ids "1".."n".
std::map<int, nlohmann::json> id_map(const nlohmann::json& obj, const std::string& field) {
    if (!obj.is_object())
        throw parse_error("field \"" + field + "\" must be an object keyed by vertex ids");
    std::map<int, nlohmann::json> out;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        int id = 0;
        try {
            size_t pos = 0;
            id = std::stoi(it.key(), &pos);
            if (pos != it.key().size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw parse_error("field \"" + field + "\": bad vertex id \"" + it.key() + "\"");
        }
        if (id < 1)
            throw parse_error("field \"" + field + "\": vertex ids start at 1");
        out[id] = *it;
    }
    return out;
}

// Dense variant: ids must be exactly 1..n.
std::vector<nlohmann::json> dense_id_map(const nlohmann::json& obj, const std::string& field) {
    auto by_id = id_map(obj, field);
    std::vector<nlohmann::json> out(by_id.size() + 1);
    int expect = 1;
    for (auto& [id, value] : by_id) {
        if (id != expect)
            throw parse_error("field \"" + field + "\": vertex ids must be contiguous 1..n (missing " +
                              std::to_string(expect) + ")");
        out[expect++] = std::move(value);
    }
    return out;
}

int color_value(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number_integer())
        throw parse_error("field \"" + field + "\": colors must be integers");
    long long v = j.get<long long>();
    if (v < 1 || v > INT32_MAX)
        throw parse_error("field \"" + field + "\": colors must be positive integers");
    return static_cast<int>(v);
}

} // namespace

IntervalAssignment KIntervalAssignment::to_interval() const {
    IntervalAssignment out;
    out.gamma = gamma;
    out.mu.resize(gamma.size());
    for (int v = 1; v <= vertex_count(); ++v)
        out.mu[v] = gamma[v] + k - 1;
    return out;
}

ListAssignment make_list_assignment(std::vector<std::vector<int>> lists_1_indexed) {
    if (lists_1_indexed.empty())
        lists_1_indexed.resize(1);
    for (size_t v = 1; v < lists_1_indexed.size(); ++v) {
        auto& list = lists_1_indexed[v];
        for (int color : list)
            require_positive(color, "list color");
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return ListAssignment{std::move(lists_1_indexed)};
}

IntervalAssignment make_interval_assignment(std::vector<int> gamma, std::vector<int> mu) {
    if (gamma.empty())
        gamma.resize(1);
    if (mu.empty())
        mu.resize(1);
    if (gamma.size() != mu.size())
        throw invalid_argument_error("gamma and mu must cover the same vertices");
    for (size_t v = 1; v < gamma.size(); ++v) {
        require_positive(gamma[v], "gamma");
        if (gamma[v] > mu[v])
            throw invalid_argument_error("gamma(" + std::to_string(v) + ") > mu(" +
                                         std::to_string(v) + ")");
    }
    return IntervalAssignment{std::move(gamma), std::move(mu)};
}

MuAssignment make_mu_assignment(std::vector<int> mu) {
    if (mu.empty())
        mu.resize(1);
    for (size_t v = 1; v < mu.size(); ++v)
        require_positive(mu[v], "mu");
    return MuAssignment{std::move(mu)};
}

Coloring make_coloring(std::vector<int> colors_1_indexed) {
    if (colors_1_indexed.empty())
        colors_1_indexed.resize(1);
    for (size_t v = 1; v < colors_1_indexed.size(); ++v)
        require_positive(colors_1_indexed[v], "color");
    return Coloring{std::move(colors_1_indexed)};
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw invalid_argument_error("coloring covers " + std::to_string(c.vertex_count()) +
                                     " vertices, graph has " + std::to_string(g.vertex_count()));
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

bool respects_lists(const Coloring& c, const ListAssignment& L) {
    if (c.vertex_count() != L.vertex_count())
        throw invalid_argument_error("coloring and list assignment cover different vertex sets");
    for (int v = 1; v <= c.vertex_count(); ++v) {
        const auto& list = L.lists[v];
        if (!std::binary_search(list.begin(), list.end(), c.colors[v]))
            return false;
    }
    return true;
}

ListAssignment interval_to_list(const IntervalAssignment& I) {
    const int n = I.vertex_count();
    std::vector<std::vector<int>> lists(n + 1);
    for (int v = 1; v <= n; ++v) {
        if (I.gamma[v] < 1 || I.gamma[v] > I.mu[v])
            throw invalid_argument_error("invalid interval at vertex " + std::to_string(v));
        lists[v].reserve(I.mu[v] - I.gamma[v] + 1);
        for (int color = I.gamma[v]; color <= I.mu[v]; ++color)
            lists[v].push_back(color);
    }
    return ListAssignment{std::move(lists)};
}

ListAssignment mu_to_list(const MuAssignment& M) {
    const int n = M.vertex_count();
    std::vector<std::vector<int>> lists(n + 1);
    for (int v = 1; v <= n; ++v) {
        require_positive(M.mu[v], "mu");
        lists[v].resize(M.mu[v]);
        for (int color = 1; color <= M.mu[v]; ++color)
            lists[v][color - 1] = color;
    }
    return ListAssignment{std::move(lists)};
}

PrecoloringReduction precoloring_to_list(const Graph& g, const Precoloring& p) {
    const int n = g.vertex_count();
    require_positive(p.k, "color budget k");
    for (auto [v, color] : p.fixed) {
        if (v < 1 || v > n)
            throw invalid_argument_error("precolored vertex " + std::to_string(v) +
                                         " out of range 1.." + std::to_string(n));
        if (color < 1 || color > p.k)
            throw invalid_argument_error("precolor " + std::to_string(color) + " at vertex " +
                                         std::to_string(v) + " outside 1.." + std::to_string(p.k));
    }
    for (auto [v, color] : p.fixed)
        for (int u : g.neighbors(v)) {
            auto it = p.fixed.find(u);
            if (it != p.fixed.end() && it->second == color)
                throw invalid_argument_error("precoloring conflicts on edge (" + std::to_string(u) +
                                             "," + std::to_string(v) + ")");
        }

    PrecoloringReduction out;
    std::vector<int> new_id(n + 1, 0);
    out.kept.push_back(0);
    for (int v = 1; v <= n; ++v)
        if (!p.fixed.contains(v)) {
            out.kept.push_back(v);
            new_id[v] = static_cast<int>(out.kept.size()) - 1;
        }
    const int residual_n = static_cast<int>(out.kept.size()) - 1;

    std::vector<std::pair<int, int>> residual_edges;
    for (auto [u, v] : g.edges())
        if (new_id[u] != 0 && new_id[v] != 0)
            residual_edges.emplace_back(new_id[u], new_id[v]);
    out.graph = Graph::from_edge_list(residual_n, residual_edges);

    std::vector<std::vector<int>> lists(residual_n + 1);
    for (int w = 1; w <= residual_n; ++w) {
        const int original = out.kept[w];
        std::vector<bool> banned(p.k + 1, false);
        for (int u : g.neighbors(original)) {
            auto it = p.fixed.find(u);
            if (it != p.fixed.end())
                banned[it->second] = true;
        }
        for (int color = 1; color <= p.k; ++color)
            if (!banned[color])
                lists[w].push_back(color);
    }
    out.lists = ListAssignment{std::move(lists)};
    return out;
}

// ---------------------------------------------------------------------------

std::string kind_name(AssignmentKind kind) {
    switch (kind) {
    case AssignmentKind::List: return "list";
    case AssignmentKind::Interval: return "interval";
    case AssignmentKind::Mu: return "mu";
    case AssignmentKind::Precoloring: return "precoloring";
    }
    return "?";
}

Assignment parse_assignment(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("assignment document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw parse_error("assignment document needs a string field \"kind\"");
    const std::string kind = doc["kind"].get<std::string>();

    Assignment out;
    if (kind == "list") {
        out.kind = AssignmentKind::List;
        if (!doc.contains("lists"))
            throw parse_error("list assignment needs field \"lists\"");
        auto entries = dense_id_map(doc["lists"], "lists");
        std::vector<std::vector<int>> lists(entries.size());
        for (size_t v = 1; v < entries.size(); ++v) {
            if (!entries[v].is_array())
                throw parse_error("lists entries must be arrays of colors");
            for (const auto& j : entries[v])
                lists[v].push_back(color_value(j, "lists"));
        }
        out.lists = make_list_assignment(std::move(lists));
        return out;
    }
    if (kind == "interval") {
        out.kind = AssignmentKind::Interval;
        if (!doc.contains("gamma") || !doc.contains("mu"))
            throw parse_error("interval assignment needs fields \"gamma\" and \"mu\"");
        auto gamma_entries = dense_id_map(doc["gamma"], "gamma");
        auto mu_entries = dense_id_map(doc["mu"], "mu");
        if (gamma_entries.size() != mu_entries.size())
            throw parse_error("\"gamma\" and \"mu\" must cover the same vertices");
        std::vector<int> gamma(gamma_entries.size()), mu(mu_entries.size());
        for (size_t v = 1; v < gamma_entries.size(); ++v) {
            gamma[v] = color_value(gamma_entries[v], "gamma");
            mu[v] = color_value(mu_entries[v], "mu");
        }
        try {
            out.interval = make_interval_assignment(std::move(gamma), std::move(mu));
        } catch (const invalid_argument_error& e) {
            throw parse_error(e.what());
        }
        return out;
    }
    if (kind == "mu") {
        out.kind = AssignmentKind::Mu;
        if (!doc.contains("mu"))
            throw parse_error("mu assignment needs field \"mu\"");
        auto entries = dense_id_map(doc["mu"], "mu");
        std::vector<int> mu(entries.size());
        for (size_t v = 1; v < entries.size(); ++v)
            mu[v] = color_value(entries[v], "mu");
        out.mu = make_mu_assignment(std::move(mu));
        return out;
    }
    if (kind == "precoloring") {
        out.kind = AssignmentKind::Precoloring;
        if (!doc.contains("fixed") || !doc.contains("k"))
            throw parse_error("precoloring needs fields \"fixed\" and \"k\"");
        if (!doc["k"].is_number_integer() || doc["k"].get<long long>() < 1)
            throw parse_error("field \"k\" must be a positive integer");
        out.pre.k = doc["k"].get<int>();
        for (auto& [id, value] : id_map(doc["fixed"], "fixed"))
            out.pre.fixed[id] = color_value(value, "fixed");
        return out;
    }
    throw parse_error("unknown assignment kind \"" + kind + "\"");
}

std::string serialize_assignment(const Assignment& a) {
    nlohmann::ordered_json doc;
    doc["kind"] = kind_name(a.kind);
    switch (a.kind) {
    case AssignmentKind::List: {
        nlohmann::ordered_json lists = nlohmann::ordered_json::object();
        for (int v = 1; v <= a.lists.vertex_count(); ++v)
            lists[std::to_string(v)] = a.lists.lists[v];
        doc["lists"] = std::move(lists);
        break;
    }
    case AssignmentKind::Interval: {
        nlohmann::ordered_json gamma = nlohmann::ordered_json::object();
        nlohmann::ordered_json mu = nlohmann::ordered_json::object();
        for (int v = 1; v <= a.interval.vertex_count(); ++v) {
            gamma[std::to_string(v)] = a.interval.gamma[v];
            mu[std::to_string(v)] = a.interval.mu[v];
        }
        doc["gamma"] = std::move(gamma);
        doc["mu"] = std::move(mu);
        break;
    }
    case AssignmentKind::Mu: {
        nlohmann::ordered_json mu = nlohmann::ordered_json::object();
        for (int v = 1; v <= a.mu.vertex_count(); ++v)
            mu[std::to_string(v)] = a.mu.mu[v];
        doc["mu"] = std::move(mu);
        break;
    }
    case AssignmentKind::Precoloring: {
        nlohmann::ordered_json fixed = nlohmann::ordered_json::object();
        for (auto [v, color] : a.pre.fixed)
            fixed[std::to_string(v)] = color;
        doc["fixed"] = std::move(fixed);
        doc["k"] = a.pre.k;
        break;
    }
    }
    return doc.dump(2) + "\n";
}

Assignment assignment_of(ListAssignment L) {
    Assignment a;
    a.kind = AssignmentKind::List;
    a.lists = std::move(L);
    return a;
}

Assignment assignment_of(IntervalAssignment I) {
    Assignment a;
    a.kind = AssignmentKind::Interval;
    a.interval = std::move(I);
    return a;
}

Assignment assignment_of(MuAssignment M) {
    Assignment a;
    a.kind = AssignmentKind::Mu;
    a.mu = std::move(M);
    return a;
}

Assignment assignment_of(Precoloring P) {
    Assignment a;
    a.kind = AssignmentKind::Precoloring;
    a.pre = std::move(P);
    return a;
}

Coloring parse_coloring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("coloring document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("kind", "") != "coloring" || !doc.contains("colors"))
        throw parse_error("coloring document needs kind \"coloring\" and field \"colors\"");
    auto entries = dense_id_map(doc["colors"], "colors");
    std::vector<int> colors(entries.size());
    for (size_t v = 1; v < entries.size(); ++v)
        colors[v] = color_value(entries[v], "colors");
    return make_coloring(std::move(colors));
}

std::string serialize_coloring(const Coloring& c) {
    nlohmann::ordered_json doc;
    doc["kind"] = "coloring";
    nlohmann::ordered_json colors = nlohmann::ordered_json::object();
    for (int v = 1; v <= c.vertex_count(); ++v)
        colors[std::to_string(v)] = c.colors[v];
    doc["colors"] = std::move(colors);
    return doc.dump(2) + "\n";
}

} // namespace licol
