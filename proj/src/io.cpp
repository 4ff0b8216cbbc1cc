#include "treepack/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace treepack {

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

} // namespace

DistanceSpace space_from_json(const Json& j, long long point_cap) {
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError("space JSON: expected an object with a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "field") {
        return DistanceSpace::finite_field(j.at("q").get<int>(),
                                           j.at("dim").get<int>(), point_cap);
    }
    if (kind == "table") {
        auto matrix = j.at("matrix").get<std::vector<std::vector<Distance>>>();
        return DistanceSpace::from_table(std::move(matrix));
    }
    throw ValidationError("space JSON: unknown kind \"" + kind + "\"");
}

Json space_to_json(const DistanceSpace& space) {
    if (space.kind() == DistanceSpace::Kind::Field)
        return Json{{"kind", "field"}, {"q", space.q()}, {"dim", space.dim()}};
    std::vector<std::vector<Distance>> matrix(space.size(),
                                              std::vector<Distance>(space.size()));
    for (int a = 0; a < space.size(); ++a)
        for (int b = 0; b < space.size(); ++b) matrix[a][b] = space.distance(a, b);
    return Json{{"kind", "table"}, {"matrix", matrix}};
}

WeightedTree tree_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("tree JSON: expected {\"vertices\": n, \"edges\": [...]}");
    int n = j.at("vertices").get<int>();
    std::vector<WeightedEdge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw ValidationError("tree JSON: edge must be [u, v, weight]");
        Distance w = e.size() == 3 ? e[2].get<Distance>() : 0;
        edges.push_back({e[0].get<int>(), e[1].get<int>(), w});
    }
    return WeightedTree(n, std::move(edges));
}

Json tree_to_json(const WeightedTree& tree) {
    Json edges = Json::array();
    for (const auto& e : tree.edges())
        edges.push_back(Json::array({e.u, e.v, e.weight}));
    return Json{{"vertices", tree.vertex_count()}, {"edges", edges}};
}

std::pair<int, std::vector<std::pair<int, int>>> graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph JSON: expected {\"vertices\": n, \"edges\": [...]}");
    int n = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2)
            throw ValidationError("graph JSON: edge must be [u, v] or [u, v, weight]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return {n, std::move(edges)};
}

std::vector<PointId> subset_from_json(const Json& j, const DistanceSpace& space) {
    if (!j.is_array())
        throw ValidationError("subset JSON: expected a list of point ids or coordinates");
    std::vector<PointId> out;
    for (const auto& item : j) {
        if (item.is_number_integer()) {
            PointId p = item.get<PointId>();
            space.check_point(p);
            out.push_back(p);
        } else if (item.is_array()) {
            auto coords = item.get<std::vector<int>>();
            out.push_back(space.point_at(coords));
        } else {
            throw ValidationError("subset JSON: entries must be ids or coordinate tuples");
        }
    }
    return out;
}

StarSpec star_spec_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("star JSON: expected [[weight, multiplicity], ...]");
    StarSpec spec;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2)
            throw ValidationError("star JSON: each class is [weight, multiplicity]");
        spec.classes.push_back({c[0].get<Distance>(), c[1].get<int>()});
    }
    std::sort(spec.classes.begin(), spec.classes.end(),
              [](const auto& a, const auto& b) { return a.weight < b.weight; });
    for (size_t i = 1; i < spec.classes.size(); ++i)
        if (spec.classes[i].weight == spec.classes[i - 1].weight)
            throw ValidationError("star JSON: duplicate weight class");
    return spec;
}

Json star_spec_to_json(const StarSpec& spec) {
    Json out = Json::array();
    for (const auto& c : spec.classes)
        out.push_back(Json::array({c.weight, c.multiplicity}));
    return out;
}

std::string rational_to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json embedding_to_json(const Embedding& emb) {
    Json out = Json::object();
    for (size_t v = 0; v < emb.vertex_to_point.size(); ++v)
        out[std::to_string(v)] = emb.vertex_to_point[v];
    return out;
}

Json packing_to_json(const PackingResult& result) {
    Json embeddings = Json::array();
    for (const auto& emb : result.embeddings)
        embeddings.push_back(embedding_to_json(emb));
    Json out{{"embeddings", embeddings},
             {"consumed", result.consumed},
             {"residual", result.residual}};
    if (result.bound) {
        out["bound"] = Json{{"K", result.bound->k},
                            {"r", rational_to_string(result.bound->r)},
                            {"guarantee", rational_to_string(result.bound->guaranteed)},
                            {"met", result.bound->met},
                            {"advisory", result.bound->advisory}};
    }
    return out;
}

Json surjectivity_to_json(const SurjectivityReport& report) {
    Json per = Json::array();
    for (const auto& stat : report.per_distance)
        per.push_back(Json{{"t", stat.t},
                           {"alpha", stat.alpha},
                           {"witness", stat.witness}});
    Json out{{"method", report.method == SurjectivityReport::Method::Exact
                            ? "exact"
                            : "randomized"},
             {"convention", report.convention == Convention::DistinctPair
                                ? "distinct_pair"
                                : "diagonal"},
             {"per_distance", per}};
    if (report.exact_k) out["exact_k"] = *report.exact_k;
    if (report.lower_bound_k) out["lower_bound_k"] = *report.lower_bound_k;
    return out;
}

Json peel_to_json(const std::variant<PeelStep, StarSpec>& peel) {
    if (std::holds_alternative<StarSpec>(peel))
        return Json{{"star", star_spec_to_json(std::get<StarSpec>(peel))}};
    const auto& step = std::get<PeelStep>(peel);
    Json peeled = Json::array();
    for (auto [v, t] : step.peeled) peeled.push_back(Json::array({v, t}));
    return Json{{"pivot", step.pivot},
                {"y", step.y()},
                {"peeled", peeled},
                {"remainder", tree_to_json(step.remainder)},
                {"pivot_in_remainder", step.pivot_in_remainder}};
}

std::string ir_table_csv(const std::vector<IrRow>& rows) {
    std::ostringstream out;
    out << "q,dim,K,q_pow,ratio\n";
    for (const auto& row : rows)
        out << row.q << "," << row.dim << "," << row.k << ","
            << fixed6(row.q_pow) << "," << fixed6(row.ratio) << "\n";
    return out.str();
}

Json ir_table_json(const std::vector<IrRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows)
        out.push_back(Json{{"q", row.q},
                           {"dim", row.dim},
                           {"K", row.k},
                           {"exact", row.exact},
                           {"q_pow", fixed6(row.q_pow)},
                           {"ratio", fixed6(row.ratio)}});
    return out;
}

std::string graph_to_dot(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < vertex_count; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string tree_to_dot(const WeightedTree& tree) {
    std::ostringstream out;
    out << "graph T {\n";
    for (int v = 0; v < tree.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& e : tree.edges())
        out << "  " << e.u << " -- " << e.v << " [label=\"" << e.weight
            << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string packing_to_dot(const WeightedTree& tree, const PackingResult& result) {
    static const char* colors[] = {"red",    "blue",   "green",  "orange",
                                   "purple", "brown",  "cyan",   "magenta",
                                   "gold",   "gray"};
    std::ostringstream out;
    out << "graph packing {\n";
    int i = 0;
    for (const auto& emb : result.embeddings) {
        const char* color = colors[i % 10];
        out << "  subgraph cluster_" << i << " {\n";
        out << "    color=" << color << ";\n";
        for (PointId p : emb.vertex_to_point)
            out << "    p" << p << " [color=" << color << "];\n";
        for (const auto& e : tree.edges())
            out << "    p" << emb.at(e.u) << " -- p" << emb.at(e.v)
                << " [label=\"" << e.weight << "\", color=" << color << "];\n";
        out << "  }\n";
        ++i;
    }
    for (PointId p : result.residual) out << "  p" << p << ";\n";
    out << "}\n";
    return out.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot read file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace treepack
