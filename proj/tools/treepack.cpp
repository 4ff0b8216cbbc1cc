#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "treepack/audit.hpp"
#include "treepack/engine.hpp"
#include "treepack/io.hpp"
#include "treepack/oracle.hpp"
#include "treepack/surjectivity.hpp"

namespace {

using namespace treepack;

constexpr int kExitValidation = 2;
constexpr int kExitBoundViolation = 3;

// --space accepts a file path or inline JSON
Json load_spec(const std::string& source) {
    if (!source.empty() && (source[0] == '{' || source[0] == '['))
        return Json::parse(source);
    return load_json_file(source);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct KOptions {
    bool exact = false;
    std::optional<long long> assumed;
    bool diagonal = false;
    int exact_cap = 64;

    std::optional<KAssumption> resolve(const DistanceSpace& space) const {
        if (assumed) return KAssumption{*assumed, false};
        if (!exact) return std::nullopt;
        auto convention =
            diagonal ? Convention::Diagonal : Convention::DistinctPair;
        auto report = exact_k(space, convention, exact_cap);
        return KAssumption{*report.exact_k, false};
    }
};

void add_k_options(CLI::App* cmd, KOptions& k) {
    cmd->add_flag("--exact-k", k.exact,
                  "compute the exact surjectivity threshold K and attach bound reports");
    cmd->add_option("--assume-k", k.assumed,
                    "attach bound reports for a caller-supplied K");
    cmd->add_flag("--diagonal-convention", k.diagonal,
                  "let a point determine its own diagonal distance");
    cmd->add_option("--max-points", k.exact_cap,
                    "cap for the exact K solver (default 64)");
}

Strategy parse_strategy(const std::string& name) {
    if (name == "star_peel") return Strategy::StarPeel;
    if (name == "edge_peel") return Strategy::EdgePeel;
    throw ValidationError("unknown strategy \"" + name +
                          "\"; expected star_peel or edge_peel");
}

std::vector<PointId> resolve_subset(const DistanceSpace& space,
                                    const std::string& subset_source) {
    if (subset_source.empty()) return space.all_points();
    return subset_from_json(load_spec(subset_source), space);
}

int run(int argc, char** argv) {
    CLI::App app{"embedding weighted trees into finite distance spaces"};
    app.require_subcommand(1);

    std::string space_source, tree_source, subset_source, star_source;
    std::string format = "json";
    std::string strategy_name = "star_peel";
    long long point_cap = 1'000'000;
    KOptions k;

    auto* stringy = app.add_subcommand(
        "stringiness", "stringiness of a connected graph");
    stringy->add_option("--tree,--graph", tree_source)->required();

    auto* peel = app.add_subcommand("peel", "one leaf-peeling step of a tree");
    peel->add_option("--tree", tree_source)->required();

    auto* pairs = app.add_subcommand(
        "pack-pairs", "maximal disjoint pairs at a fixed distance");
    Distance pair_t = 0;
    pairs->add_option("--space", space_source)->required();
    pairs->add_option("--t", pair_t)->required();
    pairs->add_option("--subset", subset_source);
    add_k_options(pairs, k);

    auto* stars = app.add_subcommand(
        "pack-stars", "maximal disjoint stars with a given weight multiset");
    stars->add_option("--space", space_source)->required();
    stars->add_option("--star", star_source, "[[weight,multiplicity],...]")
        ->required();
    stars->add_option("--subset", subset_source);
    add_k_options(stars, k);

    auto* embed = app.add_subcommand(
        "embed", "disjoint embeddings of a weighted tree");
    embed->add_option("--space", space_source)->required();
    embed->add_option("--tree", tree_source)->required();
    embed->add_option("--subset", subset_source);
    embed->add_option("--strategy", strategy_name, "star_peel | edge_peel");
    embed->add_option("--format", format, "json | dot");
    add_k_options(embed, k);

    auto* exactk = app.add_subcommand(
        "exact-k", "exact surjectivity threshold of a space");
    exactk->add_option("--space", space_source)->required();
    exactk->add_flag("--diagonal-convention", k.diagonal);
    exactk->add_option("--max-points", k.exact_cap);

    auto* estk = app.add_subcommand(
        "estimate-k", "randomized lower bound on the surjectivity threshold");
    int trials = 2000;
    unsigned long long seed = 1;
    estk->add_option("--space", space_source)->required();
    estk->add_option("--trials", trials);
    estk->add_option("--seed", seed);
    estk->add_flag("--diagonal-convention", k.diagonal);

    auto* irtable = app.add_subcommand(
        "ir-table", "surjectivity thresholds of field spaces vs q^((d+1)/2)");
    std::vector<int> q_list, dim_list;
    irtable->add_option("--q", q_list)->required()->delimiter(',');
    irtable->add_option("--dim", dim_list)->required()->delimiter(',');
    irtable->add_option("--format", format, "csv | json");
    irtable->add_option("--trials", trials);
    irtable->add_option("--seed", seed);
    irtable->add_option("--max-points", k.exact_cap);
    irtable->add_option("--point-cap", point_cap);

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "brute-force embedding enumeration and exact maximum packing");
    OracleBudget budget;
    oracle_cmd->add_option("--space", space_source)->required();
    oracle_cmd->add_option("--tree", tree_source)->required();
    oracle_cmd->add_option("--subset", subset_source);
    oracle_cmd->add_option("--max-points", budget.max_points);
    oracle_cmd->add_option("--max-edges", budget.max_tree_edges);

    auto* verify = app.add_subcommand(
        "verify-bounds", "random-instance audit of every packing bound; "
                         "exit 3 on any violation");
    AuditConfig audit;
    verify->add_option("--space", space_source)->required();
    verify->add_option("--trees", audit.tree_instances);
    verify->add_option("--lemma-instances", audit.lemma_instances);
    verify->add_option("--max-edges", audit.max_tree_edges);
    verify->add_option("--seed", audit.seed);
    verify->add_option("--assume-k", k.assumed);
    verify->add_flag("--diagonal-convention", k.diagonal);
    verify->add_option("--max-points", k.exact_cap);

    auto* enumerate = app.add_subcommand(
        "enumerate-trees", "one representative per isomorphism class");
    int edge_count = 0;
    int tree_cap = 9;
    enumerate->add_option("--edges", edge_count)->required();
    enumerate->add_option("--cap", tree_cap);
    enumerate->add_option("--format", format, "json | dot");

    CLI11_PARSE(app, argc, argv);

    if (stringy->parsed()) {
        auto [n, edges] = graph_from_json(load_spec(tree_source));
        std::cout << stringiness(n, edges) << "\n";
        return 0;
    }
    if (peel->parsed()) {
        emit(peel_to_json(leaf_peel(tree_from_json(load_spec(tree_source)))));
        return 0;
    }
    if (pairs->parsed()) {
        auto space = space_from_json(load_spec(space_source), point_cap);
        auto E = resolve_subset(space, subset_source);
        emit(packing_to_json(pack_pairs(space, E, pair_t, k.resolve(space))));
        return 0;
    }
    if (stars->parsed()) {
        auto space = space_from_json(load_spec(space_source), point_cap);
        auto E = resolve_subset(space, subset_source);
        auto spec = star_spec_from_json(load_spec(star_source));
        emit(packing_to_json(pack_stars(space, E, spec, k.resolve(space))));
        return 0;
    }
    if (embed->parsed()) {
        auto space = space_from_json(load_spec(space_source), point_cap);
        auto tree = tree_from_json(load_spec(tree_source));
        auto E = resolve_subset(space, subset_source);
        auto result = embed_tree(space, E, tree, parse_strategy(strategy_name),
                                 k.resolve(space));
        if (format == "dot")
            std::cout << packing_to_dot(tree, result);
        else
            emit(packing_to_json(result));
        return 0;
    }
    if (exactk->parsed()) {
        auto space = space_from_json(load_spec(space_source), point_cap);
        auto convention =
            k.diagonal ? Convention::Diagonal : Convention::DistinctPair;
        emit(surjectivity_to_json(exact_k(space, convention, k.exact_cap)));
        return 0;
    }
    if (estk->parsed()) {
        auto space = space_from_json(load_spec(space_source), point_cap);
        auto convention =
            k.diagonal ? Convention::Diagonal : Convention::DistinctPair;
        emit(surjectivity_to_json(estimate_k(space, trials, seed, convention)));
        return 0;
    }
    if (irtable->parsed()) {
        auto rows = ir_threshold_table(q_list, dim_list, k.exact_cap, trials,
                                       seed, point_cap);
        if (format == "csv")
            std::cout << ir_table_csv(rows);
        else
            emit(ir_table_json(rows));
        return 0;
    }
    if (oracle_cmd->parsed()) {
        auto space = space_from_json(load_spec(space_source), point_cap);
        auto tree = tree_from_json(load_spec(tree_source));
        auto E = resolve_subset(space, subset_source);
        auto all = enumerate_embeddings(space, E, tree, budget);
        auto packing = max_disjoint_packing(space, E, tree, budget);
        Json embeddings = Json::array();
        for (const auto& emb : all) embeddings.push_back(embedding_to_json(emb));
        Json witness = Json::array();
        for (const auto& emb : packing.witness)
            witness.push_back(embedding_to_json(emb));
        emit(Json{{"embedding_count", all.size()},
                  {"embeddings", embeddings},
                  {"max_packing", packing.size},
                  {"witness", witness}});
        return 0;
    }
    if (verify->parsed()) {
        auto space = space_from_json(load_spec(space_source), point_cap);
        long long kk;
        if (k.assumed) {
            kk = *k.assumed;
        } else {
            auto convention =
                k.diagonal ? Convention::Diagonal : Convention::DistinctPair;
            kk = *exact_k(space, convention, k.exact_cap).exact_k;
        }
        auto outcome = audit_bounds(space, kk, audit);
        std::cout << "K = " << kk << ", lemma instances = "
                  << outcome.lemma_checks << ", tree instances = "
                  << outcome.tree_checks << ", bounds that bit = "
                  << outcome.positive_guarantees << "\n";
        if (!outcome.ok()) {
            for (const auto& v : outcome.violations)
                std::cerr << "BOUND VIOLATION: " << v << "\n";
            return kExitBoundViolation;
        }
        std::cout << "all bounds hold\n";
        return 0;
    }
    if (enumerate->parsed()) {
        auto trees = enumerate_trees(edge_count, tree_cap);
        if (format == "dot") {
            for (const auto& t : trees) std::cout << tree_to_dot(t);
        } else {
            Json out = Json::array();
            for (const auto& t : trees) out.push_back(tree_to_json(t));
            emit(out);
        }
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const treepack::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const treepack::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
