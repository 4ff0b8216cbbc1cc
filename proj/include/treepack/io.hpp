#ifndef TREEPACK_IO_HPP
#define TREEPACK_IO_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "treepack/engine.hpp"
#include "treepack/surjectivity.hpp"

namespace treepack {

using Json = nlohmann::json;

// {"kind":"field","q":5,"dim":2} or {"kind":"table","matrix":[[...],...]}
DistanceSpace space_from_json(const Json& j, long long point_cap = 1'000'000);
Json space_to_json(const DistanceSpace& space);

// {"vertices": n, "edges": [[u, v, w], ...]}
WeightedTree tree_from_json(const Json& j);
Json tree_to_json(const WeightedTree& tree);

// Same shape, but accepts any connected graph; weights optional.
std::pair<int, std::vector<std::pair<int, int>>> graph_from_json(const Json& j);

// JSON list of point ids, or of coordinate tuples for field spaces.
std::vector<PointId> subset_from_json(const Json& j, const DistanceSpace& space);

// [[weight, multiplicity], ...]
StarSpec star_spec_from_json(const Json& j);
Json star_spec_to_json(const StarSpec& spec);

std::string rational_to_string(const Rational& r);

Json packing_to_json(const PackingResult& result);
Json embedding_to_json(const Embedding& emb);
Json surjectivity_to_json(const SurjectivityReport& report);
Json peel_to_json(const std::variant<PeelStep, StarSpec>& peel);

// CSV rows: q,dim,K,q_pow,ratio (ratio and q_pow with 6 decimals)
std::string ir_table_csv(const std::vector<IrRow>& rows);
Json ir_table_json(const std::vector<IrRow>& rows);

std::string tree_to_dot(const WeightedTree& tree);
std::string graph_to_dot(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges);
// Each embedding drawn as a colored subgraph over the points it uses.
std::string packing_to_dot(const WeightedTree& tree, const PackingResult& result);

Json load_json_file(const std::string& path);

} // namespace treepack

#endif
