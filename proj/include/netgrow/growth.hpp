#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netgrow/graph.hpp"
#include "netgrow/random.hpp"

namespace netgrow {

enum class Model {
    Local,  // new node attaches to a degree-chosen creator and m-1 of its neighbors
    Ba,     // baseline: m degree-proportional targets anywhere in the graph
};

std::string to_string(Model model);
Model parse_model(const std::string& name);

struct GrowthConfig {
    Model model = Model::Local;
    int m = 2;        // edges per new node
    int m0 = 0;       // seed size; 0 means "same as m"
    int t_final = 0;  // total node count when growth stops
    std::uint64_t seed = 0;

    int resolved_m0() const { return m0 == 0 ? m : m0; }
    // m >= 2, m0 >= m, t_final >= m0. Throws InvalidConfigError.
    void validate() const;
};

// Degree-preferential draw: node i with probability degree(i) / total_degree.
// Builds the endpoint list on the fly (O(edge_count)); grow() maintains the
// same list incrementally instead. Throws InvalidStateError on an edgeless
// graph.
NodeId select_creator(const Graph& g, RandomSource& rng);

// Adds one node wired to `creator` plus m-1 of its neighbors, chosen
// uniformly without replacement, so each specific neighbor receives the new
// edge with probability (m-1)/degree(creator). Returns the new node's id.
// Requires degree(creator) >= m-1; a complete seed of m nodes guarantees
// that (each seed node starts with m-1 neighbors, one fewer than the "at
// least m" a lone attachment target would need, and that is sufficient).
NodeId attach_local(Graph& g, NodeId creator, int m, RandomSource& rng);

// Grows a graph to t_final nodes from a complete seed of m0 nodes.
// Local: repeat select_creator + attach_local.
// Ba: each new node picks m distinct existing nodes degree-proportionally
// without replacement (re-drawing an already chosen node renormalizes the
// weights among the rest). Deterministic given the config.
Graph grow(const GrowthConfig& config);

// Degree history of one node: (t, degree) after every step from birth on.
struct DegreeTrace {
    NodeId node = 0;
    std::vector<std::pair<int, int>> points;
};

struct TracedGrowth {
    Graph graph;
    std::vector<DegreeTrace> traces;  // one per watched node, input order
};

// grow() that also records the degree of each watched node after every time
// step (the seed counts as step t = m0). Watched ids must be < t_final.
TracedGrowth grow_with_traces(const GrowthConfig& config, std::span<const NodeId> watched);

}  // namespace netgrow
