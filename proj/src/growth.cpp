#include "netgrow/growth.hpp"

#include <algorithm>
#include <stdexcept>

#include "netgrow/errors.hpp"

namespace netgrow {

std::string to_string(Model model) {
    return model == Model::Local ? "local" : "ba";
}

Model parse_model(const std::string& name) {
    if (name == "local") return Model::Local;
    if (name == "ba") return Model::Ba;
    throw InvalidConfigError("unknown model \"" + name + "\" (expected local or ba)");
}

void GrowthConfig::validate() const {
    if (m < 2) throw InvalidConfigError("m must be >= 2, got " + std::to_string(m));
    const int seed_size = resolved_m0();
    if (seed_size < m) {
        throw InvalidConfigError("m0 must be >= m (got m0=" + std::to_string(seed_size) +
                                 ", m=" + std::to_string(m) + ")");
    }
    if (t_final < seed_size) {
        throw InvalidConfigError("t_final must be >= m0 (got t_final=" + std::to_string(t_final) +
                                 ", m0=" + std::to_string(seed_size) + ")");
    }
}

namespace {

// One entry per edge endpoint, in edge-creation order. A uniform position
// lands on node i with probability degree(i) / total_degree.
std::vector<NodeId> build_endpoint_list(const Graph& g) {
    std::vector<NodeId> endpoints;
    endpoints.reserve(g.total_degree());
    for (const auto& [u, v] : g.edges()) {
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    return endpoints;
}

NodeId sample_endpoint(const std::vector<NodeId>& endpoints, RandomSource& rng) {
    return endpoints[rng.below(endpoints.size())];
}

// `count` distinct neighbors of `creator`, uniform without replacement
// (partial Fisher-Yates over a snapshot of the adjacency list).
std::vector<NodeId> choose_neighbor_subset(const Graph& g, NodeId creator, int count,
                                           RandomSource& rng) {
    const auto nb = g.neighbors(creator);
    std::vector<NodeId> pool(nb.begin(), nb.end());
    for (int i = 0; i < count; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) + rng.below(pool.size() - i);
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(count));
    return pool;
}

// m distinct nodes, each drawn degree-proportionally; re-drawing a node that
// was already picked renormalizes the degree weights among the rest.
std::vector<NodeId> choose_ba_targets(const std::vector<NodeId>& endpoints, int m,
                                      RandomSource& rng) {
    std::vector<NodeId> chosen;
    chosen.reserve(static_cast<std::size_t>(m));
    while (static_cast<int>(chosen.size()) < m) {
        const NodeId candidate = sample_endpoint(endpoints, rng);
        if (std::find(chosen.begin(), chosen.end(), candidate) == chosen.end()) {
            chosen.push_back(candidate);
        }
    }
    return chosen;
}

TracedGrowth grow_impl(const GrowthConfig& config, std::span<const NodeId> watched) {
    config.validate();
    std::vector<NodeId> watch_list;
    for (NodeId w : watched) {
        if (static_cast<int>(w) >= config.t_final) {
            throw std::invalid_argument("watched node " + std::to_string(w) +
                                        " is never born (t_final=" + std::to_string(config.t_final) +
                                        ")");
        }
        if (std::find(watch_list.begin(), watch_list.end(), w) == watch_list.end()) {
            watch_list.push_back(w);
        }
    }

    const int m0 = config.resolved_m0();
    TracedGrowth result{Graph::complete(m0), {}};
    Graph& g = result.graph;
    result.traces.reserve(watch_list.size());
    for (NodeId w : watch_list) result.traces.push_back({w, {}});

    auto record = [&] {
        const int t = static_cast<int>(g.node_count());
        for (auto& trace : result.traces) {
            if (static_cast<std::size_t>(trace.node) < g.node_count()) {
                trace.points.emplace_back(t, g.degree(trace.node));
            }
        }
    };
    record();  // state after the seed, t = m0

    RandomSource rng(config.seed);
    std::vector<NodeId> endpoints = build_endpoint_list(g);
    std::vector<NodeId> targets;
    while (static_cast<int>(g.node_count()) < config.t_final) {
        if (config.model == Model::Local) {
            const NodeId creator = sample_endpoint(endpoints, rng);
            targets = choose_neighbor_subset(g, creator, config.m - 1, rng);
            targets.insert(targets.begin(), creator);
        } else {
            targets = choose_ba_targets(endpoints, config.m, rng);
        }
        const NodeId id = g.add_node_with_edges(targets);
        for (NodeId t : targets) {
            endpoints.push_back(id);
            endpoints.push_back(t);
        }
        record();
    }
    return result;
}

}  // namespace

NodeId select_creator(const Graph& g, RandomSource& rng) {
    if (g.total_degree() == 0) {
        throw InvalidStateError("select_creator needs a graph with at least one edge");
    }
    return sample_endpoint(build_endpoint_list(g), rng);
}

NodeId attach_local(Graph& g, NodeId creator, int m, RandomSource& rng) {
    if (m < 2) throw InvalidConfigError("m must be >= 2, got " + std::to_string(m));
    const int k = g.degree(creator);  // throws on out-of-range id
    if (k < m - 1) {
        throw InvalidStateError("creator " + std::to_string(creator) + " has degree " +
                                std::to_string(k) + " < m-1 = " + std::to_string(m - 1));
    }
    std::vector<NodeId> targets = choose_neighbor_subset(g, creator, m - 1, rng);
    targets.insert(targets.begin(), creator);
    return g.add_node_with_edges(targets);
}

Graph grow(const GrowthConfig& config) {
    return grow_impl(config, {}).graph;
}

TracedGrowth grow_with_traces(const GrowthConfig& config, std::span<const NodeId> watched) {
    return grow_impl(config, watched);
}

}  // namespace netgrow
