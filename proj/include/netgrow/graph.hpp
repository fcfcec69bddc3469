#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace netgrow {

// Node ids are dense and double as birth order: node i is the (i+1)-th node
// to exist, so its birth time is i+1 (seed nodes included).
using NodeId = std::uint32_t;

// Undirected simple graph built by appending nodes. Adjacency lists are kept
// sorted, which rules out parallel edges structurally; there is no edge
// deletion. Mutation happens only through add_node_with_edges during growth;
// afterwards the graph is read-only and safe for concurrent readers.
class Graph {
public:
    // Complete graph on m0 nodes, the growth seed.
    static Graph complete(int m0);

    // Builds a graph from an explicit edge list; ids must be < node_count,
    // edges free of self-loops and duplicates. Edge order is preserved.
    static Graph from_edges(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    // Appends a node adjacent to exactly `targets` (distinct, existing ids).
    // Returns the new node's id, which equals the old node count.
    NodeId add_node_with_edges(std::span<const NodeId> targets);
    NodeId add_node_with_edges(std::initializer_list<NodeId> targets) {
        return add_node_with_edges(std::span<const NodeId>(targets.begin(), targets.size()));
    }

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t total_degree() const { return 2 * edges_.size(); }
    double mean_degree() const;

    int degree(NodeId i) const;
    // Neighbor ids in ascending order.
    std::span<const NodeId> neighbors(NodeId i) const;
    bool has_edge(NodeId u, NodeId v) const;

    // Edges in creation order; for a grown node the pair is (new node, target).
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    // True when a breadth-first search from node 0 reaches every node.
    bool connected() const;

    // Verifies symmetry, sortedness, absence of loops and duplicates, and the
    // degree/edge-count balance. Throws InvalidStateError on violation.
    void check_invariants() const;

    // Edge-list text format: one "u v" pair per line, creation order, ids
    // 0-based decimal.
    void write_edge_list(std::ostream& os) const;
    void write_edge_list(const std::filesystem::path& path) const;
    // Rejects self-loops, duplicate edges and non-integer tokens; ParseError
    // names the offending line.
    static Graph read_edge_list(std::istream& is);
    static Graph read_edge_list(const std::filesystem::path& path);

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

}  // namespace netgrow
