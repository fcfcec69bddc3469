#include "netgrow/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "netgrow/errors.hpp"

namespace netgrow {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
}

}  // namespace

Graph Graph::complete(int m0) {
    if (m0 < 2) {
        throw InvalidConfigError("seed graph needs at least 2 nodes, got " + std::to_string(m0));
    }
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(m0));
    for (NodeId i = 0; i < static_cast<NodeId>(m0); ++i) {
        for (NodeId j = i + 1; j < static_cast<NodeId>(m0); ++j) {
            g.adjacency_[i].push_back(j);
            g.adjacency_[j].push_back(i);
            g.edges_.emplace_back(i, j);
        }
    }
    for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
    return g;
}

Graph Graph::from_edges(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges) {
    Graph g;
    g.adjacency_.resize(node_count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("self-loop");
        if (!seen.insert(edge_key(u, v)).second) throw std::invalid_argument("duplicate edge");
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
    g.edges_ = std::move(edges);
    return g;
}

NodeId Graph::add_node_with_edges(std::span<const NodeId> targets) {
    if (targets.empty()) throw std::invalid_argument("new node needs at least one edge");
    const NodeId id = static_cast<NodeId>(adjacency_.size());
    std::vector<NodeId> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate target");
    }
    if (sorted.back() >= id) throw std::invalid_argument("target id out of range");
    adjacency_.push_back(std::move(sorted));
    for (NodeId t : targets) {
        adjacency_[t].push_back(id);  // id exceeds every existing neighbor, order kept
        edges_.emplace_back(id, t);
    }
    return id;
}

double Graph::mean_degree() const {
    return node_count() == 0 ? 0.0
                             : static_cast<double>(total_degree()) / static_cast<double>(node_count());
}

int Graph::degree(NodeId i) const {
    if (i >= adjacency_.size()) throw std::invalid_argument("node id out of range");
    return static_cast<int>(adjacency_[i].size());
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
    if (i >= adjacency_.size()) throw std::invalid_argument("node id out of range");
    return adjacency_[i];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= adjacency_.size() || v >= adjacency_.size()) {
        throw std::invalid_argument("node id out of range");
    }
    const auto& smaller = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const NodeId probe = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::binary_search(smaller.begin(), smaller.end(), probe);
}

bool Graph::connected() const {
    if (adjacency_.empty()) return true;
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<NodeId> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (NodeId nb : adjacency_[queue[head]]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                ++reached;
                queue.push_back(nb);
            }
        }
    }
    return reached == adjacency_.size();
}

void Graph::check_invariants() const {
    std::size_t degree_sum = 0;
    for (NodeId i = 0; i < adjacency_.size(); ++i) {
        const auto& row = adjacency_[i];
        degree_sum += row.size();
        for (std::size_t p = 0; p < row.size(); ++p) {
            const NodeId nb = row[p];
            if (nb == i) throw InvalidStateError("self-loop at node " + std::to_string(i));
            if (nb >= adjacency_.size()) {
                throw InvalidStateError("dangling neighbor id at node " + std::to_string(i));
            }
            if (p > 0 && row[p - 1] >= nb) {
                throw InvalidStateError("adjacency of node " + std::to_string(i) +
                                        " is not strictly sorted");
            }
            if (!std::binary_search(adjacency_[nb].begin(), adjacency_[nb].end(), i)) {
                throw InvalidStateError("asymmetric edge " + std::to_string(i) + "-" +
                                        std::to_string(nb));
            }
        }
    }
    if (degree_sum != 2 * edges_.size()) {
        throw InvalidStateError("degree sum does not match edge count");
    }
    for (const auto& [u, v] : edges_) {
        if (u >= adjacency_.size() || v >= adjacency_.size() || u == v) {
            throw InvalidStateError("invalid recorded edge");
        }
    }
}

void Graph::write_edge_list(std::ostream& os) const {
    for (const auto& [u, v] : edges_) {
        os << u << ' ' << v << '\n';
    }
}

void Graph::write_edge_list(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    write_edge_list(out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

namespace {

bool parse_node_token(const std::string& token, NodeId& out) {
    if (token.empty() || token.size() > 10) return false;
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') return false;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (value > std::numeric_limits<NodeId>::max()) return false;
    out = static_cast<NodeId>(value);
    return true;
}

}  // namespace

Graph Graph::read_edge_list(std::istream& is) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::unordered_set<std::uint64_t> seen;
    NodeId max_id = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b)) throw ParseError("expected \"u v\"", line_no);
        if (ls >> extra) throw ParseError("trailing content after edge", line_no);
        NodeId u, v;
        if (!parse_node_token(a, u) || !parse_node_token(b, v)) {
            throw ParseError("node id is not a non-negative integer", line_no);
        }
        if (u == v) throw ParseError("self-loop " + a + " " + b, line_no);
        if (!seen.insert(edge_key(u, v)).second) {
            throw ParseError("duplicate edge " + a + " " + b, line_no);
        }
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    if (edges.empty()) throw ParseError("empty edge list", 0);
    return from_edges(static_cast<std::size_t>(max_id) + 1, std::move(edges));
}

Graph Graph::read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    return read_edge_list(in);
}

}  // namespace netgrow
