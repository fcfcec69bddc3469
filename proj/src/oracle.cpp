#include "netgrow/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "netgrow/errors.hpp"
#include "netgrow/stats.hpp"

namespace netgrow {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

// Applies fn to every (m-1)-subset of the creator's neighbors.
void for_each_subset(std::span<const NodeId> pool, int count,
                     const std::function<void(std::span<const NodeId>)>& fn) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(count));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<NodeId> subset(static_cast<std::size_t>(count));
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = pool[idx[i]];
        fn(subset);
        // advance the combination
        std::size_t i = idx.size();
        while (i > 0) {
            --i;
            if (idx[i] + (idx.size() - i) < pool.size()) {
                ++idx[i];
                for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (idx.empty()) return;  // count == 0: single empty subset
    }
}

struct Expander {
    int m;
    int steps;
    std::size_t branch_cap;
    std::size_t expansions = 0;
    std::function<void(const Graph&, const Rational&, int)> visit;

    void expand(Graph& g, const Rational& prob, int depth) {
        visit(g, prob, depth);
        if (depth == steps) return;
        const Rational total_degree(static_cast<long long>(g.total_degree()));
        const NodeId node_count = static_cast<NodeId>(g.node_count());
        for (NodeId creator = 0; creator < node_count; ++creator) {
            const int k = g.degree(creator);
            if (k < m - 1) continue;  // unreachable from a valid seed
            const Rational creator_prob(k, 1);
            const Rational subset_prob(1, binomial(k, m - 1));
            const Rational branch_prob = prob * creator_prob / total_degree * subset_prob;
            std::vector<NodeId> pool(g.neighbors(creator).begin(), g.neighbors(creator).end());
            for_each_subset(pool, m - 1, [&](std::span<const NodeId> subset) {
                if (++expansions > branch_cap) {
                    throw ResourceLimitError("enumeration exceeded " +
                                             std::to_string(branch_cap) + " branches");
                }
                std::vector<NodeId> targets;
                targets.reserve(static_cast<std::size_t>(m));
                targets.push_back(creator);
                targets.insert(targets.end(), subset.begin(), subset.end());
                Graph next = g;
                next.add_node_with_edges(targets);
                expand(next, branch_prob, depth + 1);
            });
        }
    }
};

void check_enumeration_args(int m0, int m, int steps) {
    if (m < 2) throw InvalidConfigError("m must be >= 2");
    if (m0 < m) throw InvalidConfigError("m0 must be >= m");
    if (steps < 0 || steps > 4) {
        throw std::invalid_argument("steps must be in [0, 4], got " + std::to_string(steps));
    }
}

}  // namespace

void enumerate_states(int m0, int m, int steps, std::size_t branch_cap,
                      const std::function<void(const Graph&, const Rational&, int)>& visit) {
    check_enumeration_args(m0, m, steps);
    Expander expander{m, steps, branch_cap, 0, visit};
    Graph seed = Graph::complete(m0);
    expander.expand(seed, Rational(1), 0);
}

namespace {

// Iterated neighbor-color refinement; returns a color per node where colors
// are dense ranks ordered by a label-invariant key.
std::vector<int> refine_colors(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<int> color(n);
    for (NodeId i = 0; i < n; ++i) color[i] = g.degree(i);
    {
        // densify the initial degree colors
        std::vector<int> sorted(color);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& c : color) {
            c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                 sorted.begin());
        }
    }
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::vector<int>> keys(n);
        for (NodeId i = 0; i < n; ++i) {
            auto& key = keys[i];
            key.push_back(color[i]);
            for (NodeId nb : g.neighbors(i)) key.push_back(color[nb]);
            std::sort(key.begin() + 1, key.end());
        }
        std::vector<std::vector<int>> sorted(keys);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (NodeId i = 0; i < n; ++i) {
            next[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                       sorted.begin());
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::string adjacency_bits(const Graph& g, std::span<const NodeId> order) {
    const std::size_t n = order.size();
    std::string bits;
    bits.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            bits.push_back(g.has_edge(order[a], order[b]) ? '1' : '0');
        }
    }
    return bits;
}

}  // namespace

std::string canonical_signature(const Graph& g) {
    const std::size_t n = g.node_count();
    const std::vector<int> color = refine_colors(g);

    // nodes grouped by color class, classes in color order
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) runs of equal color
    std::size_t group_permutations = 1;
    for (std::size_t begin = 0; begin < n;) {
        std::size_t end = begin + 1;
        while (end < n && color[order[end]] == color[order[begin]]) ++end;
        groups.emplace_back(begin, end);
        for (std::size_t f = 2; f <= end - begin; ++f) group_permutations *= f;
        if (group_permutations > 100000) {
            throw ResourceLimitError("too many symmetric relabelings for a signature");
        }
        begin = end;
    }

    // minimize the adjacency bitstring over the orderings refinement left open
    std::string best = adjacency_bits(g, order);
    std::vector<NodeId> candidate(order);
    while (true) {
        // odometer over per-group permutations, most significant group last
        std::size_t gi = 0;
        for (; gi < groups.size(); ++gi) {
            auto [b, e] = groups[gi];
            if (std::next_permutation(candidate.begin() + b, candidate.begin() + e)) break;
        }
        if (gi == groups.size()) break;
        best = std::min(best, adjacency_bits(g, candidate));
    }

    std::string signature = "n" + std::to_string(n) + ";d";
    std::vector<int> degrees(n);
    for (NodeId i = 0; i < n; ++i) degrees[i] = g.degree(i);
    std::sort(degrees.begin(), degrees.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (i) signature += '.';
        signature += std::to_string(degrees[i]);
    }
    signature += ";a" + best;
    return signature;
}

const Outcome* OutcomeDistribution::find(const std::string& signature) const {
    const auto it = std::lower_bound(
        outcomes.begin(), outcomes.end(), signature,
        [](const Outcome& o, const std::string& s) { return o.signature < s; });
    if (it == outcomes.end() || it->signature != signature) return nullptr;
    return &*it;
}

namespace {

// Mean local clustering over degree->=2 nodes, exact; false when none.
bool exact_mean_clustering(const Graph& g, Rational& out) {
    Rational sum(0);
    long long eligible = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const long long k = g.degree(i);
        if (k < 2) continue;
        long long links = 0;
        const auto nb = g.neighbors(i);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) ++links;
            }
        }
        sum += Rational(2 * links, k * (k - 1));
        ++eligible;
    }
    if (eligible == 0) return false;
    out = sum / Rational(eligible);
    return true;
}

}  // namespace

OutcomeDistribution enumerate_local(int m0, int m, int steps, std::size_t branch_cap) {
    OutcomeDistribution dist;
    dist.m0 = m0;
    dist.m = m;
    dist.steps = steps;

    std::map<std::string, std::pair<Rational, Graph>> leaves;
    enumerate_states(m0, m, steps, branch_cap,
                     [&](const Graph& g, const Rational& prob, int depth) {
                         if (depth != steps) return;
                         auto [it, inserted] =
                             leaves.try_emplace(canonical_signature(g), prob, g);
                         if (!inserted) it->second.first += prob;
                     });

    dist.has_expected_clustering = true;
    for (auto& [signature, entry] : leaves) {
        auto& [prob, graph] = entry;
        for (NodeId i = 0; i < graph.node_count(); ++i) {
            dist.expected_degree_histogram[graph.degree(i)] += prob;
        }
        Rational mean_c(0);
        if (exact_mean_clustering(graph, mean_c)) {
            dist.expected_global_clustering += prob * mean_c;
        } else {
            dist.has_expected_clustering = false;
        }
        dist.outcomes.push_back({signature, prob, std::move(graph)});
    }
    if (!dist.has_expected_clustering) dist.expected_global_clustering = Rational(0);
    return dist;
}

ChiSquareReport compare_to_montecarlo(const OutcomeDistribution& dist,
                                      const GrowthConfig& config, std::size_t runs) {
    if (runs == 0) throw std::invalid_argument("need at least one Monte Carlo run");
    config.validate();
    if (config.model != Model::Local || config.m != dist.m ||
        config.resolved_m0() != dist.m0 || config.t_final != dist.m0 + dist.steps) {
        throw std::invalid_argument("config does not match the enumerated distribution");
    }

    std::vector<std::size_t> observed(dist.outcomes.size(), 0);
    std::size_t unmatched = 0;
    GrowthConfig run_config = config;
    for (std::size_t r = 0; r < runs; ++r) {
        run_config.seed = derived_seed(config.seed, r);
        const Graph g = grow(run_config);
        const std::string signature = canonical_signature(g);
        const Outcome* outcome = dist.find(signature);
        if (outcome == nullptr) {
            ++unmatched;
        } else {
            ++observed[static_cast<std::size_t>(outcome - dist.outcomes.data())];
        }
    }

    ChiSquareReport report;
    report.runs = runs;
    report.unmatched_runs = unmatched;
    std::vector<double> expected(dist.outcomes.size());
    for (std::size_t i = 0; i < dist.outcomes.size(); ++i) {
        expected[i] = boost::rational_cast<double>(dist.outcomes[i].probability) *
                      static_cast<double>(runs);
        report.cells.push_back({dist.outcomes[i].signature, expected[i], observed[i]});
    }
    report.dof = static_cast<int>(dist.outcomes.size()) - 1;
    if (unmatched > 0) {
        report.statistic = std::numeric_limits<double>::infinity();
        report.p_value = 0.0;
    } else {
        report.statistic = chi_square_statistic(observed, expected);
        report.p_value = chi_square_p_value(report.statistic, report.dof);
    }
    return report;
}

}  // namespace netgrow
