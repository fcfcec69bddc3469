#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "netgrow/graph.hpp"
#include "netgrow/growth.hpp"

namespace netgrow {

// Exact expansion of the local-attachment growth chain for tiny instances.
// Probabilities are rational, so the resulting distribution is ground truth
// for validating the Monte Carlo grower.

using Rational = boost::rational<long long>;

struct Outcome {
    std::string signature;  // canonical form, see canonical_signature
    Rational probability;
    Graph representative;  // first enumerated graph with this signature
};

struct OutcomeDistribution {
    int m0 = 0;
    int m = 0;
    int steps = 0;
    std::vector<Outcome> outcomes;  // sorted by signature, probabilities sum to 1
    std::map<int, Rational> expected_degree_histogram;  // degree -> expected node count
    // Expected mean local clustering over degree->=2 nodes; absent when some
    // outcome has no such node (only the bare seed at steps = 0).
    bool has_expected_clustering = false;
    Rational expected_global_clustering{0};

    const Outcome* find(const std::string& signature) const;
};

// Expands every (creator, neighbor-subset) branch of `steps` growth steps
// from a complete seed of m0 nodes, aggregating leaves by canonical form.
// steps must be in [0, 4]; exceeding `branch_cap` expansions throws
// ResourceLimitError.
OutcomeDistribution enumerate_local(int m0, int m, int steps,
                                    std::size_t branch_cap = 1'000'000);

// Visits every reachable state (the root included) with its exact reach
// probability and depth in growth steps. Used by the rate-equation checks.
void enumerate_states(
    int m0, int m, int steps, std::size_t branch_cap,
    const std::function<void(const Graph&, const Rational&, int depth)>& visit);

// Canonical form under the degree-refined relabeling: node colors are
// refined by neighbor-color multisets, then the adjacency bitstring is
// minimized over the orderings the refinement leaves open. Equal strings
// imply isomorphic graphs; the test suite brute-force-verifies the converse
// for every enumerated instance.
std::string canonical_signature(const Graph& g);

struct ChiSquareReport {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 0.0;
    std::size_t runs = 0;
    std::size_t unmatched_runs = 0;  // runs whose outcome the enumeration lacks
    struct Cell {
        std::string signature;
        double expected = 0.0;
        std::size_t observed = 0;
    };
    std::vector<Cell> cells;

    bool passed(double alpha) const { return unmatched_runs == 0 && p_value > alpha; }
};

// Goodness of fit of `runs` Monte Carlo growths against the enumerated
// distribution. Run r uses derived_seed(config.seed, r). The config must
// match the enumerated (m0, m, steps) with model Local.
ChiSquareReport compare_to_montecarlo(const OutcomeDistribution& dist,
                                      const GrowthConfig& config, std::size_t runs);

}  // namespace netgrow
