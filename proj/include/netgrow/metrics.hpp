#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "netgrow/graph.hpp"
#include "netgrow/random.hpp"

namespace netgrow {

struct DegreeHistogram {
    std::map<int, std::size_t> counts;  // degree -> node count
    std::size_t n = 0;                  // total nodes, equals sum of counts

    // counts(k)/n, zero for unpopulated degrees.
    double fraction(int k) const;
};

DegreeHistogram degree_distribution(const Graph& g);

// Number of edges whose both endpoints neighbor node i.
std::size_t neighbor_edge_count(const Graph& g, NodeId i);

// Watts-Strogatz local clustering 2 E_i / (k_i (k_i - 1)); zero for k < 2
// (such nodes are excluded from every clustering average).
double local_clustering(const Graph& g, NodeId i);

struct ClusteringSpectrum {
    struct Entry {
        double mean_c = 0.0;
        std::size_t count = 0;
    };
    std::map<int, Entry> per_degree;  // only degrees >= 2
};

ClusteringSpectrum clustering_spectrum(const Graph& g);

// Mean local clustering over nodes of degree >= 2. Throws InvalidStateError
// when no node qualifies.
double global_clustering(const Graph& g);

struct PathLengthEstimate {
    enum class Mode { Exact, Sampled };
    double mean = 0.0;
    Mode mode = Mode::Exact;
    std::size_t sources = 0;                // node_count when exact
    std::optional<double> std_error;        // sampled mode only

    std::string mode_string() const;  // "exact" or "sampled:<sources>"
};

// Mean shortest-path distance over all unordered node pairs (one BFS per
// node). Throws InvalidStateError on a disconnected graph, naming an
// unreachable pair.
PathLengthEstimate average_path_length(const Graph& g);

// Same mean estimated from `sources` distinct uniformly chosen source nodes;
// the standard error comes from the per-source means. With sources equal to
// the node count the estimate equals the exact one.
PathLengthEstimate average_path_length(const Graph& g, std::size_t sources, RandomSource& rng);

struct AplSpec {
    enum class Mode { Auto, Exact, Sampled };
    Mode mode = Mode::Auto;
    std::size_t sources = 1000;        // sampled mode
    std::size_t auto_threshold = 20000;  // Auto switches to sampled above this
    std::uint64_t seed = 1;
};

struct MetricsReport {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double mean_degree = 0.0;
    DegreeHistogram histogram;
    double clustering_global = 0.0;
    ClusteringSpectrum spectrum;
    PathLengthEstimate apl;
};

MetricsReport compute_metrics(const Graph& g, const AplSpec& apl = {});

// { nodes, edges, mean_degree, degree_histogram: [[k,count]...],
//   clustering_global, clustering_spectrum: [[k, meanC, count]...],
//   apl: {mode, value, stderr?} }
nlohmann::json report_to_json(const MetricsReport& report);

// Writes <prefix>summary.csv, <prefix>degree_histogram.csv and
// <prefix>clustering_spectrum.csv, each with a single header row.
void write_report_csv(const MetricsReport& report, const std::filesystem::path& prefix);

}  // namespace netgrow
