#include "netgrow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "netgrow/errors.hpp"
#include "netgrow/text.hpp"

namespace netgrow {

double DegreeHistogram::fraction(int k) const {
    const auto it = counts.find(k);
    if (it == counts.end() || n == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(n);
}

DegreeHistogram degree_distribution(const Graph& g) {
    DegreeHistogram hist;
    hist.n = g.node_count();
    for (NodeId i = 0; i < g.node_count(); ++i) {
        ++hist.counts[g.degree(i)];
    }
    return hist;
}

namespace {

std::size_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
    std::size_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

std::size_t neighbor_edge_count(const Graph& g, NodeId i) {
    const auto nb = g.neighbors(i);  // throws on out-of-range id
    std::size_t twice = 0;
    for (NodeId u : nb) {
        twice += sorted_intersection_size(g.neighbors(u), nb);
    }
    return twice / 2;
}

double local_clustering(const Graph& g, NodeId i) {
    const int k = g.degree(i);
    if (k < 2) return 0.0;
    const double pairs = static_cast<double>(k) * (k - 1);
    return 2.0 * static_cast<double>(neighbor_edge_count(g, i)) / pairs;
}

ClusteringSpectrum clustering_spectrum(const Graph& g) {
    std::map<int, std::pair<double, std::size_t>> acc;  // degree -> (sum C, count)
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const int k = g.degree(i);
        if (k < 2) continue;
        auto& [sum, count] = acc[k];
        sum += local_clustering(g, i);
        ++count;
    }
    ClusteringSpectrum spectrum;
    for (const auto& [k, sc] : acc) {
        spectrum.per_degree[k] = {sc.first / static_cast<double>(sc.second), sc.second};
    }
    return spectrum;
}

double global_clustering(const Graph& g) {
    double sum = 0.0;
    std::size_t eligible = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) < 2) continue;
        sum += local_clustering(g, i);
        ++eligible;
    }
    if (eligible == 0) {
        throw InvalidStateError("global clustering undefined: no node has degree >= 2");
    }
    return sum / static_cast<double>(eligible);
}

std::string PathLengthEstimate::mode_string() const {
    return mode == Mode::Exact ? "exact" : "sampled:" + std::to_string(sources);
}

namespace {

// Mean distance from each listed source to all other nodes; sources must be
// sorted so the reduction order is fixed.
std::vector<double> per_source_means(const Graph& g, std::span<const NodeId> sources) {
    const std::size_t n = g.node_count();
    std::vector<double> means;
    means.reserve(sources.size());
    std::vector<std::int32_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    for (NodeId src : sources) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(src);
        dist[src] = 0;
        std::uint64_t sum = 0;
        std::size_t reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            const std::int32_t du = dist[u];
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = du + 1;
                    sum += static_cast<std::uint64_t>(du) + 1;
                    ++reached;
                    queue.push_back(v);
                }
            }
        }
        if (reached != n) {
            const auto missing = std::find(dist.begin(), dist.end(), -1) - dist.begin();
            throw InvalidStateError("graph is disconnected: no path between nodes " +
                                    std::to_string(src) + " and " + std::to_string(missing));
        }
        means.push_back(static_cast<double>(sum) / static_cast<double>(n - 1));
    }
    return means;
}

}  // namespace

PathLengthEstimate average_path_length(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) throw InvalidStateError("path length needs at least 2 nodes");
    std::vector<NodeId> sources(n);
    std::iota(sources.begin(), sources.end(), NodeId{0});
    const auto means = per_source_means(g, sources);
    PathLengthEstimate est;
    est.mode = PathLengthEstimate::Mode::Exact;
    est.sources = n;
    est.mean = std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(n);
    return est;
}

PathLengthEstimate average_path_length(const Graph& g, std::size_t sources, RandomSource& rng) {
    const std::size_t n = g.node_count();
    if (n < 2) throw InvalidStateError("path length needs at least 2 nodes");
    if (sources == 0 || sources > n) {
        throw std::invalid_argument("source count must be in [1, node_count]");
    }
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    for (std::size_t i = 0; i < sources; ++i) {
        std::swap(ids[i], ids[i + rng.below(n - i)]);
    }
    ids.resize(sources);
    std::sort(ids.begin(), ids.end());

    const auto means = per_source_means(g, ids);
    PathLengthEstimate est;
    est.mode = PathLengthEstimate::Mode::Sampled;
    est.sources = sources;
    est.mean = std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(sources);
    double ss = 0.0;
    for (double m : means) {
        const double d = m - est.mean;
        ss += d * d;
    }
    est.std_error = sources > 1 ? std::sqrt(ss / static_cast<double>(sources - 1) /
                                            static_cast<double>(sources))
                                : 0.0;
    return est;
}

MetricsReport compute_metrics(const Graph& g, const AplSpec& apl) {
    MetricsReport report;
    report.nodes = g.node_count();
    report.edges = g.edge_count();
    report.mean_degree = g.mean_degree();
    report.histogram = degree_distribution(g);
    report.clustering_global = global_clustering(g);
    report.spectrum = clustering_spectrum(g);

    const bool sampled = apl.mode == AplSpec::Mode::Sampled ||
                         (apl.mode == AplSpec::Mode::Auto && g.node_count() > apl.auto_threshold);
    if (sampled) {
        RandomSource rng(apl.seed);
        report.apl = average_path_length(g, std::min(apl.sources, g.node_count()), rng);
    } else {
        report.apl = average_path_length(g);
    }
    return report;
}

nlohmann::json report_to_json(const MetricsReport& report) {
    nlohmann::json j;
    j["nodes"] = report.nodes;
    j["edges"] = report.edges;
    j["mean_degree"] = report.mean_degree;
    auto& hist = j["degree_histogram"] = nlohmann::json::array();
    for (const auto& [k, count] : report.histogram.counts) {
        hist.push_back({k, count});
    }
    j["clustering_global"] = report.clustering_global;
    auto& spectrum = j["clustering_spectrum"] = nlohmann::json::array();
    for (const auto& [k, entry] : report.spectrum.per_degree) {
        spectrum.push_back({k, entry.mean_c, entry.count});
    }
    j["apl"]["mode"] = report.apl.mode_string();
    j["apl"]["value"] = report.apl.mean;
    if (report.apl.std_error) {
        j["apl"]["stderr"] = *report.apl.std_error;
    }
    return j;
}

void write_report_csv(const MetricsReport& report, const std::filesystem::path& prefix) {
    const std::string base = prefix.string();
    {
        std::vector<std::string> row{
            std::to_string(report.nodes),
            std::to_string(report.edges),
            format_double(report.mean_degree),
            format_double(report.clustering_global),
            report.apl.mode_string(),
            format_double(report.apl.mean),
            report.apl.std_error ? format_double(*report.apl.std_error) : std::string{},
        };
        write_csv(base + "summary.csv",
                  "nodes,edges,mean_degree,clustering_global,apl_mode,apl_value,apl_stderr",
                  {row});
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, count] : report.histogram.counts) {
            rows.push_back({std::to_string(k), std::to_string(count)});
        }
        write_csv(base + "degree_histogram.csv", "k,count", rows);
    }
    {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, entry] : report.spectrum.per_degree) {
            rows.push_back({std::to_string(k), format_double(entry.mean_c),
                            std::to_string(entry.count)});
        }
        write_csv(base + "clustering_spectrum.csv", "k,mean_c,count", rows);
    }
}

}  // namespace netgrow
