#pragma once

namespace netgrow {

// Closed-form reference predictions used as oracles against measured
// metrics. The degree-distribution and clustering forms are specific to
// m = 2; the degree-evolution, path-length and neighbor-edge-bound forms
// hold for any m >= 2.

// Expected degree at network size t of the node born at time t_i:
// m * sqrt(t / t_i). Requires 1 <= t_i <= t and m >= 2.
double predicted_degree(int m, int t, int t_i);

// Stationary degree distribution for m = 2: 12 / (k (k+1) (k+2)), k >= 2.
double predicted_pk(int k);

// Clustering spectrum for m = 2: C(k) = 2 / k, k >= 2.
double predicted_ck(int k);

// Network clustering coefficient for m = 2:
// 2 * sum_{k>=2} 12 / (k^2 (k+1) (k+2)), summed until the tail bound
// 24 * sum_{k>K} k^-4 < 1e-8. Rounds to 0.7392 at 4 decimals.
double predicted_global_clustering();

// Small-world path-length line: ln t / ln(2m). The asymptotic mean degree
// of a grown graph is 2m, so <k> = 4 when m = 2.
double predicted_apl_line(int t, int m);

// Lower bound on the edge count among a degree-k node's neighbors:
// 2 (m-1) k / m - (m-1). Exact (equality, k - 1) for m = 2.
double predicted_ei_bound(int m, double k);

}  // namespace netgrow
