#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "svc/graph.hpp"

namespace svc {

// Mean degree 2|E|/|V|. Throws Error{EmptyGraph} on an empty graph.
double average_degree(const SimpleGraph& graph);

// 2|E|/(|V|(|V|-1)). Throws Error{TooSmall} for fewer than two nodes.
double density(const SimpleGraph& graph);

// How nodes of degree < 2 enter the clustering average.
enum class LowDegreePolicy {
    CountAsZero, // C_i = 0 (default convention)
    Exclude,     // averaged over nodes of degree >= 2 only
};

// Local clustering C_i = links-among-neighbors / (deg_i choose 2); 0 when
// deg_i < 2.
double local_clustering(const SimpleGraph& graph, int index);

// Mean local clustering. Throws Error{EmptyGraph}; with
// LowDegreePolicy::Exclude, throws Error{NoQualifyingDegrees} when every
// node has degree < 2.
double average_clustering(const SimpleGraph& graph,
                          LowDegreePolicy policy = LowDegreePolicy::CountAsZero);

// Degree assortativity: Pearson correlation over the multiset of ordered
// edge endpoints (each undirected edge contributes both orientations).
// nullopt when the endpoint-degree variance is zero. Throws
// Error{NoEdges} on an edgeless graph.
std::optional<double> assortativity(const SimpleGraph& graph);

// Continuous-approximation MLE for a power-law exponent:
//   gamma = 1 + n / sum_{k_i >= k_min} ln(k_i / (k_min - 0.5)).
// Degrees below k_min (in particular zeros) are ignored. Throws
// Error{NoQualifyingDegrees} when no degree qualifies; nullopt if the log
// sum vanishes.
std::optional<double> fit_power_law_gamma(const std::vector<int>& degrees, int k_min = 1);

// Nodes ranked by degree, descending, ties by id.
std::vector<std::pair<StakeholderId, int>> degree_centrality(const SimpleGraph& graph);

// Unnormalized shortest-path betweenness (unordered pairs counted once,
// endpoints excluded), indexed like graph.nodes().
std::vector<double> betweenness_values(const SimpleGraph& graph);

// Nodes ranked by betweenness, descending, ties by id.
std::vector<std::pair<StakeholderId, double>> betweenness_centrality(const SimpleGraph& graph);

enum class RemovalStrategy {
    HighestDegreeFirst, // recompute degrees each step; ties by smallest id
    Random,             // uniform over remaining nodes, seeded
};

struct RobustnessPoint {
    double fraction_removed = 0.0;
    double lcc_fraction = 0.0;

    bool operator==(const RobustnessPoint&) const = default;
};

// Percolation curve: remove one node per step until none remain, recording
// |largest component| / original |V| (step 0 included). The Random strategy
// is reproducible across platforms for a given seed. Throws
// Error{EmptyGraph}.
std::vector<RobustnessPoint> robustness_curve(const SimpleGraph& graph, RemovalStrategy strategy,
                                              std::uint64_t seed = 0);

struct MetricsReport {
    int n_nodes = 0;
    int n_edges = 0;
    double avg_degree = 0.0;
    double density = 0.0;
    double avg_clustering = 0.0;
    std::optional<double> assortativity; // nullopt: undefined (no edges / zero variance)
    std::optional<double> gamma;         // nullopt: undefined (no qualifying degrees)
    std::vector<int> component_sizes;    // descending

    bool operator==(const MetricsReport&) const = default;
};

// Bundles the statistics above for one graph. Requires at least two nodes
// (Error{EmptyGraph} / Error{TooSmall}); degenerate assortativity and gamma
// become nullopt rather than errors.
MetricsReport compute_metrics(const SimpleGraph& graph, int k_min = 1,
                              LowDegreePolicy policy = LowDegreePolicy::CountAsZero);

} // namespace svc
