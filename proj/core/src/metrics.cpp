#include "svc/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "svc/errors.hpp"

namespace svc {

namespace {

// Deterministic across platforms, unlike std::mt19937 + distribution.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

} // namespace

double average_degree(const SimpleGraph& graph) {
    if (graph.n_nodes() == 0) throw Error(ErrorCode::EmptyGraph, "average degree of empty graph");
    return 2.0 * graph.n_edges() / graph.n_nodes();
}

double density(const SimpleGraph& graph) {
    if (graph.n_nodes() < 2)
        throw Error(ErrorCode::TooSmall, "density needs at least two nodes");
    double v = graph.n_nodes();
    return 2.0 * graph.n_edges() / (v * (v - 1.0));
}

double local_clustering(const SimpleGraph& graph, int index) {
    const auto& nbrs = graph.neighbors(index);
    int d = static_cast<int>(nbrs.size());
    if (d < 2) return 0.0;
    int links = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (graph.has_edge(nbrs[i], nbrs[j])) ++links;
    return 2.0 * links / (static_cast<double>(d) * (d - 1));
}

double average_clustering(const SimpleGraph& graph, LowDegreePolicy policy) {
    int n = graph.n_nodes();
    if (n == 0) throw Error(ErrorCode::EmptyGraph, "clustering of empty graph");
    double sum = 0.0;
    int eligible = 0;
    for (int i = 0; i < n; ++i) {
        if (graph.degree(i) >= 2) {
            sum += local_clustering(graph, i);
            ++eligible;
        }
    }
    if (policy == LowDegreePolicy::CountAsZero) return sum / n;
    if (eligible == 0)
        throw Error(ErrorCode::NoQualifyingDegrees, "no node has degree >= 2");
    return sum / eligible;
}

std::optional<double> assortativity(const SimpleGraph& graph) {
    if (graph.n_edges() == 0) throw Error(ErrorCode::NoEdges, "assortativity needs an edge");

    // Zero variance iff every edge endpoint has the same degree; detect
    // exactly on the integers rather than with an epsilon.
    int first = -1;
    bool constant = true;
    double n = 0.0, sum_x = 0.0, sum_x2 = 0.0, sum_xy = 0.0;
    for (auto [i, j] : graph.edge_list()) {
        int di = graph.degree(i), dj = graph.degree(j);
        if (first < 0) first = di;
        if (di != first || dj != first) constant = false;
        // both orientations
        n += 2.0;
        sum_x += di + dj;
        sum_x2 += static_cast<double>(di) * di + static_cast<double>(dj) * dj;
        sum_xy += 2.0 * di * dj;
    }
    if (constant) return std::nullopt;

    double mean = sum_x / n;
    double var = sum_x2 / n - mean * mean; // x and y marginals coincide
    double cov = sum_xy / n - mean * mean;
    return cov / var;
}

std::optional<double> fit_power_law_gamma(const std::vector<int>& degrees, int k_min) {
    if (k_min < 1) throw Error(ErrorCode::NoQualifyingDegrees, "k_min must be positive");
    double log_sum = 0.0;
    int n = 0;
    for (int k : degrees) {
        if (k < k_min) continue;
        log_sum += std::log(k / (k_min - 0.5));
        ++n;
    }
    if (n == 0) throw Error(ErrorCode::NoQualifyingDegrees, "no degree reaches k_min");
    if (log_sum == 0.0) return std::nullopt;
    return 1.0 + n / log_sum;
}

std::vector<std::pair<StakeholderId, int>> degree_centrality(const SimpleGraph& graph) {
    std::vector<std::pair<StakeholderId, int>> out;
    out.reserve(static_cast<std::size_t>(graph.n_nodes()));
    for (int i = 0; i < graph.n_nodes(); ++i) out.emplace_back(graph.node(i), graph.degree(i));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

std::vector<double> betweenness_values(const SimpleGraph& graph) {
    int n = graph.n_nodes();
    std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n)), delta(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    std::vector<int> order, queue;
    order.reserve(static_cast<std::size_t>(n));
    queue.reserve(static_cast<std::size_t>(n));

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();
        queue.clear();

        dist[static_cast<std::size_t>(s)] = 0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            order.push_back(v);
            for (int w : graph.neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (dist[wi] < 0) {
                    dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
                if (dist[wi] == dist[static_cast<std::size_t>(v)] + 1) {
                    sigma[wi] += sigma[static_cast<std::size_t>(v)];
                    preds[wi].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto wi = static_cast<std::size_t>(*it);
            for (int v : preds[wi])
                delta[static_cast<std::size_t>(v)] +=
                    sigma[static_cast<std::size_t>(v)] / sigma[wi] * (1.0 + delta[wi]);
            if (*it != s) bc[wi] += delta[wi];
        }
    }
    // Each unordered pair was accumulated from both endpoints.
    for (double& v : bc) v /= 2.0;
    return bc;
}

std::vector<std::pair<StakeholderId, double>> betweenness_centrality(const SimpleGraph& graph) {
    auto values = betweenness_values(graph);
    std::vector<std::pair<StakeholderId, double>> out;
    out.reserve(values.size());
    for (int i = 0; i < graph.n_nodes(); ++i)
        out.emplace_back(graph.node(i), values[static_cast<std::size_t>(i)]);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

std::vector<RobustnessPoint> robustness_curve(const SimpleGraph& graph, RemovalStrategy strategy,
                                              std::uint64_t seed) {
    if (graph.n_nodes() == 0) throw Error(ErrorCode::EmptyGraph, "robustness of empty graph");
    const double v0 = graph.n_nodes();
    SplitMix64 rng(seed);

    auto lcc_fraction = [&](const SimpleGraph& g) {
        if (g.n_nodes() == 0) return 0.0;
        return static_cast<double>(connected_components(g).front().size()) / v0;
    };

    std::vector<RobustnessPoint> curve;
    curve.reserve(static_cast<std::size_t>(graph.n_nodes()) + 1);
    SimpleGraph cur = graph;
    curve.push_back({0.0, lcc_fraction(cur)});
    for (int step = 1; cur.n_nodes() > 0; ++step) {
        int pick = 0;
        if (strategy == RemovalStrategy::HighestDegreeFirst) {
            for (int i = 1; i < cur.n_nodes(); ++i)
                if (cur.degree(i) > cur.degree(pick)) pick = i; // first max = smallest id
        } else {
            pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(cur.n_nodes())));
        }
        std::vector<int> keep;
        keep.reserve(static_cast<std::size_t>(cur.n_nodes()) - 1);
        for (int i = 0; i < cur.n_nodes(); ++i)
            if (i != pick) keep.push_back(i);
        cur = cur.induced(keep);
        curve.push_back({step / v0, lcc_fraction(cur)});
    }
    return curve;
}

MetricsReport compute_metrics(const SimpleGraph& graph, int k_min, LowDegreePolicy policy) {
    MetricsReport report;
    report.n_nodes = graph.n_nodes();
    report.n_edges = graph.n_edges();
    report.avg_degree = average_degree(graph);
    report.density = density(graph);
    report.avg_clustering = average_clustering(graph, policy);
    if (graph.n_edges() > 0) report.assortativity = assortativity(graph);

    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(graph.n_nodes()));
    bool any = false;
    for (int i = 0; i < graph.n_nodes(); ++i) {
        degrees.push_back(graph.degree(i));
        any = any || graph.degree(i) >= k_min;
    }
    if (any) report.gamma = fit_power_law_gamma(degrees, k_min);

    for (const auto& comp : connected_components(graph))
        report.component_sizes.push_back(static_cast<int>(comp.size()));
    return report;
}

} // namespace svc
