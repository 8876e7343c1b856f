#include "svc/analytics.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "svc/errors.hpp"
#include "svc/metrics.hpp"

namespace svc {

namespace {

std::vector<std::pair<StakeholderId, int>> ranked_counts(const EcosystemGraph& graph,
                                                         const std::map<StakeholderId, int>& counts) {
    std::vector<std::pair<StakeholderId, int>> out;
    out.reserve(graph.nodes.size());
    for (const auto& [id, node] : graph.nodes) {
        auto it = counts.find(id);
        out.emplace_back(id, it == counts.end() ? 0 : it->second);
    }
    // input is id-sorted, so stability yields id ties
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

} // namespace

std::vector<std::pair<StakeholderId, int>> payment_received_counts(const EcosystemGraph& graph) {
    std::map<StakeholderId, int> counts;
    for (const auto& e : graph.edges)
        if (e.label.type == LabelType::Payment) ++counts[e.dst];
    return ranked_counts(graph, counts);
}

std::vector<std::pair<StakeholderId, int>> personal_data_exposure_counts(const EcosystemGraph& graph) {
    std::map<StakeholderId, int> counts;
    for (const auto& e : graph.edges)
        if (e.label.is_personal_data()) ++counts[e.dst];
    return ranked_counts(graph, counts);
}

std::vector<StakeholderId> personal_data_sinks(const EcosystemGraph& graph) {
    std::set<StakeholderId> receives, forwards;
    for (const auto& e : graph.edges) {
        if (!e.label.is_personal_data()) continue;
        receives.insert(e.dst);
        forwards.insert(e.src);
    }
    std::vector<StakeholderId> out;
    for (const auto& id : receives)
        if (!forwards.count(id)) out.push_back(id);
    return out;
}

bool data_kind_matches(const DataKind& requested, const DataKind& actual) {
    if (requested.type != actual.type) return false;
    return requested.subject.empty() || requested.subject == actual.subject;
}

TraceResult trace_flow(const EcosystemGraph& graph, const StakeholderId& start,
                       const std::vector<DataKind>& kinds) {
    if (!graph.contains(start))
        throw Error(ErrorCode::NotFound, "unknown stakeholder '" + start.key + "'");

    auto wanted = [&](const EdgeLabel& label) {
        if (!label.is_data()) return false;
        for (const auto& k : kinds)
            if (data_kind_matches(k, label.data)) return true;
        return false;
    };

    // Outgoing matching edges per node.
    std::map<StakeholderId, std::vector<std::size_t>> outgoing;
    for (std::size_t i = 0; i < graph.edges.size(); ++i)
        if (wanted(graph.edges[i].label)) outgoing[graph.edges[i].src].push_back(i);

    // Search states are (node, timestep of the previous hop); an untimed hop
    // clears the floor. BFS order makes each witness a fewest-hop path.
    struct State {
        StakeholderId node;
        std::optional<Timestep> floor;

        bool operator<(const State& o) const {
            if (node != o.node) return node < o.node;
            if (floor.has_value() != o.floor.has_value()) return !floor.has_value();
            if (!floor) return false;
            return compare_timesteps(*floor, *o.floor) == std::strong_ordering::less;
        }
    };

    std::map<State, std::pair<State, std::size_t>> parent; // state -> (prev, edge)
    std::set<State> visited;
    std::deque<State> queue;

    // The origin has no parent entry, which terminates the walk.
    auto path_to = [&](State s) {
        std::vector<std::size_t> path;
        for (auto p = parent.find(s); p != parent.end(); p = parent.find(s)) {
            path.push_back(p->second.second);
            s = p->second.first;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    TraceResult result;
    State origin{start, std::nullopt};
    visited.insert(origin);
    queue.push_back(origin);
    while (!queue.empty()) {
        State cur = queue.front();
        queue.pop_front();
        auto it = outgoing.find(cur.node);
        if (it == outgoing.end()) continue;
        for (std::size_t ei : it->second) {
            const EcosystemEdge& e = graph.edges[ei];
            if (cur.floor && e.timestep &&
                compare_timesteps(*e.timestep, *cur.floor) == std::strong_ordering::less)
                continue;
            if (!result.reached.count(e.dst)) {
                auto path = path_to(cur);
                path.push_back(ei);
                result.reached.emplace(e.dst, std::move(path));
            }
            State next{e.dst, e.timestep};
            if (visited.insert(next).second) {
                parent.emplace(next, std::make_pair(cur, ei));
                queue.push_back(next);
            }
        }
    }
    return result;
}

RpsReport rps(const EcosystemGraph& graph) {
    RpsReport report;
    for (const auto& [id, node] : graph.nodes) report.per_stakeholder[id];
    for (const auto& e : graph.edges) {
        if (e.label.type == LabelType::Payment) ++report.per_stakeholder[e.dst].payments_in;
        bool qualifies = e.label.type == LabelType::Service || e.label.type == LabelType::Data ||
                         (e.label.type == LabelType::Process && e.src == e.dst);
        if (qualifies) ++report.per_stakeholder[e.src].qualifying_out;
    }
    double sum = 0.0;
    int defined = 0;
    for (auto& [id, entry] : report.per_stakeholder) {
        if (entry.qualifying_out == 0) continue;
        entry.rps = static_cast<double>(entry.payments_in) / entry.qualifying_out;
        sum += *entry.rps;
        ++defined;
    }
    if (defined > 0) report.ecosystem_rps = sum / defined;
    return report;
}

CentralStakeholders central_stakeholders(const EcosystemGraph& graph, int k) {
    SimpleGraph sg = simple_undirected_projection(graph);
    CentralStakeholders out;
    out.by_degree = degree_centrality(sg);
    out.by_betweenness = betweenness_centrality(sg);
    auto cap = static_cast<std::size_t>(std::max(k, 0));
    if (out.by_degree.size() > cap) out.by_degree.resize(cap);
    if (out.by_betweenness.size() > cap) out.by_betweenness.resize(cap);
    return out;
}

} // namespace svc
