#include "svc/graph.hpp"

#include <algorithm>
#include <set>

namespace svc {

SimpleGraph SimpleGraph::build(std::vector<StakeholderId> nodes,
                               const std::vector<std::pair<StakeholderId, StakeholderId>>& pairs) {
    SimpleGraph g;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    g.nodes_ = std::move(nodes);
    g.adjacency_.assign(g.nodes_.size(), {});

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : pairs) {
        const int ia = g.index_of(a);
        const int ib = g.index_of(b);
        if (ia < 0 || ib < 0 || ia == ib) continue;
        const auto key = std::minmax(ia, ib);
        if (!seen.insert(key).second) continue;
        g.adjacency_[static_cast<std::size_t>(ia)].push_back(ib);
        g.adjacency_[static_cast<std::size_t>(ib)].push_back(ia);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.n_edges_ = static_cast<int>(seen.size());
    return g;
}

int SimpleGraph::index_of(const StakeholderId& id) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
    if (it == nodes_.end() || *it != id) return -1;
    return static_cast<int>(it - nodes_.begin());
}

bool SimpleGraph::has_edge(int a, int b) const {
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n_edges_));
    for (int i = 0; i < n_nodes(); ++i) {
        for (int j : neighbors(i)) {
            if (i < j) edges.emplace_back(i, j);
        }
    }
    return edges;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& keep) const {
    std::vector<StakeholderId> nodes;
    nodes.reserve(keep.size());
    for (int i : keep) nodes.push_back(node(i));
    std::vector<std::pair<StakeholderId, StakeholderId>> pairs;
    for (int i : keep) {
        for (int j : neighbors(i)) {
            if (i < j) pairs.emplace_back(node(i), node(j));
        }
    }
    return build(std::move(nodes), pairs);
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& graph) {
    const int n = graph.n_nodes();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] >= 0) continue;
        const int label = static_cast<int>(components.size());
        std::vector<int> members;
        std::vector<int> stack{start};
        component[static_cast<std::size_t>(start)] = label;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : graph.neighbors(v)) {
                if (component[static_cast<std::size_t>(w)] < 0) {
                    component[static_cast<std::size_t>(w)] = label;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    // Size descending; equal sizes by smallest node id, which is the first
    // member because node indices follow sorted ids.
    std::stable_sort(components.begin(), components.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a.front() < b.front();
                     });
    return components;
}

} // namespace svc
