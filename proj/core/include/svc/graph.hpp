#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "svc/model.hpp"

namespace svc {

// Undirected simple graph over stakeholder ids: no self-loops, no parallel
// edges. Nodes are indexed in sorted-id order; adjacency lists are sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;

    // Collapses duplicate and antiparallel pairs, drops self-pairs.
    static SimpleGraph build(std::vector<StakeholderId> nodes,
                             const std::vector<std::pair<StakeholderId, StakeholderId>>& pairs);

    int n_nodes() const { return static_cast<int>(nodes_.size()); }
    int n_edges() const { return n_edges_; }

    const std::vector<StakeholderId>& nodes() const { return nodes_; }
    const StakeholderId& node(int index) const { return nodes_[static_cast<std::size_t>(index)]; }
    // -1 when absent
    int index_of(const StakeholderId& id) const;
    bool contains(const StakeholderId& id) const { return index_of(id) >= 0; }

    const std::vector<int>& neighbors(int index) const {
        return adjacency_[static_cast<std::size_t>(index)];
    }
    int degree(int index) const {
        return static_cast<int>(adjacency_[static_cast<std::size_t>(index)].size());
    }
    bool has_edge(int a, int b) const;

    // Each undirected edge once, as (i, j) with i < j, in sorted order.
    std::vector<std::pair<int, int>> edge_list() const;

    // Induced subgraph on the given node indices.
    SimpleGraph induced(const std::vector<int>& keep) const;

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<StakeholderId> nodes_;
    std::vector<std::vector<int>> adjacency_;
    int n_edges_ = 0;
};

// Connected components as node-index sets, ordered by size descending and
// then by smallest node id.
std::vector<std::vector<int>> connected_components(const SimpleGraph& graph);

} // namespace svc
