#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "svc/merge.hpp"
#include "svc/model.hpp"

namespace svc {

// Incoming Payment edges per stakeholder, descending count, ties by id.
// Every stakeholder appears, including zero-count ones.
std::vector<std::pair<StakeholderId, int>> payment_received_counts(const EcosystemGraph& graph);

// Incoming personal-data edges (collection or individual; non-personal data
// excluded) per stakeholder, same ranking.
std::vector<std::pair<StakeholderId, int>> personal_data_exposure_counts(const EcosystemGraph& graph);

// Stakeholders with at least one incoming personal-data edge and no
// outgoing personal-data edge (a Process self-loop is not forwarding).
// Sorted by id.
std::vector<StakeholderId> personal_data_sinks(const EcosystemGraph& graph);

// A requested kind with an empty subject matches any subject of its type;
// otherwise matching is exact.
bool data_kind_matches(const DataKind& requested, const DataKind& actual);

struct TraceResult {
    // One witness path per reached stakeholder, as indices into graph.edges
    // in hop order. The start node appears only if a flow cycles back to it.
    std::map<StakeholderId, std::vector<std::size_t>> reached;

    bool operator==(const TraceResult&) const = default;
};

// Downstream closure from `start` over Data edges of the given kinds. A hop
// with a timestep must not precede the immediately preceding hop's
// timestep; untimed hops are unconstrained (and reset the comparison).
// Throws Error{NotFound} for an unknown start.
TraceResult trace_flow(const EcosystemGraph& graph, const StakeholderId& start,
                       const std::vector<DataKind>& kinds);

struct RpsEntry {
    int payments_in = 0;
    int qualifying_out = 0;
    std::optional<double> rps; // nullopt when qualifying_out == 0

    bool operator==(const RpsEntry&) const = default;
};

struct RpsReport {
    std::map<StakeholderId, RpsEntry> per_stakeholder;
    std::optional<double> ecosystem_rps; // mean of defined values; nullopt if none

    bool operator==(const RpsReport&) const = default;
};

// Received profit sufficiency: payments_in / qualifying_out, where
// qualifying_out counts outgoing Service and Data edges plus Process
// self-loops. Outgoing Request and Payment edges never qualify.
RpsReport rps(const EcosystemGraph& graph);

struct CentralStakeholders {
    std::vector<std::pair<StakeholderId, int>> by_degree;
    std::vector<std::pair<StakeholderId, double>> by_betweenness;

    bool operator==(const CentralStakeholders&) const = default;
};

// Top-k of each centrality on the simple undirected projection (fewer when
// the graph is smaller); ties by id.
CentralStakeholders central_stakeholders(const EcosystemGraph& graph, int k);

} // namespace svc
