#pragma once

#include <string>
#include <vector>

#include "svc/analytics.hpp"
#include "svc/merge.hpp"
#include "svc/metrics.hpp"

namespace svc {

struct ReportOptions {
    int k_min = 1;
    int top = 5; // caps the centrality lists only
    LowDegreePolicy clustering_policy = LowDegreePolicy::CountAsZero;
};

// Everything the report command emits, already in deterministic order.
struct ReportDocument {
    int model_count = 0;
    ModelSizeStats size_stats;

    int node_count = 0;
    int edge_count = 0; // multigraph edges, self-loops included
    std::vector<int> component_sizes;

    MetricsReport metrics; // largest component of the projection

    std::vector<std::pair<StakeholderId, int>> payments;
    std::vector<std::pair<StakeholderId, int>> exposure;
    std::vector<StakeholderId> sinks;
    CentralStakeholders central;

    RpsReport rps;

    bool operator==(const ReportDocument&) const = default;
};

// Merges, projects and runs every statistic and query. Throws EmptyCorpus,
// KindConflict, or TooSmall (largest component below two nodes) upward.
ReportDocument build_report(const std::vector<BusinessModel>& models,
                            const AliasMap* aliases = nullptr, const ReportOptions& options = {});

// Fixed key order, full numeric precision, trailing newline; undefined
// values are null. Byte-identical for equal documents.
std::string render_json(const ReportDocument& doc);

// Human-readable rendering; reals rounded to four decimals.
std::string render_text(const ReportDocument& doc);

} // namespace svc
