#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svc/graph.hpp"
#include "svc/model.hpp"

namespace svc {

// Identity-resolution aid: maps normalized alias spellings to the canonical
// stakeholder id. Resolution is one step; an entry whose canonical side is
// itself an alias is rejected.
class AliasMap {
public:
    AliasMap() = default;

    // Lines of `alias = canonical`; `#` starts a comment. Throws
    // Error{BadAliasMap} on malformed lines, chained or conflicting entries.
    static AliasMap parse(std::string_view text);

    void add(std::string_view alias_raw, std::string_view canonical_raw);

    StakeholderId resolve(const StakeholderId& id) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::string, std::string> entries_; // normalized alias -> normalized canonical
};

struct EcosystemNode {
    StakeholderKind kind = StakeholderKind::Institution;
    std::string display_name;        // lexicographically smallest spelling seen
    int frequency = 0;               // number of models containing this node
    std::vector<std::string> models; // provenance, sorted; one entry per model

    bool operator==(const EcosystemNode&) const = default;
};

struct EcosystemEdge {
    StakeholderId src;
    StakeholderId dst;
    EdgeLabel label;
    std::optional<Timestep> timestep;
    std::string model; // provenance

    bool operator==(const EcosystemEdge&) const = default;
};

// The merged data-exchange ecosystem: a directed multigraph over resolved
// stakeholder ids, with per-node frequency and per-edge provenance.
// Canonically ordered, so equal ecosystems compare equal field-wise.
struct EcosystemGraph {
    std::map<StakeholderId, EcosystemNode> nodes;
    std::vector<EcosystemEdge> edges;

    bool contains(const StakeholderId& id) const { return nodes.count(id) > 0; }

    bool operator==(const EcosystemGraph&) const = default;
};

// Unifies stakeholders by normalized id after alias resolution. Every edge
// is retained as a parallel edge with provenance. The result is identical
// for any permutation of the input list. Throws Error{KindConflict} when
// one resolved id is declared individual in one model and institution in
// another (both sources are named).
EcosystemGraph merge(const std::vector<BusinessModel>& models, const AliasMap* aliases = nullptr);

// Drops self-loops and collapses parallel/antiparallel edges; the node set
// is unchanged.
SimpleGraph simple_undirected_projection(const EcosystemGraph& graph);

struct ModelSizeStats {
    int max = 0;
    int min = 0;
    double mean = 0.0;
};

// Per-model stakeholder counts, pre-merge. Throws Error{EmptyCorpus}.
ModelSizeStats model_size_stats(const std::vector<BusinessModel>& models);

// Degree counts on the merged multigraph; see the BusinessModel overloads.
int in_degree(const EcosystemGraph& graph, const StakeholderId& id,
              const LabelPredicate& filter = {});
int out_degree(const EcosystemGraph& graph, const StakeholderId& id,
               const LabelPredicate& filter = {});

} // namespace svc
