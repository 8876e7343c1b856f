#include "svc/merge.hpp"

#include <algorithm>
#include <set>

#include "svc/errors.hpp"

namespace svc {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool ecosystem_edge_less(const EcosystemEdge& a, const EcosystemEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    if (auto c = compare_labels(a.label, b.label); c != std::strong_ordering::equal)
        return c == std::strong_ordering::less;
    if (a.timestep.has_value() != b.timestep.has_value())
        return a.timestep.has_value(); // timed before untimed
    if (a.timestep && b.timestep) {
        auto o = compare_timesteps(*a.timestep, *b.timestep);
        if (o != std::strong_ordering::equal) return o == std::strong_ordering::less;
    }
    return a.model < b.model;
}

} // namespace

AliasMap AliasMap::parse(std::string_view text) {
    AliasMap map;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (!line.empty()) {
            auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw Error(ErrorCode::BadAliasMap,
                            "alias map line " + std::to_string(line_no) + ": expected 'alias = canonical'");
            try {
                map.add(line.substr(0, eq), line.substr(eq + 1));
            } catch (const Error& e) {
                throw Error(ErrorCode::BadAliasMap,
                            "alias map line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return map;
}

void AliasMap::add(std::string_view alias_raw, std::string_view canonical_raw) {
    std::string alias = normalize_stakeholder_key(alias_raw);
    std::string canonical = normalize_stakeholder_key(canonical_raw);
    if (alias.empty() || canonical.empty())
        throw Error(ErrorCode::BadAliasMap, "empty alias or canonical name");
    if (alias == canonical)
        throw Error(ErrorCode::BadAliasMap, "alias '" + alias + "' maps to itself");
    if (auto it = entries_.find(alias); it != entries_.end()) {
        if (it->second == canonical) return; // harmless repeat
        throw Error(ErrorCode::BadAliasMap,
                    "alias '" + alias + "' maps to both '" + it->second + "' and '" + canonical + "'");
    }
    if (entries_.count(canonical))
        throw Error(ErrorCode::BadAliasMap,
                    "canonical name '" + canonical + "' is itself an alias");
    for (const auto& [a, c] : entries_)
        if (c == alias)
            throw Error(ErrorCode::BadAliasMap,
                        "alias '" + alias + "' is already the canonical name of '" + a + "'");
    entries_.emplace(std::move(alias), std::move(canonical));
}

StakeholderId AliasMap::resolve(const StakeholderId& id) const {
    auto it = entries_.find(id.key);
    return it == entries_.end() ? id : StakeholderId{it->second};
}

EcosystemGraph merge(const std::vector<BusinessModel>& models, const AliasMap* aliases) {
    struct Accum {
        StakeholderKind kind;
        std::string kind_model; // first model that declared the kind
        std::string display_name;
        std::vector<std::string> models;
    };
    std::map<StakeholderId, Accum> accum;

    EcosystemGraph graph;
    for (const auto& model : models) {
        std::set<StakeholderId> in_this_model;
        for (const auto& s : model.stakeholders) {
            StakeholderId rid = aliases ? aliases->resolve(s.id) : s.id;
            auto [it, fresh] = accum.try_emplace(rid);
            Accum& node = it->second;
            if (fresh) {
                node.kind = s.kind;
                node.kind_model = model.name;
                node.display_name = s.display_name;
            } else {
                if (node.kind != s.kind)
                    throw Error(ErrorCode::KindConflict,
                                "stakeholder '" + rid.key + "' is " + to_string(node.kind) +
                                    " in model \"" + node.kind_model + "\" but " + to_string(s.kind) +
                                    " in model \"" + model.name + "\"");
                node.display_name = std::min(node.display_name, s.display_name);
            }
            if (in_this_model.insert(rid).second) node.models.push_back(model.name);
        }
        for (const auto& e : model.edges) {
            StakeholderId src = aliases ? aliases->resolve(e.src) : e.src;
            StakeholderId dst = aliases ? aliases->resolve(e.dst) : e.dst;
            graph.edges.push_back({std::move(src), std::move(dst), e.label, e.timestep, model.name});
        }
    }

    for (auto& [id, node] : accum) {
        std::sort(node.models.begin(), node.models.end());
        graph.nodes.emplace(id, EcosystemNode{node.kind, std::move(node.display_name),
                                              static_cast<int>(node.models.size()),
                                              std::move(node.models)});
    }
    std::sort(graph.edges.begin(), graph.edges.end(), ecosystem_edge_less);
    return graph;
}

SimpleGraph simple_undirected_projection(const EcosystemGraph& graph) {
    std::vector<StakeholderId> ids;
    ids.reserve(graph.nodes.size());
    for (const auto& [id, node] : graph.nodes) ids.push_back(id);

    std::vector<std::pair<StakeholderId, StakeholderId>> pairs;
    for (const auto& e : graph.edges)
        if (e.src != e.dst) pairs.emplace_back(e.src, e.dst);
    return SimpleGraph::build(std::move(ids), pairs);
}

ModelSizeStats model_size_stats(const std::vector<BusinessModel>& models) {
    if (models.empty()) throw Error(ErrorCode::EmptyCorpus, "no models in corpus");
    ModelSizeStats stats;
    stats.max = stats.min = static_cast<int>(models.front().stakeholders.size());
    long total = 0;
    for (const auto& m : models) {
        int n = static_cast<int>(m.stakeholders.size());
        stats.max = std::max(stats.max, n);
        stats.min = std::min(stats.min, n);
        total += n;
    }
    stats.mean = static_cast<double>(total) / static_cast<double>(models.size());
    return stats;
}

namespace {

int count_ecosystem_edges(const EcosystemGraph& graph, const StakeholderId& id, bool incoming,
                          const LabelPredicate& filter) {
    if (!graph.contains(id))
        throw Error(ErrorCode::NotFound, "unknown stakeholder '" + id.key + "'");
    int n = 0;
    for (const auto& e : graph.edges) {
        const StakeholderId& end = incoming ? e.dst : e.src;
        if (end == id && (!filter || filter(e.label))) ++n;
    }
    return n;
}

} // namespace

int in_degree(const EcosystemGraph& graph, const StakeholderId& id, const LabelPredicate& filter) {
    return count_ecosystem_edges(graph, id, true, filter);
}

int out_degree(const EcosystemGraph& graph, const StakeholderId& id, const LabelPredicate& filter) {
    return count_ecosystem_edges(graph, id, false, filter);
}

} // namespace svc
