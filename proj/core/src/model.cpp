#include "svc/model.hpp"

#include <algorithm>
#include <cctype>

#include "svc/errors.hpp"

namespace svc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

} // namespace

std::string normalize_stakeholder_key(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

StakeholderId StakeholderId::from_raw(std::string_view raw) {
    return StakeholderId{normalize_stakeholder_key(raw)};
}

const char* to_string(StakeholderKind kind) {
    return kind == StakeholderKind::Individual ? "individual" : "institution";
}

std::string EdgeLabel::to_dsl() const {
    switch (type) {
    case LabelType::Request: return "request";
    case LabelType::Service: return "service";
    case LabelType::Payment: return "payment";
    case LabelType::Data:
        switch (data.type) {
        case DataKindType::NonPersonal: return "data";
        case DataKindType::PersonalCollection: return "data(P)";
        case DataKindType::PersonalIndividual: return "data(P:" + data.subject + ")";
        }
        return "data";
    case LabelType::Process: return "proc(" + process_name + ")";
    }
    return "request";
}

std::optional<Timestep> Timestep::parse(std::string_view text) {
    Timestep ts;
    std::string current;
    for (char c : text) {
        if (c == '-' || c == '_') {
            if (current.empty()) return std::nullopt;
            ts.components.push_back(std::move(current));
            current.clear();
            continue;
        }
        if (!std::isalnum(static_cast<unsigned char>(c))) return std::nullopt;
        current.push_back(c);
    }
    if (current.empty()) return std::nullopt;
    ts.components.push_back(std::move(current));
    if (!ts.well_formed()) return std::nullopt;
    return ts;
}

bool Timestep::well_formed() const {
    if (components.empty()) return false;
    for (const auto& comp : components) {
        if (comp.empty()) return false;
        for (char c : comp) {
            if (!std::isalnum(static_cast<unsigned char>(c))) return false;
        }
    }
    return std::all_of(components.front().begin(), components.front().end(), is_digit);
}

std::string Timestep::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i > 0) out.push_back('-');
        out += components[i];
    }
    return out;
}

namespace {

// Splits a component into (numeric prefix value, remainder). Components
// without leading digits get no numeric part and order after numbered ones.
struct ComponentKey {
    bool has_number = false;
    unsigned long long number = 0;
    std::string_view rest;
    std::string_view raw;
};

ComponentKey component_key(std::string_view comp) {
    ComponentKey key;
    key.raw = comp;
    std::size_t i = 0;
    while (i < comp.size() && is_digit(comp[i])) ++i;
    if (i > 0) {
        key.has_number = true;
        key.number = 0;
        for (std::size_t j = 0; j < i; ++j) {
            key.number = key.number * 10 + static_cast<unsigned>(comp[j] - '0');
        }
    }
    key.rest = comp.substr(i);
    return key;
}

std::strong_ordering compare_components(std::string_view a, std::string_view b) {
    const ComponentKey ka = component_key(a);
    const ComponentKey kb = component_key(b);
    if (ka.has_number != kb.has_number) {
        return ka.has_number ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ka.has_number && ka.number != kb.number) {
        return ka.number < kb.number ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = ka.rest.compare(kb.rest); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // "02" vs "2": numerically equal, so break ties on the raw spelling to
    // keep the order total.
    if (auto c = ka.raw.compare(kb.raw); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering compare_timesteps(const Timestep& a, const Timestep& b) {
    const std::size_t n = std::min(a.components.size(), b.components.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare_components(a.components[i], b.components[i]);
            c != std::strong_ordering::equal) {
            return c;
        }
    }
    // A proper prefix precedes its extensions: "2" < "2-1".
    if (a.components.size() != b.components.size()) {
        return a.components.size() < b.components.size() ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

const Stakeholder* BusinessModel::find_stakeholder(const StakeholderId& id) const {
    for (const auto& s : stakeholders) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

namespace {

bool edge_full_less(const Edge& a, const Edge& b) {
    if (edge_canonical_less(a, b)) return true;
    if (edge_canonical_less(b, a)) return false;
    return a.comment < b.comment;
}

} // namespace

bool operator==(const BusinessModel& a, const BusinessModel& b) {
    if (a.name != b.name) return false;
    auto sa = a.stakeholders;
    auto sb = b.stakeholders;
    auto by_id = [](const Stakeholder& x, const Stakeholder& y) { return x.id < y.id; };
    std::sort(sa.begin(), sa.end(), by_id);
    std::sort(sb.begin(), sb.end(), by_id);
    if (sa != sb) return false;
    auto ea = a.edges;
    auto eb = b.edges;
    std::sort(ea.begin(), ea.end(), edge_full_less);
    std::sort(eb.begin(), eb.end(), edge_full_less);
    return ea == eb;
}

namespace {

int count_edges(const BusinessModel& model, const StakeholderId& id, bool incoming,
                const LabelPredicate& filter) {
    if (!model.has_stakeholder(id)) {
        throw Error(ErrorCode::NotFound, "unknown stakeholder: " + id.key);
    }
    int count = 0;
    for (const auto& e : model.edges) {
        const StakeholderId& endpoint = incoming ? e.dst : e.src;
        if (endpoint != id) continue;
        if (filter && !filter(e.label)) continue;
        ++count;
    }
    return count;
}

} // namespace

int in_degree(const BusinessModel& model, const StakeholderId& id, const LabelPredicate& filter) {
    return count_edges(model, id, true, filter);
}

int out_degree(const BusinessModel& model, const StakeholderId& id, const LabelPredicate& filter) {
    return count_edges(model, id, false, filter);
}

std::strong_ordering compare_labels(const EdgeLabel& a, const EdgeLabel& b) {
    if (a.type != b.type) return a.type <=> b.type;
    if (a.type == LabelType::Data) {
        if (a.data.type != b.data.type) return a.data.type <=> b.data.type;
        return a.data.subject <=> b.data.subject;
    }
    if (a.type == LabelType::Process) return a.process_name <=> b.process_name;
    return std::strong_ordering::equal;
}

bool edge_canonical_less(const Edge& a, const Edge& b) {
    if (a.timestep.has_value() != b.timestep.has_value()) return a.timestep.has_value();
    if (a.timestep && b.timestep) {
        if (auto c = compare_timesteps(*a.timestep, *b.timestep); c != std::strong_ordering::equal) {
            return c == std::strong_ordering::less;
        }
    }
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return compare_labels(a.label, b.label) == std::strong_ordering::less;
}

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::KindConflict: return "KIND_CONFLICT";
    case ErrorCode::InvalidModel: return "INVALID_MODEL";
    case ErrorCode::EmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::EmptyGraph: return "EMPTY_GRAPH";
    case ErrorCode::TooSmall: return "TOO_SMALL";
    case ErrorCode::NoEdges: return "NO_EDGES";
    case ErrorCode::NoQualifyingDegrees: return "NO_QUALIFYING_DEGREES";
    case ErrorCode::BadAliasMap: return "BAD_ALIAS_MAP";
    case ErrorCode::Io: return "IO";
    }
    return "ERROR";
}

} // namespace svc
