#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svc {

// Case-folds (ASCII), trims, and collapses internal whitespace runs to a
// single space. Idempotent.
std::string normalize_stakeholder_key(std::string_view raw);

// Normalized identity of a stakeholder. Two spellings that normalize to the
// same key denote the same stakeholder.
struct StakeholderId {
    std::string key;

    static StakeholderId from_raw(std::string_view raw);

    auto operator<=>(const StakeholderId&) const = default;
};

enum class StakeholderKind : std::uint8_t { Individual, Institution };

const char* to_string(StakeholderKind kind);

struct Stakeholder {
    StakeholderId id;
    std::string display_name;
    StakeholderKind kind = StakeholderKind::Institution;
    std::optional<std::string> comment;

    bool operator==(const Stakeholder&) const = default;
};

enum class DataKindType : std::uint8_t {
    NonPersonal,
    PersonalCollection,
    PersonalIndividual,
};

struct DataKind {
    DataKindType type = DataKindType::NonPersonal;
    std::string subject; // only for PersonalIndividual

    static DataKind non_personal() { return {DataKindType::NonPersonal, {}}; }
    static DataKind personal_collection() { return {DataKindType::PersonalCollection, {}}; }
    static DataKind personal_individual(std::string subject) {
        return {DataKindType::PersonalIndividual, std::move(subject)};
    }

    bool personal() const { return type != DataKindType::NonPersonal; }

    auto operator<=>(const DataKind&) const = default;
};

enum class LabelType : std::uint8_t { Request, Service, Payment, Data, Process };

// Edge attribute. Data labels carry a DataKind; Process labels carry the
// algorithm name.
struct EdgeLabel {
    LabelType type = LabelType::Request;
    DataKind data;            // meaningful when type == Data
    std::string process_name; // meaningful when type == Process

    static EdgeLabel request() { return {LabelType::Request, {}, {}}; }
    static EdgeLabel service() { return {LabelType::Service, {}, {}}; }
    static EdgeLabel payment() { return {LabelType::Payment, {}, {}}; }
    static EdgeLabel data_label(DataKind kind) { return {LabelType::Data, std::move(kind), {}}; }
    static EdgeLabel process(std::string name) { return {LabelType::Process, {}, std::move(name)}; }

    bool is_data() const { return type == LabelType::Data; }
    bool is_personal_data() const { return type == LabelType::Data && data.personal(); }
    bool is_process() const { return type == LabelType::Process; }

    // DSL spelling: request | service | payment | data | data(P) | data(P:x) | proc(x)
    std::string to_dsl() const;

    auto operator<=>(const EdgeLabel&) const = default;
};

// Time order token attached to an edge. The first component is the step
// number; later components name branches ("2-1", "2-1a").
struct Timestep {
    std::vector<std::string> components;

    // Accepts digits { ('-'|'_') alnum }. Returns nullopt on malformed input.
    static std::optional<Timestep> parse(std::string_view text);

    bool well_formed() const;
    std::string to_string() const; // '-'-joined canonical spelling

    bool operator==(const Timestep&) const = default;
};

// Total order: component-wise; digit prefixes compare numerically, suffixes
// lexicographically, and a proper prefix precedes its extensions.
std::strong_ordering compare_timesteps(const Timestep& a, const Timestep& b);

struct Edge {
    StakeholderId src;
    StakeholderId dst;
    EdgeLabel label;
    std::optional<Timestep> timestep;
    std::optional<std::string> comment;

    bool operator==(const Edge&) const = default;
};

// One SVC diagram: a named directed multigraph of stakeholders and labeled,
// optionally timed edges. Plain data; validate() checks the invariants.
struct BusinessModel {
    std::string name;
    std::vector<Stakeholder> stakeholders; // declaration order
    std::vector<Edge> edges;               // declaration order

    const Stakeholder* find_stakeholder(const StakeholderId& id) const;
    bool has_stakeholder(const StakeholderId& id) const { return find_stakeholder(id) != nullptr; }
};

// Structural equality: stakeholder sets and edge multisets, order-insensitive.
bool operator==(const BusinessModel& a, const BusinessModel& b);

using LabelPredicate = std::function<bool(const EdgeLabel&)>;

// Degree counts on the directed multigraph. Parallel edges count
// individually; a Process self-loop counts once in each direction.
// Throws Error{NotFound} for an unknown stakeholder.
int in_degree(const BusinessModel& model, const StakeholderId& id,
              const LabelPredicate& filter = {});
int out_degree(const BusinessModel& model, const StakeholderId& id,
               const LabelPredicate& filter = {});

// Deterministic sort key for edges: (timestep presence + value, src, dst,
// label); untimed edges order after timed ones. Ignores comments.
bool edge_canonical_less(const Edge& a, const Edge& b);

// Label-only ordering used inside edge_canonical_less and by exporters.
std::strong_ordering compare_labels(const EdgeLabel& a, const EdgeLabel& b);

} // namespace svc
