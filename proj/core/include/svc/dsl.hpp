#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svc/model.hpp"

namespace svc {

enum class ParseErrorCode {
    SyntaxError,
    DuplicateStakeholder,
    UnknownLabel,
    UndeclaredStakeholder,
    BadTimestep,
};

// SCREAMING_SNAKE spelling used in CLI diagnostics, e.g. UNKNOWN_LABEL.
const char* to_string(ParseErrorCode code);

struct ParseError {
    int line = 1;   // 1-based, points at the offending token
    int column = 1; // 1-based byte column
    ParseErrorCode code = ParseErrorCode::SyntaxError;
    std::string message;
};

struct SourceSpan {
    int line = 0;
    int column = 0;
};

// Source positions for one parsed model, parallel to the model's
// stakeholder and edge lists. Lets callers point semantic diagnostics back
// at the text.
struct ModelSource {
    SourceSpan header;
    std::vector<SourceSpan> stakeholders;
    std::vector<SourceSpan> edges;
};

struct ParseResult {
    std::vector<BusinessModel> models;
    std::vector<ModelSource> sources;
    std::optional<ParseError> error;

    bool ok() const { return !error.has_value(); }
};

// Parses the line-oriented SVC text format:
//
//   business "Name" {
//     node A : individual
//     node "App Company" : institution   # comment
//     edge A -> "App Company" : data(P), payment @2-1
//     edge "App Company" -> "App Company" : proc(anonymize) @3
//   }
//
// Multi-label edge lines desugar into parallel edges sharing timestep and
// comment. Stakeholders are declared before the edges that reference them.
// Stops at the first unrecoverable error; models parsed before the failing
// block are not returned.
ParseResult parse(std::string_view text);

// Canonical serialization: nodes sorted by id; timed edges sorted by
// (timestep, src, dst, label) ahead of untimed ones, which keep declaration
// order; names double-quoted only when not plain identifiers. Reparsing the
// output reproduces the models structurally.
// Throws Error{InvalidModel} when a model fails validate() or contains
// strings the format cannot carry.
std::string serialize(const std::vector<BusinessModel>& models);
std::string serialize(const BusinessModel& model);

} // namespace svc
