#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "svc/model.hpp"

namespace svc {

enum class DiagnosticCode {
    InvalidStakeholderId,
    DuplicateStakeholder,
    SelfLoopNonProcess,
    ProcessNotSelfLoop,
    UndeclaredStakeholder,
    BadTimestep,
    EmptyProcessName,
    EmptyDataSubject,
};

// SCREAMING_SNAKE spelling used in CLI diagnostics, e.g. SELF_LOOP_NON_PROCESS.
const char* to_string(DiagnosticCode code);

struct Diagnostic {
    DiagnosticCode code;
    std::string message;
    // Offending element, as an index into the model's stakeholder or edge list.
    std::optional<std::size_t> stakeholder_index;
    std::optional<std::size_t> edge_index;
};

// Checks every domain invariant; an empty result means the model is valid.
// The model itself is never modified.
std::vector<Diagnostic> validate(const BusinessModel& model);

} // namespace svc
