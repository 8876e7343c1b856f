#pragma once

#include <stdexcept>
#include <string>

namespace svc {

enum class ErrorCode {
    NotFound,
    KindConflict,
    InvalidModel,
    EmptyCorpus,
    EmptyGraph,
    TooSmall,
    NoEdges,
    NoQualifyingDegrees,
    BadAliasMap,
    Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace svc
