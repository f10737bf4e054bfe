#pragma once

#include <stdexcept>
#include <string>

namespace dualpath {

/// Broad failure classes. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
    Usage = 1,
    Validation = 2,
    Audit = 3,
    Incomplete = 4,
    Internal = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Input rejected: malformed diagram, bad parameter, unknown face, ...
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

/// A wiring diagram violating the reduced-word invariants.
class MalformedDiagram : public ValidationError {
public:
    MalformedDiagram(std::size_t crossing_index, const std::string& what)
        : ValidationError("malformed diagram at crossing " + std::to_string(crossing_index) + ": " + what),
          crossing_index_(crossing_index) {}
    std::size_t crossing_index() const noexcept { return crossing_index_; }

private:
    std::size_t crossing_index_;
};

/// One of the runtime-checked proof conditions failed. Carries the event trace.
class AuditFailure : public Error {
public:
    AuditFailure(const std::string& what, std::string trace)
        : Error(ErrorKind::Audit, what), trace_(std::move(trace)) {}
    const std::string& trace() const noexcept { return trace_; }

private:
    std::string trace_;
};

/// A structural property that the construction relies on does not hold.
class InternalInvariantError : public Error {
public:
    explicit InternalInvariantError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

}  // namespace dualpath
