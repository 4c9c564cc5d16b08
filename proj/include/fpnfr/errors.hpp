#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpnfr {

/// One invariant violation found while validating input data. Violations are
/// data, not failures: validation collects all of them instead of throwing.
struct Violation {
    std::string field;
    std::string message;
};

/// Thrown when a documented precondition is broken. Carries the offending
/// field, the value it had, and the legal range so callers can render an
/// actionable message.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string field, std::string value, std::string legal_range)
        : std::runtime_error(field + " = " + value + " outside legal range " + legal_range),
          field_(std::move(field)),
          value_(std::move(value)),
          legal_range_(std::move(legal_range)) {}

    const std::string& field() const { return field_; }
    const std::string& value() const { return value_; }
    const std::string& legal_range() const { return legal_range_; }

private:
    std::string field_;
    std::string value_;
    std::string legal_range_;
};

/// Thrown by operations whose precondition is a fully valid project; carries
/// the complete violation list, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::runtime_error(Summarize(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string Summarize(const std::vector<Violation>& violations) {
        std::string out = "validation failed (" + std::to_string(violations.size()) + " violation(s))";
        for (const auto& v : violations) {
            out += "\n  " + v.field + ": " + v.message;
        }
        return out;
    }

    std::vector<Violation> violations_;
};

/// Thrown on malformed input files. `location` names the line or field that
/// failed (e.g. "project.json:12" or "nfr.security").
class ParseError : public std::runtime_error {
public:
    ParseError(std::string location, std::string message)
        : std::runtime_error(location + ": " + message),
          location_(std::move(location)),
          detail_(std::move(message)) {}

    const std::string& location() const { return location_; }
    const std::string& detail() const { return detail_; }

private:
    std::string location_;
    std::string detail_;
};

}  // namespace fpnfr
