#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rinar {

/// Machine-readable validation problem. `code` is a stable identifier
/// (e.g. "BetaOutOfRange"), `message` is human-readable.
struct ValidationIssue {
    std::string code;
    std::string message;
};

class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<ValidationIssue> issues)
        : std::invalid_argument(format(issues)), issues_(std::move(issues)) {}

    const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

private:
    static std::string format(const std::vector<ValidationIssue>& issues) {
        std::string out = "invalid configuration:";
        for (const auto& issue : issues) {
            out += " [" + issue.code + "] " + issue.message + ";";
        }
        return out;
    }

    std::vector<ValidationIssue> issues_;
};

class RejectionBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TruncationTooCoarse : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ModulusViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class QuadratureNotConverged : public std::runtime_error {
public:
    QuadratureNotConverged(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

class BetaNotInStableRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegenerateScale : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class TooFewSamples : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GridMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace rinar
