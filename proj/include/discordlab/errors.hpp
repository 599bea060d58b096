#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace discordlab {

/// Malformed input text (edge lists, CLI files). Carries the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line_no_(line_no) {}
    int line_no() const { return line_no_; }

private:
    int line_no_;
};

/// Precondition violation on an operation argument.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input that makes a problem ill-posed rather than merely invalid.
class DegenerateInputError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// An iterative scheme ran out of budget. Carries the last iterate and the
/// best bound established so far, so callers can inspect partial progress.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> last_iterate,
                     double best_bound)
        : std::runtime_error(what),
          last_iterate_(std::move(last_iterate)),
          best_bound_(best_bound) {}
    const std::vector<double>& last_iterate() const { return last_iterate_; }
    double best_bound() const { return best_bound_; }

private:
    std::vector<double> last_iterate_;
    double best_bound_;
};

} // namespace discordlab
