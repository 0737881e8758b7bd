#ifndef SKRANK_CORE_ERROR_HPP_
#define SKRANK_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace skrank {

/// Base class for every error raised by the library. Callers that only care
/// about "something in skrank failed" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (mismatched candidate sets,
/// negative weights, k out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string &source, std::size_t line, const std::string &what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An iterative method did not reach its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string &what, double residual)
        : Error(what + " (last residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace skrank

#endif // SKRANK_CORE_ERROR_HPP_
