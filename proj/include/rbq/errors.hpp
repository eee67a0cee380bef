#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbq {

// Lexical or syntactic failure. `offset` is a byte position into the input,
// `expected` describes the token set that would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset, std::string expected)
        : std::runtime_error(msg + " at offset " + std::to_string(offset) +
                             " (expected " + expected + ")"),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// A polynomial was evaluated with a variable left unassigned.
class MissingVariable : public std::runtime_error {
public:
    explicit MissingVariable(const std::string& name)
        : std::runtime_error("no value assigned to variable " + name), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Division by zero, or an evaluation point where a denominator factor vanishes.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Family instantiation with a parameter missing from the assignment.
class MissingParam : public std::runtime_error {
public:
    explicit MissingParam(const std::string& name)
        : std::runtime_error("no value assigned to family parameter " + name), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Family instantiation at a point where a nonvanishing constraint is zero.
class ConstraintViolated : public std::runtime_error {
public:
    explicit ConstraintViolated(const std::string& factor)
        : std::runtime_error("constraint violated: " + factor + " = 0"), factor_(factor) {}

    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

// The transcription corpus file is missing or malformed.
class CorpusLoadError : public std::runtime_error {
public:
    explicit CorpusLoadError(const std::string& msg) : std::runtime_error(msg) {}
};

// The catalog file is missing or malformed.
class CatalogFormatError : public std::runtime_error {
public:
    explicit CatalogFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// A grid search was requested with more candidates than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(unsigned long long candidates, unsigned long long budget)
        : std::runtime_error("candidate count " + std::to_string(candidates) +
                             " exceeds budget " + std::to_string(budget)),
          candidates_(candidates),
          budget_(budget) {}

    unsigned long long candidates() const noexcept { return candidates_; }
    unsigned long long budget() const noexcept { return budget_; }

private:
    unsigned long long candidates_;
    unsigned long long budget_;
};

}  // namespace rbq
