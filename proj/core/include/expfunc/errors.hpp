#pragma once

#include <stdexcept>
#include <string>

namespace expfunc {

/// Input violates a mathematical precondition (e.g. a non-subordinator where
/// a subordinator is required, a parameter outside its admissible range).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to reach its target accuracy. Carries a
/// one-line diagnostic naming the offending quantity or subinterval.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A process/law spec document could not be parsed (unknown field, missing
/// field, malformed value).
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace expfunc
