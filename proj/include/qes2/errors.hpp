#pragma once

#include <stdexcept>
#include <string>

namespace qes2 {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter is outside its mathematical domain (e.g. m = 0).
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

// m is within the guard band of a branch point of the closed forms but not on it.
class AmbiguousBranch : public Error {
public:
    explicit AmbiguousBranch(const std::string& what) : Error(what) {}
};

// Evaluation point outside the domain of the selected closed form or chart.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Operation does not apply to the given parameter class.
class NotApplicable : public Error {
public:
    explicit NotApplicable(const std::string& what) : Error(what) {}
};

// F has no positive zero (m <= 0).
class NoPositiveRoot : public Error {
public:
    explicit NoPositiveRoot(const std::string& what) : Error(what) {}
};

// Asymptotic slope requested outside the linear-growth branch.
class UnsupportedAsymptoticBranch : public Error {
public:
    explicit UnsupportedAsymptoticBranch(const std::string& what) : Error(what) {}
};

} // namespace qes2
