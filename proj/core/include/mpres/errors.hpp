#pragma once

#include <stdexcept>
#include <string>

namespace mpres {

/// Malformed input: bad files, non-prime moduli, simplices not in a complex.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction was asked to run on data violating its mathematical
/// hypotheses (no fixed vertex, nontrivial action on H_1, ...).
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency assertion failed. Never caused by valid input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mpres
