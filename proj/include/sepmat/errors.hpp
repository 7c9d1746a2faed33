#ifndef SEPMAT_ERRORS_HPP
#define SEPMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepmat {

// Three points were found collinear (or coincident) where general position
// is required. The message names the offending indices or coordinates.
class GeneralPositionError : public std::runtime_error {
public:
    explicit GeneralPositionError(const std::string& what)
        : std::runtime_error(what) {}
};

// Malformed text or binary input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what)
        : std::runtime_error(what) {}
};

// The Orchard parity relation of a matrix is not an equivalence with at
// most two classes, so the matrix cannot come from a configuration.
class OrchardError : public std::runtime_error {
public:
    explicit OrchardError(const std::string& what)
        : std::runtime_error(what) {}
};

// A structural impossibility for genuine separating matrices, e.g. two
// distinct triples both attaining the size-3 hull target.
class InconsistentMatrixError : public std::runtime_error {
public:
    explicit InconsistentMatrixError(const std::string& what)
        : std::runtime_error(what) {}
};

// The hull search ran out of subset sizes without any candidate.
class SearchExhaustedError : public std::runtime_error {
public:
    explicit SearchExhaustedError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace sepmat

#endif
