#ifndef UNIMOD_ERRORS_HPP
#define UNIMOD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unimod {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph, measure or kernel input.
class ParseError : public Error {
public:
    using Error::Error;
};

// Vertex index out of range, bad parameter, etc.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

class SizeGuardError : public Error {
public:
    SizeGuardError(std::size_t vertices, std::size_t limit)
        : Error("graph has " + std::to_string(vertices) + " vertices, size guard is " +
                std::to_string(limit)),
          vertices_(vertices), limit_(limit) {}

    std::size_t vertices() const { return vertices_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t vertices_;
    std::size_t limit_;
};

// An operation was called on an input that violates its precondition,
// e.g. a Radon-Nikodym cocycle of a measure that is not quasi-invariant.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace unimod

#endif // UNIMOD_ERRORS_HPP
