#ifndef glcs_errors_hpp
#define glcs_errors_hpp

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace glcs {

// Base for every error raised by the library.
class GlcsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violation of a LabeledGraph invariant while building one.
class InvalidGraph : public GlcsError {
public:
    using GlcsError::GlcsError;
};

// Structural errors: the input shape is unsupported by the requested operation.
class StructuralError : public GlcsError {
public:
    using GlcsError::GlcsError;
};

class CyclicGraph : public StructuralError {
public:
    CyclicGraph() : StructuralError("graph contains a directed cycle") {}
    using StructuralError::StructuralError;
};

class CyclicConstraint : public StructuralError {
public:
    CyclicConstraint() : StructuralError("constraint graph must be acyclic") {}
};

class EmptyGraph : public StructuralError {
public:
    EmptyGraph() : StructuralError("graph has no vertices") {}
};

// The brute-force oracle hit an enumeration cap and refuses to answer.
class TooLarge : public GlcsError {
public:
    using GlcsError::GlcsError;
};

class InfeasibleShape : public GlcsError {
public:
    using GlcsError::GlcsError;
};

class ParseError : public GlcsError {
public:
    ParseError(std::size_t line, std::string reason)
        : GlcsError("line " + std::to_string(line) + ": " + reason),
          line_(line), reason_(std::move(reason)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

}

#endif /* glcs_errors_hpp */
