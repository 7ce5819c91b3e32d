#pragma once

#include <stdexcept>
#include <string>

namespace eqsp {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class DegenerateSimplex : public Error {
public:
    explicit DegenerateSimplex(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class NegativeEpsilon : public Error {
public:
    explicit NegativeEpsilon(const std::string& what) : Error(what) {}
};

class FaceNotContained : public Error {
public:
    explicit FaceNotContained(const std::string& what) : Error(what) {}
};

// An iterative projection or intersection routine exceeded its cap without
// meeting its residual target.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, long iterations, double residual)
        : Error(what), iterations(iterations), residual(residual) {}
    long iterations;
    double residual;
};

class BisectionStalled : public Error {
public:
    explicit BisectionStalled(const std::string& what) : Error(what) {}
};

class InvalidFamily : public Error {
public:
    explicit InvalidFamily(const std::string& what) : Error(what) {}
};

class NotACovering : public Error {
public:
    explicit NotACovering(const std::string& what) : Error(what) {}
};

class ContainmentViolated : public Error {
public:
    explicit ContainmentViolated(const std::string& what) : Error(what) {}
};

// A member of a face covering family is not at the expected common distance.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(const std::string& what, int index, double distance)
        : Error(what), index(index), distance(distance) {}
    int index;        // 0-based body index
    double distance;  // measured distance of the point to that body
};

class EnumerationCapExceeded : public Error {
public:
    explicit EnumerationCapExceeded(const std::string& what) : Error(what) {}
};

class GridTooLarge : public Error {
public:
    explicit GridTooLarge(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace eqsp
