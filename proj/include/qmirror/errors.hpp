#pragma once

#include <stdexcept>
#include <string>

namespace qmirror {

// Thrown when a series inversion is attempted on a series whose constant
// term is not a unit in the coefficient ring.
struct NonInvertible : std::domain_error {
    explicit NonInvertible(const std::string& what) : std::domain_error(what) {}
};

// Precondition violation of an algebraic operation (exp of a series with
// nonzero constant term, composition with g(0) != 0, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A sampled set of torus weights hit a vanishing denominator somewhere in
// the localization formulas.  Resample and retry.
struct GenericityError : std::runtime_error {
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

// A pipeline stage received data violating the shape it relies on
// (e.g. a transformed series whose quadratic component is not T^2/2 + c(Q)).
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// The requested operation is not defined for this spec's regime.
struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qmirror
