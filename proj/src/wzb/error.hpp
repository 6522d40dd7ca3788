#pragma once

#include <stdexcept>
#include <string>

namespace wzb {

// All failures carry a short machine-readable kind next to the human message.
// Kinds used across the library:
//   DivisionByZero, PoleAtZero, DependentInput, DimensionMismatch,
//   NotInLattice, UnsupportedFamily, NonIntegerDimension, BadIdeal,
//   NotRelevant, TooLarge, ContextMismatch, WrongFamily, SpectrumMismatch,
//   ZeroPivot, UnexpectedSingularity, Internal
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Violation of a library-level invariant (never expected on valid input).
// The name identifies the invariant for diagnostics.
inline Error internal_error(const std::string& invariant) {
    return Error("Internal", "invariant violated: " + invariant);
}

} // namespace wzb
