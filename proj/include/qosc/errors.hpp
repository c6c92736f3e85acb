// errors.hpp
// ----------
// Error taxonomy shared by the whole library.  DomainError is the base of all
// mathematically principled refusals; each refusal carries a stable name()
// that the CLI reports verbatim ("DenominatorVanishes: ...").  ParseError is
// separate and means malformed textual input.  The CLI maps ParseError to
// exit code 2 and every DomainError to exit code 1.

#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    explicit DomainError(const std::string& detail)
        : DomainError("DomainError", detail) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// A named refusal is a thin subclass so call sites can both catch precisely
// and let the generic handler print the right label.
#define QOSC_NAMED_ERROR(NAME)                                              \
    class NAME : public DomainError {                                       \
    public:                                                                 \
        explicit NAME(const std::string& detail) : DomainError(#NAME, detail) {} \
    }

QOSC_NAMED_ERROR(ZeroArgument);            // an argument required nonzero was 0
QOSC_NAMED_ERROR(NonzeroConstantTerm);     // partial-sum input has phi_0 != 0
QOSC_NAMED_ERROR(IdenticallyZero);         // root finding over the zero function
QOSC_NAMED_ERROR(StepLimitExceeded);       // rewrite-step budget exhausted
QOSC_NAMED_ERROR(DenominatorVanishes);     // a bracket in a denominator is 0
QOSC_NAMED_ERROR(ZeroDeformation);         // operation needs p != 0
QOSC_NAMED_ERROR(ConstructionInconsistent);// built module fails its relations
QOSC_NAMED_ERROR(DimensionMismatch);       // vector/matrix shape disagreement
QOSC_NAMED_ERROR(SpanTooLarge);            // candidate space above the cap

#undef QOSC_NAMED_ERROR

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& detail, std::size_t position)
        : std::runtime_error("ParseError at position " + std::to_string(position) +
                             ": " + detail),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace qosc
