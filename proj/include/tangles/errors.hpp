#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : Error { using Error::Error; };
struct NonzeroConstantTerm : Error { using Error::Error; };
struct NonUnitLeadingCoefficient : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct VariableMismatch : Error { using Error::Error; };
struct DivisibilityFailure : Error { using Error::Error; };
struct AnchorMismatch : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };
struct WrongLegCount : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoRootInBracket : Error { using Error::Error; };
struct AmbiguousRoot : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

struct SingularLinearization : Error {
    int order;
    explicit SingularLinearization(int k, const std::string& detail = "")
        : Error("singular linearization at order " + std::to_string(k) + (detail.empty() ? "" : ": " + detail)),
          order(k) {}
};

} // namespace tangles
