#pragma once

#include <stdexcept>
#include <string>

namespace wpb {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by a series that is zero modulo its truncation order.
struct DivisionByZeroSeries : Error {
    explicit DivisionByZeroSeries(const std::string& msg = "division by zero series")
        : Error(msg) {}
};

// Constant-term extraction from a series with a pole at w = 0.
struct PoleAtZeroNome : Error {
    explicit PoleAtZeroNome(const std::string& msg = "pole at zero nome")
        : Error(msg) {}
};

// An operation would retain fewer significant orders than the floor allows.
struct InsufficientTruncation : Error {
    explicit InsufficientTruncation(const std::string& msg = "insufficient truncation")
        : Error(msg) {}
};

// A stated parameter constraint (balance, base match, m-formula) is violated.
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg = "constraint violation")
        : Error(msg) {}
};

// A required declared square root is absent or fails validation.
struct MissingRoot : Error {
    explicit MissingRoot(const std::string& msg = "missing declared root")
        : Error(msg) {}
};

// A factorial rewriting would need a negative-length product.
struct IndexRangeError : Error {
    explicit IndexRangeError(const std::string& msg = "index out of range")
        : Error(msg) {}
};

// The point sampler ran out of attempts at a non-degenerate point.
struct SamplingExhausted : Error {
    explicit SamplingExhausted(const std::string& msg = "sampling exhausted")
        : Error(msg) {}
};

}  // namespace wpb
