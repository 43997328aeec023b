#pragma once

#include <stdexcept>
#include <string>

namespace srgh {

/** Base class for all domain errors raised by this library. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct NegativeInput : Error {
    explicit NegativeInput(const std::string& msg = "input must be non-negative") : Error(msg) {}
};

/** Arithmetic between quadratic extensions with distinct non-trivial discriminants. */
struct IncompatibleField : Error {
    explicit IncompatibleField(const std::string& msg = "incompatible field discriminants") : Error(msg) {}
};

struct DivisionByZeroPoly : Error {
    explicit DivisionByZeroPoly(const std::string& msg = "polynomial division by zero") : Error(msg) {}
};

/** A root-counting endpoint coincides with a root of the polynomial. */
struct EndpointIsRoot : Error {
    explicit EndpointIsRoot(const std::string& msg = "interval endpoint is a root") : Error(msg) {}
};

/** Parameter tuple fails a structural requirement; `code` is machine-readable. */
struct InfeasibleParams : Error {
    std::string code;
    std::string witness;
    InfeasibleParams(std::string code_, std::string witness_ = "")
        : Error("infeasible parameters: " + code_ + (witness_.empty() ? "" : " (" + witness_ + ")")),
          code(std::move(code_)), witness(std::move(witness_)) {}
};

struct ZeroMu : Error {
    explicit ZeroMu(const std::string& msg = "k1 + r*s = 0") : Error(msg) {}
};

struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string& msg) : Error(msg) {}
};

/** Matrix fails the strong regularity test; carries a witness pair. */
struct NotStronglyRegular : Error {
    std::string code;
    int i, j;
    NotStronglyRegular(std::string code_, int i_, int j_)
        : Error("not strongly regular: " + code_ + " at (" + std::to_string(i_) + "," +
                std::to_string(j_) + ")"),
          code(std::move(code_)), i(i_), j(j_) {}
};

struct FamilyNotApplicable : Error {
    explicit FamilyNotApplicable(const std::string& msg) : Error(msg) {}
};

struct DegenerateQuadratic : Error {
    explicit DegenerateQuadratic(const std::string& msg = "leading coefficient vanishes") : Error(msg) {}
};

struct SingularLinearSolve : Error {
    explicit SingularLinearSolve(const std::string& msg) : Error(msg) {}
};

/** Weight components require square roots from incommensurable fields. */
struct MixedDiscriminants : Error {
    explicit MixedDiscriminants(const std::string& msg) : Error(msg) {}
};

/** A classification disagrees with the closed-form solution list. */
struct OracleMismatch : Error {
    explicit OracleMismatch(const std::string& msg) : Error(msg) {}
};

}  // namespace srgh
