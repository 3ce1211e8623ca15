#pragma once

#include <stdexcept>
#include <string>

namespace nzsh {

// Base for all recoverable library errors. `kind()` is a stable tag the
// CLI maps to exit codes and messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Error cayley_invalid(const std::string& why) { return Error("CayleyInvalid", why); }
inline Error no_subgroup(const std::string& why) { return Error("NoSubgroup", why); }
inline Error bad_params(const std::string& why) { return Error("BadParams", why); }
inline Error not_square(const std::string& why) { return Error("NotSquare", why); }
inline Error unsatisfiable(const std::string& why) { return Error("Unsatisfiable", why); }
inline Error odd_lambda_with_involution(const std::string& why) { return Error("OddLambdaWithInvolution", why); }
inline Error size_mismatch(const std::string& why) { return Error("SizeMismatch", why); }
inline Error family_bound_violation(const std::string& why) { return Error("FamilyBoundViolation", why); }
inline Error no_plan(const std::string& why) { return Error("NoPlan", why); }
inline Error not_nice(const std::string& why) { return Error("NotNice", why); }
inline Error plan_inconsistent(const std::string& why) { return Error("PlanInconsistent", why); }
inline Error regime_violation(const std::string& why) { return Error("RegimeViolation", why); }
inline Error retries_exhausted(const std::string& why) { return Error("RetriesExhausted", why); }
inline Error search_too_large(const std::string& why) { return Error("SearchTooLarge", why); }
inline Error not_found(const std::string& why) { return Error("NotFound", why); }
inline Error invariant_violation(const std::string& why) { return Error("InvariantViolation", why); }

} // namespace nzsh
