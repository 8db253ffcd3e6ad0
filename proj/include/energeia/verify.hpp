#pragma once

#include "energeia/energy.hpp"

#include <string>
#include <vector>

namespace energeia {

enum class TheoremId {
    T1,
    T2,
    T3,
    T4,
    C_gaussbonnet,
    C_quadtrace,
    C_cubic,
    C_signature,
    C_zeta_fe,
    C_isospectral,
    C_cauchybinet,
    C_mckeansinger,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

enum class VerifyStatus { Pass, Fail, Inapplicable };

struct VerificationOutcome {
    TheoremId id;
    VerifyStatus status;
    std::string witness; // serialized mismatch when status == Fail
    std::string reason;  // why a check was inapplicable
};

// Pinned tolerances for the double-precision checks.
inline constexpr double kVerifyRelTol = 1e-9;
inline constexpr double kUnitProductTol = 1e-10;
inline constexpr double kHeatTraceTol = 1e-8;

VerificationOutcome verify_one(const EnergizedComplex& e, TheoremId id);
std::vector<VerificationOutcome> verify_suite(const EnergizedComplex& e,
                                              const std::vector<TheoremId>& suite);

} // namespace energeia
