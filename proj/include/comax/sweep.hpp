#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "comax/caps.hpp"
#include "comax/claims.hpp"

namespace comax {

inline constexpr const char* tool_version = "comax 1.0.0";

enum class Family { zn, products, corpus };

struct SweepOptions {
    Family family = Family::zn;
    /// Largest ring size enumerated (zn: largest n; products: largest |R|).
    std::size_t max = 200;
    std::size_t min = 2;
    /// Factor specs for the products family.
    std::vector<std::string> factors;
    std::size_t max_factors = 3;
    /// One spec per line; blank lines and '#' comments ignored.
    std::string corpus_path;
    /// Ring and pair claim ids; empty means every ring and pair claim.
    std::vector<std::string> claims;
    Caps caps;
    /// Worker threads; 0 lets OpenMP decide.
    int jobs = 0;
};

/// Spec texts of the family members in sweep order.
std::vector<std::string> family_members(const SweepOptions& options);

struct SweepReport {
    Caps caps;
    std::vector<ClaimReport> entries;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

/// Ring claims per member, then pair claims over every unordered pair of
/// equal-size members. Rings that fail to build are reported under claim
/// "RING" with the error as witness.
SweepReport run_sweep(const SweepOptions& options);

/// {tool_version, caps, entries, summary: {pass, fail, skip}}.
nlohmann::json to_json(const SweepReport& report, bool with_timing = false);
nlohmann::json to_json(const Caps& caps);

/// The default factor set for the products family.
const std::vector<std::string>& default_product_factors();

} // namespace comax
