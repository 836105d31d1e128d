#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "comax/caps.hpp"
#include "comax/graph.hpp"
#include "comax/ring.hpp"

namespace comax {

enum class Outcome { pass, fail, skip };

std::string_view outcome_name(Outcome o);

/// Result of one claim check on one ring or ring pair. A fail always
/// carries a finite witness that can be re-checked against the ring.
struct ClaimReport {
    std::string claim;
    std::vector<std::string> rings;
    Outcome outcome = Outcome::skip;
    std::string detail;
    std::string skip_reason;
    nlohmann::json witness;  // null when absent
    double elapsed_ms = 0;
};

/// Claim ids checked on a single ring, in report order.
const std::vector<std::string>& ring_claim_ids();
/// Claim ids checked on a ring pair.
const std::vector<std::string>& pair_claim_ids();

/// Expands aliases ("P4.7ab" -> P4.7a, P4.7b; "SB-χ" -> SB-chi) and
/// rejects unknown ids with ArgumentError. Empty input means all ring
/// claims.
std::vector<std::string> normalize_claims(const std::vector<std::string>& requested);

/// One report per requested claim id (after normalization).
std::vector<ClaimReport> verify_ring(const RingPtr& ring, const std::vector<std::string>& claims,
                                     const Caps& caps = {});

/// Runs graph-level claims against a caller-supplied core graph instead of
/// the one built from the ring. Used to exercise the report auditor with
/// tampered evidence.
std::vector<ClaimReport> verify_ring_with_core(const RingPtr& ring, const SimpleGraph& core,
                                               const std::vector<std::string>& claims, const Caps& caps = {});

/// T4.4 and C4.6 on a pair.
std::vector<ClaimReport> verify_pair(const RingPtr& left, const RingPtr& right, const Caps& caps = {});

struct AuditResult {
    bool accepted = false;
    std::string reason;
};

/// Re-derives a report from the ring's primitives. A report is accepted
/// only if the recomputed outcome matches and, for failures, the witness
/// re-validates.
AuditResult audit_report(const RingPtr& ring, const ClaimReport& report, const Caps& caps = {});

/// Report entry as JSON. elapsed_ms is included only on request so that
/// persisted reports stay byte-identical across runs.
nlohmann::json to_json(const ClaimReport& report, bool with_timing = false);
ClaimReport claim_report_from_json(const nlohmann::json& doc);

} // namespace comax
