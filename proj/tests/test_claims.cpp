#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "comax/claims.hpp"
#include "comax/errors.hpp"
#include "comax/ring_spec.hpp"
#include "comax/sweep.hpp"
#include "support.hpp"

using namespace comax;

namespace {

const ClaimReport& find(const std::vector<ClaimReport>& reports, const std::string& claim)
{
    for (const auto& r : reports)
        if (r.claim == claim)
            return r;
    throw std::invalid_argument("no report for " + claim);
}

ClaimReport one(const char* spec, const std::string& claim, const Caps& caps = {})
{
    auto reports = verify_ring(build_ring(spec), {claim}, caps);
    REQUIRE(reports.size() == 1);
    return reports.front();
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("comax_claims_" + std::to_string(::getpid()) + "_" + name);
}

/// Core of the ring with every edge at vertex 0 removed, which strands it.
SimpleGraph stranded_core(const RingPtr& ring)
{
    auto core = build_comaximal_graph(*ring, Selector::core);
    for (std::size_t v = 1; v < core.size(); ++v)
        core.remove_edge(0, v);
    return core;
}

} // namespace

TEST_CASE("claim ids and aliases")
{
    CHECK(ring_claim_ids().size() == 17);
    CHECK(normalize_claims({}) == ring_claim_ids());
    CHECK(normalize_claims({"P4.7ab"}) == std::vector<std::string>{"P4.7a", "P4.7b"});
    CHECK(normalize_claims({"SB-χ", "T2.2", "SB-chi"}) == std::vector<std::string>{"SB-chi", "T2.2"});
    CHECK_THROWS_AS(normalize_claims({"T9.9"}), ArgumentError);
}

TEST_CASE("single-ring examples")
{
    const auto t22 = one("Z/12", "T2.2");
    CHECK(t22.outcome == Outcome::pass);
    CHECK(t22.rings == std::vector<std::string>{"Z/12"});

    const auto z30 = verify_ring(build_ring("Z/30"), {"T3.1", "E3.4"});
    CHECK(find(z30, "T3.1").outcome == Outcome::pass);
    CHECK(find(z30, "T3.1").detail.find("diameter=3") != std::string::npos);
    CHECK(find(z30, "E3.4").outcome == Outcome::pass);

    const auto l32 = one("Z/2 x Z/2", "L3.2");
    CHECK(l32.outcome == Outcome::pass);
    CHECK(l32.detail.find("diameter=1") != std::string::npos);
}

TEST_CASE("every ring claim passes on a mixed corpus")
{
    for (const auto* spec : {"Z/2", "Z/9", "Z/12", "Z/30", "Z/60", "Z/2 x Z/2", "Z/2 x Z/8", "Z/4 x Z/4",
                             "GF(2^2) x Z/3", "SQZ(2,2) x Z/2 x Z/3", "Z/2[x]/(x^2) x GF(2^2)", "GF(3^2)",
                             "Z/2 x Z/2 x Z/2 x Z/2", "Z/210"}) {
        CAPTURE(spec);
        for (const auto& r : verify_ring(build_ring(spec), {})) {
            CAPTURE(r.claim);
            CAPTURE(r.detail);
            CHECK(r.outcome != Outcome::fail);
            if (r.claim == "P3.3a") {
                CHECK(r.outcome == Outcome::skip);
                CHECK(r.skip_reason == "vacuous: finite => semi-local => local");
            } else if (r.claim != "E3.4") {
                CHECK(r.outcome == Outcome::pass);
            }
        }
    }
}

TEST_CASE("E3.4 applies to Z/n only and covers all three cases")
{
    CHECK(one("Z/2 x Z/2", "E3.4").outcome == Outcome::skip);
    // Z/2 x Z/3 has cyclic additive group, so it is Z/6 and in scope.
    CHECK(one("Z/2 x Z/3", "E3.4").outcome == Outcome::pass);
    CHECK(one("Z/27", "E3.4").outcome == Outcome::pass);
    CHECK(one("Z/27", "E3.4").detail.find("diameter=empty") != std::string::npos);
    CHECK(one("Z/45", "E3.4").detail.find("diameter=2") != std::string::npos);
    CHECK(one("Z/105", "E3.4").detail.find("diameter=3") != std::string::npos);
}

TEST_CASE("P2.4b: dominating core vertex forces Z/2 x F")
{
    const auto proved = one("Z/2 x GF(2^2)", "P2.4b");
    CHECK(proved.outcome == Outcome::pass);
    CHECK(proved.detail.rfind("proved", 0) == 0);
    const auto consistent = one("Z/2 x GF(2^5)", "P2.4b");
    CHECK(consistent.outcome == Outcome::pass);
    CHECK(consistent.detail.rfind("consistent", 0) == 0);
    CHECK(one("Z/3 x Z/3", "P2.4b").detail.rfind("vacuous", 0) == 0);
}

TEST_CASE("claims above the exact-solver cap are skipped, not approximated")
{
    Caps small;
    small.max_exact_vertices = 10;
    const auto r = one("Z/30", "SB-chi", small);
    CHECK(r.outcome == Outcome::skip);
    CHECK(r.skip_reason.find("cap") != std::string::npos);
    CHECK(one("Z/30", "P2.3", small).outcome == Outcome::skip);
}

TEST_CASE("pair examples")
{
    const auto a = verify_pair(build_ring("Z/2 x Z/8"), build_ring("Z/4 x Z/4"));
    CHECK(find(a, "T4.4").outcome == Outcome::pass);
    CHECK(find(a, "T4.4").detail.find("rings not isomorphic") != std::string::npos);
    CHECK(find(a, "C4.6").outcome == Outcome::skip);

    const auto b = verify_pair(build_ring("Z/30"), build_ring("Z/2 x Z/3 x Z/5"));
    CHECK(find(b, "C4.6").outcome == Outcome::pass);
    CHECK(find(b, "C4.6").detail == "graph_iso=true ring_iso=true");

    const auto c = verify_pair(build_ring("Z/4"), build_ring("Z/2[x]/(x^2)"));
    CHECK(find(c, "T4.4").outcome == Outcome::pass);
    CHECK(find(c, "C4.6").outcome == Outcome::skip);
    CHECK(find(c, "C4.6").skip_reason.find("neither ring is reduced") != std::string::npos);

    const auto d = verify_pair(build_ring("Z/6"), build_ring("Z/2 x Z/2 x Z/2"));
    CHECK(find(d, "C4.6").outcome == Outcome::pass);
    const auto e = verify_pair(build_ring("GF(2^2) x Z/2"), build_ring("Z/2 x Z/2 x Z/2"));
    CHECK(find(e, "C4.6").outcome == Outcome::pass);
    CHECK(find(e, "C4.6").detail == "graph_iso=false ring_iso=false");
}

TEST_CASE("a tampered core fails T3.1 and the auditor rejects the report")
{
    const auto ring = build_ring("Z/30");
    const auto forged = verify_ring_with_core(ring, stranded_core(ring), {"T3.1"}).front();
    REQUIRE(forged.outcome == Outcome::fail);
    REQUIRE(forged.witness.contains("pair"));
    const auto verdict = audit_report(ring, forged);
    CHECK_FALSE(verdict.accepted);
    CHECK(verdict.reason.find("T3.1") != std::string::npos);

    const auto genuine = verify_ring(ring, {"T3.1"}).front();
    CHECK(audit_report(ring, genuine).accepted);
}

TEST_CASE("the auditor rejects flipped outcomes and foreign reports")
{
    const auto ring = build_ring("Z/12");
    for (auto report : verify_ring(ring, {})) {
        CAPTURE(report.claim);
        CHECK(audit_report(ring, report).accepted);
        if (report.outcome == Outcome::pass) {
            report.outcome = Outcome::fail;
            report.witness = {{"element", 1}};
            CHECK_FALSE(audit_report(ring, report).accepted);
        }
    }
    auto other = verify_ring(build_ring("Z/30"), {"T2.2"}).front();
    CHECK_FALSE(audit_report(ring, other).accepted);
    other.rings = {"Z/12"};
    other.outcome = Outcome::fail;
    other.witness = nullptr;
    CHECK_FALSE(audit_report(ring, other).accepted);
}

TEST_CASE("report JSON round trip")
{
    const auto reports = verify_ring(build_ring("Z/12"), {"T2.2", "P3.3a"});
    for (const auto& r : reports) {
        const auto back = claim_report_from_json(to_json(r));
        CHECK(back.claim == r.claim);
        CHECK(back.rings == r.rings);
        CHECK(back.outcome == r.outcome);
        CHECK(back.detail == r.detail);
        CHECK(back.skip_reason == r.skip_reason);
        CHECK_FALSE(to_json(r).contains("elapsed_ms"));
        CHECK(to_json(r, true).contains("elapsed_ms"));
    }
    CHECK_THROWS_AS(claim_report_from_json(nlohmann::json{{"claim", "T2.2"}}), ArgumentError);
}

TEST_CASE("family enumeration")
{
    SweepOptions zn;
    zn.max = 10;
    CHECK(family_members(zn).size() == 9);
    CHECK(family_members(zn).front() == "Z/2");

    SweepOptions products;
    products.family = Family::products;
    products.factors = {"Z/2", "Z/3"};
    products.max = 12;
    products.max_factors = 3;
    // Multisets of size <= 3 over {2,3} with product <= 12.
    CHECK(family_members(products) == std::vector<std::string>{"Z/2", "Z/2 x Z/2", "Z/2 x Z/2 x Z/2",
                                                               "Z/2 x Z/2 x Z/3", "Z/2 x Z/3", "Z/3",
                                                               "Z/3 x Z/3"});
}

TEST_CASE("sweeps: zero failures, deterministic output, negative control")
{
    SweepOptions zn;
    zn.max = 60;
    const auto a = run_sweep(zn);
    CHECK(a.failed == 0);
    CHECK(a.passed > 0);
    SweepOptions serial = zn;
    serial.jobs = 1;
    CHECK(to_json(a).dump() == to_json(run_sweep(zn)).dump());
    CHECK(to_json(a).dump() == to_json(run_sweep(serial)).dump());
    const auto doc = to_json(a);
    CHECK(doc["tool_version"] == tool_version);
    CHECK(doc["caps"]["max_exact_vertices"] == 512);
    CHECK(doc["summary"]["fail"] == 0);

    // Corpus with one good ring and one corrupted table.
    auto bad = table_ring_to_json(*build_ring("Z/4"));
    bad["mul"][2 * 4 + 3] = 1;
    bad["mul"][3 * 4 + 2] = 1;
    const auto table = temp_path("bad.json");
    std::ofstream(table) << bad.dump();
    const auto corpus = temp_path("corpus.txt");
    std::ofstream(corpus) << "# negative control\nZ/6\n\ntable:" << table.string() << "\n";
    SweepOptions c;
    c.family = Family::corpus;
    c.corpus_path = corpus.string();
    const auto report = run_sweep(c);
    CHECK(report.failed == 1);
    const auto& failure = find(report.entries, "RING");
    CHECK(failure.outcome == Outcome::fail);
    CHECK(failure.witness["elements"].size() == 3);
    CHECK_FALSE(failure.witness["axiom"].get<std::string>().empty());
    std::filesystem::remove(table);
    std::filesystem::remove(corpus);

    SweepOptions missing;
    missing.family = Family::corpus;
    missing.corpus_path = temp_path("nope.txt").string();
    CHECK_THROWS(run_sweep(missing));
}
