#include "comax/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <omp.h>

#include "comax/errors.hpp"
#include "comax/ring_spec.hpp"

namespace comax {

const std::vector<std::string>& default_product_factors()
{
    static const std::vector<std::string> factors = {"Z/2",     "Z/3",          "Z/4",          "Z/5",
                                                     "Z/8",     "Z/9",          "GF(2^2)",      "Z/2[x]/(x^2)",
                                                     "SQZ(2,2)"};
    return factors;
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void product_members(const std::vector<std::string>& factors, const std::vector<std::size_t>& sizes,
                     std::size_t max_factors, std::size_t min, std::size_t max, std::vector<std::size_t>& chosen,
                     std::size_t start, std::size_t size, std::vector<std::string>& out)
{
    if (!chosen.empty() && size >= min) {
        std::string text;
        for (auto i : chosen)
            text += (text.empty() ? "" : " x ") + factors[i];
        out.push_back(text);
    }
    if (chosen.size() == max_factors)
        return;
    for (std::size_t i = start; i < factors.size(); ++i) {
        if (size * sizes[i] > max)
            continue;
        chosen.push_back(i);
        product_members(factors, sizes, max_factors, min, max, chosen, i, size * sizes[i], out);
        chosen.pop_back();
    }
}

ClaimReport build_failure(const std::string& spec, Outcome outcome, std::string detail, nlohmann::json witness)
{
    ClaimReport r;
    r.claim = "RING";
    r.rings = {spec};
    r.outcome = outcome;
    if (outcome == Outcome::skip)
        r.skip_reason = detail;
    r.detail = std::move(detail);
    r.witness = std::move(witness);
    return r;
}

} // namespace

std::vector<std::string> family_members(const SweepOptions& options)
{
    std::vector<std::string> out;
    switch (options.family) {
    case Family::zn:
        for (std::size_t n = std::max<std::size_t>(options.min, 2); n <= options.max; ++n)
            out.push_back("Z/" + std::to_string(n));
        break;
    case Family::products: {
        const auto& factors = options.factors.empty() ? default_product_factors() : options.factors;
        std::vector<std::size_t> sizes;
        for (const auto& f : factors)
            sizes.push_back(spec_size(parse_spec(f)));
        std::vector<std::size_t> chosen;
        product_members(factors, sizes, options.max_factors, options.min, options.max, chosen, 0, 1, out);
        break;
    }
    case Family::corpus: {
        std::ifstream in(options.corpus_path);
        if (!in)
            throw std::runtime_error("cannot read corpus file '" + options.corpus_path + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (!line.empty())
                out.push_back(line);
        }
        break;
    }
    }
    return out;
}

SweepReport run_sweep(const SweepOptions& options)
{
    std::vector<std::string> ring_claims, pair_claims;
    if (options.claims.empty()) {
        ring_claims = ring_claim_ids();
        pair_claims = pair_claim_ids();
    } else {
        const auto& pairs = pair_claim_ids();
        std::vector<std::string> requested_ring;
        for (const auto& id : options.claims) {
            if (std::find(pairs.begin(), pairs.end(), id) != pairs.end()) {
                if (std::find(pair_claims.begin(), pair_claims.end(), id) == pair_claims.end())
                    pair_claims.push_back(id);
            } else {
                requested_ring.push_back(id);
            }
        }
        if (!requested_ring.empty())
            ring_claims = normalize_claims(requested_ring);
    }

    const auto members = family_members(options);
    std::vector<RingPtr> rings(members.size());
    std::vector<std::vector<ClaimReport>> per_ring(members.size());
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& spec = members[i];
        try {
            rings[i] = build_ring(spec, options.caps.max_ring_size);
        } catch (const TableError& e) {
            per_ring[i].push_back(build_failure(spec, Outcome::fail, e.what(),
                                                {{"axiom", e.axiom()}, {"elements", e.witness()}}));
            continue;
        } catch (const ResourceError& e) {
            per_ring[i].push_back(build_failure(spec, Outcome::skip, e.what(), nullptr));
            continue;
        } catch (const std::exception& e) {
            per_ring[i].push_back(build_failure(spec, Outcome::fail, e.what(), {{"error", e.what()}}));
            continue;
        }
        if (!ring_claims.empty())
            per_ring[i] = verify_ring(rings[i], ring_claims, options.caps);
    }

    // Pairs of equal size; graphs on different vertex counts are never
    // isomorphic, which makes both pair claims vacuous there.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (!pair_claims.empty())
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (rings[i] && rings[j] && rings[i]->size() == rings[j]->size())
                    pairs.emplace_back(i, j);
    std::vector<std::vector<ClaimReport>> per_pair(pairs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto reports = verify_pair(rings[pairs[k].first], rings[pairs[k].second], options.caps);
        for (auto& r : reports)
            if (std::find(pair_claims.begin(), pair_claims.end(), r.claim) != pair_claims.end())
                per_pair[k].push_back(std::move(r));
    }

    SweepReport report;
    report.caps = options.caps;
    for (auto* group : {&per_ring, &per_pair})
        for (auto& reports : *group)
            for (auto& r : reports)
                report.entries.push_back(std::move(r));
    for (const auto& r : report.entries) {
        switch (r.outcome) {
        case Outcome::pass:
            ++report.passed;
            break;
        case Outcome::fail:
            ++report.failed;
            break;
        case Outcome::skip:
            ++report.skipped;
            break;
        }
    }
    return report;
}

nlohmann::json to_json(const Caps& caps)
{
    return {{"max_ring_size", caps.max_ring_size},
            {"max_exact_vertices", caps.max_exact_vertices},
            {"max_ringiso_size", caps.max_ringiso_size},
            {"max_iso_vertices", caps.max_iso_vertices},
            {"max_certificate_vertices", caps.max_certificate_vertices}};
}

nlohmann::json to_json(const SweepReport& report, bool with_timing)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& r : report.entries)
        entries.push_back(to_json(r, with_timing));
    return {{"tool_version", tool_version},
            {"caps", to_json(report.caps)},
            {"entries", std::move(entries)},
            {"summary", {{"pass", report.passed}, {"fail", report.failed}, {"skip", report.skipped}}}};
}

} // namespace comax
