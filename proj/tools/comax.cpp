// Command-line front end: ring inspection, graph export, invariants,
// isomorphism queries, claim verification and family sweeps.
//
// Exit codes: 0 success, 1 a claim failed or an iso query answered "no",
// 2 usage or parse error, 3 a cap was exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "comax/claims.hpp"
#include "comax/errors.hpp"
#include "comax/export.hpp"
#include "comax/graph_iso.hpp"
#include "comax/ring_iso.hpp"
#include "comax/ring_ops.hpp"
#include "comax/ring_spec.hpp"
#include "comax/solvers.hpp"
#include "comax/sweep.hpp"

using namespace comax;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_capability = 3;

/// Thrown for bad input detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecArg {
    std::string text;
    RingSpec spec;
};

SpecArg parse_arg(const std::string& text)
{
    try {
        return {text, parse_spec(text)};
    } catch (const ParseError& e) {
        throw UsageError("cannot parse ring spec \"" + text + "\": " + e.what());
    }
}

RingPtr build(const SpecArg& arg, const Caps& caps)
{
    try {
        return build_ring(arg.spec, caps.max_ring_size);
    } catch (const TableError& e) {
        throw UsageError(arg.text + ": " + e.what());
    }
}

std::string join_labels(const Ring& ring, const std::vector<Element>& elements)
{
    std::string out;
    for (auto e : elements)
        out += (out.empty() ? "" : " ") + ring.label(e);
    return out;
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << content;
}

std::string dump(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

// --- ring ------------------------------------------------------------------

int cmd_ring(const SpecArg& arg, const std::string& format, const Caps& caps)
{
    const auto ring = build(arg, caps);
    const auto& maximal = ring->maximal_ideals();
    const auto residues = residue_field_sizes(*ring);
    const auto clean = is_clean(*ring).clean;
    const auto radical = ring->jacobson_radical().elements();

    if (format == "json") {
        nlohmann::json max_json = nlohmann::json::array();
        for (const auto& m : maximal)
            max_json.push_back({{"size", m.size()}, {"residue_field", ring->size() / m.size()}});
        nlohmann::json j = {{"ring", ring->name()},
                            {"size", ring->size()},
                            {"characteristic", ring->characteristic()},
                            {"units", ring->unit_count()},
                            {"jacobson_radical", radical},
                            {"maximal_ideals", max_json},
                            {"residue_fields", residues},
                            {"idempotents", ring->idempotents()},
                            {"nilpotents", ring->nilpotent_count()},
                            {"clean", clean}};
        std::cout << dump(j);
        return exit_ok;
    }
    std::cout << "ring: " << ring->name() << "\n"
              << "size: " << ring->size() << "\n"
              << "characteristic: " << ring->characteristic() << "\n"
              << "units: " << ring->unit_count() << "\n"
              << "jacobson radical (" << radical.size() << "): " << join_labels(*ring, radical) << "\n"
              << "maximal ideals: " << maximal.size() << "\n";
    for (std::size_t i = 0; i < maximal.size(); ++i)
        std::cout << "  M" << i + 1 << ": size " << maximal[i].size() << ", residue field "
                  << ring->size() / maximal[i].size() << "\n";
    const auto& idempotents = ring->idempotents();
    std::cout << "idempotents (" << idempotents.size() << "): " << join_labels(*ring, idempotents) << "\n"
              << "reduced: " << (ring->is_reduced() ? "true" : "false") << "\n"
              << "clean: " << (clean ? "true" : "false") << "\n";
    return exit_ok;
}

// --- graph / invariants ----------------------------------------------------

Selector selector_from(const std::string& name)
{
    const auto s = parse_selector(name);
    if (!s)
        throw UsageError("unknown selector '" + name + "' (expected full, units, nonunits or core)");
    return *s;
}

int cmd_graph(const SpecArg& arg, const std::string& select, const std::string& format, const std::string& out,
              const Caps& caps)
{
    const auto ring = build(arg, caps);
    const auto g = build_comaximal_graph(*ring, selector_from(select));
    write_output(out, format == "json" ? dump(to_json(g)) : to_dot(g));
    return exit_ok;
}

std::string parts_text(const std::vector<std::vector<std::size_t>>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : ",") + std::to_string(p.size());
    return out;
}

int cmd_invariants(const SpecArg& arg, const std::string& select, const std::string& format, const Caps& caps)
{
    const auto ring = build(arg, caps);
    const auto g = build_comaximal_graph(*ring, selector_from(select));
    const auto m = metrics(g);
    const auto structure = multipartite_structure(g);
    const auto clique = clique_number(g, caps.max_exact_vertices);
    const auto chromatic = chromatic_number(g, caps.max_exact_vertices);

    std::optional<std::vector<std::vector<std::size_t>>> bipartite;
    if (structure.bipartite)
        bipartite = std::vector<std::vector<std::size_t>>{structure.bipartite->first, structure.bipartite->second};

    if (format == "json") {
        auto labelled = [&](const std::vector<std::vector<std::size_t>>& parts) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& p : parts) {
                nlohmann::json part = nlohmann::json::array();
                for (auto v : p)
                    part.push_back(g.labels()[v]);
                out.push_back(part);
            }
            return out;
        };
        nlohmann::json j = {{"ring", ring->name()},
                            {"select", selector_name(selector_from(select))},
                            {"vertices", g.size()},
                            {"edges", g.edge_count()},
                            {"connected", m.connected},
                            {"components", m.components},
                            {"diameter", m.diameter_kind == GraphMetrics::Diameter::finite
                                             ? nlohmann::json(m.diameter)
                                             : nlohmann::json(m.diameter_text())},
                            {"clique", clique.size},
                            {"chromatic", chromatic.colors},
                            {"bipartite", bipartite ? labelled(*bipartite) : nlohmann::json(nullptr)},
                            {"complete_multipartite", structure.complete_multipartite
                                                          ? labelled(*structure.complete_multipartite)
                                                          : nlohmann::json(nullptr)}};
        std::cout << dump(j);
        return exit_ok;
    }
    std::cout << "connected=" << (m.connected ? "true" : "false") << " diameter=" << m.diameter_text()
              << " clique=" << clique.size << " chromatic=" << chromatic.colors << "\n";
    std::cout << "vertices=" << g.size() << " edges=" << g.edge_count()
              << " bipartite=" << (bipartite ? parts_text(*bipartite) : "none")
              << " complete_multipartite="
              << (structure.complete_multipartite ? parts_text(*structure.complete_multipartite) : "none") << "\n";
    return exit_ok;
}

// --- iso -------------------------------------------------------------------

int cmd_iso(const SpecArg& a, const SpecArg& b, const std::string& graph, bool rings, const std::string& witness,
            const Caps& caps)
{
    const auto selector = selector_from(graph);
    if (selector != Selector::full && selector != Selector::core)
        throw UsageError("--graph must be full or core");
    const auto ra = build(a, caps), rb = build(b, caps);
    const auto ga = build_comaximal_graph(*ra, selector), gb = build_comaximal_graph(*rb, selector);
    const auto map = are_isomorphic(ga, gb, caps.max_iso_vertices);

    nlohmann::json doc = {{"left", ra->name()}, {"right", rb->name()}, {"graph", selector_name(selector)}};
    bool all_yes = map.has_value();
    std::cout << (map ? "isomorphic" : "not isomorphic") << "\n";
    if (map) {
        nlohmann::json pairs = nlohmann::json::array();
        for (std::size_t v = 0; v < map->size(); ++v)
            pairs.push_back({ga.labels()[v], gb.labels()[(*map)[v]]});
        doc["graph_isomorphism"] = pairs;
    } else {
        doc["graph_isomorphism"] = nullptr;
    }
    if (rings) {
        std::optional<ElementMap> ring_map;
        try {
            ring_map = ring_isomorphic(*ra, *rb, caps.max_ringiso_size);
        } catch (const CapabilityError& e) {
            if (!witness.empty())
                write_output(witness, dump(doc));
            throw;
        }
        std::cout << "rings: " << (ring_map ? "isomorphic" : "not isomorphic") << "\n";
        all_yes = all_yes && ring_map.has_value();
        if (ring_map) {
            nlohmann::json pairs = nlohmann::json::array();
            for (Element x = 0; x < ra->size(); ++x)
                pairs.push_back({ra->label(x), rb->label(ring_map->mapping[x])});
            doc["ring_isomorphism"] = pairs;
        } else {
            doc["ring_isomorphism"] = nullptr;
        }
    }
    if (!witness.empty())
        write_output(witness, dump(doc));
    return all_yes ? exit_ok : exit_negative;
}

// --- verify ----------------------------------------------------------------

void print_table(const std::vector<ClaimReport>& reports)
{
    for (const auto& r : reports) {
        std::string rings;
        for (const auto& name : r.rings)
            rings += (rings.empty() ? "" : " | ") + name;
        std::cout << std::left << std::setw(7) << r.claim << " " << std::setw(5) << outcome_name(r.outcome) << " "
                  << rings << "  "
                  << (r.outcome == Outcome::skip ? r.skip_reason : r.detail) << "\n";
    }
}

int report_exit(const std::vector<ClaimReport>& reports)
{
    for (const auto& r : reports)
        if (r.outcome == Outcome::fail)
            return exit_negative;
    return exit_ok;
}

int emit_reports(const std::vector<ClaimReport>& reports, const std::string& json_path, bool timing)
{
    print_table(reports);
    if (!json_path.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r, timing));
        write_output(json_path, dump(arr));
    }
    return report_exit(reports);
}

std::vector<std::string> split_claims(const std::vector<std::string>& raw)
{
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty())
                out.push_back(id);
    }
    return out;
}

// --- audit -----------------------------------------------------------------

int cmd_audit(const std::string& path, const Caps& caps)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    const auto& entries = doc.is_object() && doc.contains("entries") ? doc["entries"] : doc;
    if (!entries.is_array())
        throw UsageError(path + ": expected a report array or a sweep report");

    std::size_t accepted = 0, rejected = 0;
    for (const auto& e : entries) {
        const auto report = claim_report_from_json(e);
        AuditResult verdict;
        if (report.claim == "RING") {
            verdict = {true, "construction outcome not re-derived"};
        } else if (report.rings.size() == 2) {
            const auto left = build_ring(report.rings[0], caps.max_ring_size);
            const auto right = build_ring(report.rings[1], caps.max_ring_size);
            verdict = {false, "unknown pair claim"};
            for (const auto& fresh : verify_pair(left, right, caps))
                if (fresh.claim == report.claim)
                    verdict = fresh.outcome == report.outcome && fresh.witness == report.witness
                                  ? AuditResult{true, "re-derived"}
                                  : AuditResult{false, "recomputed pair outcome differs"};
        } else {
            verdict = audit_report(build_ring(report.rings.at(0), caps.max_ring_size), report, caps);
        }
        if (verdict.accepted) {
            ++accepted;
        } else {
            ++rejected;
            std::cout << "rejected " << report.claim << " on " << report.rings.at(0) << ": " << verdict.reason
                      << "\n";
        }
    }
    std::cout << "accepted=" << accepted << " rejected=" << rejected << "\n";
    return rejected ? exit_negative : exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Comaximal graphs of finite commutative rings"};
    app.require_subcommand(1);
    app.fallthrough();

    Caps caps;
    std::size_t max_ring_size = 0, max_exact = 0, max_ringiso = 0;
    app.add_option("--max-ring-size", max_ring_size, "Largest ring that may be constructed (default 4096)")
        ->envname("COMAX_MAX_RING_SIZE");
    app.add_option("--max-exact-vertices", max_exact, "Vertex cap for exact clique/chromatic (default 512)")
        ->envname("COMAX_MAX_EXACT_VERTICES");
    app.add_option("--max-ringiso-size", max_ringiso, "Size cap for ring isomorphism (default 32)")
        ->envname("COMAX_MAX_RINGISO_SIZE");

    std::string spec_a, spec_b, select = "full", format, out, graph = "full", witness, json_path, family = "zn",
                                corpus, audit_path;
    std::vector<std::string> claims_raw, factors;
    bool rings = false, timing = false;
    std::size_t sweep_max = 200, sweep_min = 2, max_factors = 3;
    int jobs = 0;

    auto* ring_cmd = app.add_subcommand("ring", "Summarize a ring: units, radical, maximal ideals, idempotents");
    ring_cmd->add_option("spec", spec_a, "Ring spec")->required();
    ring_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* graph_cmd = app.add_subcommand("graph", "Emit a comaximal graph");
    graph_cmd->add_option("spec", spec_a, "Ring spec")->required();
    graph_cmd->add_option("--select", select, "full, units, nonunits or core");
    graph_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    graph_cmd->add_option("--out", out, "Output file (default stdout)");

    auto* inv_cmd = app.add_subcommand("invariants", "Connectivity, diameter, clique and chromatic number");
    inv_cmd->add_option("spec", spec_a, "Ring spec")->required();
    inv_cmd->add_option("--select", select, "full, units, nonunits or core");
    inv_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* iso_cmd = app.add_subcommand("iso", "Decide whether two comaximal graphs (and rings) are isomorphic");
    iso_cmd->add_option("spec_a", spec_a, "First ring spec")->required();
    iso_cmd->add_option("spec_b", spec_b, "Second ring spec")->required();
    iso_cmd->add_option("--graph", graph, "full or core");
    iso_cmd->add_flag("--rings", rings, "Also decide ring isomorphism");
    iso_cmd->add_option("--witness", witness, "Write the witness bijection(s) as JSON");

    auto* verify_cmd = app.add_subcommand("verify", "Check claims on one ring");
    verify_cmd->add_option("spec", spec_a, "Ring spec")->required();
    verify_cmd->add_option("--claims", claims_raw, "Comma-separated claim ids (default all)")->delimiter(',');
    verify_cmd->add_option("--json", json_path, "Write reports as JSON ('-' for stdout)");
    verify_cmd->add_flag("--timing", timing, "Include elapsed_ms in JSON");

    auto* pair_cmd = app.add_subcommand("verify-pair", "Check the pair claims on two rings");
    pair_cmd->add_option("spec_a", spec_a, "First ring spec")->required();
    pair_cmd->add_option("spec_b", spec_b, "Second ring spec")->required();
    pair_cmd->add_option("--json", json_path, "Write reports as JSON ('-' for stdout)");
    pair_cmd->add_flag("--timing", timing, "Include elapsed_ms in JSON");

    auto* sweep_cmd = app.add_subcommand("sweep", "Run claims over a ring family");
    sweep_cmd->add_option("--family", family, "zn, products or corpus")
        ->check(CLI::IsMember({"zn", "products", "corpus"}));
    sweep_cmd->add_option("--max", sweep_max, "Largest n (zn) or largest ring size (products)");
    sweep_cmd->add_option("--min", sweep_min, "Smallest n or ring size");
    sweep_cmd->add_option("--factors", factors, "Semicolon-separated factor specs for products")->delimiter(';');
    sweep_cmd->add_option("--max-factors", max_factors, "Most factors in a product");
    sweep_cmd->add_option("--corpus", corpus, "Corpus file, one spec per line");
    sweep_cmd->add_option("--claims", claims_raw, "Comma-separated claim ids (default all)")->delimiter(',');
    sweep_cmd->add_option("--out", out, "Report path (default stdout)");
    sweep_cmd->add_option("--jobs", jobs, "Worker threads (default: all cores)");
    sweep_cmd->add_flag("--timing", timing, "Include elapsed_ms in JSON");

    auto* audit_cmd = app.add_subcommand("audit", "Re-derive every entry of a report and reject stale or forged ones");
    audit_cmd->add_option("report", audit_path, "Report JSON from verify or sweep")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        caps.max_ring_size = max_ring_size ? max_ring_size : caps.max_ring_size;
        caps.max_exact_vertices = max_exact ? max_exact : caps.max_exact_vertices;
        caps.max_ringiso_size = max_ringiso ? max_ringiso : caps.max_ringiso_size;

        // Specs parse before anything is computed.
        std::optional<SpecArg> a, b;
        if (!spec_a.empty())
            a = parse_arg(spec_a);
        if (!spec_b.empty())
            b = parse_arg(spec_b);
        const auto claims = split_claims(claims_raw);

        if (app.got_subcommand(ring_cmd))
            return cmd_ring(*a, format.empty() ? "text" : format, caps);
        if (app.got_subcommand(graph_cmd))
            return cmd_graph(*a, select, format.empty() ? "dot" : format, out, caps);
        if (app.got_subcommand(inv_cmd))
            return cmd_invariants(*a, select, format.empty() ? "text" : format, caps);
        if (app.got_subcommand(iso_cmd))
            return cmd_iso(*a, *b, graph, rings, witness, caps);
        if (app.got_subcommand(verify_cmd)) {
            std::vector<std::string> ids;
            try {
                ids = normalize_claims(claims);
            } catch (const ArgumentError& e) {
                throw UsageError(e.what());
            }
            return emit_reports(verify_ring(build(*a, caps), ids, caps), json_path, timing);
        }
        if (app.got_subcommand(pair_cmd))
            return emit_reports(verify_pair(build(*a, caps), build(*b, caps), caps), json_path, timing);
        if (app.got_subcommand(sweep_cmd)) {
            SweepOptions options;
            options.family = family == "zn" ? Family::zn : family == "products" ? Family::products : Family::corpus;
            options.max = sweep_max;
            options.min = sweep_min;
            options.factors = factors;
            options.max_factors = max_factors;
            options.corpus_path = corpus;
            options.claims = claims;
            options.caps = caps;
            options.jobs = jobs;
            if (options.family == Family::corpus && corpus.empty())
                throw UsageError("--family corpus needs --corpus");
            for (const auto& f : factors)
                parse_arg(f);
            SweepReport report;
            try {
                report = run_sweep(options);
            } catch (const ArgumentError& e) {
                throw UsageError(e.what());
            }
            write_output(out, dump(to_json(report, timing)));
            std::cerr << "pass=" << report.passed << " fail=" << report.failed << " skip=" << report.skipped << "\n";
            return report.failed ? exit_negative : exit_ok;
        }
        if (app.got_subcommand(audit_cmd))
            return cmd_audit(audit_path, caps);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CapabilityError& e) {
        std::cerr << "undecided at this scale: " << e.what();
        if (e.lower_bound())
            std::cerr << " (lower bound " << *e.lower_bound();
        if (e.upper_bound())
            std::cerr << (e.lower_bound() ? ", " : " (") << "upper bound " << *e.upper_bound();
        if (e.lower_bound() || e.upper_bound())
            std::cerr << ")";
        std::cerr << "\n";
        return exit_capability;
    } catch (const ResourceError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return exit_capability;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
