#include "comax/ring_ops.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "comax/caps.hpp"
#include "comax/codecs.hpp"
#include "comax/errors.hpp"

namespace comax {

IdealSet ideal_closure(const Ring& ring, std::span<const Element> generators)
{
    if (generators.empty())
        throw ArgumentError("ideal_closure needs at least one generator");
    const auto n = static_cast<Element>(ring.size());
    Bitset members(n);
    std::vector<Element> present;
    std::vector<Element> work;
    auto insert = [&](Element x) {
        if (!members.test(x)) {
            members.set(x);
            present.push_back(x);
            work.push_back(x);
        }
    };
    insert(0);
    for (auto g : generators) {
        if (g >= n)
            throw ArgumentError("generator index out of range");
        insert(g);
    }
    while (!work.empty()) {
        const auto x = work.back();
        work.pop_back();
        for (Element r = 0; r < n; ++r)
            insert(ring.mul(r, x));
        // present grows while we iterate; index-based loop on purpose.
        for (std::size_t i = 0; i < present.size(); ++i)
            insert(ring.add(x, present[i]));
    }
    return IdealSet(std::move(members));
}

bool is_ideal(const Ring& ring, const Bitset& members)
{
    const auto n = static_cast<Element>(ring.size());
    if (members.size() != n || !members.test(0))
        return false;
    const auto elems = members.indices();
    for (auto a : elems) {
        for (auto b : elems)
            if (!members.test(ring.add(static_cast<Element>(a), static_cast<Element>(b))))
                return false;
        for (Element r = 0; r < n; ++r)
            if (!members.test(ring.mul(r, static_cast<Element>(a))))
                return false;
    }
    return true;
}

bool is_comaximal(const Ring& ring, Element a, Element b)
{
    if (a >= ring.size() || b >= ring.size())
        throw ArgumentError("element index out of range");
    return (ring.signature(a) & ring.signature(b)) == 0;
}

bool is_comaximal_by_closure(const Ring& ring, Element a, Element b)
{
    const Element gens[] = {a, b};
    return ideal_closure(ring, gens).contains(ring.one());
}

IdealSet radical_by_intersection(const Ring& ring)
{
    Bitset acc(ring.size());
    acc.set_all();
    for (const auto& m : ring.maximal_ideals())
        acc &= m.members();
    return IdealSet(std::move(acc));
}

std::vector<IdealSet> all_ideals(const Ring& ring)
{
    const auto n = static_cast<Element>(ring.size());
    std::set<IdealSet> seen;
    std::vector<IdealSet> frontier;
    const Element zero[] = {0};
    frontier.push_back(ideal_closure(ring, zero));
    seen.insert(frontier.back());
    while (!frontier.empty()) {
        auto ideal = std::move(frontier.back());
        frontier.pop_back();
        auto gens = ideal.elements();
        for (Element x = 0; x < n; ++x) {
            if (ideal.contains(x))
                continue;
            gens.push_back(x);
            auto bigger = ideal_closure(ring, gens);
            gens.pop_back();
            if (seen.insert(bigger).second)
                frontier.push_back(std::move(bigger));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<IdealSet> maximal_ideals_brute_force(const Ring& ring)
{
    const auto n = static_cast<Element>(ring.size());
    std::vector<IdealSet> out;
    for (const auto& ideal : all_ideals(ring)) {
        if (ideal.contains(ring.one()))
            continue;
        bool maximal = true;
        auto gens = ideal.elements();
        for (Element x = 0; x < n && maximal; ++x) {
            if (ideal.contains(x))
                continue;
            gens.push_back(x);
            maximal = ideal_closure(ring, gens).contains(ring.one());
            gens.pop_back();
        }
        if (maximal)
            out.push_back(ideal);
    }
    return out;
}

QuotientRing quotient(const RingPtr& ring, const IdealSet& ideal)
{
    const auto n = static_cast<Element>(ring->size());
    if (ideal.ring_size() != n || !is_ideal(*ring, ideal.members()))
        throw ArgumentError("quotient: not an ideal of this ring");
    if (ideal.contains(ring->one()))
        throw ArgumentError("quotient: ideal is not proper");

    const auto members = ideal.elements();
    std::vector<Element> proj(n, UINT32_MAX);
    std::vector<Element> reps;
    for (Element x = 0; x < n; ++x) {
        if (proj[x] != UINT32_MAX)
            continue;
        const auto c = static_cast<Element>(reps.size());
        reps.push_back(x);
        for (auto m : members)
            proj[ring->add(x, m)] = c;
    }

    QuotientRing out;
    if (members.size() == 1) {
        out.ring = ring;
    } else {
        auto codec = make_quotient_codec(ring, proj, reps);
        out.ring = std::make_shared<Ring>(std::move(codec), ring->name() + "/I");
    }
    out.projection.source = ring->name();
    out.projection.target = out.ring->name();
    out.projection.mapping = std::move(proj);
    out.projection.homomorphism = true;
    out.projection.isomorphism = members.size() == 1;
    return out;
}

RingPtr direct_product(const RingPtr& left, const RingPtr& right, std::size_t max_size)
{
    return direct_product(std::vector<RingPtr>{left, right}, max_size);
}

RingPtr direct_product(std::vector<RingPtr> factors, std::size_t max_size)
{
    std::size_t size = 1;
    std::string name;
    for (const auto& f : factors) {
        size *= f->size();
        if (size > max_size)
            throw ResourceError("product size exceeds cap of " + std::to_string(max_size) + " elements");
        name += (name.empty() ? "" : " x ") + f->name();
    }
    return std::make_shared<Ring>(make_product_codec(std::move(factors)), name);
}

CleanDecomposition is_clean(const Ring& ring)
{
    const auto& idem = ring.idempotents();
    CleanDecomposition out;
    out.witnesses.reserve(ring.size());
    for (Element x = 0; x < ring.size(); ++x) {
        bool found = false;
        for (auto e : idem) {
            const auto u = ring.sub(x, e);
            if (ring.is_unit(u)) {
                out.witnesses.emplace_back(e, u);
                found = true;
                break;
            }
        }
        if (!found) {
            out.witnesses.clear();
            out.counterexample = x;
            return out;
        }
    }
    out.clean = true;
    return out;
}

std::vector<std::size_t> residue_field_sizes(const Ring& ring)
{
    std::vector<std::size_t> sizes;
    for (const auto& m : ring.maximal_ideals())
        sizes.push_back(ring.size() / m.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

namespace {

std::optional<AxiomViolation> check_triple(const Ring& r, Element a, Element b, Element c)
{
    auto fail = [&](const char* axiom, std::vector<Element> w) {
        return std::optional<AxiomViolation>(AxiomViolation{axiom, std::move(w)});
    };
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
        return fail("additive associativity", {a, b, c});
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
        return fail("multiplicative associativity", {a, b, c});
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
        return fail("distributivity", {a, b, c});
    return std::nullopt;
}

std::optional<AxiomViolation> check_pair(const Ring& r, Element a, Element b)
{
    if (r.add(a, b) >= r.size() || r.mul(a, b) >= r.size())
        return AxiomViolation{"closure", {a, b}};
    if (r.add(a, b) != r.add(b, a))
        return AxiomViolation{"additive commutativity", {a, b}};
    if (r.mul(a, b) != r.mul(b, a))
        return AxiomViolation{"multiplicative commutativity", {a, b}};
    return std::nullopt;
}

} // namespace

std::optional<AxiomViolation> check_ring_axioms(const Ring& ring, std::size_t samples, std::uint64_t seed)
{
    const auto n = static_cast<Element>(ring.size());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (auto v = check_pair(ring, a, b))
                return v;
    for (Element a = 0; a < n; ++a) {
        if (ring.add(0, a) != a)
            return AxiomViolation{"additive identity", {a}};
        if (ring.add(a, ring.neg(a)) != 0)
            return AxiomViolation{"additive inverse", {a}};
        if (ring.mul(ring.one(), a) != a)
            return AxiomViolation{"multiplicative identity", {a}};
    }
    if (n <= dense_table_limit) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    if (auto v = check_triple(ring, a, b, c))
                        return v;
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto a = pick(rng), b = pick(rng), c = pick(rng);
        if (auto v = check_triple(ring, a, b, c))
            return v;
    }
    return std::nullopt;
}

bool verify_ring_map(const Ring& source, const Ring& target, std::span<const Element> map, bool bijective)
{
    const auto n = static_cast<Element>(source.size());
    if (map.size() != n)
        return false;
    for (auto y : map)
        if (y >= target.size())
            return false;
    if (map[0] != 0 || map[source.one()] != target.one())
        return false;
    if (bijective) {
        if (source.size() != target.size())
            return false;
        std::vector<char> hit(target.size(), 0);
        for (auto y : map) {
            if (hit[y])
                return false;
            hit[y] = 1;
        }
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (map[source.add(a, b)] != target.add(map[a], map[b]) ||
                map[source.mul(a, b)] != target.mul(map[a], map[b]))
                return false;
    return true;
}

} // namespace comax
