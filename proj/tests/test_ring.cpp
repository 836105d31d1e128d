#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "comax/codecs.hpp"
#include "comax/errors.hpp"
#include "comax/kernels.hpp"
#include "comax/ring_iso.hpp"
#include "comax/ring_ops.hpp"
#include "comax/ring_spec.hpp"
#include "support.hpp"

using namespace comax;
using support::as_set;
using support::element;

namespace {

// Small rings of every constructor kind; all have at most 64 elements so
// the brute-force oracles stay cheap.
const std::vector<std::string> small_corpus = {
    "Z/2",      "Z/4",          "Z/6",          "Z/8",       "Z/9",         "Z/12",      "Z/30",
    "Z/36",     "Z/60",         "GF(2^2)",      "GF(3^2)",   "GF(2^3)",     "SQZ(2,2)",  "SQZ(3,1)",
    "SQZ(2,3)", "Z/2[x]/(x^2)", "Z/2[x]/(x^3)", "Z/3[x]/(x^2+1)", "Z/2[x]/(x^2+1)", "Z/2 x Z/2", "Z/2 x Z/8",
    "Z/4 x Z/4", "Z/2 x Z/3 x Z/5", "GF(2^2) x Z/4", "SQZ(2,2) x Z/3", "Z/2 x Z/2 x Z/2 x Z/2",
};

std::size_t gcd(std::size_t a, std::size_t b)
{
    return b == 0 ? a : gcd(b, a % b);
}

} // namespace

TEST_CASE("arithmetic on Z/12 and SQZ(2,2)")
{
    const auto z12 = build_ring("Z/12");
    CHECK(z12->add(7, 8) == 3);
    CHECK(z12->mul(4, 9) == 0);
    CHECK(z12->eval(Ring::Op::add, 7, 8) == 3);
    CHECK(z12->eval(Ring::Op::neg, 5) == 7);
    CHECK_THROWS_AS(z12->eval(Ring::Op::mul, 12, 1), ArgumentError);

    const auto sqz = build_ring("SQZ(2,2)");
    const auto x = element(*sqz, "x"), y = element(*sqz, "y");
    CHECK(sqz->mul(x, y) == 0);
    CHECK(sqz->mul(x, x) == 0);
    CHECK(sqz->mul(y, y) == 0);
    CHECK(sqz->size() == 8);
}

TEST_CASE("units agree with gcd for Z/n")
{
    CHECK(as_set(build_ring("Z/12")->units()) == std::set<Element>{1, 5, 7, 11});
    for (std::uint32_t n = 2; n <= 100; ++n) {
        const auto ring = build_ring(RingSpec::zn(n));
        std::set<Element> expected;
        for (Element a = 0; a < n; ++a)
            if (gcd(a, n) == 1)
                expected.insert(a);
        CHECK(as_set(ring->units()) == expected);
    }
}

TEST_CASE("units of fields and of Z/2 x Z/8")
{
    for (const auto* spec : {"Z/7", "GF(2^2)", "GF(3^2)", "GF(2^4)"}) {
        const auto f = build_ring(spec);
        CHECK(f->unit_count() == f->size() - 1);
    }
    const auto r = build_ring("Z/2 x Z/8");
    std::set<Element> expected;
    for (const auto* label : {"(1,1)", "(1,3)", "(1,5)", "(1,7)"})
        expected.insert(element(*r, label));
    CHECK(as_set(r->units()) == expected);
}

TEST_CASE("unit and radical scans match the brute-force oracles")
{
    for (const auto& spec : small_corpus) {
        CAPTURE(spec);
        const auto ring = build_ring(spec);
        CHECK(as_set(ring->units()) == support::units_by_scan(*ring));
        CHECK(as_set(ring->jacobson_radical().elements()) == support::radical_by_scan(*ring));
        CHECK(ring->jacobson_radical() == radical_by_intersection(*ring));
    }
}

TEST_CASE("ideal closure")
{
    const auto z12 = build_ring("Z/12");
    const Element four[] = {4};
    CHECK(as_set(ideal_closure(*z12, four).elements()) == std::set<Element>{0, 4, 8});
    const Element four_three[] = {4, 3};
    CHECK(ideal_closure(*z12, four_three).size() == 12);
    const Element zero[] = {0};
    CHECK(as_set(ideal_closure(*z12, zero).elements()) == std::set<Element>{0});
    CHECK_THROWS_AS(ideal_closure(*z12, std::span<const Element>{}), ArgumentError);
    CHECK(is_ideal(*z12, ideal_closure(*z12, four).members()));
}

TEST_CASE("comaximality examples")
{
    const auto z12 = build_ring("Z/12");
    CHECK(is_comaximal(*z12, 4, 3));
    CHECK_FALSE(is_comaximal(*z12, 2, 4));
    CHECK(is_comaximal(*z12, 5, 2));
    CHECK(is_comaximal(*z12, 5, 5));
    CHECK_FALSE(is_comaximal(*z12, 4, 4));
}

TEST_CASE("signature adjacency equals ideal-closure adjacency")
{
    for (const auto& spec : small_corpus) {
        CAPTURE(spec);
        const auto ring = build_ring(spec);
        std::size_t disagreements = 0;
        for (Element a = 0; a < ring->size(); ++a)
            for (Element b = 0; b < ring->size(); ++b)
                disagreements += is_comaximal(*ring, a, b) != is_comaximal_by_closure(*ring, a, b);
        CHECK(disagreements == 0);
    }
}

TEST_CASE("Jacobson radical examples")
{
    CHECK(as_set(build_ring("Z/12")->jacobson_radical().elements()) == std::set<Element>{0, 6});
    CHECK(as_set(build_ring("Z/4")->jacobson_radical().elements()) == std::set<Element>{0, 2});
    const auto r = build_ring("Z/2 x Z/8");
    std::set<Element> expected;
    for (const auto* label : {"(0,0)", "(0,2)", "(0,4)", "(0,6)"})
        expected.insert(element(*r, label));
    CHECK(as_set(r->jacobson_radical().elements()) == expected);
}

TEST_CASE("idempotents")
{
    CHECK(as_set(build_ring("Z/12")->idempotents()) == std::set<Element>{0, 1, 4, 9});
    CHECK(as_set(build_ring("Z/4")->idempotents()) == std::set<Element>{0, 1});
    CHECK(as_set(build_ring("Z/6")->idempotents()) == std::set<Element>{0, 1, 3, 4});
}

TEST_CASE("maximal ideals")
{
    const auto z12 = build_ring("Z/12");
    std::multiset<std::size_t> sizes;
    for (const auto& m : z12->maximal_ideals())
        sizes.insert(m.size());
    CHECK(sizes == std::multiset<std::size_t>{4, 6});

    const auto gf4 = build_ring("GF(2^2)");
    REQUIRE(gf4->maximal_ideals().size() == 1);
    CHECK(gf4->maximal_ideals()[0].size() == 1);

    const auto z30 = build_ring("Z/30");
    REQUIRE(z30->maximal_ideals().size() == 3);
    std::set<std::set<Element>> got, expected;
    for (const auto& m : z30->maximal_ideals())
        got.insert(as_set(m.elements()));
    for (Element p : {2u, 3u, 5u}) {
        std::set<Element> multiples;
        for (Element x = 0; x < 30; x += p)
            multiples.insert(x);
        expected.insert(multiples);
    }
    CHECK(got == expected);
}

TEST_CASE("idempotent-decomposition maximal ideals equal brute-force maximal ideals")
{
    for (const auto& spec : small_corpus) {
        CAPTURE(spec);
        const auto ring = build_ring(spec);
        auto fast = ring->maximal_ideals();
        auto brute = maximal_ideals_brute_force(*ring);
        std::sort(fast.begin(), fast.end());
        std::sort(brute.begin(), brute.end());
        CHECK(fast == brute);
    }
}

TEST_CASE("signatures")
{
    const auto z12 = build_ring("Z/12");
    const auto& maximal = z12->maximal_ideals();
    const auto two = maximal[0].size() == 6 ? 0 : 1;
    CHECK(z12->signature(4) == (std::uint64_t{1} << two));
    CHECK(z12->signature(6) == z12->full_signature());
    CHECK(z12->signature(5) == 0);
    for (const auto& spec : small_corpus) {
        const auto ring = build_ring(spec);
        for (Element x = 0; x < ring->size(); ++x) {
            CHECK((ring->signature(x) == 0) == ring->is_unit(x));
            CHECK((ring->signature(x) == ring->full_signature()) == ring->jacobson_radical().contains(x));
        }
    }
}

TEST_CASE("quotients")
{
    const auto z12 = build_ring("Z/12");
    const auto q = quotient(z12, z12->jacobson_radical());
    CHECK(q.ring->size() == 6);
    CHECK(ring_isomorphic(*q.ring, *build_ring("Z/6"), 32).has_value());
    CHECK(verify_ring_map(*z12, *q.ring, q.projection.mapping, false));

    Bitset zero(12);
    zero.set(0);
    const auto same = quotient(z12, IdealSet(zero));
    CHECK(same.ring->size() == 12);
    for (Element x = 0; x < 12; ++x)
        CHECK(same.projection.mapping[x] == x);

    const auto z4 = build_ring("Z/4");
    const auto field = quotient(z4, z4->jacobson_radical());
    CHECK(field.ring->size() == 2);
    CHECK(field.ring->unit_count() == 1);

    Bitset not_ideal(12);
    not_ideal.set(0);
    not_ideal.set(5);
    CHECK_THROWS_AS(quotient(z12, IdealSet(not_ideal)), ArgumentError);
    Bitset everything(12);
    everything.set_all();
    CHECK_THROWS_AS(quotient(z12, IdealSet(everything)), ArgumentError);

    for (const auto& spec : small_corpus) {
        CAPTURE(spec);
        const auto ring = build_ring(spec);
        const auto s = quotient(ring, ring->jacobson_radical());
        CHECK(s.ring->size() * ring->jacobson_radical().size() == ring->size());
        CHECK(s.ring->is_reduced());
        if (ring->is_reduced() && ring->size() <= 32)
            CHECK(ring_isomorphic(*s.ring, *ring, 32).has_value());
    }
}

TEST_CASE("direct products")
{
    const auto z2 = build_ring("Z/2"), z3 = build_ring("Z/3"), z4 = build_ring("Z/4");
    const auto z6 = direct_product(z2, z3, 4096);
    CHECK(ring_isomorphic(*z6, *build_ring("Z/6"), 32).has_value());

    const auto klein = direct_product(z2, z2, 4096);
    CHECK(klein->size() == 4);
    CHECK(klein->unit_count() == 1);
    CHECK(klein->maximal_ideals().size() == 2);

    const auto z4z4 = direct_product(z4, z4, 4096);
    CHECK(z4z4->size() == 16);
    CHECK(z4z4->unit_count() == 4);
    CHECK(z4z4->jacobson_radical().size() == 4);

    CHECK_THROWS_AS(direct_product(build_ring("Z/64"), build_ring("Z/65"), 4096), ResourceError);

    // U(A x B) = U(A) x U(B) and |Max(A x B)| = |Max A| + |Max B|.
    const auto a = build_ring("Z/12"), b = build_ring("SQZ(2,2)");
    const auto ab = direct_product(a, b, 4096);
    CHECK(ab->unit_count() == a->unit_count() * b->unit_count());
    CHECK(ab->maximal_ideals().size() == a->maximal_ideals().size() + b->maximal_ideals().size());
}

TEST_CASE("cleanness")
{
    const auto z6 = build_ring("Z/6");
    const auto clean = is_clean(*z6);
    REQUIRE(clean.clean);
    const auto [e, u] = clean.witnesses[2];
    CHECK(z6->mul(e, e) == e);
    CHECK(z6->is_unit(u));
    CHECK(z6->add(e, u) == 2);
    // The decomposition 2 = 3 + 5 is one of the valid ones.
    CHECK(z6->mul(3, 3) == 3);
    CHECK(z6->is_unit(5));
    CHECK(z6->add(3, 5) == 2);

    for (const auto& spec : small_corpus) {
        CAPTURE(spec);
        const auto ring = build_ring(spec);
        const auto c = is_clean(*ring);
        REQUIRE(c.clean);
        for (Element x = 0; x < ring->size(); ++x) {
            const auto [ex, ux] = c.witnesses[x];
            CHECK(ring->mul(ex, ex) == ex);
            CHECK(ring->is_unit(ux));
            CHECK(ring->add(ex, ux) == x);
        }
    }
}

TEST_CASE("residue field sizes")
{
    CHECK(residue_field_sizes(*build_ring("Z/12")) == std::vector<std::size_t>{2, 3});
    CHECK(residue_field_sizes(*build_ring("Z/2 x Z/8")) == std::vector<std::size_t>{2, 2});
    CHECK(residue_field_sizes(*build_ring("Z/30")) == std::vector<std::size_t>{2, 3, 5});
    CHECK(residue_field_sizes(*build_ring("GF(3^2) x Z/4")) == std::vector<std::size_t>{2, 9});
}

TEST_CASE("ring isomorphism")
{
    const auto iso = ring_isomorphic(*build_ring("Z/6"), *build_ring("Z/2 x Z/3"), 32);
    REQUIRE(iso.has_value());
    CHECK(iso->isomorphism);
    CHECK_FALSE(ring_isomorphic(*build_ring("Z/4"), *build_ring("Z/2[x]/(x^2)"), 32).has_value());
    CHECK_FALSE(ring_isomorphic(*build_ring("Z/2 x Z/8"), *build_ring("Z/4 x Z/4"), 32).has_value());
    CHECK_FALSE(ring_isomorphic(*build_ring("Z/8"), *build_ring("Z/9"), 32).has_value());
    CHECK_THROWS_AS(ring_isomorphic(*build_ring("Z/64"), *build_ring("Z/2 x Z/32"), 32), CapabilityError);

    // Same ring under two encodings.
    CHECK(ring_isomorphic(*build_ring("Z/2[x]/(x^2+x+1)"), *build_ring("GF(2^2)"), 32).has_value());
    CHECK(ring_isomorphic(*build_ring("Z/3 x Z/2 x Z/2"), *build_ring("Z/2 x Z/6"), 32).has_value());
    CHECK_FALSE(ring_isomorphic(*build_ring("Z/2[x]/(x^3)"), *build_ring("SQZ(2,2)"), 32).has_value());
    CHECK_FALSE(ring_isomorphic(*build_ring("GF(2^2)"), *build_ring("Z/2 x Z/2"), 32).has_value());

    // Residue-field multisets are isomorphism invariants.
    const auto a = build_ring("Z/3 x Z/4"), b = build_ring("Z/12");
    REQUIRE(ring_isomorphic(*a, *b, 32).has_value());
    CHECK(residue_field_sizes(*a) == residue_field_sizes(*b));
}

TEST_CASE("characteristic and nilpotents")
{
    CHECK(build_ring("Z/12")->characteristic() == 12);
    CHECK(build_ring("Z/2[x]/(x^2)")->characteristic() == 2);
    CHECK(build_ring("Z/4 x Z/6")->characteristic() == 12);
    CHECK(build_ring("Z/8")->nilpotent_count() == 4);
    CHECK(build_ring("Z/30")->is_reduced());
    CHECK_FALSE(build_ring("SQZ(2,2)")->is_reduced());
}

TEST_CASE("every constructed ring satisfies the ring axioms")
{
    for (const auto& spec : small_corpus) {
        CAPTURE(spec);
        CHECK_FALSE(check_ring_axioms(*build_ring(spec)).has_value());
    }
    // Above the dense-table limit the check samples random triples.
    CHECK_FALSE(check_ring_axioms(*build_ring("GF(2^9)"), 20000, 7).has_value());
}

TEST_CASE("parallel kernels agree with the serial reference")
{
    for (const auto* spec : {"Z/360", "GF(2^2) x Z/4 x Z/9", "SQZ(2,3) x Z/5 x Z/3", "Z/1000"}) {
        CAPTURE(spec);
        const auto ring = build_ring(spec);
        CHECK(kernels::unit_scan(*ring) == kernels::unit_scan_serial(*ring));
        CHECK(kernels::radical_scan(*ring, ring->unit_flags()) ==
              kernels::radical_scan_serial(*ring, ring->unit_flags()));
        std::vector<Element> vertices(ring->size());
        std::iota(vertices.begin(), vertices.end(), 0);
        const auto fast = kernels::signature_adjacency(ring->signatures(), vertices);
        const auto slow = kernels::signature_adjacency_serial(ring->signatures(), vertices);
        CHECK(fast == slow);
        CHECK(kernels::eccentricities(fast) == kernels::eccentricities_serial(slow));
    }
}

TEST_CASE("codec construction rejects degenerate rings")
{
    CHECK_THROWS_AS(make_zn_codec(1), ArgumentError);
}
