#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "comax/errors.hpp"
#include "comax/graph_iso.hpp"
#include "comax/ring_spec.hpp"
#include "support.hpp"

using namespace comax;

namespace {

SimpleGraph gamma(const char* spec, Selector s = Selector::full)
{
    return build_comaximal_graph(*build_ring(spec), s);
}

/// Isomorphism by trying every permutation (n <= 7).
bool isomorphic_by_permutations(const SimpleGraph& a, const SimpleGraph& b)
{
    if (a.size() != b.size())
        return false;
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (verify_isomorphism(a, b, perm))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

SimpleGraph cycle(std::size_t n)
{
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

/// K4 x K4 rook's graph and the Shrikhande graph: both strongly regular
/// with parameters (16, 6, 2, 2), not isomorphic.
SimpleGraph rook_graph()
{
    SimpleGraph g(16);
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = a + 1; b < 16; ++b)
            if (a / 4 == b / 4 || a % 4 == b % 4)
                g.add_edge(a, b);
    return g;
}

SimpleGraph shrikhande_graph()
{
    SimpleGraph g(16);
    const int steps[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int a = 0; a < 16; ++a)
        for (const auto& s : steps) {
            const int b = ((a / 4 + s[0]) % 4) * 4 + (a % 4 + s[1]) % 4;
            if (a < b)
                g.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        }
    return g;
}

SimpleGraph petersen()
{
    SimpleGraph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

} // namespace

TEST_CASE("Gamma(Z/4) and Gamma(Z/2[x]/(x^2)) are both K2 v K2bar")
{
    const auto model = join(complete_graph(2), empty_graph(2));
    const auto a = gamma("Z/4"), b = gamma("Z/2[x]/(x^2)");
    const auto ab = are_isomorphic(a, b);
    REQUIRE(ab.has_value());
    CHECK(verify_isomorphism(a, b, *ab));
    CHECK(are_isomorphic(a, model).has_value());
    CHECK(canonical_certificate(a) == canonical_certificate(model));
}

TEST_CASE("Gamma(Z/8), Gamma(Z/2[x]/(x^3)) and Gamma(SQZ(2,2)) are pairwise K4 v K4bar")
{
    const auto model = join(complete_graph(4), empty_graph(4));
    const std::vector<SimpleGraph> graphs = {gamma("Z/8"), gamma("Z/2[x]/(x^3)"), gamma("SQZ(2,2)")};
    for (const auto& g : graphs) {
        CHECK(are_isomorphic(g, model).has_value());
        for (const auto& h : graphs)
            CHECK(are_isomorphic(g, h).has_value());
    }
}

TEST_CASE("Gamma(Z/9) and Gamma(Z/3 x Z/3) are not isomorphic")
{
    CHECK_FALSE(are_isomorphic(gamma("Z/9"), gamma("Z/3 x Z/3")).has_value());
}

TEST_CASE("graphs that colour refinement cannot separate")
{
    CHECK_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))).has_value());
    CHECK_FALSE(are_isomorphic(rook_graph(), shrikhande_graph()).has_value());
    CHECK(canonical_certificate(rook_graph()) != canonical_certificate(shrikhande_graph()));
    CHECK(canonical_certificate(cycle(6)) != canonical_certificate(disjoint_union(cycle(3), cycle(3))));

    std::mt19937 rng(3);
    for (const auto& g : {rook_graph(), shrikhande_graph(), petersen(), cycle(9)}) {
        const auto h = support::permuted(g, support::random_permutation(g.size(), rng));
        const auto map = are_isomorphic(g, h);
        REQUIRE(map.has_value());
        CHECK(verify_isomorphism(g, h, *map));
        CHECK(canonical_certificate(g) == canonical_certificate(h));
    }
}

TEST_CASE("isomorphism is reflexive and symmetric on comaximal graphs")
{
    for (const auto* spec : {"Z/12", "Z/30", "Z/2 x Z/8", "GF(2^2) x Z/4", "Z/2 x Z/2 x Z/3 x Z/3"}) {
        CAPTURE(spec);
        for (auto s : {Selector::full, Selector::core}) {
            const auto g = gamma(spec, s);
            const auto self = are_isomorphic(g, g);
            REQUIRE(self.has_value());
            CHECK(verify_isomorphism(g, g, *self));
        }
    }
    const auto a = gamma("Z/2 x Z/8"), b = gamma("Z/4 x Z/4");
    CHECK(are_isomorphic(a, b).has_value());
    CHECK(are_isomorphic(b, a).has_value());
    // Large twin classes; the search must not enumerate their permutations.
    const auto c = gamma("Z/3 x Z/4 x Z/4"), d = gamma("Z/2 x Z/3 x Z/8");
    const auto cd = are_isomorphic(c, d);
    REQUIRE(cd.has_value());
    CHECK(verify_isomorphism(c, d, *cd));
}

TEST_CASE("random relabellings are recognised")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
        const auto g = support::random_graph(n, 0.3, rng);
        const auto h = support::permuted(g, support::random_permutation(n, rng));
        const auto map = are_isomorphic(g, h);
        REQUIRE(map.has_value());
        CHECK(verify_isomorphism(g, h, *map));
        CHECK(canonical_certificate(g) == canonical_certificate(h));
    }
}

TEST_CASE("isomorphism and certificates agree with brute force on small graphs")
{
    std::mt19937 rng(5);
    std::size_t positives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const auto a = support::random_graph(n, 0.5, rng);
        const auto b = support::random_graph(n, 0.5, rng);
        const bool truth = isomorphic_by_permutations(a, b);
        positives += truth;
        CHECK(are_isomorphic(a, b).has_value() == truth);
        CHECK((canonical_certificate(a) == canonical_certificate(b)) == truth);
    }
    CHECK(positives > 10);
}

TEST_CASE("refinement is stable and respects the initial colouring")
{
    const auto g = complete_bipartite(2, 3);
    const auto c = refine_colors(g, std::vector<std::size_t>(5, 0));
    CHECK(c.stable);
    CHECK(c.classes == 2);
    CHECK(c.color[0] == c.color[1]);
    CHECK(c.color[2] == c.color[4]);
    CHECK(c.color[0] != c.color[2]);
    const auto split = refine_colors(g, {0, 1, 0, 0, 0});
    CHECK(split.classes == 3);
}

TEST_CASE("certificates")
{
    SimpleGraph t1(3), t2(3);
    t1.add_edge(0, 1);
    t1.add_edge(1, 2);
    t1.add_edge(0, 2);
    t2.add_edge(2, 0);
    t2.add_edge(0, 1);
    t2.add_edge(1, 2);
    CHECK(canonical_certificate(t1) == canonical_certificate(t2));
    CHECK(canonical_certificate(complete_bipartite(1, 2)) != canonical_certificate(complete_graph(3)));
    CHECK(canonical_certificate(SimpleGraph(0)) == canonical_certificate(SimpleGraph(0)));
    CHECK_THROWS_AS(canonical_certificate(complete_graph(65)), CapabilityError);
}

TEST_CASE("caps")
{
    CHECK_THROWS_AS(are_isomorphic(complete_graph(30), complete_graph(30), 10), CapabilityError);
    CHECK_FALSE(are_isomorphic(complete_graph(3), complete_graph(4)).has_value());
}
