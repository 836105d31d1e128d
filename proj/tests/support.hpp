#pragma once

// Small independent oracles shared by the unit tests. They recompute
// things from first principles (gcd, brute-force scans) rather than going
// through the library's cached structures.

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "comax/graph.hpp"
#include "comax/ring.hpp"

namespace support {

inline comax::Element element(const comax::Ring& ring, const std::string& label)
{
    for (comax::Element x = 0; x < ring.size(); ++x)
        if (ring.label(x) == label)
            return x;
    throw std::invalid_argument("no element labelled " + label);
}

inline std::set<comax::Element> as_set(const std::vector<comax::Element>& v)
{
    return {v.begin(), v.end()};
}

/// Units by scanning for an inverse.
inline std::set<comax::Element> units_by_scan(const comax::Ring& ring)
{
    std::set<comax::Element> out;
    for (comax::Element a = 0; a < ring.size(); ++a)
        for (comax::Element b = 0; b < ring.size(); ++b)
            if (ring.mul(a, b) == ring.one()) {
                out.insert(a);
                break;
            }
    return out;
}

/// Jacobson radical as {x : 1 - r x is a unit for all r}.
inline std::set<comax::Element> radical_by_scan(const comax::Ring& ring)
{
    const auto units = units_by_scan(ring);
    std::set<comax::Element> out;
    for (comax::Element x = 0; x < ring.size(); ++x) {
        bool in = true;
        for (comax::Element r = 0; r < ring.size() && in; ++r)
            in = units.count(ring.sub(ring.one(), ring.mul(r, x))) > 0;
        if (in)
            out.insert(x);
    }
    return out;
}

/// Random simple graph with edge probability p.
inline comax::SimpleGraph random_graph(std::size_t n, double p, std::mt19937& rng)
{
    comax::SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

/// Relabels g by permutation perm (vertex v becomes perm[v]).
inline comax::SimpleGraph permuted(const comax::SimpleGraph& g, const std::vector<std::size_t>& perm)
{
    comax::SimpleGraph h(g.size());
    for (const auto& [u, v] : g.edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937& rng)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Shortest-path distances by Floyd-Warshall, UINT32_MAX for unreachable.
inline std::vector<std::vector<std::uint32_t>> all_pairs(const comax::SimpleGraph& g)
{
    const auto n = g.size();
    constexpr auto inf = UINT32_MAX;
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (std::size_t w = 0; w < n; ++w)
            if (g.adjacent(v, w))
                d[v][w] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// Clique number by trying every vertex subset (n <= 20).
inline std::size_t clique_by_subsets(const comax::SimpleGraph& g)
{
    const auto n = g.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !g.adjacent(i, j))
                    ok = false;
        if (ok)
            best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

/// Chromatic number by trying k = 1, 2, ... with exhaustive assignment
/// (n <= 10).
inline std::size_t chromatic_by_assignment(const comax::SimpleGraph& g)
{
    const auto n = g.size();
    if (n == 0)
        return 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> c(n, 0);
        while (true) {
            bool ok = true;
            for (const auto& [u, v] : g.edges())
                if (c[u] == c[v]) {
                    ok = false;
                    break;
                }
            if (ok)
                return k;
            std::size_t i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
}

} // namespace support
