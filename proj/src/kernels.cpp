#include "comax/kernels.hpp"

#include <algorithm>
#include <deque>

namespace comax::kernels {

namespace {

bool has_inverse(const Ring& ring, Element a)
{
    const Element one = ring.one();
    const auto n = static_cast<Element>(ring.size());
    for (Element b = 0; b < n; ++b)
        if (ring.mul(a, b) == one)
            return true;
    return false;
}

bool in_radical(const Ring& ring, const Bitset& units, Element x)
{
    if (units.test(x))
        return false;
    const Element one = ring.one();
    const auto n = static_cast<Element>(ring.size());
    for (Element r = 0; r < n; ++r)
        if (!units.test(ring.sub(one, ring.mul(r, x))))
            return false;
    return true;
}

std::vector<Bitset> empty_rows(std::size_t n)
{
    return std::vector<Bitset>(n, Bitset(n));
}

void fill_row(std::span<const std::uint64_t> sig, std::span<const Element> vertices, std::size_t i,
              Bitset& row)
{
    const auto si = sig[vertices[i]];
    for (std::size_t j = 0; j < vertices.size(); ++j)
        if (j != i && (si & sig[vertices[j]]) == 0)
            row.set(j);
}

std::uint32_t eccentricity(std::span<const Bitset> rows, std::size_t source)
{
    const std::size_t n = rows.size();
    Bitset visited(n);
    Bitset frontier(n);
    visited.set(source);
    frontier.set(source);
    std::size_t seen = 1;
    std::uint32_t depth = 0;
    while (seen < n) {
        Bitset next(n);
        frontier.for_each([&](std::size_t v) { next |= rows[v]; });
        next.and_not(visited);
        const auto added = next.count();
        if (added == 0)
            return unreachable;
        seen += added;
        visited |= next;
        frontier = std::move(next);
        ++depth;
    }
    return depth;
}

} // namespace

std::vector<char> unit_scan(const Ring& ring)
{
    const auto n = static_cast<std::int64_t>(ring.size());
    std::vector<char> flags(ring.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t a = 0; a < n; ++a)
        flags[a] = has_inverse(ring, static_cast<Element>(a)) ? 1 : 0;
    return flags;
}

std::vector<char> unit_scan_serial(const Ring& ring)
{
    std::vector<char> flags(ring.size(), 0);
    for (Element a = 0; a < ring.size(); ++a)
        flags[a] = has_inverse(ring, a) ? 1 : 0;
    return flags;
}

std::vector<char> radical_scan(const Ring& ring, const Bitset& units)
{
    const auto n = static_cast<std::int64_t>(ring.size());
    std::vector<char> flags(ring.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t x = 0; x < n; ++x)
        flags[x] = in_radical(ring, units, static_cast<Element>(x)) ? 1 : 0;
    return flags;
}

std::vector<char> radical_scan_serial(const Ring& ring, const Bitset& units)
{
    std::vector<char> flags(ring.size(), 0);
    for (Element x = 0; x < ring.size(); ++x)
        flags[x] = in_radical(ring, units, x) ? 1 : 0;
    return flags;
}

std::vector<Bitset> signature_adjacency(std::span<const std::uint64_t> signatures,
                                        std::span<const Element> vertices)
{
    auto rows = empty_rows(vertices.size());
    const auto n = static_cast<std::int64_t>(vertices.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        fill_row(signatures, vertices, static_cast<std::size_t>(i), rows[i]);
    return rows;
}

std::vector<Bitset> signature_adjacency_serial(std::span<const std::uint64_t> signatures,
                                               std::span<const Element> vertices)
{
    auto rows = empty_rows(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        fill_row(signatures, vertices, i, rows[i]);
    return rows;
}

std::vector<std::uint32_t> eccentricities(std::span<const Bitset> rows)
{
    const auto n = static_cast<std::int64_t>(rows.size());
    std::vector<std::uint32_t> ecc(rows.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < n; ++s)
        ecc[s] = eccentricity(rows, static_cast<std::size_t>(s));
    return ecc;
}

std::vector<std::uint32_t> eccentricities_serial(std::span<const Bitset> rows)
{
    // Plain queue BFS, independent of the frontier-bitset kernel above.
    std::vector<std::uint32_t> ecc(rows.size());
    for (std::size_t s = 0; s < rows.size(); ++s) {
        auto dist = bfs_distances(rows, s);
        std::uint32_t worst = 0;
        for (auto d : dist) {
            if (d == unreachable) {
                worst = unreachable;
                break;
            }
            worst = std::max(worst, d);
        }
        ecc[s] = worst;
    }
    return ecc;
}

std::vector<std::uint32_t> bfs_distances(std::span<const Bitset> rows, std::size_t source)
{
    std::vector<std::uint32_t> dist(rows.size(), unreachable);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        rows[v].for_each([&](std::size_t w) {
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

} // namespace comax::kernels
