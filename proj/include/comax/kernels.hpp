#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a serial reference used by the tests and the benchmark.

#include <cstdint>
#include <span>
#include <vector>

#include "comax/bitset.hpp"
#include "comax/ring.hpp"

namespace comax::kernels {

/// flags[a] = 1 iff some b has a*b = 1.
std::vector<char> unit_scan(const Ring& ring);
std::vector<char> unit_scan_serial(const Ring& ring);

/// flags[x] = 1 iff 1 - r*x is a unit for every r.
std::vector<char> radical_scan(const Ring& ring, const Bitset& units);
std::vector<char> radical_scan_serial(const Ring& ring, const Bitset& units);

/// Adjacency rows over `vertices`: i ~ j iff i != j and the signatures of
/// vertices[i] and vertices[j] are disjoint.
std::vector<Bitset> signature_adjacency(std::span<const std::uint64_t> signatures,
                                        std::span<const Element> vertices);
std::vector<Bitset> signature_adjacency_serial(std::span<const std::uint64_t> signatures,
                                               std::span<const Element> vertices);

/// Unreachable marker for distances.
inline constexpr std::uint32_t unreachable = UINT32_MAX;

/// Eccentricity of every vertex (unreachable if some vertex cannot be
/// reached) by bit-parallel BFS from each source.
std::vector<std::uint32_t> eccentricities(std::span<const Bitset> rows);
std::vector<std::uint32_t> eccentricities_serial(std::span<const Bitset> rows);

/// BFS distances from one source.
std::vector<std::uint32_t> bfs_distances(std::span<const Bitset> rows, std::size_t source);

} // namespace comax::kernels
