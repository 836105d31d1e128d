#pragma once

#include <cstddef>
#include <vector>

#include "comax/caps.hpp"
#include "comax/graph.hpp"

namespace comax {

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  ///< ascending vertex indices
};

/// Exact maximum clique by branch and bound with a greedy-colouring bound.
/// Above `max_vertices` throws CapabilityError carrying a greedy lower
/// bound.
CliqueResult clique_number(const SimpleGraph& g, std::size_t max_vertices = Caps{}.max_exact_vertices);

/// A maximal clique grown greedily in ascending index order.
CliqueResult greedy_clique(const SimpleGraph& g);

struct ColoringResult {
    std::size_t colors = 0;
    std::vector<std::size_t> coloring;  ///< colour per vertex, 0-based
};

/// DSATUR greedy colouring (upper bound).
ColoringResult dsatur_coloring(const SimpleGraph& g);

/// Exact chromatic number: iterative deepening from the clique number up
/// to the DSATUR bound, each level decided by DSATUR-ordered
/// backtracking. Above `max_vertices` throws CapabilityError with a
/// (lower, upper) bracket.
ColoringResult chromatic_number(const SimpleGraph& g, std::size_t max_vertices = Caps{}.max_exact_vertices);

/// True iff `coloring` is a proper colouring using colours < colors.
bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& coloring, std::size_t colors);

/// True iff the vertices are pairwise adjacent.
bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vertices);

} // namespace comax
