#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "comax/caps.hpp"
#include "comax/graph.hpp"

namespace comax {

/// Vertex colouring; `stable` when one more round of neighbourhood
/// refinement would not split any class.
struct VertexColoring {
    std::vector<std::size_t> color;
    std::size_t classes = 0;
    bool stable = false;
};

/// 1-dimensional colour refinement started from `initial`. Colour ids are
/// assigned by sorting (old colour, neighbour-colour multiset), so the same
/// input structure gets the same ids regardless of vertex order.
VertexColoring refine_colors(const SimpleGraph& g, std::vector<std::size_t> initial);

/// Vertex bijection g1 -> g2 preserving adjacency both ways, or nullopt.
/// Throws CapabilityError if either graph exceeds `max_vertices`.
std::optional<std::vector<std::size_t>> are_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                                                       std::size_t max_vertices = Caps{}.max_iso_vertices);

/// Edge-by-edge check of a claimed isomorphism.
bool verify_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const std::vector<std::size_t>& map);

/// Canonical byte string: equal iff the graphs are isomorphic. Throws
/// CapabilityError above `max_vertices`.
std::string canonical_certificate(const SimpleGraph& g,
                                  std::size_t max_vertices = Caps{}.max_certificate_vertices);

} // namespace comax
