#pragma once

#include <cstddef>

namespace comax {

/// Scale limits. Every reported result embeds the caps it ran under.
struct Caps {
    std::size_t max_ring_size = 4096;
    std::size_t max_exact_vertices = 512;
    std::size_t max_ringiso_size = 32;
    std::size_t max_iso_vertices = 2000;
    std::size_t max_certificate_vertices = 64;

    friend bool operator==(const Caps&, const Caps&) = default;
};

/// Rings up to this size keep dense addition/multiplication tables.
inline constexpr std::size_t dense_table_limit = 256;

/// Oracle cross-checks (brute-force maximal ideals, closure adjacency) run
/// automatically up to this size.
inline constexpr std::size_t oracle_check_limit = 64;

} // namespace comax
