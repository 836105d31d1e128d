#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "comax/ring.hpp"
#include "comax/ring_ops.hpp"

namespace comax {

/// Isomorphism-invariant summary used to screen ring pairs before search.
struct RingInvariants {
    std::size_t size = 0;
    std::size_t characteristic = 0;
    std::size_t units = 0;
    std::size_t idempotents = 0;
    std::size_t nilpotents = 0;
    std::vector<std::size_t> residue_fields;

    friend bool operator==(const RingInvariants&, const RingInvariants&) = default;
};

RingInvariants ring_invariants(const Ring& ring);

/// A ring isomorphism left -> right, or nullopt if none exists. Rings of
/// different sizes are rejected immediately; otherwise both must be at
/// most `max_size` elements or CapabilityError is thrown ("undecided").
std::optional<ElementMap> ring_isomorphic(const Ring& left, const Ring& right, std::size_t max_size);

} // namespace comax
