#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comax/ring.hpp"

namespace comax {

/// Element-level map between two rings.
struct ElementMap {
    std::string source;
    std::string target;
    std::vector<Element> mapping;
    bool homomorphism = false;
    bool isomorphism = false;
};

/// Smallest ideal containing `generators` (worklist closure under addition
/// and multiplication by every ring element). Throws ArgumentError on an
/// empty or out-of-range generator set.
IdealSet ideal_closure(const Ring& ring, std::span<const Element> generators);

/// True iff the members form an ideal.
bool is_ideal(const Ring& ring, const Bitset& members);

/// Ra + Rb = R, decided from maximal-ideal signatures. For a == b this is
/// true iff a is a unit; graphs never ask that question.
bool is_comaximal(const Ring& ring, Element a, Element b);

/// Same question answered by ideal closure, independent of signatures.
bool is_comaximal_by_closure(const Ring& ring, Element a, Element b);

/// Intersection of all maximal ideals.
IdealSet radical_by_intersection(const Ring& ring);

/// Every ideal of the ring, by closing {0} under "add one generator".
/// Sorted. Intended for small rings only.
std::vector<IdealSet> all_ideals(const Ring& ring);

/// Maximal ideals by the definition: proper ideals M with M + Rx = R for
/// every x outside M. Sorted.
std::vector<IdealSet> maximal_ideals_brute_force(const Ring& ring);

struct QuotientRing {
    RingPtr ring;
    ElementMap projection;
};

/// R/I on smallest coset representatives, plus the projection map.
/// Throws ArgumentError if `ideal` is not a proper ideal of `ring`.
QuotientRing quotient(const RingPtr& ring, const IdealSet& ideal);

/// Componentwise product. Throws ResourceError above `max_size` elements.
RingPtr direct_product(const RingPtr& left, const RingPtr& right, std::size_t max_size);
RingPtr direct_product(std::vector<RingPtr> factors, std::size_t max_size);

struct CleanDecomposition {
    bool clean = false;
    /// (idempotent, unit) per element, indexed by element, when clean.
    std::vector<std::pair<Element, Element>> witnesses;
    std::optional<Element> counterexample;
};

CleanDecomposition is_clean(const Ring& ring);

/// |R|/|M| for each maximal ideal M, ascending.
std::vector<std::size_t> residue_field_sizes(const Ring& ring);

struct AxiomViolation {
    std::string axiom;
    std::vector<Element> witness;
};

/// Checks every ring axiom, exhaustively up to dense_table_limit elements
/// and on `samples` pseudo-random triples above it.
std::optional<AxiomViolation> check_ring_axioms(const Ring& ring, std::size_t samples = 200000,
                                                std::uint64_t seed = 0x5eed);

/// Checks that `map` preserves zero, one, addition and multiplication, and
/// (when `bijective` is set) is a bijection.
bool verify_ring_map(const Ring& source, const Ring& target, std::span<const Element> map, bool bijective);

} // namespace comax
