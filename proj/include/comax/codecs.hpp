#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "comax/ring.hpp"

namespace comax {

/// Z/n, element index = residue.
std::shared_ptr<const RingCodec> make_zn_codec(std::uint32_t n);

/// F_p[x]/(f) with f monic of degree d >= 1, given as coefficients from
/// the constant term up. Element index = coefficient vector read as a
/// base-p number, constant term least significant.
std::shared_ptr<const RingCodec> make_poly_quotient_codec(std::uint32_t p, std::vector<std::uint32_t> coeffs);

/// F_p + F_p^k with (a,v)(b,w) = (ab, aw + bv). Element index = the tuple
/// (a, v_1, ..., v_k) read as a base-p number, a most significant.
std::shared_ptr<const RingCodec> make_square_zero_codec(std::uint32_t p, std::uint32_t k);

/// Componentwise product. Mixed-radix index, first factor most significant.
std::shared_ptr<const RingCodec> make_product_codec(std::vector<RingPtr> factors);

/// Explicit row-major tables. Element 0 must be the additive zero; the
/// negation table is derived from `add`.
std::shared_ptr<const RingCodec> make_table_codec(std::size_t size, Element one, std::vector<Element> add,
                                                  std::vector<Element> mul, std::vector<std::string> labels);

/// Operations on coset representatives of `parent` modulo an ideal.
/// `projection[x]` is the coset index of x, `representatives[c]` the
/// smallest element of coset c.
std::shared_ptr<const RingCodec> make_quotient_codec(RingPtr parent, std::vector<Element> projection,
                                                     std::vector<Element> representatives);

} // namespace comax
