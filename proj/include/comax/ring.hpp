#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "comax/bitset.hpp"

namespace comax {

/// Dense element index, 0..size-1. Index 0 is always the additive zero.
using Element = std::uint32_t;

/// Element-level arithmetic for one ring construction. Implementations
/// define the index encoding; Ring layers caching and structure on top.
class RingCodec {
  public:
    virtual ~RingCodec() = default;
    virtual std::size_t size() const = 0;
    virtual Element one() const = 0;
    virtual Element add(Element a, Element b) const = 0;
    virtual Element mul(Element a, Element b) const = 0;
    virtual Element neg(Element a) const = 0;
    virtual std::string label(Element a) const = 0;
};

/// Subset of a ring closed under addition and multiplication by ring
/// elements, as a membership bit vector.
class IdealSet {
  public:
    IdealSet() = default;
    explicit IdealSet(Bitset members) : members_(std::move(members)) {}

    const Bitset& members() const { return members_; }
    std::size_t ring_size() const { return members_.size(); }
    std::size_t size() const { return members_.count(); }
    bool contains(Element a) const { return members_.test(a); }
    std::vector<Element> elements() const;

    friend bool operator==(const IdealSet&, const IdealSet&) = default;
    friend auto operator<=>(const IdealSet& a, const IdealSet& b) { return a.members_ <=> b.members_; }

  private:
    Bitset members_;
};

/// Finite commutative ring with identity. Immutable after construction;
/// derived structure (units, radical, maximal ideals, signatures) is
/// computed on first use and is safe to read from concurrent threads.
class Ring {
  public:
    /// Wraps `codec`. Rings up to dense_table_limit elements get
    /// materialized operation tables.
    Ring(std::shared_ptr<const RingCodec> codec, std::string name);
    ~Ring();
    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    std::size_t size() const { return size_; }
    Element zero() const { return 0; }
    Element one() const { return one_; }
    const std::string& name() const { return name_; }
    const RingCodec& codec() const { return *codec_; }
    bool has_dense_tables() const { return !add_table_.empty(); }

    // Unchecked hot-path arithmetic.
    Element add(Element a, Element b) const
    {
        return add_table_.empty() ? codec_->add(a, b) : add_table_[a * size_ + b];
    }
    Element mul(Element a, Element b) const
    {
        return mul_table_.empty() ? codec_->mul(a, b) : mul_table_[a * size_ + b];
    }
    Element neg(Element a) const { return neg_table_.empty() ? codec_->neg(a) : neg_table_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    std::string label(Element a) const;

    enum class Op { add, mul, neg, sub };
    /// Bounds-checked arithmetic; throws ArgumentError on a bad index.
    Element eval(Op op, Element a, Element b = 0) const;

    const Bitset& unit_flags() const;
    bool is_unit(Element a) const { return unit_flags().test(a); }
    std::vector<Element> units() const;
    std::size_t unit_count() const { return unit_flags().count(); }

    /// {x : 1 - r x is a unit for every r}.
    const IdealSet& jacobson_radical() const;

    /// Maximal ideals via primitive idempotents of R/J(R), in the order of
    /// their idempotent's smallest coset representative.
    const std::vector<IdealSet>& maximal_ideals() const;

    /// Bit i set iff a lies in maximal_ideals()[i].
    std::uint64_t signature(Element a) const { return signatures()[a]; }
    const std::vector<std::uint64_t>& signatures() const;
    std::uint64_t full_signature() const;

    /// {x : x*x = x}, ascending.
    const std::vector<Element>& idempotents() const;

    /// Additive order of one.
    std::size_t characteristic() const;
    bool is_nilpotent(Element a) const;
    std::size_t nilpotent_count() const;
    bool is_reduced() const { return nilpotent_count() == 1; }
    bool is_local() const { return maximal_ideals().size() == 1; }

    /// Additive order of a.
    std::size_t additive_order(Element a) const;

  private:
    struct Cache;

    std::shared_ptr<const RingCodec> codec_;
    std::string name_;
    std::size_t size_;
    Element one_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint16_t> neg_table_;
    std::unique_ptr<Cache> cache_;
};

using RingPtr = std::shared_ptr<const Ring>;

} // namespace comax
