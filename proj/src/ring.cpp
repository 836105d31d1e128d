#include "comax/ring.hpp"

#include <mutex>

#include "comax/caps.hpp"
#include "comax/errors.hpp"
#include "comax/kernels.hpp"

namespace comax {

std::vector<Element> IdealSet::elements() const
{
    std::vector<Element> out;
    members_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
    return out;
}

struct Ring::Cache {
    std::once_flag units_once;
    Bitset unit_flags;

    std::once_flag radical_once;
    IdealSet radical;

    std::once_flag maximal_once;
    std::vector<IdealSet> maximal;
    std::vector<std::uint64_t> signatures;
    std::uint64_t full_signature = 0;

    std::once_flag idempotent_once;
    std::vector<Element> idempotents;

    std::once_flag nilpotent_once;
    Bitset nilpotent;
};

Ring::Ring(std::shared_ptr<const RingCodec> codec, std::string name)
    : codec_(std::move(codec)), name_(std::move(name)), size_(codec_->size()), one_(codec_->one()),
      cache_(std::make_unique<Cache>())
{
    if (size_ < 2)
        throw ArgumentError("ring must have at least two elements (zero != one)");
    if (one_ == 0 || one_ >= size_)
        throw ArgumentError("ring identity must be a nonzero valid element");
    if (size_ <= dense_table_limit) {
        add_table_.resize(size_ * size_);
        mul_table_.resize(size_ * size_);
        neg_table_.resize(size_);
        for (Element a = 0; a < size_; ++a) {
            neg_table_[a] = static_cast<std::uint16_t>(codec_->neg(a));
            for (Element b = 0; b < size_; ++b) {
                add_table_[a * size_ + b] = static_cast<std::uint16_t>(codec_->add(a, b));
                mul_table_[a * size_ + b] = static_cast<std::uint16_t>(codec_->mul(a, b));
            }
        }
    }
}

Ring::~Ring() = default;

std::string Ring::label(Element a) const
{
    return codec_->label(a);
}

Element Ring::eval(Op op, Element a, Element b) const
{
    const bool binary = op != Op::neg;
    if (a >= size_ || (binary && b >= size_))
        throw ArgumentError("element index out of range for ring of size " + std::to_string(size_));
    switch (op) {
    case Op::add:
        return add(a, b);
    case Op::mul:
        return mul(a, b);
    case Op::sub:
        return sub(a, b);
    case Op::neg:
        return neg(a);
    }
    return 0;
}

const Bitset& Ring::unit_flags() const
{
    std::call_once(cache_->units_once, [this] {
        auto flags = kernels::unit_scan(*this);
        Bitset bits(size_);
        for (std::size_t i = 0; i < size_; ++i)
            bits.set(i, flags[i] != 0);
        cache_->unit_flags = std::move(bits);
    });
    return cache_->unit_flags;
}

std::vector<Element> Ring::units() const
{
    std::vector<Element> out;
    unit_flags().for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
    return out;
}

const IdealSet& Ring::jacobson_radical() const
{
    std::call_once(cache_->radical_once, [this] {
        auto flags = kernels::radical_scan(*this, unit_flags());
        Bitset bits(size_);
        for (std::size_t i = 0; i < size_; ++i)
            bits.set(i, flags[i] != 0);
        cache_->radical = IdealSet(std::move(bits));
    });
    return cache_->radical;
}

const std::vector<IdealSet>& Ring::maximal_ideals() const
{
    std::call_once(cache_->maximal_once, [this] {
        // Work in S = R/J through coset indices: proj maps an element to its
        // coset, reps maps a coset to its smallest member.
        const auto& radical = jacobson_radical().members();
        const auto radical_elems = radical.indices();
        std::vector<std::uint32_t> proj(size_, UINT32_MAX);
        std::vector<Element> reps;
        for (Element x = 0; x < size_; ++x) {
            if (proj[x] != UINT32_MAX)
                continue;
            const auto c = static_cast<std::uint32_t>(reps.size());
            reps.push_back(x);
            for (auto j : radical_elems)
                proj[add(x, static_cast<Element>(j))] = c;
        }

        std::vector<std::uint32_t> nonzero_idempotents;
        for (std::uint32_t c = 1; c < reps.size(); ++c)
            if (proj[mul(reps[c], reps[c])] == c)
                nonzero_idempotents.push_back(c);

        // Primitive: minimal under f <= e  <=>  f*e = f.
        std::vector<std::uint32_t> primitive;
        for (auto e : nonzero_idempotents) {
            bool minimal = true;
            for (auto f : nonzero_idempotents)
                if (f != e && proj[mul(reps[f], reps[e])] == f) {
                    minimal = false;
                    break;
                }
            if (minimal)
                primitive.push_back(e);
        }
        if (primitive.size() > 64)
            throw ResourceError("more than 64 maximal ideals");

        auto& maximal = cache_->maximal;
        for (auto e : primitive) {
            Bitset members(size_);
            for (Element x = 0; x < size_; ++x)
                if (proj[mul(x, reps[e])] == 0)
                    members.set(x);
            maximal.emplace_back(std::move(members));
        }

        cache_->signatures.assign(size_, 0);
        for (std::size_t i = 0; i < maximal.size(); ++i) {
            maximal[i].members().for_each(
                [&](std::size_t x) { cache_->signatures[x] |= std::uint64_t{1} << i; });
            cache_->full_signature |= std::uint64_t{1} << i;
        }
    });
    return cache_->maximal;
}

const std::vector<std::uint64_t>& Ring::signatures() const
{
    maximal_ideals();
    return cache_->signatures;
}

std::uint64_t Ring::full_signature() const
{
    maximal_ideals();
    return cache_->full_signature;
}

const std::vector<Element>& Ring::idempotents() const
{
    std::call_once(cache_->idempotent_once, [this] {
        for (Element x = 0; x < size_; ++x)
            if (mul(x, x) == x)
                cache_->idempotents.push_back(x);
    });
    return cache_->idempotents;
}

std::size_t Ring::additive_order(Element a) const
{
    std::size_t order = 1;
    for (Element acc = a; acc != 0; acc = add(acc, a))
        ++order;
    return order;
}

std::size_t Ring::characteristic() const
{
    return additive_order(one_);
}

bool Ring::is_nilpotent(Element a) const
{
    std::call_once(cache_->nilpotent_once, [this] {
        Bitset bits(size_);
        for (Element x = 0; x < size_; ++x) {
            // Nilpotency index is at most the composition length <= log2|R|.
            Element p = x;
            for (std::size_t k = 0; k < 64 && p != 0; ++k)
                p = mul(p, x);
            if (p == 0)
                bits.set(x);
        }
        cache_->nilpotent = std::move(bits);
    });
    return cache_->nilpotent.test(a);
}

std::size_t Ring::nilpotent_count() const
{
    is_nilpotent(0);
    return cache_->nilpotent.count();
}

} // namespace comax
