#include "comax/codecs.hpp"

#include <array>

#include "comax/errors.hpp"

namespace comax {

namespace {

class ZnCodec final : public RingCodec {
  public:
    explicit ZnCodec(std::uint32_t n) : n_(n) {}
    std::size_t size() const override { return n_; }
    Element one() const override { return 1; }
    Element add(Element a, Element b) const override
    {
        auto s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    Element mul(Element a, Element b) const override
    {
        return static_cast<Element>(std::uint64_t{a} * b % n_);
    }
    Element neg(Element a) const override { return a == 0 ? 0 : n_ - a; }
    std::string label(Element a) const override { return std::to_string(a); }

  private:
    std::uint32_t n_;
};

/// Labels a coefficient vector as a sum of monomials. `terms[i]` names the
/// basis element for coefficient i ("" for the constant 1).
std::string linear_label(const std::vector<std::uint32_t>& coeffs, const std::vector<std::string>& terms)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (terms[i].empty())
            out += std::to_string(coeffs[i]);
        else {
            if (coeffs[i] != 1)
                out += std::to_string(coeffs[i]);
            out += terms[i];
        }
    }
    return out.empty() ? "0" : out;
}

class PolyQuotientCodec final : public RingCodec {
  public:
    PolyQuotientCodec(std::uint32_t p, std::vector<std::uint32_t> coeffs)
        : p_(p), degree_(static_cast<std::uint32_t>(coeffs.size() - 1)), modulus_(std::move(coeffs))
    {
        size_ = 1;
        for (std::uint32_t i = 0; i < degree_; ++i)
            size_ *= p_;
        one_ = 1;
        for (std::uint32_t i = degree_; i-- > 0;) {
            std::string t = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
            terms_desc_.push_back(std::move(t));
        }
    }

    std::size_t size() const override { return size_; }
    Element one() const override { return one_; }

    Element add(Element a, Element b) const override
    {
        Element out = 0, place = 1;
        for (std::uint32_t i = 0; i < degree_; ++i) {
            out += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return out;
    }

    Element neg(Element a) const override
    {
        Element out = 0, place = 1;
        for (std::uint32_t i = 0; i < degree_; ++i) {
            out += ((p_ - a % p_) % p_) * place;
            a /= p_;
            place *= p_;
        }
        return out;
    }

    Element mul(Element a, Element b) const override
    {
        std::array<std::uint32_t, 64> x{}, y{}, prod{};
        decode(a, x);
        decode(b, y);
        for (std::uint32_t i = 0; i < degree_; ++i)
            if (x[i])
                for (std::uint32_t j = 0; j < degree_; ++j)
                    prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        // Reduce modulo the monic f from the top down.
        for (std::uint32_t k = 2 * degree_; k-- > degree_;) {
            auto c = prod[k];
            if (!c)
                continue;
            for (std::uint32_t i = 0; i <= degree_; ++i)
                prod[k - degree_ + i] = (prod[k - degree_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        Element out = 0;
        for (std::uint32_t i = degree_; i-- > 0;)
            out = out * p_ + prod[i];
        return out;
    }

    std::string label(Element a) const override
    {
        std::array<std::uint32_t, 64> x{};
        decode(a, x);
        std::vector<std::uint32_t> desc;
        for (std::uint32_t i = degree_; i-- > 0;)
            desc.push_back(x[i]);
        return linear_label(desc, terms_desc_);
    }

  private:
    void decode(Element a, std::array<std::uint32_t, 64>& out) const
    {
        for (std::uint32_t i = 0; i < degree_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
    }

    std::uint32_t p_;
    std::uint32_t degree_;
    std::vector<std::uint32_t> modulus_;
    std::size_t size_;
    Element one_;
    std::vector<std::string> terms_desc_;
};

class SquareZeroCodec final : public RingCodec {
  public:
    SquareZeroCodec(std::uint32_t p, std::uint32_t k) : p_(p), k_(k)
    {
        size_ = p;
        for (std::uint32_t i = 0; i < k; ++i)
            size_ *= p;
        vector_span_ = static_cast<Element>(size_ / p);
        terms_.push_back("");
        static const char* names[] = {"x", "y", "z", "w"};
        for (std::uint32_t i = 0; i < k; ++i)
            terms_.push_back(k <= 4 ? names[i] : "x" + std::to_string(i + 1));
    }

    std::size_t size() const override { return size_; }
    Element one() const override { return vector_span_; }

    Element add(Element a, Element b) const override { return digitwise(a, b, false); }
    Element neg(Element a) const override { return digitwise(0, a, true); }

    Element mul(Element a, Element b) const override
    {
        const auto sa = a / vector_span_, sb = b / vector_span_;
        const auto va = a % vector_span_, vb = b % vector_span_;
        // scalar*vector acts digitwise on the k-vector part.
        Element out = 0, place = 1;
        Element x = va, y = vb;
        for (std::uint32_t i = 0; i < k_; ++i) {
            out += ((sa * (y % p_) + sb * (x % p_)) % p_) * place;
            x /= p_;
            y /= p_;
            place *= p_;
        }
        return (sa * sb % p_) * vector_span_ + out;
    }

    std::string label(Element a) const override
    {
        std::vector<std::uint32_t> coeffs(k_ + 1);
        coeffs[0] = a / vector_span_;
        Element v = a % vector_span_;
        for (std::uint32_t i = k_; i >= 1; --i) {
            coeffs[i] = v % p_;
            v /= p_;
        }
        return linear_label(coeffs, terms_);
    }

  private:
    Element digitwise(Element a, Element b, bool negate_b) const
    {
        Element out = 0, place = 1;
        for (std::uint32_t i = 0; i <= k_; ++i) {
            auto db = b % p_;
            if (negate_b)
                db = (p_ - db) % p_;
            out += ((a % p_ + db) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return out;
    }

    std::uint32_t p_;
    std::uint32_t k_;
    std::size_t size_;
    Element vector_span_;
    std::vector<std::string> terms_;
};

class ProductCodec final : public RingCodec {
  public:
    explicit ProductCodec(std::vector<RingPtr> factors) : factors_(std::move(factors))
    {
        size_ = 1;
        for (const auto& f : factors_)
            size_ *= f->size();
        one_ = encode([&](std::size_t i) { return factors_[i]->one(); });
    }

    std::size_t size() const override { return size_; }
    Element one() const override { return one_; }

    Element add(Element a, Element b) const override
    {
        return combine(a, b, [](const Ring& r, Element x, Element y) { return r.add(x, y); });
    }
    Element mul(Element a, Element b) const override
    {
        return combine(a, b, [](const Ring& r, Element x, Element y) { return r.mul(x, y); });
    }
    Element neg(Element a) const override
    {
        return combine(a, 0, [](const Ring& r, Element x, Element) { return r.neg(x); });
    }

    std::string label(Element a) const override
    {
        std::array<Element, 16> parts{};
        decode(a, parts);
        std::string out = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i)
                out += ',';
            out += factors_[i]->label(parts[i]);
        }
        return out + ")";
    }

  private:
    template <typename F>
    Element encode(F&& component) const
    {
        Element out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out = out * static_cast<Element>(factors_[i]->size()) + component(i);
        return out;
    }

    void decode(Element a, std::array<Element, 16>& parts) const
    {
        for (std::size_t i = factors_.size(); i-- > 0;) {
            const auto s = static_cast<Element>(factors_[i]->size());
            parts[i] = a % s;
            a /= s;
        }
    }

    template <typename Op>
    Element combine(Element a, Element b, Op op) const
    {
        std::array<Element, 16> x{}, y{};
        decode(a, x);
        decode(b, y);
        return encode([&](std::size_t i) { return op(*factors_[i], x[i], y[i]); });
    }

    std::vector<RingPtr> factors_;
    std::size_t size_;
    Element one_;
};

class TableCodec final : public RingCodec {
  public:
    TableCodec(std::size_t size, Element one, std::vector<Element> add, std::vector<Element> mul,
               std::vector<std::string> labels)
        : size_(size), one_(one), add_(std::move(add)), mul_(std::move(mul)), labels_(std::move(labels)),
          neg_(size, 0)
    {
        for (Element a = 0; a < size_; ++a)
            for (Element b = 0; b < size_; ++b)
                if (add_[a * size_ + b] == 0) {
                    neg_[a] = b;
                    break;
                }
    }

    std::size_t size() const override { return size_; }
    Element one() const override { return one_; }
    Element add(Element a, Element b) const override { return add_[a * size_ + b]; }
    Element mul(Element a, Element b) const override { return mul_[a * size_ + b]; }
    Element neg(Element a) const override { return neg_[a]; }
    std::string label(Element a) const override
    {
        return labels_.empty() ? std::to_string(a) : labels_[a];
    }

  private:
    std::size_t size_;
    Element one_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<std::string> labels_;
    std::vector<Element> neg_;
};

class QuotientCodec final : public RingCodec {
  public:
    QuotientCodec(RingPtr parent, std::vector<Element> projection, std::vector<Element> reps)
        : parent_(std::move(parent)), proj_(std::move(projection)), reps_(std::move(reps))
    {
    }

    std::size_t size() const override { return reps_.size(); }
    Element one() const override { return proj_[parent_->one()]; }
    Element add(Element a, Element b) const override { return proj_[parent_->add(reps_[a], reps_[b])]; }
    Element mul(Element a, Element b) const override { return proj_[parent_->mul(reps_[a], reps_[b])]; }
    Element neg(Element a) const override { return proj_[parent_->neg(reps_[a])]; }
    std::string label(Element a) const override { return "[" + parent_->label(reps_[a]) + "]"; }

  private:
    RingPtr parent_;
    std::vector<Element> proj_;
    std::vector<Element> reps_;
};

} // namespace

std::shared_ptr<const RingCodec> make_zn_codec(std::uint32_t n)
{
    if (n < 2)
        throw ArgumentError("Z/n requires n >= 2");
    return std::make_shared<ZnCodec>(n);
}

std::shared_ptr<const RingCodec> make_poly_quotient_codec(std::uint32_t p, std::vector<std::uint32_t> coeffs)
{
    if (coeffs.size() < 2 || coeffs.back() != 1)
        throw ArgumentError("polynomial modulus must be monic of degree >= 1");
    if (coeffs.size() > 33)
        throw ResourceError("polynomial modulus degree too large");
    return std::make_shared<PolyQuotientCodec>(p, std::move(coeffs));
}

std::shared_ptr<const RingCodec> make_square_zero_codec(std::uint32_t p, std::uint32_t k)
{
    if (k < 1)
        throw ArgumentError("SQZ(p,k) requires k >= 1");
    return std::make_shared<SquareZeroCodec>(p, k);
}

std::shared_ptr<const RingCodec> make_product_codec(std::vector<RingPtr> factors)
{
    if (factors.size() < 2)
        throw ArgumentError("product needs at least two factors");
    if (factors.size() > 16)
        throw ResourceError("product of more than 16 factors");
    return std::make_shared<ProductCodec>(std::move(factors));
}

std::shared_ptr<const RingCodec> make_table_codec(std::size_t size, Element one, std::vector<Element> add,
                                                  std::vector<Element> mul, std::vector<std::string> labels)
{
    if (add.size() != size * size || mul.size() != size * size)
        throw ArgumentError("operation tables must have size^2 entries");
    if (!labels.empty() && labels.size() != size)
        throw ArgumentError("labels must have one entry per element");
    return std::make_shared<TableCodec>(size, one, std::move(add), std::move(mul), std::move(labels));
}

std::shared_ptr<const RingCodec> make_quotient_codec(RingPtr parent, std::vector<Element> projection,
                                                     std::vector<Element> representatives)
{
    return std::make_shared<QuotientCodec>(std::move(parent), std::move(projection),
                                           std::move(representatives));
}

} // namespace comax
