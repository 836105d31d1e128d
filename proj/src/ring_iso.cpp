#include "comax/ring_iso.hpp"

#include <algorithm>
#include <tuple>

#include "comax/errors.hpp"

namespace comax {

RingInvariants ring_invariants(const Ring& ring)
{
    RingInvariants inv;
    inv.size = ring.size();
    inv.characteristic = ring.characteristic();
    inv.units = ring.unit_count();
    inv.idempotents = ring.idempotents().size();
    inv.nilpotents = ring.nilpotent_count();
    inv.residue_fields = residue_field_sizes(ring);
    return inv;
}

namespace {

/// Per-element invariants: any isomorphism maps an element to one with the
/// same profile.
using Profile = std::tuple<std::size_t, bool, bool, bool, std::size_t, std::size_t>;

std::vector<Profile> element_profiles(const Ring& r)
{
    const auto n = static_cast<Element>(r.size());
    std::vector<Profile> out(n);
    for (Element x = 0; x < n; ++x) {
        std::size_t annihilator = 0;
        Bitset multiples(n);
        for (Element y = 0; y < n; ++y) {
            const auto p = r.mul(x, y);
            annihilator += p == 0;
            multiples.set(p);
        }
        out[x] = {r.additive_order(x), r.is_unit(x), r.mul(x, x) == x, r.is_nilpotent(x), annihilator,
                  multiples.count()};
    }
    return out;
}

/// Backtracking over images of an additive generating set, starting with
/// one -> one. The partial map is always defined on the additive span of
/// the generators fixed so far.
class RingIsoSearch {
  public:
    RingIsoSearch(const Ring& a, const Ring& b) : a_(a), b_(b), n_(static_cast<Element>(a.size()))
    {
        pa_ = element_profiles(a_);
        pb_ = element_profiles(b_);
        Bitset span(n_);
        span.set(0);
        generators_.push_back(a_.one());
        extend_span(span, a_.one());
        for (Element x = 0; x < n_; ++x)
            if (!span.test(x)) {
                generators_.push_back(x);
                extend_span(span, x);
            }
    }

    std::optional<std::vector<Element>> run()
    {
        std::vector<Element> map(n_, UINT32_MAX);
        std::vector<char> used(n_, 0);
        map[0] = 0;
        used[0] = 1;
        std::vector<Element> domain{0};
        if (search(0, map, used, domain))
            return map;
        return std::nullopt;
    }

  private:
    void extend_span(Bitset& span, Element g) const
    {
        auto members = span.indices();
        for (auto s : members) {
            Element x = static_cast<Element>(s);
            for (x = a_.add(x, g); !span.test(x); x = a_.add(x, g))
                span.set(x);
        }
    }

    bool search(std::size_t gi, std::vector<Element>& map, std::vector<char>& used,
                std::vector<Element>& domain)
    {
        if (gi == generators_.size())
            return true;
        const auto g = generators_[gi];
        for (Element y = 0; y < n_; ++y) {
            if (gi == 0 && y != b_.one())
                continue;
            if (used[y] || pa_[g] != pb_[y])
                continue;
            const auto old_domain = domain.size();
            if (assign(g, y, map, used, domain) && consistent(map, domain) &&
                search(gi + 1, map, used, domain))
                return true;
            for (std::size_t i = old_domain; i < domain.size(); ++i) {
                used[map[domain[i]]] = 0;
                map[domain[i]] = UINT32_MAX;
            }
            domain.resize(old_domain);
        }
        return false;
    }

    /// Adds d + k*g -> map(d) + k*y for every mapped d. Fails on a clash
    /// with an existing image or on a non-injective image.
    bool assign(Element g, Element y, std::vector<Element>& map, std::vector<char>& used,
                std::vector<Element>& domain) const
    {
        const auto base = domain;
        for (auto d : base) {
            Element x = a_.add(d, g), fx = b_.add(map[d], y);
            while (x != d) {
                if (map[x] != UINT32_MAX) {
                    if (map[x] != fx)
                        return false;
                } else {
                    if (used[fx])
                        return false;
                    map[x] = fx;
                    used[fx] = 1;
                    domain.push_back(x);
                }
                x = a_.add(x, g);
                fx = b_.add(fx, y);
            }
            if (fx != map[d])
                return false;
        }
        return true;
    }

    bool consistent(const std::vector<Element>& map, const std::vector<Element>& domain) const
    {
        for (auto u : domain)
            for (auto v : domain) {
                if (map[a_.add(u, v)] != b_.add(map[u], map[v]))
                    return false;
                const auto p = a_.mul(u, v);
                if (map[p] != UINT32_MAX && map[p] != b_.mul(map[u], map[v]))
                    return false;
            }
        return true;
    }

    const Ring& a_;
    const Ring& b_;
    Element n_;
    std::vector<Profile> pa_, pb_;
    std::vector<Element> generators_;
};

} // namespace

std::optional<ElementMap> ring_isomorphic(const Ring& left, const Ring& right, std::size_t max_size)
{
    if (left.size() != right.size())
        return std::nullopt;
    if (left.size() > max_size)
        throw CapabilityError("ring isomorphism undecided at this scale: " + std::to_string(left.size()) +
                              " elements exceeds cap " + std::to_string(max_size));
    if (ring_invariants(left) != ring_invariants(right))
        return std::nullopt;

    auto map = RingIsoSearch(left, right).run();
    if (!map)
        return std::nullopt;
    if (!verify_ring_map(left, right, *map, true))
        throw std::logic_error("ring isomorphism search produced an invalid map");
    ElementMap out;
    out.source = left.name();
    out.target = right.name();
    out.mapping = std::move(*map);
    out.homomorphism = true;
    out.isomorphism = true;
    return out;
}

} // namespace comax
