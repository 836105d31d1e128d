#include <algorithm>

#include "comax/errors.hpp"
#include "comax/solvers.hpp"

namespace comax {

namespace {

constexpr std::size_t uncoloured = SIZE_MAX;

/// Saturation bookkeeping shared by the greedy and exact DSATUR passes.
class Saturation {
  public:
    Saturation(const SimpleGraph& g, std::size_t max_colours)
        : g_(g), colour_(g.size(), uncoloured), counts_(g.size() * max_colours, 0), saturation_(g.size(), 0),
          width_(max_colours)
    {
    }

    std::size_t colour(std::size_t v) const { return colour_[v]; }
    const std::vector<std::size_t>& colours() const { return colour_; }
    bool blocked(std::size_t v, std::size_t c) const { return counts_[v * width_ + c] != 0; }

    void assign(std::size_t v, std::size_t c)
    {
        colour_[v] = c;
        g_.row(v).for_each([&](std::size_t w) {
            if (counts_[w * width_ + c]++ == 0)
                ++saturation_[w];
        });
    }

    void unassign(std::size_t v)
    {
        const auto c = colour_[v];
        colour_[v] = uncoloured;
        g_.row(v).for_each([&](std::size_t w) {
            if (--counts_[w * width_ + c] == 0)
                --saturation_[w];
        });
    }

    /// Uncoloured vertex of maximum saturation; ties by degree, then lowest
    /// index. SIZE_MAX when everything is coloured.
    std::size_t pick() const
    {
        std::size_t best = uncoloured;
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (colour_[v] != uncoloured)
                continue;
            if (best == uncoloured || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

  private:
    const SimpleGraph& g_;
    std::vector<std::size_t> colour_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> saturation_;
    std::size_t width_;
};

class KColouring {
  public:
    KColouring(const SimpleGraph& g, std::size_t k, const std::vector<std::size_t>& clique)
        : state_(g, k), k_(k)
    {
        // Fixing a clique's colours removes colour-permutation symmetry.
        for (std::size_t i = 0; i < clique.size(); ++i)
            state_.assign(clique[i], i);
        used_ = clique.size();
    }

    bool run() { return search(); }
    const std::vector<std::size_t>& colours() const { return state_.colours(); }

  private:
    bool search()
    {
        const auto v = state_.pick();
        if (v == uncoloured)
            return true;
        const auto limit = std::min(k_, used_ + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (state_.blocked(v, c))
                continue;
            const auto saved = used_;
            used_ = std::max(used_, c + 1);
            state_.assign(v, c);
            if (search())
                return true;
            state_.unassign(v);
            used_ = saved;
        }
        return false;
    }

    Saturation state_;
    std::size_t k_;
    std::size_t used_ = 0;
};

} // namespace

ColoringResult dsatur_coloring(const SimpleGraph& g)
{
    ColoringResult out;
    const auto n = g.size();
    if (n == 0)
        return out;
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < n; ++v)
        max_degree = std::max(max_degree, g.degree(v));
    Saturation state(g, max_degree + 1);
    for (auto v = state.pick(); v != uncoloured; v = state.pick()) {
        std::size_t c = 0;
        while (state.blocked(v, c))
            ++c;
        state.assign(v, c);
        out.colors = std::max(out.colors, c + 1);
    }
    out.coloring = state.colours();
    return out;
}

ColoringResult chromatic_number(const SimpleGraph& g, std::size_t max_vertices)
{
    if (g.size() == 0)
        return {};
    auto upper = dsatur_coloring(g);
    if (g.size() > max_vertices)
        throw CapabilityError("chromatic number undecided: " + std::to_string(g.size()) +
                                  " vertices exceeds exact-solver cap " + std::to_string(max_vertices),
                              greedy_clique(g).size, upper.colors);
    const auto clique = clique_number(g, max_vertices);
    for (auto k = clique.size; k < upper.colors; ++k) {
        KColouring attempt(g, k, clique.witness);
        if (attempt.run())
            return {k, attempt.colours()};
    }
    return upper;
}

bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& coloring, std::size_t colors)
{
    if (coloring.size() != g.size())
        return false;
    for (auto c : coloring)
        if (c >= colors)
            return false;
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            return false;
    return true;
}

} // namespace comax
