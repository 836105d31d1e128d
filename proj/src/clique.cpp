#include <algorithm>
#include <numeric>

#include "comax/errors.hpp"
#include "comax/solvers.hpp"

namespace comax {

namespace {

/// Branch and bound over a degree-ordered relabelling of the graph, so bit
/// order equals branching order.
class MaxCliqueSearch {
  public:
    explicit MaxCliqueSearch(const SimpleGraph& g) : n_(g.size())
    {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
        std::vector<std::size_t> position(n_);
        for (std::size_t i = 0; i < n_; ++i)
            position[order_[i]] = i;
        rows_.assign(n_, Bitset(n_));
        for (std::size_t i = 0; i < n_; ++i)
            g.row(order_[i]).for_each([&](std::size_t j) { rows_[i].set(position[j]); });
    }

    CliqueResult run()
    {
        Bitset candidates(n_);
        candidates.set_all();
        std::vector<std::size_t> current;
        if (n_ > 0)
            best_ = {0};
        expand(candidates, current);
        CliqueResult out;
        for (auto v : best_)
            out.witness.push_back(order_[v]);
        std::sort(out.witness.begin(), out.witness.end());
        out.size = out.witness.size();
        return out;
    }

  private:
    void expand(Bitset& candidates, std::vector<std::size_t>& current)
    {
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        Bitset uncoloured = candidates;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset q = uncoloured;
            for (auto v = q.find_first(); v < n_; v = q.find_next(v + 1)) {
                uncoloured.reset(v);
                q.and_not(rows_[v]);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size())
                return;
            const auto v = order[i];
            current.push_back(v);
            Bitset next = candidates & rows_[v];
            if (next.none()) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            candidates.reset(v);
        }
    }

    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<Bitset> rows_;
    std::vector<std::size_t> best_;
};

} // namespace

CliqueResult greedy_clique(const SimpleGraph& g)
{
    CliqueResult out;
    if (g.size() == 0)
        return out;
    Bitset candidates(g.size());
    candidates.set_all();
    for (auto v = candidates.find_first(); v < g.size(); v = candidates.find_next(v + 1)) {
        out.witness.push_back(v);
        candidates &= g.row(v);
    }
    out.size = out.witness.size();
    return out;
}

CliqueResult clique_number(const SimpleGraph& g, std::size_t max_vertices)
{
    if (g.size() > max_vertices)
        throw CapabilityError("clique number undecided: " + std::to_string(g.size()) +
                                  " vertices exceeds exact-solver cap " + std::to_string(max_vertices),
                              greedy_clique(g).size);
    return MaxCliqueSearch(g).run();
}

bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

} // namespace comax
