#include "comax/graph_iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "comax/errors.hpp"

namespace comax {

namespace {

/// Renumbers `keys` densely in sorted key order.
template <typename Key>
std::size_t rank_keys(const std::vector<Key>& keys, std::vector<std::size_t>& out)
{
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.resize(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
        out[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    return sorted.size();
}

} // namespace

VertexColoring refine_colors(const SimpleGraph& g, std::vector<std::size_t> initial)
{
    const auto n = g.size();
    VertexColoring out;
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Key> keys(n);
    for (std::size_t i = 0; i < n; ++i)
        keys[i].first = initial[i];
    std::vector<std::size_t> colour;
    auto classes = rank_keys(keys, colour);
    while (true) {
        for (std::size_t v = 0; v < n; ++v) {
            keys[v].first = colour[v];
            keys[v].second.clear();
            g.row(v).for_each([&](std::size_t w) { keys[v].second.push_back(colour[w]); });
            std::sort(keys[v].second.begin(), keys[v].second.end());
        }
        std::vector<std::size_t> next;
        const auto next_classes = rank_keys(keys, next);
        colour = std::move(next);
        if (next_classes == classes)
            break;
        classes = next_classes;
    }
    out.color = std::move(colour);
    out.classes = classes;
    out.stable = true;
    return out;
}

bool verify_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const std::vector<std::size_t>& map)
{
    const auto n = g1.size();
    if (g2.size() != n || map.size() != n)
        return false;
    std::vector<char> hit(n, 0);
    for (auto w : map) {
        if (w >= n || hit[w])
            return false;
        hit[w] = 1;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v]))
                return false;
    return true;
}

namespace {

/// Graph with coloured vertices; colours are compared as part of the form.
struct ColouredGraph {
    SimpleGraph graph;
    std::vector<std::size_t> colour;
    /// Original vertices behind each reduced vertex, ascending.
    std::vector<std::vector<std::size_t>> members;
};

/// Collapses twin classes (equal open or equal closed neighbourhoods) to a
/// single vertex coloured by (class size, twin type). Two graphs are
/// isomorphic iff their reductions are isomorphic as coloured graphs.
ColouredGraph reduce_twins(const SimpleGraph& g)
{
    const auto n = g.size();
    std::vector<std::size_t> cls(n, SIZE_MAX);
    std::vector<std::size_t> kind;  // 0 singleton, 1 open twins, 2 closed twins
    std::vector<std::size_t> size;
    std::vector<std::size_t> rep;

    auto group = [&](bool closed) {
        std::unordered_map<Bitset, std::vector<std::size_t>, BitsetHash> buckets;
        for (std::size_t v = 0; v < n; ++v) {
            Bitset key = g.row(v);
            if (closed)
                key.set(v);
            buckets[key].push_back(v);
        }
        std::vector<std::vector<std::size_t>> groups;
        for (auto& [key, members] : buckets)
            if (members.size() >= 2)
                groups.push_back(std::move(members));
        std::sort(groups.begin(), groups.end());
        for (const auto& members : groups) {
            const auto id = kind.size();
            kind.push_back(closed ? 2 : 1);
            size.push_back(members.size());
            rep.push_back(members.front());
            for (auto v : members)
                cls[v] = id;
        }
    };
    group(false);
    group(true);
    for (std::size_t v = 0; v < n; ++v)
        if (cls[v] == SIZE_MAX) {
            cls[v] = kind.size();
            kind.push_back(0);
            size.push_back(1);
            rep.push_back(v);
        }

    const auto q = kind.size();
    SimpleGraph reduced(q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b)
            if (g.adjacent(rep[a], rep[b]))
                reduced.add_edge(a, b);
    // Colours must be comparable across graphs, so they encode the class
    // key directly rather than a per-graph rank.
    std::vector<std::size_t> colour(q);
    for (std::size_t a = 0; a < q; ++a)
        colour[a] = size[a] * 4 + kind[a];
    std::vector<std::vector<std::size_t>> members(q);
    for (std::size_t v = 0; v < n; ++v)
        members[cls[v]].push_back(v);
    return {std::move(reduced), std::move(colour), std::move(members)};
}

/// Exhaustive individualisation-refinement; keeps the smallest encoding
/// over all leaves of the search tree.
class CanonicalSearch {
  public:
    explicit CanonicalSearch(const ColouredGraph& cg) : g_(cg.graph), base_colour_(cg.colour) {}

    std::string run()
    {
        search(refine_colors(g_, base_colour_).color);
        return best_;
    }

  private:
    void search(const std::vector<std::size_t>& colour)
    {
        const auto n = g_.size();
        std::map<std::size_t, std::vector<std::size_t>> cells;
        for (std::size_t v = 0; v < n; ++v)
            cells[colour[v]].push_back(v);
        const std::vector<std::size_t>* target = nullptr;
        for (const auto& [c, members] : cells)
            if (members.size() > 1 && (!target || members.size() < target->size()))
                target = &members;
        if (!target) {
            leaf(colour);
            return;
        }
        for (auto v : *target) {
            // Individualise v: it sorts before the rest of its cell.
            std::vector<std::size_t> next(n);
            for (std::size_t u = 0; u < n; ++u)
                next[u] = colour[u] * 2 + (u == v ? 0 : 1);
            search(refine_colors(g_, std::move(next)).color);
        }
    }

    void leaf(const std::vector<std::size_t>& colour)
    {
        const auto n = g_.size();
        std::vector<std::size_t> at(n);
        for (std::size_t v = 0; v < n; ++v)
            at[colour[v]] = v;
        std::string code;
        for (std::size_t i = 0; i < n; ++i)
            code += std::to_string(base_colour_[at[i]]) + ",";
        code += "|";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                code += g_.adjacent(at[i], at[j]) ? '1' : '0';
        if (best_.empty() || code < best_)
            best_ = std::move(code);
    }

    const SimpleGraph& g_;
    std::vector<std::size_t> base_colour_;
    std::string best_;
};

/// Individualisation-refinement on the disjoint union of two coloured
/// graphs. Each branch individualises the smallest vertex of the smallest
/// non-singleton cell on the left against each candidate on the right.
class IsoSearch {
  public:
    IsoSearch(const ColouredGraph& left, const ColouredGraph& right)
        : left_(left), right_(right), n_(left.graph.size()), both_(disjoint_union(left.graph, right.graph))
    {
    }

    std::optional<std::vector<std::size_t>> run()
    {
        std::vector<std::size_t> initial = left_.colour;
        initial.insert(initial.end(), right_.colour.begin(), right_.colour.end());
        return search(refine_colors(both_, std::move(initial)).color);
    }

  private:
    std::optional<std::vector<std::size_t>> search(const std::vector<std::size_t>& colour)
    {
        std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cells;
        for (std::size_t v = 0; v < n_; ++v) {
            cells[colour[v]].first.push_back(v);
            cells[colour[n_ + v]].second.push_back(v);
        }
        const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>* target = nullptr;
        for (const auto& [c, cell] : cells) {
            if (cell.first.size() != cell.second.size())
                return std::nullopt;
            if (cell.first.size() > 1 && (!target || cell.first.size() < target->first.size()))
                target = &cell;
        }
        if (!target) {
            std::vector<std::size_t> map(n_);
            for (const auto& [c, cell] : cells)
                map[cell.first.front()] = cell.second.front();
            if (is_coloured_isomorphism(map))
                return map;
            return std::nullopt;
        }
        const auto v = target->first.front();
        for (auto w : target->second) {
            std::vector<std::size_t> next(2 * n_);
            for (std::size_t u = 0; u < 2 * n_; ++u)
                next[u] = colour[u] * 2 + (u == v || u == n_ + w ? 0 : 1);
            if (auto found = search(refine_colors(both_, std::move(next)).color))
                return found;
        }
        return std::nullopt;
    }

    bool is_coloured_isomorphism(const std::vector<std::size_t>& map) const
    {
        for (std::size_t u = 0; u < n_; ++u)
            if (left_.colour[u] != right_.colour[map[u]])
                return false;
        return verify_isomorphism(left_.graph, right_.graph, map);
    }

    const ColouredGraph& left_;
    const ColouredGraph& right_;
    std::size_t n_;
    SimpleGraph both_;
};

} // namespace

std::optional<std::vector<std::size_t>> are_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                                                       std::size_t max_vertices)
{
    if (g1.size() > max_vertices || g2.size() > max_vertices)
        throw CapabilityError("graph isomorphism undecided: more than " + std::to_string(max_vertices) +
                              " vertices");
    const auto n = g1.size();
    if (n != g2.size() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    std::vector<std::size_t> d1(n), d2(n);
    for (std::size_t v = 0; v < n; ++v) {
        d1[v] = g1.degree(v);
        d2[v] = g2.degree(v);
    }
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2)
        return std::nullopt;

    // Twins are interchangeable, so it suffices to match the reductions
    // and then pair up class members in ascending order.
    const auto r1 = reduce_twins(g1), r2 = reduce_twins(g2);
    if (r1.graph.size() != r2.graph.size())
        return std::nullopt;
    auto k1 = r1.colour, k2 = r2.colour;
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    if (k1 != k2)
        return std::nullopt;
    const auto reduced_map = IsoSearch(r1, r2).run();
    if (!reduced_map)
        return std::nullopt;

    std::vector<std::size_t> map(n);
    for (std::size_t a = 0; a < r1.graph.size(); ++a) {
        const auto& from = r1.members[a];
        const auto& to = r2.members[(*reduced_map)[a]];
        for (std::size_t i = 0; i < from.size(); ++i)
            map[from[i]] = to[i];
    }
    if (!verify_isomorphism(g1, g2, map))
        throw std::logic_error("graph isomorphism search produced an invalid witness");
    return map;
}

std::string canonical_certificate(const SimpleGraph& g, std::size_t max_vertices)
{
    if (g.size() > max_vertices)
        throw CapabilityError("canonical certificate undecided: " + std::to_string(g.size()) +
                              " vertices exceeds cap " + std::to_string(max_vertices));
    auto reduced = reduce_twins(g);
    return "n=" + std::to_string(g.size()) + ";q=" + std::to_string(reduced.graph.size()) + ";" +
           CanonicalSearch(reduced).run();
}

} // namespace comax
