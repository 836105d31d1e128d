#include "comax/graph.hpp"

#include <algorithm>
#include <deque>

#include "comax/errors.hpp"
#include "comax/kernels.hpp"
#include "comax/ring_ops.hpp"

namespace comax {

SimpleGraph::SimpleGraph(std::size_t n) : rows_(n, Bitset(n)), labels_(n)
{
    for (std::size_t i = 0; i < n; ++i)
        labels_[i] = std::to_string(i);
}

SimpleGraph::SimpleGraph(std::vector<Bitset> rows, std::vector<std::string> labels, std::vector<Element> origin)
    : rows_(std::move(rows)), labels_(std::move(labels)), origin_(std::move(origin))
{
    if (labels_.empty())
        for (std::size_t i = 0; i < rows_.size(); ++i)
            labels_.push_back(std::to_string(i));
    if (labels_.size() != rows_.size() || (!origin_.empty() && origin_.size() != rows_.size()))
        throw ArgumentError("graph labels/origin must have one entry per vertex");
}

std::size_t SimpleGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& r : rows_)
        twice += r.count();
    return twice / 2;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u == v)
        throw ArgumentError("simple graphs have no loops");
    rows_[u].set(v);
    rows_[v].set(u);
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v)
{
    rows_[u].reset(v);
    rows_[v].reset(u);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (auto j = rows_[i].find_next(i + 1); j < rows_.size(); j = rows_[i].find_next(j + 1))
            out.emplace_back(i, j);
    return out;
}

bool SimpleGraph::well_formed() const
{
    const auto n = rows_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i].size() != n || rows_[i].test(i))
            return false;
        for (std::size_t j = 0; j < n; ++j)
            if (rows_[i].test(j) != rows_[j].test(i))
                return false;
    }
    return true;
}

SimpleGraph complete_graph(std::size_t n)
{
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

SimpleGraph empty_graph(std::size_t n)
{
    return SimpleGraph(n);
}

SimpleGraph complete_bipartite(std::size_t m, std::size_t n)
{
    return join(empty_graph(m), empty_graph(n));
}

namespace {

SimpleGraph place_side_by_side(const SimpleGraph& g1, const SimpleGraph& g2, bool cross)
{
    const auto n1 = g1.size(), n2 = g2.size(), n = n1 + n2;
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t i = 0; i < n1; ++i) {
        g1.row(i).for_each([&](std::size_t j) { rows[i].set(j); });
        if (cross)
            for (std::size_t j = 0; j < n2; ++j)
                rows[i].set(n1 + j);
    }
    for (std::size_t i = 0; i < n2; ++i) {
        g2.row(i).for_each([&](std::size_t j) { rows[n1 + i].set(n1 + j); });
        if (cross)
            for (std::size_t j = 0; j < n1; ++j)
                rows[n1 + i].set(j);
    }
    std::vector<std::string> labels = g1.labels();
    labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
    std::vector<Element> origin;
    if (!g1.origin().empty() && !g2.origin().empty()) {
        origin = g1.origin();
        origin.insert(origin.end(), g2.origin().begin(), g2.origin().end());
    }
    return SimpleGraph(std::move(rows), std::move(labels), std::move(origin));
}

} // namespace

SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2)
{
    return place_side_by_side(g1, g2, true);
}

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2)
{
    return place_side_by_side(g1, g2, false);
}

SimpleGraph complement(const SimpleGraph& g)
{
    const auto n = g.size();
    std::vector<Bitset> rows(g.rows().begin(), g.rows().end());
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].flip();
        rows[i].reset(i);
    }
    return SimpleGraph(std::move(rows), g.labels(), g.origin());
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const std::size_t> vertices)
{
    const auto n = vertices.size();
    std::vector<Bitset> rows(n, Bitset(n));
    std::vector<std::string> labels;
    std::vector<Element> origin;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                rows[i].set(j);
        labels.push_back(g.labels()[vertices[i]]);
        if (!g.origin().empty())
            origin.push_back(g.origin()[vertices[i]]);
    }
    return SimpleGraph(std::move(rows), std::move(labels), std::move(origin));
}

std::optional<Selector> parse_selector(std::string_view name)
{
    if (name == "full")
        return Selector::full;
    if (name == "units")
        return Selector::units;
    if (name == "nonunits")
        return Selector::nonunits;
    if (name == "core")
        return Selector::core;
    return std::nullopt;
}

std::string_view selector_name(Selector s)
{
    switch (s) {
    case Selector::full:
        return "full";
    case Selector::units:
        return "units";
    case Selector::nonunits:
        return "nonunits";
    case Selector::core:
        return "core";
    }
    return "";
}

std::vector<Element> select_vertices(const Ring& ring, Selector selector)
{
    std::vector<Element> out;
    const auto& units = ring.unit_flags();
    const auto& radical = ring.jacobson_radical();
    for (Element x = 0; x < ring.size(); ++x) {
        bool keep = true;
        switch (selector) {
        case Selector::full:
            break;
        case Selector::units:
            keep = units.test(x);
            break;
        case Selector::nonunits:
            keep = !units.test(x);
            break;
        case Selector::core:
            keep = !units.test(x) && !radical.contains(x);
            break;
        }
        if (keep)
            out.push_back(x);
    }
    return out;
}

namespace {

std::vector<std::string> element_labels(const Ring& ring, const std::vector<Element>& vertices)
{
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (auto v : vertices)
        labels.push_back(ring.label(v));
    return labels;
}

} // namespace

SimpleGraph build_comaximal_graph(const Ring& ring, Selector selector)
{
    auto vertices = select_vertices(ring, selector);
    auto rows = kernels::signature_adjacency(ring.signatures(), vertices);
    auto labels = element_labels(ring, vertices);
    return SimpleGraph(std::move(rows), std::move(labels), std::move(vertices));
}

SimpleGraph build_comaximal_graph_by_closure(const Ring& ring, Selector selector)
{
    auto vertices = select_vertices(ring, selector);
    const auto n = vertices.size();
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (is_comaximal_by_closure(ring, vertices[i], vertices[j])) {
                rows[i].set(j);
                rows[j].set(i);
            }
    auto labels = element_labels(ring, vertices);
    return SimpleGraph(std::move(rows), std::move(labels), std::move(vertices));
}

std::string GraphMetrics::diameter_text() const
{
    switch (diameter_kind) {
    case Diameter::empty:
        return "empty";
    case Diameter::infinite:
        return "infinite";
    case Diameter::finite:
        return std::to_string(diameter);
    }
    return {};
}

namespace {

std::size_t count_components(const SimpleGraph& g)
{
    const auto n = g.size();
    Bitset seen(n);
    std::size_t components = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen.test(s))
            continue;
        ++components;
        Bitset frontier(n);
        frontier.set(s);
        seen.set(s);
        while (frontier.any()) {
            Bitset next(n);
            frontier.for_each([&](std::size_t v) { next |= g.row(v); });
            next.and_not(seen);
            seen |= next;
            frontier = std::move(next);
        }
    }
    return components;
}

GraphMetrics summarize(const SimpleGraph& g, const std::vector<std::uint32_t>& ecc)
{
    GraphMetrics m;
    m.vertices = g.size();
    if (g.size() == 0)
        return m;
    m.components = count_components(g);
    m.connected = m.components == 1;
    if (!m.connected) {
        m.diameter_kind = GraphMetrics::Diameter::infinite;
        return m;
    }
    m.diameter_kind = GraphMetrics::Diameter::finite;
    m.diameter = *std::max_element(ecc.begin(), ecc.end());
    return m;
}

} // namespace

GraphMetrics metrics(const SimpleGraph& g)
{
    if (g.size() == 0)
        return {};
    return summarize(g, kernels::eccentricities(g.rows()));
}

GraphMetrics metrics_serial(const SimpleGraph& g)
{
    if (g.size() == 0)
        return {};
    return summarize(g, kernels::eccentricities_serial(g.rows()));
}

std::optional<std::uint32_t> distance(const SimpleGraph& g, std::size_t u, std::size_t v)
{
    if (u >= g.size() || v >= g.size())
        throw ArgumentError("vertex index out of range");
    auto dist = kernels::bfs_distances(g.rows(), u);
    if (dist[v] == kernels::unreachable)
        return std::nullopt;
    return dist[v];
}

std::vector<DegreeEntry> degree_profile(const SimpleGraph& g)
{
    std::vector<DegreeEntry> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        out[v].degree = g.degree(v);
        out[v].non_neighbors = g.size() - 1 - out[v].degree;
    }
    return out;
}

MultipartiteStructure multipartite_structure(const SimpleGraph& g)
{
    const auto n = g.size();
    MultipartiteStructure out;

    std::vector<int> side(n, -1);
    bool two_colourable = true;
    for (std::size_t s = 0; s < n && two_colourable; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty() && two_colourable) {
            const auto v = queue.front();
            queue.pop_front();
            g.row(v).for_each([&](std::size_t w) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    two_colourable = false;
                }
            });
        }
    }
    if (two_colourable) {
        std::pair<std::vector<std::size_t>, std::vector<std::size_t>> parts;
        for (std::size_t v = 0; v < n; ++v)
            (side[v] == 0 ? parts.first : parts.second).push_back(v);
        out.bipartite = std::move(parts);
    }

    // Complete multipartite iff "u == v or u not adjacent to v" is an
    // equivalence; its classes are the parts.
    std::vector<std::vector<std::size_t>> parts;
    Bitset placed(n);
    bool equivalence = true;
    for (std::size_t v = 0; v < n && equivalence; ++v) {
        if (placed.test(v))
            continue;
        Bitset cls = g.row(v);
        cls.flip();  // non-neighbours, including v itself
        for (const auto u : cls.indices()) {
            Bitset other = g.row(u);
            other.flip();
            if (!(other == cls)) {
                equivalence = false;
                break;
            }
        }
        if (!equivalence)
            break;
        auto members = cls.indices();
        placed |= cls;
        parts.push_back(std::move(members));
    }
    if (equivalence)
        out.complete_multipartite = std::move(parts);
    return out;
}

} // namespace comax
