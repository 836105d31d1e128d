#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comax/bitset.hpp"
#include "comax/ring.hpp"

namespace comax {

/// Undirected simple graph with bit-vector adjacency rows.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);
    SimpleGraph(std::vector<Bitset> rows, std::vector<std::string> labels, std::vector<Element> origin = {});

    std::size_t size() const { return rows_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& row(std::size_t v) const { return rows_[v]; }
    std::span<const Bitset> rows() const { return rows_; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    std::size_t edge_count() const;

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    /// Ring element behind each vertex; empty for synthetic graphs.
    const std::vector<Element>& origin() const { return origin_; }

    /// Edges (i, j) with i < j, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Symmetric, loop-free, rows of the right length.
    bool well_formed() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.rows_ == b.rows_; }

  private:
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
    std::vector<Element> origin_;
};

// Standard graphs.
SimpleGraph complete_graph(std::size_t n);
SimpleGraph empty_graph(std::size_t n);
SimpleGraph complete_bipartite(std::size_t m, std::size_t n);

// Graph algebra. Join and union place g1's vertices first.
SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2);
SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2);
SimpleGraph complement(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const std::size_t> vertices);

/// Which ring elements become vertices.
enum class Selector {
    full,      ///< all of R: Gamma(R)
    units,     ///< U(R): Gamma_1(R)
    nonunits,  ///< R \ U(R): Gamma_2(R)
    core,      ///< nonunits outside J(R): Gamma_2(R) \ J(R)
};

std::optional<Selector> parse_selector(std::string_view name);
std::string_view selector_name(Selector s);

/// Ring elements selected, ascending.
std::vector<Element> select_vertices(const Ring& ring, Selector selector);

/// Comaximal graph on the selected elements: distinct a, b adjacent iff no
/// maximal ideal contains both. Vertices appear in ascending element order.
/// A local ring's core is the empty graph.
SimpleGraph build_comaximal_graph(const Ring& ring, Selector selector);

/// Same graph via ideal closure on every pair, serially. Test oracle.
SimpleGraph build_comaximal_graph_by_closure(const Ring& ring, Selector selector);

struct GraphMetrics {
    enum class Diameter { empty, finite, infinite };

    std::size_t vertices = 0;
    std::size_t components = 0;
    bool connected = false;
    Diameter diameter_kind = Diameter::empty;
    std::uint32_t diameter = 0;  ///< meaningful when diameter_kind == finite

    std::string diameter_text() const;
};

/// Connectivity, component count and diameter. The empty graph reports
/// Diameter::empty; a disconnected graph reports Diameter::infinite.
GraphMetrics metrics(const SimpleGraph& g);
GraphMetrics metrics_serial(const SimpleGraph& g);

/// Shortest-path length, or nullopt when v is unreachable from u.
std::optional<std::uint32_t> distance(const SimpleGraph& g, std::size_t u, std::size_t v);

struct DegreeEntry {
    std::size_t degree = 0;
    std::size_t non_neighbors = 0;  ///< n - 1 - degree
};

std::vector<DegreeEntry> degree_profile(const SimpleGraph& g);

struct MultipartiteStructure {
    /// Two colour classes of a proper 2-colouring (each component's BFS root
    /// on side 0), when the graph is bipartite.
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> bipartite;
    /// Parts of a complete multipartite structure (non-adjacency classes),
    /// when non-adjacency is an equivalence relation. Ordered by smallest
    /// vertex.
    std::optional<std::vector<std::vector<std::size_t>>> complete_multipartite;

    /// Complete multipartite with exactly two parts.
    bool is_complete_bipartite() const
    {
        return complete_multipartite && complete_multipartite->size() == 2;
    }
};

MultipartiteStructure multipartite_structure(const SimpleGraph& g);

} // namespace comax
