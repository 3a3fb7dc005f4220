#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace indpoly {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Equality is labeled equality: same order and same edge set. The label is
/// informational and does not take part in comparisons.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order, const std::vector<Edge>& edges = {}, std::string label = {});

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adj_.empty(); }

    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    /// All edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    const std::string& label() const noexcept { return label_; }
    Graph with_label(std::string label) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
    std::string label_;
};

// Generators. Vertex numbering: path and cycle run 0-1-...-(n-1); star has
// centre 0; complete_bipartite puts the a-side on 0..a-1.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);

/// H's vertices are shifted up by |G|. No cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Disjoint union plus every G-H cross edge. Same numbering as disjoint_union.
Graph join(const Graph& g, const Graph& h);

/// Corona with K1: vertex i keeps its number and its pendant is n + i.
Graph leafy_extension(const Graph& g);

/// k-fold leafy extension; k = 0 returns g unchanged.
Graph iterated_leafy_extension(const Graph& g, int k);

/// G[K̄_m]: vertex (v, i) is numbered v * m + i, and (u,i)~(v,j) iff u~v.
Graph lexicographic_edgeless(const Graph& g, int m);

/// Largest order accepted by the maximal-independent-set enumerators.
inline constexpr int kDefaultMisVertexCap = 24;

bool is_well_covered(const Graph& g, int vertex_cap = kDefaultMisVertexCap);
bool is_very_well_covered(const Graph& g, int vertex_cap = kDefaultMisVertexCap);

/// Sizes of all maximal independent sets, one entry per set.
std::vector<int> maximal_independent_set_sizes(const Graph& g,
                                               int vertex_cap = kDefaultMisVertexCap);

}  // namespace indpoly
