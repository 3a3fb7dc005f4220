#include "indpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "indpoly/errors.hpp"

namespace indpoly {

Graph::Graph(int order, const std::vector<Edge>& edges, std::string label)
    : label_(std::move(label)) {
    if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
    adj_.resize(static_cast<std::size_t>(order));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph path(int n) {
    require(n >= 1, "path requires n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e, "P" + std::to_string(n));
}

Graph cycle(int n) {
    require(n >= 3, "cycle requires n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e, "C" + std::to_string(n));
}

Graph complete(int n) {
    require(n >= 1, "complete requires n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e, "K" + std::to_string(n));
}

Graph edgeless(int n) {
    // edgeless(0) is allowed: it is the identity for disjoint_union.
    require(n >= 0, "edgeless requires n >= 0");
    return Graph(n, {}, "E" + std::to_string(n));
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite requires a, b >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph star(int n) {
    require(n >= 1, "star requires n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e, "S" + std::to_string(n));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int shift = g.order();
    auto e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
    return Graph(g.order() + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
    const int shift = g.order();
    auto e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) e.emplace_back(u, v + shift);
    return Graph(g.order() + h.order(), e);
}

Graph leafy_extension(const Graph& g) {
    const int n = g.order();
    auto e = g.edges();
    for (int v = 0; v < n; ++v) e.emplace_back(v, n + v);
    return Graph(2 * n, e);
}

Graph iterated_leafy_extension(const Graph& g, int k) {
    require(k >= 0, "iteration count must be nonnegative");
    Graph out = g;
    for (int i = 0; i < k; ++i) out = leafy_extension(out);
    return out;
}

Graph lexicographic_edgeless(const Graph& g, int m) {
    require(m >= 1, "lexicographic_edgeless requires m >= 1");
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) e.emplace_back(u * m + i, v * m + j);
    return Graph(g.order() * m, e);
}

namespace {

using Mask = std::uint64_t;

// Maximal independent sets of G are the maximal cliques of its complement;
// Bron-Kerbosch with Tomita pivoting over the complement adjacency.
// `visit` returns false to stop the enumeration early.
void enumerate_mis(const Graph& g, int vertex_cap, const std::function<bool(int)>& visit) {
    const int n = g.order();
    if (n > vertex_cap || n > 64)
        throw RefusalError("maximal independent set enumeration refused: order " +
                           std::to_string(n) + " exceeds cap " + std::to_string(vertex_cap));
    if (n == 0) {
        visit(0);
        return;
    }
    std::vector<Mask> co(static_cast<std::size_t>(n));
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (int v = 0; v < n; ++v) {
        Mask m = all & ~(Mask{1} << v);
        for (Vertex u : g.neighbors(v)) m &= ~(Mask{1} << u);
        co[v] = m;
    }
    bool stop = false;
    std::function<void(int, Mask, Mask)> expand = [&](int size, Mask cand, Mask excl) {
        if (stop) return;
        if (cand == 0) {
            if (excl == 0 && !visit(size)) stop = true;
            return;
        }
        int pivot = -1, best = -1;
        for (Mask pool = cand | excl; pool; pool &= pool - 1) {
            int u = std::countr_zero(pool);
            int c = std::popcount(cand & co[u]);
            if (c > best) best = c, pivot = u;
        }
        for (Mask todo = cand & ~co[pivot]; todo; todo &= todo - 1) {
            int v = std::countr_zero(todo);
            Mask bit = Mask{1} << v;
            expand(size + 1, cand & co[v], excl & co[v]);
            if (stop) return;
            cand &= ~bit;
            excl |= bit;
        }
    };
    expand(0, all, 0);
}

}  // namespace

std::vector<int> maximal_independent_set_sizes(const Graph& g, int vertex_cap) {
    std::vector<int> sizes;
    enumerate_mis(g, vertex_cap, [&](int s) {
        sizes.push_back(s);
        return true;
    });
    return sizes;
}

bool is_well_covered(const Graph& g, int vertex_cap) {
    int first = -1;
    bool ok = true;
    enumerate_mis(g, vertex_cap, [&](int s) {
        if (first < 0) first = s;
        ok = s == first;
        return ok;
    });
    return ok;
}

bool is_very_well_covered(const Graph& g, int vertex_cap) {
    if (g.order() % 2 != 0) return false;
    const int half = g.order() / 2;
    bool ok = true;
    enumerate_mis(g, vertex_cap, [&](int s) {
        ok = s == half;
        return ok;
    });
    return ok;
}

}  // namespace indpoly
