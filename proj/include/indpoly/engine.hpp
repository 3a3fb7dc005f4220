#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <unordered_map>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

inline constexpr std::size_t kDefaultMemoCapacity = std::size_t{1} << 20;
inline constexpr int kDefaultBruteForceCap = 24;

/// Computes i(G, x) with the vertex recurrence
///
///     i(G) = i(G - v) + x * i(G - N[v])
///
/// pivoting on a maximum-degree vertex (lowest index on ties), multiplying
/// across connected components, and memoising connected induced subgraphs by
/// their relabelled adjacency. The cache may be reused across graphs; it holds
/// at most `memo_capacity` entries and evicts oldest-first.
///
/// Not thread-safe: use one engine per worker.
class IndependencePolynomialEngine {
public:
    explicit IndependencePolynomialEngine(std::size_t memo_capacity = kDefaultMemoCapacity)
        : capacity_(memo_capacity) {}

    IntPolynomial compute(const Graph& g);

    std::size_t cache_size() const noexcept { return cache_.size(); }
    std::size_t cache_hits() const noexcept { return hits_; }
    std::size_t cache_misses() const noexcept { return misses_; }
    void clear_cache();

private:
    friend class Recurrence;
    const IntPolynomial* lookup(const std::string& key);
    void store(std::string key, const IntPolynomial& value);

    std::size_t capacity_;
    std::unordered_map<std::string, IntPolynomial> cache_;
    std::deque<std::string> order_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

/// Convenience wrapper with a fresh engine.
IntPolynomial independence_polynomial(const Graph& g);

/// Test oracle: enumerates every vertex subset. Throws RefusalError when the
/// order exceeds `vertex_cap`.
IntPolynomial brute_force_independence_polynomial(const Graph& g,
                                                  int vertex_cap = kDefaultBruteForceCap);

/// Σ i_k x^k (1 + x)^(n - k) = (1 + x)^n i(G, x / (1 + x)): the independence
/// polynomial of the leafy extension of an order-n graph with i(G) = p.
IntPolynomial transfer_leafy(const IntPolynomial& p, int n);

/// i(G^{k*}) = i(G, x/(kx+1)) (kx+1)^n ∏_{l=1}^{k-1} (lx+1)^(n 2^(k-l-1)),
/// evaluated as Σ i_j x^j (kx+1)^(n-j) times the product, never by division.
/// k = 0 returns p.
IntPolynomial transfer_iterated(const IntPolynomial& p, int n, int k);

/// Degree of transfer_iterated(p, n, k), i.e. n 2^(k-1).
std::size_t iterated_degree(int n, int k);

/// i(G[K̄_m], x) = i(G, (1 + x)^m - 1).
IntPolynomial substitute_lexicographic(const IntPolynomial& p, int m);

}  // namespace indpoly
