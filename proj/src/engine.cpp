#include "indpoly/engine.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "indpoly/errors.hpp"

namespace indpoly {

namespace detail {

using Word = std::uint64_t;

/// Fixed-width vertex set over the vertices of one graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    void set(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }
    int count_and(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    VertexSet minus(const VertexSet& o) const {
        VertexSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }
    VertexSet intersect(const VertexSet& o) const {
        VertexSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (Word w = words_[i]; w; w &= w - 1) f(static_cast<int>(i * 64) + std::countr_zero(w));
    }
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

private:
    std::vector<Word> words_;
};

}  // namespace detail

using detail::VertexSet;

class Recurrence {
public:
    Recurrence(IndependencePolynomialEngine& engine, const Graph& g) : engine_(engine), n_(g.order()) {
        adj_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
        for (int v = 0; v < n_; ++v)
            for (Vertex u : g.neighbors(v)) adj_[v].set(u);
    }

    IntPolynomial run() {
        VertexSet all(n_);
        for (int v = 0; v < n_; ++v) all.set(v);
        return solve(all);
    }

private:
    IntPolynomial solve(const VertexSet& s) {
        if (s.none()) return IntPolynomial::constant(1);
        IntPolynomial result = IntPolynomial::constant(1);
        VertexSet rest = s;
        while (!rest.none()) {
            VertexSet comp = component_of(rest.first(), rest);
            result *= solve_connected(comp);
            rest = rest.minus(comp);
        }
        return result;
    }

    VertexSet component_of(int start, const VertexSet& within) const {
        VertexSet comp(n_), frontier(n_);
        comp.set(start);
        frontier.set(start);
        while (!frontier.none()) {
            VertexSet next(n_);
            frontier.for_each([&](int v) {
                adj_[v].intersect(within).minus(comp).for_each([&](int u) {
                    comp.set(u);
                    next.set(u);
                });
            });
            frontier = std::move(next);
        }
        return comp;
    }

    IntPolynomial solve_connected(const VertexSet& c) {
        const int k = c.count();
        if (k == 1) return IntPolynomial{1, 1};

        std::vector<int> verts;
        verts.reserve(static_cast<std::size_t>(k));
        c.for_each([&](int v) { verts.push_back(v); });

        int pivot = -1, best = -1;
        long degree_sum = 0;
        for (int v : verts) {
            int d = adj_[v].count_and(c);
            degree_sum += d;
            if (d > best) best = d, pivot = v;
        }
        if (degree_sum == long(k) * (k - 1)) return IntPolynomial{1, k};  // clique

        std::string key = encode(verts);
        if (const IntPolynomial* hit = engine_.lookup(key)) return *hit;

        VertexSet without = c;
        without.reset(pivot);
        VertexSet closed = adj_[pivot];
        closed.set(pivot);
        IntPolynomial p = solve(without) + solve(c.minus(closed)).shifted(1);
        engine_.store(std::move(key), p);
        return p;
    }

    // Order followed by the upper-triangle adjacency bits of the induced
    // subgraph, vertices relabelled by increasing original index.
    std::string encode(const std::vector<int>& verts) const {
        const std::size_t k = verts.size();
        std::string key;
        key.reserve(4 + (k * (k - 1) / 2 + 7) / 8);
        for (int shift = 0; shift < 32; shift += 8) key.push_back(static_cast<char>((k >> shift) & 0xff));
        unsigned char acc = 0;
        int used = 0;
        for (std::size_t j = 1; j < k; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                acc = static_cast<unsigned char>((acc << 1) | (adj_[verts[i]].test(verts[j]) ? 1 : 0));
                if (++used == 8) {
                    key.push_back(static_cast<char>(acc));
                    acc = 0;
                    used = 0;
                }
            }
        }
        if (used) key.push_back(static_cast<char>(acc << (8 - used)));
        return key;
    }

    IndependencePolynomialEngine& engine_;
    int n_;
    std::vector<VertexSet> adj_;
};

const IntPolynomial* IndependencePolynomialEngine::lookup(const std::string& key) {
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        ++misses_;
        return nullptr;
    }
    ++hits_;
    return &it->second;
}

void IndependencePolynomialEngine::store(std::string key, const IntPolynomial& value) {
    if (capacity_ == 0) return;
    while (cache_.size() >= capacity_ && !order_.empty()) {
        cache_.erase(order_.front());
        order_.pop_front();
    }
    auto [it, inserted] = cache_.emplace(std::move(key), value);
    if (inserted) order_.push_back(it->first);
}

void IndependencePolynomialEngine::clear_cache() {
    cache_.clear();
    order_.clear();
}

IntPolynomial IndependencePolynomialEngine::compute(const Graph& g) { return Recurrence(*this, g).run(); }

IntPolynomial independence_polynomial(const Graph& g) {
    IndependencePolynomialEngine engine;
    return engine.compute(g);
}

IntPolynomial brute_force_independence_polynomial(const Graph& g, int vertex_cap) {
    const int n = g.order();
    if (n > vertex_cap || n > 62)
        throw RefusalError("brute-force oracle refused: order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(vertex_cap));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool independent = true;
        for (std::uint64_t m = mask; m && independent; m &= m - 1)
            independent = (adj[std::countr_zero(m)] & mask) == 0;
        if (independent) ++counts[std::popcount(mask)];
    }
    std::vector<BigInt> c(counts.begin(), counts.end());
    return IntPolynomial(std::move(c));
}

namespace {

// Σ p_j x^j (1 + k x)^(n - j), by homogeneous Horner in (x, 1 + kx).
IntPolynomial homogenize(const IntPolynomial& p, int n, int k) {
    if (p.degree() > n)
        throw std::invalid_argument("polynomial degree " + std::to_string(p.degree()) +
                                    " exceeds graph order " + std::to_string(n));
    if (p.is_zero()) return {};
    const int alpha = p.degree();
    IntPolynomial acc = IntPolynomial::constant(p.coeff(0));
    for (int j = 1; j <= alpha; ++j) {
        acc.multiply_linear(1, k);
        acc += IntPolynomial::monomial(p.coeff(j), j);
    }
    for (int j = alpha; j < n; ++j) acc.multiply_linear(1, k);
    return acc;
}

}  // namespace

IntPolynomial transfer_leafy(const IntPolynomial& p, int n) { return homogenize(p, n, 1); }

std::size_t iterated_degree(int n, int k) {
    if (k <= 0) throw std::invalid_argument("iterated_degree requires k >= 1");
    if (k - 1 >= 63) throw std::overflow_error("iterated degree overflows");
    return static_cast<std::size_t>(n) << (k - 1);
}

IntPolynomial transfer_iterated(const IntPolynomial& p, int n, int k) {
    if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    if (k == 0) {
        if (p.degree() > n) throw std::invalid_argument("polynomial degree exceeds graph order");
        return p;
    }
    (void)iterated_degree(n, k);
    IntPolynomial out = homogenize(p, n, k);
    for (int l = 1; l <= k - 1; ++l) {
        const std::size_t e = static_cast<std::size_t>(n) << (k - l - 1);
        for (std::size_t t = 0; t < e; ++t) out.multiply_linear(1, l);
    }
    return out;
}

IntPolynomial substitute_lexicographic(const IntPolynomial& p, int m) {
    if (m < 1) throw std::invalid_argument("substitute_lexicographic requires m >= 1");
    if (m == 1) return p;
    IntPolynomial inner = IntPolynomial::linear_power(1, 1, static_cast<unsigned>(m)) - IntPolynomial::constant(1);
    return p.compose(inner);
}

}  // namespace indpoly
