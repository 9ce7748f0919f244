#pragma once

#include "moduli/errors.hpp"
#include "moduli/rational.hpp"
#include "moduli/stable_graph.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace moduli {

inline constexpr int kCanonicalVertexLimit = 16;

// Total-order key identifying the isomorphism class of a stable graph as a
// genus-labeled, thickness-labeled multigraph. Built thickness-blind, the
// key ignores thickness. Keys from the two variants are not comparable with
// each other.
struct GraphClass {
    std::vector<long long> key;

    friend auto operator<=>(const GraphClass&, const GraphClass&) = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i)
                s += '.';
            s += std::to_string(key[i]);
        }
        return s;
    }
};

namespace detail {

// table[a][b] = sorted thicknesses of the edges joining a and b; the
// diagonal holds self-loop thicknesses.
inline std::vector<std::vector<std::vector<int>>> thickness_table(const StableGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector table(n, std::vector(n, std::vector<int>()));
    for (const auto& e : g.edges()) {
        table[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)].push_back(e.thickness);
        if (e.a != e.b)
            table[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)].push_back(e.thickness);
    }
    for (auto& row : table)
        for (auto& cell : row)
            std::sort(cell.begin(), cell.end());
    return table;
}

// (genus, valence, loop count): invariant under isomorphism in both the
// thickness-aware and thickness-blind senses.
inline std::vector<std::array<int, 3>> vertex_signatures(const StableGraph& g) {
    std::vector<std::array<int, 3>> sig;
    sig.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        int loops = 0;
        for (const auto& e : g.edges())
            if (e.a == v && e.b == v)
                ++loops;
        sig.push_back({g.genus_of(v), g.valence(v), loops});
    }
    return sig;
}

// Minimizes the flattened adjacency stream over all vertex orderings whose
// signature sequence is sorted; since the key starts with that sequence,
// those are exactly the orderings that can realize the minimum. Backtracking
// with prefix pruning against the best stream found so far.
class CanonicalSearch {
public:
    CanonicalSearch(const StableGraph& g, bool blind)
        : vcount_(g.vertex_count()), blind_(blind), table_(thickness_table(g)),
          sig_(vertex_signatures(g)), required_(sig_) {
        std::sort(required_.begin(), required_.end());
        used_.assign(static_cast<std::size_t>(vcount_), 0);
        assigned_.assign(static_cast<std::size_t>(vcount_), -1);
    }

    void run() { dfs(0, 0); }

    const std::vector<long long>& best_stream() const { return best_stream_; }
    const std::vector<int>& best_order() const { return best_order_; }
    const std::vector<std::array<int, 3>>& required() const { return required_; }

private:
    void append_cell(const std::vector<int>& cell) {
        cur_.push_back(static_cast<long long>(cell.size()));
        if (!blind_)
            for (int t : cell)
                cur_.push_back(t);
    }

    void append_row(int pos, int vertex) {
        const auto& row = table_[static_cast<std::size_t>(vertex)];
        for (int j = 0; j < pos; ++j)
            append_cell(row[static_cast<std::size_t>(assigned_[static_cast<std::size_t>(j)])]);
        append_cell(row[static_cast<std::size_t>(vertex)]);
    }

    int compare_tail(std::size_t from) const {
        for (std::size_t i = from; i < cur_.size(); ++i) {
            if (i >= best_stream_.size())
                return 1;
            if (cur_[i] != best_stream_[i])
                return cur_[i] < best_stream_[i] ? -1 : 1;
        }
        return 0;
    }

    // cmp: 0 = stream equals the best prefix so far, -1 = already strictly
    // below it. Returns whether the subtree replaced the best; on a
    // replacement the caller's prefix coincides with the new best bytewise,
    // so its status resets to "equal".
    bool dfs(int pos, int cmp) {
        const bool have_best = !best_order_.empty();
        if (pos == vcount_) {
            if (!have_best || cmp < 0) {
                best_stream_ = cur_;
                best_order_ = assigned_;
                return true;
            }
            return false;
        }
        bool updated = false;
        for (int v = 0; v < vcount_; ++v) {
            if (used_[static_cast<std::size_t>(v)] ||
                sig_[static_cast<std::size_t>(v)] != required_[static_cast<std::size_t>(pos)])
                continue;
            const std::size_t mark = cur_.size();
            append_row(pos, v);
            int next = cmp;
            if (!best_order_.empty() && cmp == 0)
                next = compare_tail(mark);
            if (best_order_.empty() || next <= 0) {
                used_[static_cast<std::size_t>(v)] = 1;
                assigned_[static_cast<std::size_t>(pos)] = v;
                if (dfs(pos + 1, best_order_.empty() ? 0 : next)) {
                    updated = true;
                    cmp = 0;
                }
                used_[static_cast<std::size_t>(v)] = 0;
                assigned_[static_cast<std::size_t>(pos)] = -1;
            }
            cur_.resize(mark);
        }
        return updated;
    }

    int vcount_;
    bool blind_;
    std::vector<std::vector<std::vector<int>>> table_;
    std::vector<std::array<int, 3>> sig_;
    std::vector<std::array<int, 3>> required_;
    std::vector<char> used_;
    std::vector<int> assigned_;
    std::vector<long long> cur_;
    std::vector<long long> best_stream_;
    std::vector<int> best_order_;
};

} // namespace detail

struct CanonicalLabeling {
    GraphClass cls;
    std::vector<int> order; // order[k] = original vertex placed at position k
};

inline CanonicalLabeling canonical_labeling(const StableGraph& g, bool thickness_blind = false) {
    if (g.vertex_count() > kCanonicalVertexLimit)
        throw capacity_error("canonicalization limited to graphs with at most 16 vertices");
    detail::CanonicalSearch search(g, thickness_blind);
    search.run();
    GraphClass cls;
    cls.key.push_back(g.vertex_count());
    cls.key.push_back(g.edge_count());
    for (const auto& sig : search.required()) {
        cls.key.push_back(sig[0]);
        cls.key.push_back(sig[1]);
        cls.key.push_back(sig[2]);
    }
    cls.key.insert(cls.key.end(), search.best_stream().begin(), search.best_stream().end());
    return {std::move(cls), search.best_order()};
}

inline GraphClass canonical_form(const StableGraph& g, bool thickness_blind = false) {
    return canonical_labeling(g, thickness_blind).cls;
}

// Applies a vertex ordering: vertex order[k] of g becomes vertex k. Edges
// come out normalized and sorted, so equal orderings give identical graphs.
inline StableGraph relabeled(const StableGraph& g, const std::vector<int>& order) {
    const int v = g.vertex_count();
    if (static_cast<int>(order.size()) != v)
        throw std::domain_error("vertex ordering must cover every vertex exactly once");
    std::vector<int> position(static_cast<std::size_t>(v), -1);
    for (int k = 0; k < v; ++k) {
        const int orig = order[static_cast<std::size_t>(k)];
        if (orig < 0 || orig >= v || position[static_cast<std::size_t>(orig)] != -1)
            throw std::domain_error("vertex ordering must cover every vertex exactly once");
        position[static_cast<std::size_t>(orig)] = k;
    }
    std::vector<GraphVertex> verts(static_cast<std::size_t>(v));
    for (int k = 0; k < v; ++k)
        verts[static_cast<std::size_t>(k)] = g.vertices()[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    std::vector<GraphEdge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int a = position[static_cast<std::size_t>(e.a)];
        int b = position[static_cast<std::size_t>(e.b)];
        if (a > b)
            std::swap(a, b);
        edges.push_back({a, b, e.thickness});
    }
    std::sort(edges.begin(), edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::tie(x.a, x.b, x.thickness) < std::tie(y.a, y.b, y.thickness);
    });
    return StableGraph(std::move(verts), std::move(edges));
}

// Graph-automorphism count in the stable-graph convention: vertex
// permutations preserving genus and thickness, times the matchings of
// parallel identical edges, times 2 per self-loop for its orientations.
inline BigInt automorphism_count(const StableGraph& g) {
    if (g.vertex_count() > kCanonicalVertexLimit)
        throw capacity_error("automorphism counting limited to graphs with at most 16 vertices");
    const auto table = detail::thickness_table(g);
    const auto sig = detail::vertex_signatures(g);
    const int v = g.vertex_count();

    std::vector<int> image(static_cast<std::size_t>(v), -1);
    std::vector<char> used(static_cast<std::size_t>(v), 0);
    long long valid = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == v) {
            ++valid;
            return;
        }
        for (int w = 0; w < v; ++w) {
            if (used[static_cast<std::size_t>(w)] ||
                sig[static_cast<std::size_t>(w)] != sig[static_cast<std::size_t>(i)])
                continue;
            bool ok = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] ==
                      table[static_cast<std::size_t>(w)][static_cast<std::size_t>(w)];
            for (int u = 0; ok && u < i; ++u)
                ok = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] ==
                     table[static_cast<std::size_t>(w)][static_cast<std::size_t>(
                         image[static_cast<std::size_t>(u)])];
            if (!ok)
                continue;
            used[static_cast<std::size_t>(w)] = 1;
            image[static_cast<std::size_t>(i)] = w;
            self(self, i + 1);
            used[static_cast<std::size_t>(w)] = 0;
            image[static_cast<std::size_t>(i)] = -1;
        }
    };
    rec(rec, 0);

    std::map<std::tuple<int, int, int>, int> classes;
    int loops = 0;
    for (const auto& e : g.edges()) {
        ++classes[{e.a, e.b, e.thickness}];
        if (e.a == e.b)
            ++loops;
    }
    BigInt total = valid;
    for (const auto& [cls, count] : classes)
        for (int i = 2; i <= count; ++i)
            total *= i;
    total <<= loops;
    return total;
}

} // namespace moduli
