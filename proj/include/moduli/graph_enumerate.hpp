#pragma once

#include "moduli/errors.hpp"
#include "moduli/graph_canonical.hpp"
#include "moduli/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace moduli {

namespace detail {

// Stability forces sum_v (2*genus(v) - 2 + valence(v)) = 2g - 2 with every
// summand >= 1, which bounds V <= 2g - 2; E = g - sum(genus) + V - 1 then
// gives E <= 3g - 3. Candidates are generated per genus partition and degree
// sequence, deduplicated by canonical form.
class StableGraphEnumerator {
public:
    StableGraphEnumerator(int genus, std::optional<int> edge_filter)
        : genus_(genus), edge_filter_(edge_filter) {}

    std::vector<StableGraph> run() {
        int vmax = std::max(1, 2 * genus_ - 2);
        if (edge_filter_)
            vmax = std::min(vmax, *edge_filter_ + 1);
        for (int v = 1; v <= vmax; ++v) {
            vcount_ = v;
            genus_vec_.assign(static_cast<std::size_t>(v), 0);
            fill_genus(0, genus_);
        }
        std::vector<std::pair<std::pair<int, GraphClass>, StableGraph>> ordered;
        for (auto& [key, graph] : found_)
            ordered.push_back({{graph.edge_count(), key}, graph});
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<StableGraph> result;
        result.reserve(ordered.size());
        for (auto& entry : ordered)
            result.push_back(std::move(entry.second));
        return result;
    }

private:
    // Non-increasing genus vectors with sum <= g; E is then determined by
    // the first Betti number g - sum.
    void fill_genus(int index, int cap) {
        if (index == vcount_) {
            int sum = 0;
            for (int g : genus_vec_)
                sum += g;
            if (sum > genus_)
                return;
            edge_target_ = (genus_ - sum) + vcount_ - 1;
            if (edge_filter_ && edge_target_ != *edge_filter_)
                return;
            start_degrees();
            return;
        }
        for (int g = 0; g <= cap; ++g) {
            genus_vec_[static_cast<std::size_t>(index)] = g;
            fill_genus(index + 1, g);
        }
        genus_vec_[static_cast<std::size_t>(index)] = 0;
    }

    void start_degrees() {
        min_degree_.assign(static_cast<std::size_t>(vcount_), 0);
        int min_total = 0;
        for (int v = 0; v < vcount_; ++v) {
            const int need = genus_vec_[static_cast<std::size_t>(v)] == 0 ? 3
                             : vcount_ > 1                                ? 1
                                                                          : 0;
            min_degree_[static_cast<std::size_t>(v)] = need;
            min_total += need;
        }
        if (min_total > 2 * edge_target_)
            return;
        degree_.assign(static_cast<std::size_t>(vcount_), 0);
        fill_degrees(0, 2 * edge_target_, min_total);
    }

    void fill_degrees(int v, int left, int min_rest) {
        if (v == vcount_ - 1) {
            if (left >= min_degree_[static_cast<std::size_t>(v)]) {
                degree_[static_cast<std::size_t>(v)] = left;
                start_multigraphs();
            }
            return;
        }
        const int vmin = min_degree_[static_cast<std::size_t>(v)];
        for (int d = vmin; d <= left - (min_rest - vmin); ++d) {
            degree_[static_cast<std::size_t>(v)] = d;
            fill_degrees(v + 1, left - d, min_rest - vmin);
        }
    }

    void start_multigraphs() {
        remaining_ = degree_;
        loops_.assign(static_cast<std::size_t>(vcount_), 0);
        mult_.assign(static_cast<std::size_t>(vcount_),
                     std::vector<int>(static_cast<std::size_t>(vcount_), 0));
        place_vertex(0);
    }

    // Consumes vertex v's remaining degree with self-loops and edges to
    // later vertices; earlier pairs are already fixed.
    void place_vertex(int v) {
        if (v == vcount_) {
            emit();
            return;
        }
        const int rem = remaining_[static_cast<std::size_t>(v)];
        for (int l = 0; 2 * l <= rem; ++l) {
            loops_[static_cast<std::size_t>(v)] = l;
            distribute(v, v + 1, rem - 2 * l);
        }
        loops_[static_cast<std::size_t>(v)] = 0;
    }

    void distribute(int v, int w, int rem) {
        if (w == vcount_) {
            if (rem == 0)
                place_vertex(v + 1);
            return;
        }
        int available = 0;
        for (int u = w; u < vcount_; ++u)
            available += remaining_[static_cast<std::size_t>(u)];
        if (available < rem)
            return;
        const int cap = std::min(rem, remaining_[static_cast<std::size_t>(w)]);
        for (int m = 0; m <= cap; ++m) {
            mult_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = m;
            remaining_[static_cast<std::size_t>(w)] -= m;
            distribute(v, w + 1, rem - m);
            remaining_[static_cast<std::size_t>(w)] += m;
        }
        mult_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 0;
    }

    void emit() {
        std::vector<GraphEdge> edges;
        for (int v = 0; v < vcount_; ++v) {
            for (int l = 0; l < loops_[static_cast<std::size_t>(v)]; ++l)
                edges.push_back({v, v, 1});
            for (int w = v + 1; w < vcount_; ++w)
                for (int m = 0; m < mult_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]; ++m)
                    edges.push_back({v, w, 1});
        }
        if (!connected(edges))
            return;
        std::vector<GraphVertex> verts;
        verts.reserve(static_cast<std::size_t>(vcount_));
        for (int g : genus_vec_)
            verts.push_back({g});
        StableGraph graph(std::move(verts), std::move(edges));
        auto labeling = canonical_labeling(graph);
        if (!found_.contains(labeling.cls))
            found_.emplace(std::move(labeling.cls), relabeled(graph, labeling.order));
    }

    bool connected(const std::vector<GraphEdge>& edges) const {
        std::vector<char> seen(static_cast<std::size_t>(vcount_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                for (const int next : {e.a == v ? e.b : -1, e.b == v ? e.a : -1}) {
                    if (next >= 0 && !seen[static_cast<std::size_t>(next)]) {
                        seen[static_cast<std::size_t>(next)] = 1;
                        ++count;
                        stack.push_back(next);
                    }
                }
            }
        }
        return count == vcount_;
    }

    int genus_;
    std::optional<int> edge_filter_;
    int vcount_ = 0;
    int edge_target_ = 0;
    std::vector<int> genus_vec_;
    std::vector<int> min_degree_;
    std::vector<int> degree_;
    std::vector<int> remaining_;
    std::vector<int> loops_;
    std::vector<std::vector<int>> mult_;
    std::map<GraphClass, StableGraph> found_;
};

} // namespace detail

// Exhaustive, duplicate-free list of isomorphism classes of stable graphs of
// the given total genus, all edges thickness 1, sorted by (edge count,
// canonical key). With edge_count set, only classes with exactly that many
// edges are produced; the restricted search is cheap, so it is allowed past
// the genus guard up to 3 edges.
inline std::vector<StableGraph> enumerate_stable_graphs(int genus,
                                                        std::optional<int> edge_count = std::nullopt) {
    if (genus < 2)
        throw capacity_error("enumeration supports genus >= 2");
    if (!edge_count && genus > 5)
        throw capacity_error("full enumeration supports genus <= 5");
    if (edge_count && *edge_count < 0)
        throw std::domain_error("edge count must be nonnegative");
    if (edge_count && genus > 5 && *edge_count > 3)
        throw capacity_error("edge-restricted enumeration above genus 5 supports at most 3 edges");
    return detail::StableGraphEnumerator(genus, edge_count).run();
}

} // namespace moduli
