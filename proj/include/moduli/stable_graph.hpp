#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moduli {

struct GraphVertex {
    int genus = 0;
};

// Unordered pair of vertex indices (a == b is a self-loop) plus the node
// thickness: the local equation of the total space at the node is
// x*y = t^thickness, so thickness 1 means the total space is smooth there.
struct GraphEdge {
    int a = 0;
    int b = 0;
    int thickness = 1;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Dual graph of a nodal curve: one vertex per component carrying its genus,
// one edge per node. Connected by construction; immutable afterwards.
class StableGraph {
public:
    StableGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        if (vertices_.empty())
            throw std::domain_error("a dual graph needs at least one vertex");
        const int v = static_cast<int>(vertices_.size());
        for (const auto& vert : vertices_)
            if (vert.genus < 0)
                throw std::domain_error("vertex genus must be nonnegative");
        for (auto& e : edges_) {
            if (e.a < 0 || e.a >= v || e.b < 0 || e.b >= v)
                throw std::domain_error("edge end out of range");
            if (e.thickness < 1)
                throw std::domain_error("edge thickness must be at least 1");
            if (e.a > e.b)
                std::swap(e.a, e.b);
        }
        if (!connected())
            throw std::domain_error("dual graph must be connected");
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    int genus_of(int v) const { return vertices_.at(static_cast<std::size_t>(v)).genus; }

    // Edge-ends incident to v; a self-loop contributes 2.
    int valence(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::domain_error("vertex index out of range");
        int count = 0;
        for (const auto& e : edges_) {
            if (e.a == v)
                ++count;
            if (e.b == v)
                ++count;
        }
        return count;
    }

    // Arithmetic genus: sum of vertex genera plus the first Betti number
    // E - V + 1 of the (connected) multigraph.
    int total_genus() const {
        int genus = edge_count() - vertex_count() + 1;
        for (const auto& v : vertices_)
            genus += v.genus;
        return genus;
    }

private:
    bool connected() const {
        std::vector<char> seen(vertices_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges_) {
                if (e.a == v && !seen[static_cast<std::size_t>(e.b)]) {
                    seen[static_cast<std::size_t>(e.b)] = 1;
                    stack.push_back(e.b);
                }
                if (e.b == v && !seen[static_cast<std::size_t>(e.a)]) {
                    seen[static_cast<std::size_t>(e.a)] = 1;
                    stack.push_back(e.a);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }

    std::vector<GraphVertex> vertices_;
    std::vector<GraphEdge> edges_;
};

enum class GraphStability { Stable, SemistableNotStable, NotSemistable };

inline const char* to_string(GraphStability s) {
    switch (s) {
    case GraphStability::Stable: return "stable";
    case GraphStability::SemistableNotStable: return "semistable_not_stable";
    default: return "not_semistable";
    }
}

// Deligne-Mumford condition on rational components: genus-0 vertices need
// valence >= 3 for stability, >= 2 for semistability. Higher-genus vertices
// are unconstrained.
inline GraphStability stability_class(const StableGraph& g) {
    bool strictly_semistable = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.genus_of(v) != 0)
            continue;
        const int val = g.valence(v);
        if (val < 2)
            return GraphStability::NotSemistable;
        if (val == 2)
            strictly_semistable = true;
    }
    return strictly_semistable ? GraphStability::SemistableNotStable : GraphStability::Stable;
}

} // namespace moduli
