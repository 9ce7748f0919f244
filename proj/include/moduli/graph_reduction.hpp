#pragma once

#include "moduli/stable_graph.hpp"

#include <stdexcept>
#include <vector>

namespace moduli {

// Pullback along t -> s^degree on a reduced nodal model: every node
// thickness is multiplied by the degree.
inline StableGraph base_change(const StableGraph& g, int degree) {
    if (degree < 1)
        throw std::domain_error("base change degree must be at least 1");
    std::vector<GraphEdge> edges = g.edges();
    for (auto& e : edges)
        e.thickness *= degree;
    return StableGraph(g.vertices(), std::move(edges));
}

// Resolves the total space: an edge of thickness k >= 2 is an A_{k-1}
// singularity and blows up into a chain of k-1 rational curves, giving a
// path (or, for a self-loop, a cycle) of thickness-1 edges. Total genus is
// preserved; the output has thickness 1 everywhere.
inline StableGraph resolve(const StableGraph& g) {
    std::vector<GraphVertex> verts = g.vertices();
    std::vector<GraphEdge> edges;
    for (const auto& e : g.edges()) {
        if (e.thickness == 1) {
            edges.push_back(e);
            continue;
        }
        int prev = e.a;
        for (int i = 1; i < e.thickness; ++i) {
            verts.push_back({0});
            const int w = static_cast<int>(verts.size()) - 1;
            edges.push_back({prev, w, 1});
            prev = w;
        }
        edges.push_back({prev, e.b, 1});
    }
    return StableGraph(std::move(verts), std::move(edges));
}

// A vertex is contractible when it is a rational (-2)-configuration of the
// semistable model: genus 0, valence 2, with its two edge-ends on edges to
// other vertices (a self-loop is never contracted).
inline bool is_contractible(const StableGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::domain_error("vertex index out of range");
    if (g.genus_of(v) != 0 || g.valence(v) != 2)
        return false;
    for (const auto& e : g.edges())
        if (e.a == v && e.b == v)
            return false;
    return true;
}

// Removes a contractible vertex, merging its two incident edges into one
// edge between the outer endpoints. Thicknesses add; coinciding endpoints
// produce a self-loop. Vertices above v shift down by one.
inline StableGraph contract_vertex(const StableGraph& g, int v) {
    if (!is_contractible(g, v))
        throw std::domain_error("vertex is not contractible");
    int end0 = -1, end1 = -1, thickness = 0;
    std::vector<GraphEdge> edges;
    for (const auto& e : g.edges()) {
        if (e.a != v && e.b != v) {
            edges.push_back(e);
            continue;
        }
        const int other = (e.a == v) ? e.b : e.a;
        (end0 == -1 ? end0 : end1) = other;
        thickness += e.thickness;
    }
    edges.push_back({end0, end1, thickness});
    const auto shift = [v](int w) { return w > v ? w - 1 : w; };
    for (auto& e : edges) {
        e.a = shift(e.a);
        e.b = shift(e.b);
    }
    std::vector<GraphVertex> verts;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v)
            verts.push_back(g.vertices()[static_cast<std::size_t>(w)]);
    return StableGraph(std::move(verts), std::move(edges));
}

// Contracts rational valence-2 vertices until the graph is stable. Requires
// a semistable input of total genus >= 2 (a genus-1 cycle of rational curves
// has no anchor to contract onto). The result is independent of the
// contraction order up to isomorphism.
inline StableGraph stabilize(StableGraph g) {
    if (stability_class(g) == GraphStability::NotSemistable)
        throw std::domain_error("stabilization requires a semistable graph");
    if (g.total_genus() < 2)
        throw std::domain_error("stabilization requires total genus at least 2");
    for (bool progress = true; progress;) {
        progress = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (is_contractible(g, v)) {
                g = contract_vertex(g, v);
                progress = true;
                break;
            }
        }
    }
    return g;
}

} // namespace moduli
