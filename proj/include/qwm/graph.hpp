#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwm/errors.hpp"

namespace qwm {

/// How a single edge slot is given when building a graph. Forward means the
/// arc u -> v exists and v -> u does not.
enum class LinkClass : std::uint8_t { Undirected, Forward };

struct ArcSpec {
    int u = 0;
    int v = 0;
    LinkClass cls = LinkClass::Undirected;
};

/// Orientation of a stored pair {u, v} with u < v.
enum class Orient : std::uint8_t { Both, LowToHigh, HighToLow };

struct Edge {
    int u = 0; // u < v
    int v = 0;
    Orient orient = Orient::Both;
};

/// A mixed graph: vertices 0..n-1 plus one orientation class per adjacent
/// unordered pair. No self-loops, no parallel pairs, underlying graph
/// connected, n >= 2 — all enforced at construction. Immutable afterwards.
class MixedGraph {
public:
    static MixedGraph build(int n, const std::vector<ArcSpec>& arcs);

    int vertex_count() const { return n_; }
    /// |E| of the underlying graph.
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges sorted by (u, v); the canonical pair order everywhere.
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int x) const;
    std::optional<int> regular_degree() const;
    bool undirected() const;
    std::optional<Orient> pair_class(int u, int v) const;

    /// Triangles of the underlying graph, computed as tr(A^3)/6.
    long long triangle_count() const;

    /// 0/1 adjacency of the underlying graph, row-major n*n.
    std::vector<int> adjacency() const;

    static MixedGraph from_json_text(const std::string& text);
    std::string to_json_text() const;
    static MixedGraph load(const std::string& path);

private:
    MixedGraph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
};

/// One directed arc of the symmetric arc set. sign is +1 on arcs that exist
/// only forwards, -1 on their reverses, 0 on bidirected arcs; the eta
/// function theta on the arc is sign * eta.
struct SymmetricArc {
    int origin = 0;
    int terminus = 0;
    int sign = 0;
};

/// Canonical ordering of all 2m symmetric arcs: edges by (min, max), the
/// low -> high arc first within each edge. Fixes the row/column indexing of
/// every arc-indexed matrix, so results are reproducible across runs.
class ArcOrdering {
public:
    explicit ArcOrdering(const MixedGraph& g);

    std::size_t size() const { return arcs_.size(); }
    const SymmetricArc& arc(std::size_t i) const { return arcs_[i]; }
    /// Arcs come in (edge, reverse) pairs at indices 2e, 2e+1.
    std::size_t reverse_index(std::size_t i) const { return i ^ 1U; }
    std::size_t index_of(int origin, int terminus) const;

private:
    std::vector<SymmetricArc> arcs_;
    std::map<std::pair<int, int>, std::size_t> index_;
};

// Named families used by the experiments. Orientation patterns, where
// accepted, give one digit per edge in the family's natural edge order:
// 0 = undirected, 1 = forward along the edge as written, 2 = reverse.
// Cycle and path edges run i -> i+1 (the cycle closes n-1 -> 0); complete
// graphs list pairs (u, v), u < v, in lexicographic order.
MixedGraph cycle_graph(int n, const std::vector<int>& pattern = {});
MixedGraph path_graph(int n, const std::vector<int>& pattern = {});
MixedGraph complete_graph(int n, const std::vector<int>& assignment = {});
MixedGraph complete_bipartite(int a, int b);
MixedGraph complete_tripartite(int lambda);
MixedGraph hamming_graph(int d, int q);

} // namespace qwm
