#pragma once

#include "harmolight/gf2.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace harmolight {

/// A state is a subset of vertices, a co-state a subset of edges, both as
/// GF(2) vectors. Co-states are indexed by the canonical edge order
/// (lexicographic on the normalized (min,max) endpoint pair).
using State = BitVector;
using CoState = BitVector;

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Finite simple graph on vertices 0..n-1. Edges are stored normalized
/// (u < v) and sorted; construction rejects loops and duplicates.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    std::vector<std::uint32_t> degrees() const;
    std::vector<std::vector<std::uint32_t>> adjacency_lists() const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Parse either the edge-list format (header `n=<int>`, one `<u> <v>` pair
/// per line, `#` comments) or a one-line graph6 encoding.
Graph parse_graph(std::string_view text);
Graph parse_graph6(std::string_view line);

/// Edge-list rendering of a graph, suitable for parse_graph.
std::string to_edge_list(const Graph& g);

/// The harmonic matrix a = A + D: adjacency off the diagonal, degree parity
/// on the diagonal. Always symmetric with even row sums.
BitMatrix harmonic_matrix(const Graph& g);

/// Inverse of harmonic_matrix. Requires a symmetric matrix whose rows all
/// sum to zero mod 2.
Graph graph_from_harmonic(const BitMatrix& m);

/// Boundary: vertices to incident edges, summed mod 2.
CoState boundary(const Graph& g, const State& s);
/// Coboundary: edges to their endpoints, summed mod 2.
State coboundary(const Graph& g, const CoState& c);

} // namespace harmolight
