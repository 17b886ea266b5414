#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "sl3web/diagram.hpp"

namespace sl3web {

/// Multigraph on Seifert circles: one vertex per circle, one edge per
/// crossing, with the cyclic order of edge-ends around each vertex inherited
/// from the attachment order along the circle.
struct SeifertGraph {
    int vertices = 0;
    std::vector<std::array<int, 2>> edge_ends;           // per edge (= crossing id)
    std::vector<std::vector<int>> rotation;              // per vertex: edge ids in cyclic order

    int edge_count() const { return static_cast<int>(edge_ends.size()); }
    bool bipartite() const;
    int component_count() const;
};

SeifertGraph build_seifert_graph(const SeifertCircleSet& circles);

/// Spanning subgraph keeping only the listed edges (all vertices stay).
SeifertGraph spanning_subgraph(const SeifertGraph& g, const std::vector<int>& edges);

struct ReducedEdge {
    int u = 0, v = 0;
    std::vector<int> lifts;  // parallel edge ids in the unreduced graph
    int multiplicity() const { return static_cast<int>(lifts.size()); }
};

struct ReducedSeifertGraph {
    int vertices = 0;
    std::vector<ReducedEdge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int mu() const;                 // edges of multiplicity > 1
    bool connected() const;
    bool is_tree() const;           // connected with e' = v - 1
    int component_count() const;
    /// Edge ids of some cycle, empty when the graph is a forest.
    std::vector<int> find_cycle() const;
};

ReducedSeifertGraph reduce(const SeifertGraph& g);

/// Classification of a pair of reduced edges sharing a vertex.
struct MixedPairReport {
    int edge1 = -1, edge2 = -1;
    int shared_vertex = -1;
    int mixing_index = 0;            // m; separated iff m == 1
    bool mixed = false;
    std::vector<int> runs_a, runs_b;  // alternating run lengths (a_1..a_m, b_1..b_m)
};

/// Runs around the shared vertex of two distinct reduced edges. The cyclic
/// run decomposition already identifies wrapped runs, so the normalization
/// G(a_1,b_1,...,a_m,b_m,a_{m+1}) = G(a_1+a_{m+1},b_1,...) is built in.
MixedPairReport classify_pair(const SeifertGraph& g, const ReducedSeifertGraph& r,
                              int edge1, int edge2);

/// Number of mixed pairs of reduced edges.
int theta(const SeifertGraph& g, const ReducedSeifertGraph& r);

struct SeifertStats {
    int v = 0, e = 0, e_prime = 0, mu = 0, theta = 0, components = 0;
    bool tree = false;
    std::vector<int> multiplicities;
    nlohmann::json to_json() const;
};

SeifertStats seifert_stats(const LinkDiagram& d);

}  // namespace sl3web
