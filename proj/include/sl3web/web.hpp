#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "sl3web/laurent.hpp"

namespace sl3web {

/// Closed A2 web: a trivalent combinatorial map whose vertices are sources
/// (all edges out) or sinks (all edges in), plus a count of crossingless
/// circles. Every edge runs source -> sink, so bipartiteness is structural.
///
/// Darts: edge e owns darts 2e (at the source end) and 2e+1 (at the sink
/// end). Each vertex lists its three darts counterclockwise.
class Web {
public:
    struct Vertex {
        bool source = false;
        std::array<int, 3> rot{-1, -1, -1};
    };
    struct Edge {
        int src = -1, snk = -1;
    };

    Web() = default;

    int add_vertex(bool source) {
        vertices_.push_back({source, {-1, -1, -1}});
        return static_cast<int>(vertices_.size()) - 1;
    }
    /// Creates the edge; rotations must be assigned afterwards.
    int add_edge(int src, int snk) {
        edges_.push_back({src, snk});
        return static_cast<int>(edges_.size()) - 1;
    }
    void set_rotation(int v, const std::array<int, 3>& darts) { vertices_.at(v).rot = darts; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_source(int v) const { return vertices_.at(v).source; }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::array<int, 3>& rotation(int v) const { return vertices_.at(v).rot; }
    int free_loops() const { return loops_; }
    void add_loops(int k) { loops_ += k; }

    static int edge_of(int dart) { return dart >> 1; }
    int vertex_of(int dart) const {
        const Edge& e = edges_.at(dart >> 1);
        return (dart & 1) ? e.snk : e.src;
    }
    static int twin(int dart) { return dart ^ 1; }
    /// Next dart counterclockwise around its vertex.
    int sigma(int dart) const;

    /// Face orbits of dart -> sigma(twin(dart)); every dart lies in exactly
    /// one face, and a face of length 2k has k boundary edges traversed once
    /// per side.
    std::vector<std::vector<int>> faces() const;

    /// Structural checks plus a genus-0 test per connected component.
    void validate() const;

    std::vector<Web> components() const;  // vertexed components; loops split off separately

    bool empty() const { return vertices_.empty() && loops_ == 0; }

    /// Canonical encoding of the whole web (component encodings sorted),
    /// stable under rotation-preserving isomorphism.
    std::string canonical_key() const;

    /// Human-readable vertex/edge/rotation dump for fixture files and debugging.
    std::string debug_str() const;

private:
    friend Web collapse_bubble(const Web&, const std::vector<int>&);
    friend std::pair<Web, Web> resolve_square(const Web&, const std::vector<int>&);
    friend struct WebSurgery;

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    int loops_ = 0;
};

/// Applies the bubble relation to a 2-face; the caller multiplies by [2].
Web collapse_bubble(const Web& w, const std::vector<int>& face);

/// Applies the square relation to a 4-face; returns the two smoothings, each
/// entering the expansion with coefficient 1.
std::pair<Web, Web> resolve_square(const Web& w, const std::vector<int>& face);

struct EvalOptions {
    /// Shared memo from canonical component key to value. May be null.
    std::unordered_map<std::string, LaurentPoly>* memo = nullptr;
    /// When set, the reducible face is chosen uniformly at random instead of
    /// circle > bubble > square; the result must not change (confluence).
    std::mt19937_64* random_order = nullptr;
};

/// Evaluates a closed web to its Laurent polynomial via the circle, bubble
/// and square relations. Throws std::logic_error if no circle, bubble or
/// square exists in a nonempty web (cannot happen for genus-0 webs).
LaurentPoly evaluate(const Web& w, const EvalOptions& opts = {});

/// Single reduction step data, exposed for tests.
struct ReduceStep {
    enum Kind { Circle, Bubble, Square } kind;
    std::vector<int> face;  // empty for Circle
};
std::optional<ReduceStep> find_reduction(const Web& w);

/// OW-move sites on a web: replace two coherently oriented strands in a disc
/// by the trivalent piece. Strand descriptors refer to edges, or to free
/// loops when the index is negative.
struct OwSite {
    int strand_a = -1;  // edge id, or -1 for a free loop
    int strand_b = -1;  // edge id, or -1 for a free loop (a second one)
    bool swap_sides = false;  // mirror arrangement of the inserted piece
};
Web apply_ow_move(const Web& w, const OwSite& site);

/// Fixture webs built from sequences of squares, with their closed-form
/// expected values.
enum class SquareChainClosure {
    HalfCappedLoop,  // bubble cap on the right, strand closed around: [2]^(k+1) [3]
    Cross,           // top-left leg wired to the far bottom (or far top) leg
    Trace            // braid-trace closure (k even only)
};
struct SquareChainFixture {
    Web web;
    LaurentPoly expected;
};
SquareChainFixture square_chain(int k, SquareChainClosure closure);

}  // namespace sl3web
