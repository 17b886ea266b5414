#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sl3web {

// An oriented diagram is a 4-valent map: crossings with four arc slots each,
// plus oriented arcs matching outgoing slots to incoming slots.
//
// Slots are numbered 0..3 counterclockwise with slot 0 the incoming
// under-strand (Knot-Atlas convention). Slot roles then depend on the sign:
//
//   positive: 0 = under-in, 1 = over-out, 2 = under-out, 3 = over-in
//   negative: 0 = under-in, 1 = over-in,  2 = under-out, 3 = over-out
//
// A dart is 4*crossing + slot.
class LinkDiagram {
public:
    LinkDiagram() = default;

    /// Closure of a braid word. Generator +i (1-based) is a positive crossing
    /// of strands i, i+1; strands are oriented downward.
    static LinkDiagram from_braid_word(const std::vector<int>& word, int strands);

    /// Parse "X[a,b,c,d] X[...] ..." with arcs counterclockwise from the
    /// incoming under-strand. Orientations of over-strands are inferred by
    /// propagation plus the increasing-label rule; `over_in_at_d` entries
    /// override the inference per crossing index.
    static LinkDiagram from_pd_code(const std::string& text,
                                    const std::vector<std::pair<int, bool>>& over_in_at_d = {});

    /// Diagram with no crossings and `loops` disjoint circles.
    static LinkDiagram unknot(int loops = 1);

    static LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

    /// Cut arc `arc_a` of `a` and arc `arc_b` of `b` and cross-join them,
    /// respecting orientations. Arcs are identified by their out-dart.
    static LinkDiagram connected_sum(const LinkDiagram& a, int arc_a,
                                     const LinkDiagram& b, int arc_b);

    LinkDiagram mirrored() const;

    int crossings() const { return static_cast<int>(signs_.size()); }
    int sign(int c) const { return signs_.at(c); }
    int free_loops() const { return free_loops_; }
    int writhe() const;
    bool all_positive() const;
    bool is_alternating() const;

    /// Connected as a diagram: one 4-valent component and no extra circles
    /// (a single crossingless circle counts as connected).
    bool connected() const;

    bool in_slot(int c, int slot) const { return slot_is_in(signs_.at(c), slot); }
    static bool slot_is_in(int sign, int slot) {
        return sign > 0 ? (slot == 0 || slot == 3) : (slot == 0 || slot == 1);
    }
    /// Oriented smoothing: incoming slot continues at this outgoing slot.
    static int o_successor(int sign, int in_slot);

    /// Arc maps on darts: arc_to(out-dart) = in-dart, arc_from(in-dart) = out-dart.
    int arc_to(int dart) const { return arc_to_.at(dart); }
    int arc_from(int dart) const { return arc_from_.at(dart); }
    std::vector<int> out_darts() const;

    /// First out-dart (smallest id), for default connected-sum sites.
    int some_arc() const;

    nlohmann::json to_json() const;
    static LinkDiagram from_json(const nlohmann::json& j);

    std::string pd_string() const;

private:
    void validate() const;
    void check_planarity() const;

    std::vector<int> signs_;
    // indexed by dart; -1 where the dart role does not apply
    std::vector<int> arc_to_;
    std::vector<int> arc_from_;
    int free_loops_ = 0;
};

/// Circles of the all-O resolution, with the cyclic attachment order of
/// crossings along each circle. Crossingless circles have empty attachment.
struct SeifertCircleSet {
    std::vector<std::vector<int>> attachments;     // per circle, crossing ids in cyclic order
    std::vector<std::array<int, 2>> crossing_circles;  // per crossing: circle at under-in passage, circle at over-in passage
    int circle_count() const { return static_cast<int>(attachments.size()); }
};

SeifertCircleSet seifert_circles(const LinkDiagram& d);

/// Unoriented all-A or all-B state graph. Edges may be loops.
struct StateGraphAB {
    int circles = 0;
    std::vector<std::array<int, 2>> edges;          // one per crossing
    std::vector<std::vector<int>> attachments;      // per circle: crossings in cyclic order
    bool has_loop() const {
        for (const auto& e : edges)
            if (e[0] == e[1]) return true;
        return false;
    }
};

StateGraphAB ab_resolution_graph(const LinkDiagram& d, char kind);

/// True iff the all-B state graph has no 1-edge loops.
bool is_b_adequate(const LinkDiagram& d);

}  // namespace sl3web
