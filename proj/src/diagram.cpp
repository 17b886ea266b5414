#include "sl3web/diagram.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl3web {

int LinkDiagram::o_successor(int sign, int in_slot) {
    if (sign > 0) {
        if (in_slot == 0) return 1;
        if (in_slot == 3) return 2;
    } else {
        if (in_slot == 0) return 3;
        if (in_slot == 1) return 2;
    }
    throw std::logic_error("o_successor: not an incoming slot");
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (int s : signs_) w += s;
    return w;
}

bool LinkDiagram::all_positive() const {
    return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s > 0; });
}

std::vector<int> LinkDiagram::out_darts() const {
    std::vector<int> v;
    for (int d = 0; d < static_cast<int>(arc_to_.size()); ++d)
        if (arc_to_[d] >= 0) v.push_back(d);
    return v;
}

int LinkDiagram::some_arc() const {
    for (int d = 0; d < static_cast<int>(arc_to_.size()); ++d)
        if (arc_to_[d] >= 0) return d;
    throw std::domain_error("diagram has no arcs");
}

void LinkDiagram::validate() const {
    const int n = crossings();
    if (static_cast<int>(arc_to_.size()) != 4 * n || static_cast<int>(arc_from_.size()) != 4 * n)
        throw std::invalid_argument("diagram: dart tables have wrong size");
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("diagram: crossing sign must be +1 or -1");
    for (int c = 0; c < n; ++c) {
        for (int slot = 0; slot < 4; ++slot) {
            const int d = 4 * c + slot;
            if (in_slot(c, slot)) {
                if (arc_from_[d] < 0 || arc_to_[d] >= 0)
                    throw std::invalid_argument("diagram: incoming slot not fed by exactly one arc");
                if (arc_to_[arc_from_[d]] != d)
                    throw std::invalid_argument("diagram: arc maps are not mutually inverse");
            } else {
                if (arc_to_[d] < 0 || arc_from_[d] >= 0)
                    throw std::invalid_argument("diagram: outgoing slot does not start an arc");
                const int t = arc_to_[d];
                if (t < 0 || t >= 4 * n || !in_slot(t / 4, t % 4) || arc_from_[t] != d)
                    throw std::invalid_argument("diagram: arc does not land on an incoming slot");
            }
        }
    }
    if (free_loops_ < 0) throw std::invalid_argument("diagram: negative loop count");
    check_planarity();
}

// Genus check for the 4-valent map: faces are orbits of sigma(alpha(dart))
// where alpha follows the arc and sigma is the counterclockwise slot rotation.
// Each connected component must satisfy V - E + F = 2.
void LinkDiagram::check_planarity() const {
    const int n = crossings();
    if (n == 0) return;
    auto alpha = [&](int d) { return arc_to_[d] >= 0 ? arc_to_[d] : arc_from_[d]; };
    auto sigma = [&](int d) { return (d & ~3) | ((d + 1) & 3); };

    // connected components over crossings
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int c0 = 0; c0 < n; ++c0) {
        if (comp[c0] >= 0) continue;
        std::vector<int> stack{c0};
        comp[c0] = ncomp;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int slot = 0; slot < 4; ++slot) {
                int c2 = alpha(4 * c + slot) / 4;
                if (comp[c2] < 0) {
                    comp[c2] = ncomp;
                    stack.push_back(c2);
                }
            }
        }
        ++ncomp;
    }

    std::vector<int> verts(ncomp, 0), faces(ncomp, 0);
    for (int c = 0; c < n; ++c) ++verts[comp[c]];
    std::vector<char> seen(4 * n, 0);
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (seen[d0]) continue;
        int d = d0;
        do {
            seen[d] = 1;
            d = sigma(alpha(d));
        } while (d != d0);
        ++faces[comp[d0 / 4]];
    }
    for (int k = 0; k < ncomp; ++k) {
        const int V = verts[k], E = 2 * verts[k], F = faces[k];
        if (V - E + F != 2)
            throw std::invalid_argument("diagram does not embed in the 2-sphere (Euler check failed)");
    }
}

LinkDiagram LinkDiagram::unknot(int loops) {
    if (loops < 0) throw std::invalid_argument("unknot: negative loop count");
    LinkDiagram d;
    d.free_loops_ = loops;
    return d;
}

LinkDiagram LinkDiagram::from_braid_word(const std::vector<int>& word, int strands) {
    if (strands < 2) throw std::invalid_argument("braid word needs at least 2 strands");
    for (int g : word)
        if (g == 0 || std::abs(g) >= strands)
            throw std::invalid_argument("braid generator index out of range");

    LinkDiagram d;
    d.signs_.reserve(word.size());
    d.arc_to_.assign(4 * word.size(), -1);
    d.arc_from_.assign(4 * word.size(), -1);

    // Per strand position: the out-dart waiting to be connected, and the
    // in-dart that the closure arc must eventually feed.
    std::vector<int> pending_out(strands, -1);
    std::vector<int> top_in(strands, -1);

    auto connect = [&](int out, int in) {
        d.arc_to_[out] = in;
        d.arc_from_[in] = out;
    };

    int c = 0;
    for (int g : word) {
        const int p = std::abs(g) - 1;
        const int sign = g > 0 ? 1 : -1;
        d.signs_.push_back(sign);
        // Strands run downward. Positive generator: left strand passes under.
        // Slot layout (counterclockwise from incoming under-strand):
        //   positive: 0 = top-left, 1 = bottom-left, 2 = bottom-right, 3 = top-right
        //   negative: 0 = top-right, 1 = top-left, 2 = bottom-left, 3 = bottom-right
        int in_left, in_right, out_left, out_right;
        if (sign > 0) {
            in_left = 4 * c + 0;
            in_right = 4 * c + 3;
            out_left = 4 * c + 1;
            out_right = 4 * c + 2;
        } else {
            in_left = 4 * c + 1;
            in_right = 4 * c + 0;
            out_left = 4 * c + 2;
            out_right = 4 * c + 3;
        }
        for (auto [pos, in] : {std::pair{p, in_left}, std::pair{p + 1, in_right}}) {
            if (pending_out[pos] >= 0)
                connect(pending_out[pos], in);
            else
                top_in[pos] = in;
        }
        pending_out[p] = out_left;
        pending_out[p + 1] = out_right;
        ++c;
    }
    for (int pos = 0; pos < strands; ++pos) {
        if (pending_out[pos] >= 0)
            connect(pending_out[pos], top_in[pos]);
        else
            ++d.free_loops_;  // strand untouched by any generator
    }
    d.validate();
    return d;
}

namespace {

struct PdOcc {
    int crossing;
    int slot;
};

}  // namespace

LinkDiagram LinkDiagram::from_pd_code(const std::string& text,
                                      const std::vector<std::pair<int, bool>>& over_in_at_d) {
    static const std::regex tuple_re(R"(X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\])");
    std::vector<std::array<int, 4>> tuples;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), tuple_re);
         it != std::sregex_iterator(); ++it) {
        tuples.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]),
                          std::stoi((*it)[4])});
    }
    // Reject garbage between tuples: everything outside matches must be whitespace.
    std::string rest = std::regex_replace(text, tuple_re, " ");
    if (rest.find_first_not_of(" \t\r\n") != std::string::npos)
        throw std::invalid_argument("PD code: unrecognized token in input");
    if (tuples.empty()) throw std::invalid_argument("PD code: no crossings found");

    const int n = static_cast<int>(tuples.size());
    std::map<int, std::vector<PdOcc>> occ;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) occ[tuples[c][s]].push_back({c, s});
    for (const auto& [label, os] : occ)
        if (os.size() != 2)
            throw std::invalid_argument("PD code: arc label " + std::to_string(label) +
                                        " used " + std::to_string(os.size()) + " times (expected 2)");

    // Orientation inference. Status per (crossing, slot): +1 incoming, -1 outgoing, 0 unknown.
    std::vector<std::array<int, 4>> st(n, {0, 0, 0, 0});
    for (int c = 0; c < n; ++c) {
        st[c][0] = +1;  // under-in
        st[c][2] = -1;  // under-out
    }
    for (auto [c, dir] : over_in_at_d) {
        if (c < 0 || c >= n) throw std::invalid_argument("PD orientation override: bad crossing index");
        st[c][3] = dir ? +1 : -1;
        st[c][1] = dir ? -1 : +1;
    }

    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            // each label has one incoming and one outgoing occurrence
            for (const auto& [label, os] : occ) {
                int a = st[os[0].crossing][os[0].slot];
                int b = st[os[1].crossing][os[1].slot];
                if (a != 0 && b == 0) {
                    st[os[1].crossing][os[1].slot] = -a;
                    changed = true;
                } else if (b != 0 && a == 0) {
                    st[os[0].crossing][os[0].slot] = -b;
                    changed = true;
                } else if (a != 0 && b != 0 && a == b) {
                    throw std::invalid_argument("PD code: inconsistent strand orientations at label " +
                                                std::to_string(label));
                }
            }
            // over strand: slots 1 and 3 carry one incoming and one outgoing
            for (int c = 0; c < n; ++c) {
                int a = st[c][1], b = st[c][3];
                if (a != 0 && b == 0) {
                    st[c][3] = -a;
                    changed = true;
                } else if (b != 0 && a == 0) {
                    st[c][1] = -b;
                    changed = true;
                } else if (a != 0 && b != 0 && a == b) {
                    throw std::invalid_argument("PD code: inconsistent over-strand orientation");
                }
            }
        }
    };

    propagate();
    // Break remaining ties with the increasing-label convention: labels grow
    // along each component, wrapping from the component maximum back down.
    for (int c = 0; c < n; ++c) {
        if (st[c][1] != 0) continue;
        const int b = tuples[c][1], dd = tuples[c][3];
        bool over_runs_d_to_b;
        if (b == dd + 1)
            over_runs_d_to_b = true;
        else if (dd == b + 1)
            over_runs_d_to_b = false;
        else
            over_runs_d_to_b = dd > b;  // wraparound: the larger label feeds the smaller
        st[c][3] = over_runs_d_to_b ? +1 : -1;
        st[c][1] = -st[c][3];
        propagate();
    }

    LinkDiagram d;
    d.signs_.assign(n, 0);
    for (int c = 0; c < n; ++c) d.signs_[c] = st[c][3] > 0 ? +1 : -1;

    d.arc_to_.assign(4 * n, -1);
    d.arc_from_.assign(4 * n, -1);
    for (const auto& [label, os] : occ) {
        const PdOcc &o1 = os[0], &o2 = os[1];
        const bool in1 = st[o1.crossing][o1.slot] > 0;
        const bool in2 = st[o2.crossing][o2.slot] > 0;
        if (in1 == in2)
            throw std::invalid_argument("PD code: label " + std::to_string(label) +
                                        " is not one incoming and one outgoing end");
        const int din = 4 * (in1 ? o1 : o2).crossing + (in1 ? o1 : o2).slot;
        const int dout = 4 * (in1 ? o2 : o1).crossing + (in1 ? o2 : o1).slot;
        d.arc_to_[dout] = din;
        d.arc_from_[din] = dout;
    }
    d.validate();
    return d;
}

LinkDiagram LinkDiagram::disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
    LinkDiagram d;
    d.signs_ = a.signs_;
    d.signs_.insert(d.signs_.end(), b.signs_.begin(), b.signs_.end());
    d.arc_to_ = a.arc_to_;
    d.arc_from_ = a.arc_from_;
    const int off = 4 * a.crossings();
    for (int x : b.arc_to_) d.arc_to_.push_back(x < 0 ? -1 : x + off);
    for (int x : b.arc_from_) d.arc_from_.push_back(x < 0 ? -1 : x + off);
    d.free_loops_ = a.free_loops_ + b.free_loops_;
    d.validate();
    return d;
}

LinkDiagram LinkDiagram::connected_sum(const LinkDiagram& a, int arc_a,
                                       const LinkDiagram& b, int arc_b) {
    if (a.crossings() == 0 || b.crossings() == 0) {
        // Summing with a crossingless circle just absorbs it.
        if (a.crossings() == 0 && a.free_loops_ == 0)
            throw std::invalid_argument("connected_sum: empty diagram");
        LinkDiagram base = a.crossings() == 0 ? b : a;
        const LinkDiagram& trivial = a.crossings() == 0 ? a : b;
        if (trivial.free_loops_ < 1) throw std::invalid_argument("connected_sum: empty diagram");
        base.free_loops_ += trivial.free_loops_ - 1;
        base.validate();
        return base;
    }
    LinkDiagram d = disjoint_union(a, b);
    const int off = 4 * a.crossings();
    if (arc_a < 0 || arc_a >= 4 * a.crossings() || a.arc_to_[arc_a] < 0)
        throw std::invalid_argument("connected_sum: arc_a is not an arc of the first diagram");
    if (arc_b < 0 || arc_b >= 4 * b.crossings() || b.arc_to_[arc_b] < 0)
        throw std::invalid_argument("connected_sum: arc_b is not an arc of the second diagram");
    const int in_a = d.arc_to_[arc_a];
    const int in_b = d.arc_to_[arc_b + off];
    d.arc_to_[arc_a] = in_b;
    d.arc_from_[in_b] = arc_a;
    d.arc_to_[arc_b + off] = in_a;
    d.arc_from_[in_a] = arc_b + off;
    d.validate();
    return d;
}

LinkDiagram LinkDiagram::mirrored() const {
    // Mirror through the projection plane: over and under swap at every
    // crossing, slot rotations stay counterclockwise. Old slot j becomes new
    // slot (j+1)%4 at positive crossings and (j+3)%4 at negative ones.
    LinkDiagram d;
    const int n = crossings();
    d.signs_.resize(n);
    d.arc_to_.assign(4 * n, -1);
    d.arc_from_.assign(4 * n, -1);
    d.free_loops_ = free_loops_;
    auto remap = [&](int dart) {
        const int c = dart / 4, slot = dart % 4;
        const int shift = signs_[c] > 0 ? 1 : 3;
        return 4 * c + ((slot + shift) & 3);
    };
    for (int c = 0; c < n; ++c) d.signs_[c] = -signs_[c];
    for (int dart = 0; dart < 4 * n; ++dart) {
        if (arc_to_[dart] >= 0) {
            d.arc_to_[remap(dart)] = remap(arc_to_[dart]);
            d.arc_from_[remap(arc_to_[dart])] = remap(dart);
        }
    }
    d.validate();
    return d;
}

bool LinkDiagram::connected() const {
    const int n = crossings();
    if (n == 0) return free_loops_ == 1;
    if (free_loops_ > 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int slot = 0; slot < 4; ++slot) {
            int d = 4 * c + slot;
            int e = arc_to_[d] >= 0 ? arc_to_[d] : arc_from_[d];
            if (!seen[e / 4]) {
                seen[e / 4] = 1;
                ++count;
                stack.push_back(e / 4);
            }
        }
    }
    return count == n;
}

bool LinkDiagram::is_alternating() const {
    // Walk every strand; passages must alternate over/under, cyclically.
    const int n = crossings();
    if (n == 0) return true;
    std::vector<char> seen(4 * n, 0);
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (seen[d0] || !in_slot(d0 / 4, d0 % 4)) continue;
        int d = d0;
        int first = -1, prev = -1;
        do {
            seen[d] = 1;
            const int under = (d % 4 == 0) ? 1 : 0;
            if (prev >= 0 && prev == under) return false;
            if (first < 0) first = under;
            prev = under;
            const int c = d / 4, in = d % 4;
            const int out_slot = (in == 0) ? 2 : (signs_[c] > 0 ? 1 : 3);
            d = arc_to_[4 * c + out_slot];
        } while (d != d0);
        if (prev == first) return false;
    }
    return true;
}

nlohmann::json LinkDiagram::to_json() const {
    nlohmann::json j;
    j["crossings"] = signs_;
    nlohmann::json arcs = nlohmann::json::array();
    for (int d = 0; d < static_cast<int>(arc_to_.size()); ++d)
        if (arc_to_[d] >= 0)
            arcs.push_back({d / 4, d % 4, arc_to_[d] / 4, arc_to_[d] % 4});
    j["arcs"] = arcs;
    j["free_loops"] = free_loops_;
    return j;
}

LinkDiagram LinkDiagram::from_json(const nlohmann::json& j) {
    LinkDiagram d;
    d.signs_ = j.at("crossings").get<std::vector<int>>();
    const int n = d.crossings();
    d.arc_to_.assign(4 * n, -1);
    d.arc_from_.assign(4 * n, -1);
    for (const auto& a : j.at("arcs")) {
        int from = 4 * a.at(0).get<int>() + a.at(1).get<int>();
        int to = 4 * a.at(2).get<int>() + a.at(3).get<int>();
        d.arc_to_.at(from) = to;
        d.arc_from_.at(to) = from;
    }
    d.free_loops_ = j.value("free_loops", 0);
    d.validate();
    return d;
}

std::string LinkDiagram::pd_string() const {
    // PD codes have no token for crossingless circles, so refuse rather than
    // silently drop components.
    if (free_loops_ > 0)
        throw std::domain_error("pd_string: diagram has crossingless circles, which PD codes cannot express");
    // Arc labels assigned in dart order of the arc's out-dart.
    std::map<int, int> label;
    int next = 1;
    for (int d = 0; d < static_cast<int>(arc_to_.size()); ++d)
        if (arc_to_[d] >= 0) label[d] = next++;
    std::ostringstream out;
    for (int c = 0; c < crossings(); ++c) {
        if (c) out << " ";
        out << "X[";
        for (int s = 0; s < 4; ++s) {
            const int d = 4 * c + s;
            const int l = in_slot(c, s) ? label[arc_from_[d]] : label[d];
            out << l << (s == 3 ? "]" : ",");
        }
    }
    return out.str();
}

SeifertCircleSet seifert_circles(const LinkDiagram& d) {
    SeifertCircleSet out;
    const int n = d.crossings();
    out.crossing_circles.assign(n, {-1, -1});
    std::vector<char> seen(4 * n, 0);  // on incoming darts
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (seen[d0] || !d.in_slot(d0 / 4, d0 % 4)) continue;
        const int circle = out.circle_count();
        out.attachments.emplace_back();
        int dart = d0;
        do {
            seen[dart] = 1;
            const int c = dart / 4, slot = dart % 4;
            out.attachments[circle].push_back(c);
            const int which = (slot == 0) ? 0 : 1;  // under-in vs over-in passage
            out.crossing_circles[c][which] = circle;
            const int out_slot = LinkDiagram::o_successor(d.sign(c), slot);
            dart = d.arc_to(4 * c + out_slot);
        } while (dart != d0);
    }
    for (int k = 0; k < d.free_loops(); ++k) out.attachments.emplace_back();
    return out;
}

StateGraphAB ab_resolution_graph(const LinkDiagram& d, char kind) {
    if (kind != 'A' && kind != 'B') throw std::invalid_argument("ab_resolution_graph: kind must be 'A' or 'B'");
    StateGraphAB g;
    const int n = d.crossings();
    // Unoriented circles: darts paired by arcs and by the smoothing.
    // B joins slots {0,1} and {2,3}; A joins slots {0,3} and {1,2}.
    auto smooth_partner = [&](int dart) {
        const int slot = dart % 4;
        int p;
        if (kind == 'B')
            p = slot ^ 1;  // 0<->1, 2<->3
        else
            p = 3 - slot;  // 0<->3, 1<->2
        return (dart & ~3) | p;
    };
    auto arc_partner = [&](int dart) {
        return d.arc_to(dart) >= 0 ? d.arc_to(dart) : d.arc_from(dart);
    };
    std::vector<int> circle_of(4 * n, -1);
    int circles = 0;
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (circle_of[d0] >= 0) continue;
        int dart = d0;
        g.attachments.emplace_back();
        do {
            circle_of[dart] = circles;
            g.attachments[circles].push_back(dart / 4);
            int p = smooth_partner(dart);
            circle_of[p] = circles;
            dart = arc_partner(p);
        } while (dart != d0);
        ++circles;
    }
    for (int k = 0; k < d.free_loops(); ++k) g.attachments.emplace_back();
    g.circles = circles + d.free_loops();
    for (int c = 0; c < n; ++c)
        g.edges.push_back({circle_of[4 * c + 0], circle_of[4 * c + 2]});
    return g;
}

bool is_b_adequate(const LinkDiagram& d) {
    return !ab_resolution_graph(d, 'B').has_loop();
}

}  // namespace sl3web
