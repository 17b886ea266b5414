#include "sl3web/web.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sl3web {

int Web::sigma(int dart) const {
    const auto& rot = vertices_.at(vertex_of(dart)).rot;
    for (int i = 0; i < 3; ++i)
        if (rot[i] == dart) return rot[(i + 1) % 3];
    throw std::logic_error("web: dart missing from its vertex rotation");
}

std::vector<std::vector<int>> Web::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(2 * edges_.size(), 0);
    for (int d0 = 0; d0 < 2 * edge_count(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[d] = 1;
            face.push_back(d);
            d = sigma(twin(d));
        } while (d != d0);
        out.push_back(std::move(face));
    }
    return out;
}

void Web::validate() const {
    if (loops_ < 0) throw std::logic_error("web: negative loop count");
    if (3 * vertex_count() != 2 * edge_count())
        throw std::logic_error("web: vertex/edge count mismatch for a closed trivalent graph");
    std::vector<int> dart_count(2 * edge_count(), 0);
    for (int v = 0; v < vertex_count(); ++v) {
        for (int d : vertices_[v].rot) {
            if (d < 0 || d >= 2 * edge_count()) throw std::logic_error("web: rotation dart out of range");
            if (vertex_of(d) != v) throw std::logic_error("web: rotation dart at wrong vertex");
            ++dart_count[d];
        }
    }
    for (int c : dart_count)
        if (c != 1) throw std::logic_error("web: dart not covered exactly once by rotations");
    for (const auto& e : edges_) {
        if (!vertices_.at(e.src).source || vertices_.at(e.snk).source)
            throw std::logic_error("web: edge must run from a source to a sink");
    }

    // genus-0 check per connected component
    std::vector<int> comp(vertex_count(), -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < vertex_count(); ++v0) {
        if (comp[v0] >= 0) continue;
        std::vector<int> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : vertices_[v].rot) {
                int w = vertex_of(twin(d));
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<int> V(ncomp, 0), E(ncomp, 0), F(ncomp, 0);
    for (int v = 0; v < vertex_count(); ++v) ++V[comp[v]];
    for (const auto& e : edges_) ++E[comp[e.src]];
    for (const auto& f : faces()) ++F[comp[vertex_of(f[0])]];
    for (int k = 0; k < ncomp; ++k)
        if (V[k] - E[k] + F[k] != 2)
            throw std::logic_error("web does not embed in the 2-sphere (Euler check failed)");
}

std::vector<Web> Web::components() const {
    std::vector<int> comp(vertex_count(), -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < vertex_count(); ++v0) {
        if (comp[v0] >= 0) continue;
        std::vector<int> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : vertices_[v].rot) {
                int w = vertex_of(twin(d));
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<Web> out(ncomp);
    std::vector<int> vmap(vertex_count());
    std::vector<int> emap(edge_count());
    for (int v = 0; v < vertex_count(); ++v) vmap[v] = out[comp[v]].add_vertex(vertices_[v].source);
    for (int e = 0; e < edge_count(); ++e)
        emap[e] = out[comp[edges_[e].src]].add_edge(vmap[edges_[e].src], vmap[edges_[e].snk]);
    for (int v = 0; v < vertex_count(); ++v) {
        std::array<int, 3> rot;
        for (int i = 0; i < 3; ++i) {
            int d = vertices_[v].rot[i];
            rot[i] = 2 * emap[d >> 1] | (d & 1);
        }
        out[comp[v]].set_rotation(vmap[v], rot);
    }
    return out;
}

namespace {

int rot_pos(const Web& w, int v, int d) {
    const auto& rot = w.rotation(v);
    for (int i = 0; i < 3; ++i)
        if (rot[i] == d) return i;
    throw std::logic_error("web encode: dart not at vertex");
}

// Encoding of a connected web by breadth-first traversal from a root dart:
// vertices get labels in discovery order; each vertex contributes its kind
// and, for its darts in rotation order from the entry dart, the twin's vertex
// label and the twin's rotation offset from that vertex's entry dart.
std::string encode_from(const Web& w, int root) {
    const int n = w.vertex_count();
    std::vector<int> label(n, -1), entry(n, -1), order;
    order.reserve(n);
    label[w.vertex_of(root)] = 0;
    entry[w.vertex_of(root)] = root;
    order.push_back(w.vertex_of(root));
    std::string enc;
    enc.reserve(n * 7);
    for (std::size_t h = 0; h < order.size(); ++h) {
        const int u = order[h];
        enc.push_back(w.is_source(u) ? 'S' : 'T');
        const int p0 = rot_pos(w, u, entry[u]);
        for (int i = 0; i < 3; ++i) {
            const int d = w.rotation(u)[(p0 + i) % 3];
            const int t = Web::twin(d);
            const int tv = w.vertex_of(t);
            if (label[tv] < 0) {
                label[tv] = static_cast<int>(order.size());
                entry[tv] = t;
                order.push_back(tv);
            }
            const int off = (rot_pos(w, tv, t) - rot_pos(w, tv, entry[tv]) + 3) % 3;
            enc.push_back(static_cast<char>(1 + (label[tv] & 0x7f)));
            enc.push_back(static_cast<char>('0' + off));
        }
    }
    return enc;
}

std::string component_key(const Web& c) {
    std::string best;
    for (int d = 0; d < 2 * c.edge_count(); ++d) {
        std::string e = encode_from(c, d);
        if (best.empty() || e < best) best = std::move(e);
    }
    return best;
}

}  // namespace

std::string Web::debug_str() const {
    std::string out;
    out += "web: " + std::to_string(vertex_count()) + " vertices, " +
           std::to_string(edge_count()) + " edges, " + std::to_string(loops_) + " loops\n";
    for (int v = 0; v < vertex_count(); ++v) {
        out += (vertices_[v].source ? "  src " : "  snk ") + std::to_string(v) + ": rot(";
        for (int i = 0; i < 3; ++i) {
            const int d = vertices_[v].rot[i];
            out += "e" + std::to_string(d >> 1) + ((d & 1) ? "h" : "t");
            if (i < 2) out += " ";
        }
        out += ")\n";
    }
    for (int e = 0; e < edge_count(); ++e)
        out += "  e" + std::to_string(e) + ": " + std::to_string(edges_[e].src) + " -> " +
               std::to_string(edges_[e].snk) + "\n";
    return out;
}

std::string Web::canonical_key() const {
    auto comps = components();
    std::vector<std::string> keys;
    keys.reserve(comps.size());
    for (const auto& c : comps) keys.push_back(component_key(c));
    std::sort(keys.begin(), keys.end());
    std::string out = "L" + std::to_string(loops_) + ";";
    for (auto& k : keys) {
        out += k;
        out.push_back('|');
    }
    return out;
}

namespace {

// Rebuilds a web after surgery: some vertices and edges deleted, surviving
// darts possibly spliced pairwise into fresh edges, loops added. Rotation
// positions of surviving darts are preserved, which is what keeps the
// embedding intact.
struct Surgery {
    const Web& w;
    std::vector<char> del_vertex, del_edge;
    std::vector<std::array<int, 2>> splices;  // pairs of surviving old darts
    int new_loops = 0;

    explicit Surgery(const Web& web)
        : w(web), del_vertex(web.vertex_count(), 0), del_edge(web.edge_count(), 0) {}

    Web apply() const {
        Web out;
        out.add_loops(w.free_loops() + new_loops);
        std::vector<int> vmap(w.vertex_count(), -1);
        for (int v = 0; v < w.vertex_count(); ++v)
            if (!del_vertex[v]) vmap[v] = out.add_vertex(w.is_source(v));
        std::vector<int> dart_map(2 * w.edge_count(), -1);
        for (int e = 0; e < w.edge_count(); ++e) {
            if (del_edge[e]) continue;
            int ne = out.add_edge(vmap[w.edge(e).src], vmap[w.edge(e).snk]);
            dart_map[2 * e] = 2 * ne;
            dart_map[2 * e + 1] = 2 * ne + 1;
        }
        for (const auto& sp : splices) {
            const int va = w.vertex_of(sp[0]);
            const int vb = w.vertex_of(sp[1]);
            if (del_vertex[va] || del_vertex[vb] || del_edge[sp[0] >> 1] == 0 ||
                del_edge[sp[1] >> 1] == 0)
                throw std::logic_error("web surgery: bad splice");
            const bool a_is_src = w.is_source(va);
            if (a_is_src == w.is_source(vb))
                throw std::logic_error("web surgery: splice endpoints have equal polarity");
            const int src = a_is_src ? va : vb;
            const int snk = a_is_src ? vb : va;
            const int ne = out.add_edge(vmap[src], vmap[snk]);
            dart_map[a_is_src ? sp[0] : sp[1]] = 2 * ne;
            dart_map[a_is_src ? sp[1] : sp[0]] = 2 * ne + 1;
        }
        for (int v = 0; v < w.vertex_count(); ++v) {
            if (del_vertex[v]) continue;
            std::array<int, 3> rot;
            for (int i = 0; i < 3; ++i) {
                const int nd = dart_map[w.rotation(v)[i]];
                if (nd < 0) throw std::logic_error("web surgery: dangling dart");
                rot[i] = nd;
            }
            out.set_rotation(vmap[v], rot);
        }
        return out;
    }
};

}  // namespace

Web collapse_bubble(const Web& w, const std::vector<int>& face) {
    if (face.size() != 2) throw std::invalid_argument("collapse_bubble: not a 2-face");
    const int ea = face[0] >> 1, eb = face[1] >> 1;
    if (ea == eb) throw std::logic_error("collapse_bubble: degenerate bigon");
    const int T = w.edge(ea).src, S = w.edge(ea).snk;
    if (w.edge(eb).src != T || w.edge(eb).snk != S)
        throw std::logic_error("collapse_bubble: face edges are not parallel");

    auto third = [&](int v, int d1, int d2) {
        for (int d : w.rotation(v))
            if (d != d1 && d != d2) return d;
        throw std::logic_error("collapse_bubble: no third dart");
    };
    const int t3 = third(T, 2 * ea, 2 * eb);
    const int s3 = third(S, 2 * ea + 1, 2 * eb + 1);

    Surgery surg(w);
    surg.del_vertex[T] = surg.del_vertex[S] = 1;
    surg.del_edge[ea] = surg.del_edge[eb] = 1;
    if ((t3 >> 1) == (s3 >> 1)) {
        // theta: the remaining edge closes into a circle
        surg.del_edge[t3 >> 1] = 1;
        surg.new_loops = 1;
    } else {
        surg.del_edge[t3 >> 1] = 1;
        surg.del_edge[s3 >> 1] = 1;
        surg.splices.push_back({Web::twin(t3), Web::twin(s3)});
    }
    return surg.apply();
}

std::pair<Web, Web> resolve_square(const Web& w, const std::vector<int>& face) {
    if (face.size() != 4) throw std::invalid_argument("resolve_square: not a 4-face");
    std::array<int, 4> corner, leg;
    for (int i = 0; i < 4; ++i) corner[i] = w.vertex_of(face[i]);
    {
        std::set<int> cs(corner.begin(), corner.end());
        std::set<int> es{face[0] >> 1, face[1] >> 1, face[2] >> 1, face[3] >> 1};
        if (cs.size() != 4 || es.size() != 4)
            throw std::logic_error("resolve_square: degenerate 4-face");
    }
    for (int i = 0; i < 4; ++i) leg[i] = w.sigma(face[i]);

    auto smooth = [&](std::array<std::array<int, 2>, 2> pairing) {
        Surgery surg(w);
        for (int i = 0; i < 4; ++i) {
            surg.del_vertex[corner[i]] = 1;
            surg.del_edge[face[i] >> 1] = 1;
            surg.del_edge[leg[i] >> 1] = 1;
        }
        // Legs joining two corners chain the pairing into longer paths or
        // cycles; cycles become free circles.
        std::array<int, 4> ident;
        ident.fill(-1);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if ((leg[i] >> 1) == (leg[j] >> 1)) ident[i] = j, ident[j] = i;
        std::array<int, 4> pair_with{};
        for (auto [a, b] : pairing) {
            pair_with[a] = b;
            pair_with[b] = a;
        }
        std::array<char, 4> used{};
        for (int s = 0; s < 4; ++s) {
            if (used[s] || ident[s] >= 0) continue;
            // follow the chain from a free end
            int cur = s;
            used[cur] = 1;
            int other = pair_with[cur];
            while (ident[other] >= 0) {
                used[other] = 1;
                other = ident[other];
                used[other] = 1;
                other = pair_with[other];
            }
            used[other] = 1;
            surg.splices.push_back({Web::twin(leg[cur]), Web::twin(leg[other])});
        }
        // leftovers are cycles
        for (int s = 0; s < 4; ++s) {
            if (used[s]) continue;
            int cur = s;
            while (!used[cur]) {
                used[cur] = 1;
                used[ident[cur]] = 1;
                cur = pair_with[ident[cur]];
            }
            surg.new_loops += 1;
        }
        return surg.apply();
    };

    return {smooth({{{0, 1}, {2, 3}}}), smooth({{{1, 2}, {3, 0}}})};
}

std::optional<ReduceStep> find_reduction(const Web& w) {
    if (w.free_loops() > 0) return ReduceStep{ReduceStep::Circle, {}};
    std::optional<std::vector<int>> square;
    for (auto& f : w.faces()) {
        if (f.size() == 2) return ReduceStep{ReduceStep::Bubble, f};
        if (f.size() == 4 && !square) square = f;
    }
    if (square) return ReduceStep{ReduceStep::Square, *square};
    return std::nullopt;
}

namespace {

LaurentPoly eval_impl(const Web& w, const EvalOptions& opts);

LaurentPoly eval_component(const Web& c, const EvalOptions& opts) {
    const bool use_memo = opts.memo != nullptr && opts.random_order == nullptr;
    std::string key;
    if (use_memo) {
        key = c.canonical_key();
        auto it = opts.memo->find(key);
        if (it != opts.memo->end()) return it->second;
    }

    std::vector<int> face;
    bool is_bubble = false;
    if (opts.random_order) {
        std::vector<std::pair<bool, std::vector<int>>> choices;
        for (auto& f : c.faces()) {
            if (f.size() == 2) choices.push_back({true, f});
            else if (f.size() == 4) choices.push_back({false, f});
        }
        if (choices.empty())
            throw std::logic_error("closed web with no bigon or square face");
        auto& pick = choices[(*opts.random_order)() % choices.size()];
        is_bubble = pick.first;
        face = pick.second;
    } else {
        auto step = find_reduction(c);
        if (!step || step->kind == ReduceStep::Circle)
            throw std::logic_error("closed web with no bigon or square face");
        is_bubble = step->kind == ReduceStep::Bubble;
        face = step->face;
    }

    LaurentPoly val;
    if (is_bubble) {
        val = LaurentPoly::quantum_int(2) * eval_impl(collapse_bubble(c, face), opts);
    } else {
        auto [wa, wb] = resolve_square(c, face);
        val = eval_impl(wa, opts) + eval_impl(wb, opts);
    }
    if (use_memo) (*opts.memo)[key] = val;
    return val;
}

LaurentPoly eval_impl(const Web& w, const EvalOptions& opts) {
    LaurentPoly result = LaurentPoly::quantum_int(3).pow(w.free_loops());
    if (w.vertex_count() == 0) return result;
    for (const auto& c : w.components()) result *= eval_component(c, opts);
    return result;
}

}  // namespace

LaurentPoly evaluate(const Web& w, const EvalOptions& opts) { return eval_impl(w, opts); }

Web apply_ow_move(const Web& w, const OwSite& site) {
    const bool a_loop = site.strand_a < 0;
    const bool b_loop = site.strand_b < 0;

    if (a_loop && b_loop) {
        // Two crossingless circles become the theta web.
        if (w.free_loops() < 2) throw std::invalid_argument("ow move: needs two circles");
        Web merged = w;
        merged.add_loops(-2);
        const int U = merged.add_vertex(true);
        const int V = merged.add_vertex(false);
        const int e1 = merged.add_edge(U, V);
        const int e2 = merged.add_edge(U, V);
        const int e3 = merged.add_edge(U, V);
        merged.set_rotation(U, {2 * e1, 2 * e2, 2 * e3});
        merged.set_rotation(V, {2 * e1 + 1, 2 * e3 + 1, 2 * e2 + 1});
        merged.validate();
        return merged;
    }

    // Below: at least one real edge. Insert source U and sink V across the
    // two strands; the rung runs U -> V.
    if (a_loop) return apply_ow_move(w, {site.strand_b, site.strand_a, !site.swap_sides});

    const int ea = site.strand_a;
    if (ea < 0 || ea >= w.edge_count()) throw std::invalid_argument("ow move: bad edge id");
    const int Ta = w.edge(ea).src, Sa = w.edge(ea).snk;

    if (b_loop) {
        // One strand on edge ea, the other a crossingless circle.
        if (w.free_loops() < 1) throw std::invalid_argument("ow move: needs a circle");
        Web nw;
        nw.add_loops(w.free_loops() - 1);
        for (int v = 0; v < w.vertex_count(); ++v) nw.add_vertex(w.is_source(v));
        const int U = nw.add_vertex(true);
        const int V = nw.add_vertex(false);
        std::vector<int> emap(w.edge_count(), -1);
        for (int e = 0; e < w.edge_count(); ++e)
            if (e != ea) emap[e] = nw.add_edge(w.edge(e).src, w.edge(e).snk);
        const int eTV = nw.add_edge(Ta, V);
        const int eUS = nw.add_edge(U, Sa);
        const int eLp = nw.add_edge(U, V);  // the circle, rerouted through the piece
        const int rung = nw.add_edge(U, V);
        auto map_dart = [&](int d) {
            const int e = d >> 1;
            if (e == ea) return (d & 1) ? 2 * eUS + 1 : 2 * eTV;  // tail at Ta, head at Sa
            return 2 * emap[e] | (d & 1);
        };
        for (int v = 0; v < w.vertex_count(); ++v) {
            std::array<int, 3> rot;
            for (int i = 0; i < 3; ++i) rot[i] = map_dart(w.rotation(v)[i]);
            nw.set_rotation(v, rot);
        }
        if (!site.swap_sides) {
            nw.set_rotation(V, {2 * rung + 1, 2 * eTV + 1, 2 * eLp + 1});
            nw.set_rotation(U, {2 * eLp, 2 * eUS, 2 * rung});
        } else {
            nw.set_rotation(V, {2 * rung + 1, 2 * eLp + 1, 2 * eTV + 1});
            nw.set_rotation(U, {2 * eUS, 2 * eLp, 2 * rung});
        }
        nw.validate();
        return nw;
    }

    const int eb = site.strand_b;
    if (eb < 0 || eb >= w.edge_count()) throw std::invalid_argument("ow move: bad edge id");

    Web nw;
    nw.add_loops(w.free_loops());
    for (int v = 0; v < w.vertex_count(); ++v) nw.add_vertex(w.is_source(v));
    const int U = nw.add_vertex(true);
    const int V = nw.add_vertex(false);

    if (ea == eb) {
        // both arcs on the same edge: split it twice
        std::vector<int> emap(w.edge_count(), -1);
        for (int e = 0; e < w.edge_count(); ++e)
            if (e != ea) emap[e] = nw.add_edge(w.edge(e).src, w.edge(e).snk);
        const int eTV = nw.add_edge(Ta, V);
        const int eUS = nw.add_edge(U, Sa);
        const int eMid = nw.add_edge(U, V);
        const int rung = nw.add_edge(U, V);
        auto map_dart = [&](int d) {
            const int e = d >> 1;
            if (e == ea) return (d & 1) ? 2 * eUS + 1 : 2 * eTV;
            return 2 * emap[e] | (d & 1);
        };
        for (int v = 0; v < w.vertex_count(); ++v) {
            std::array<int, 3> rot;
            for (int i = 0; i < 3; ++i) rot[i] = map_dart(w.rotation(v)[i]);
            nw.set_rotation(v, rot);
        }
        if (!site.swap_sides) {
            nw.set_rotation(V, {2 * rung + 1, 2 * eTV + 1, 2 * eMid + 1});
            nw.set_rotation(U, {2 * eMid, 2 * eUS, 2 * rung});
        } else {
            nw.set_rotation(V, {2 * rung + 1, 2 * eMid + 1, 2 * eTV + 1});
            nw.set_rotation(U, {2 * eUS, 2 * eMid, 2 * rung});
        }
        nw.validate();
        return nw;
    }

    const int Tb = w.edge(eb).src, Sb = w.edge(eb).snk;
    std::vector<int> emap(w.edge_count(), -1);
    for (int e = 0; e < w.edge_count(); ++e)
        if (e != ea && e != eb) emap[e] = nw.add_edge(w.edge(e).src, w.edge(e).snk);
    const int eTaV = nw.add_edge(Ta, V);
    const int eUSa = nw.add_edge(U, Sa);
    const int eTbV = nw.add_edge(Tb, V);
    const int eUSb = nw.add_edge(U, Sb);
    const int rung = nw.add_edge(U, V);
    auto map_dart = [&](int d) {
        const int e = d >> 1;
        if (e == ea) return (d & 1) ? 2 * eUSa + 1 : 2 * eTaV;
        if (e == eb) return (d & 1) ? 2 * eUSb + 1 : 2 * eTbV;
        return 2 * emap[e] | (d & 1);
    };
    for (int v = 0; v < w.vertex_count(); ++v) {
        std::array<int, 3> rot;
        for (int i = 0; i < 3; ++i) rot[i] = map_dart(w.rotation(v)[i]);
        nw.set_rotation(v, rot);
    }
    if (!site.swap_sides) {
        nw.set_rotation(V, {2 * rung + 1, 2 * eTaV + 1, 2 * eTbV + 1});
        nw.set_rotation(U, {2 * eUSb, 2 * eUSa, 2 * rung});
    } else {
        nw.set_rotation(V, {2 * rung + 1, 2 * eTbV + 1, 2 * eTaV + 1});
        nw.set_rotation(U, {2 * eUSa, 2 * eUSb, 2 * rung});
    }
    nw.validate();
    return nw;
}

}  // namespace sl3web
