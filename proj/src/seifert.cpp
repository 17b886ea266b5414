#include "sl3web/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sl3web {

namespace {

// Union-find over vertices, for connectivity questions.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool SeifertGraph::bipartite() const {
    std::vector<int> color(vertices, -1);
    for (int s = 0; s < vertices; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : rotation[u]) {
                int w = edge_ends[e][0] == u ? edge_ends[e][1] : edge_ends[e][0];
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int SeifertGraph::component_count() const {
    Dsu dsu(vertices);
    int comps = vertices;
    for (const auto& e : edge_ends)
        if (dsu.unite(e[0], e[1])) --comps;
    return comps;
}

SeifertGraph build_seifert_graph(const SeifertCircleSet& circles) {
    SeifertGraph g;
    g.vertices = circles.circle_count();
    g.edge_ends.resize(circles.crossing_circles.size());
    for (std::size_t c = 0; c < circles.crossing_circles.size(); ++c) {
        const auto& cc = circles.crossing_circles[c];
        if (cc[0] < 0 || cc[1] < 0) throw std::logic_error("seifert graph: unattached crossing");
        if (cc[0] == cc[1])
            throw std::logic_error("seifert graph: crossing attaches one circle twice");
        g.edge_ends[c] = {cc[0], cc[1]};
    }
    g.rotation.resize(g.vertices);
    for (int v = 0; v < g.vertices; ++v) g.rotation[v] = circles.attachments[v];
    return g;
}

SeifertGraph spanning_subgraph(const SeifertGraph& g, const std::vector<int>& edges) {
    SeifertGraph s;
    s.vertices = g.vertices;
    std::vector<char> keep(g.edge_count(), 0);
    std::vector<int> new_id(g.edge_count(), -1);
    for (int e : edges) keep.at(e) = 1;
    for (int e = 0, k = 0; e < g.edge_count(); ++e)
        if (keep[e]) {
            new_id[e] = k++;
            s.edge_ends.push_back(g.edge_ends[e]);
        }
    s.rotation.resize(s.vertices);
    for (int v = 0; v < g.vertices; ++v)
        for (int e : g.rotation[v])
            if (keep[e]) s.rotation[v].push_back(new_id[e]);
    return s;
}

int ReducedSeifertGraph::mu() const {
    int m = 0;
    for (const auto& e : edges)
        if (e.multiplicity() > 1) ++m;
    return m;
}

int ReducedSeifertGraph::component_count() const {
    Dsu dsu(vertices);
    int comps = vertices;
    for (const auto& e : edges)
        if (dsu.unite(e.u, e.v)) --comps;
    return comps;
}

bool ReducedSeifertGraph::connected() const { return component_count() <= 1; }

bool ReducedSeifertGraph::is_tree() const {
    return connected() && edge_count() == vertices - 1;
}

std::vector<int> ReducedSeifertGraph::find_cycle() const {
    Dsu dsu(vertices);
    for (int i = 0; i < edge_count(); ++i) {
        if (!dsu.unite(edges[i].u, edges[i].v)) {
            // edge i closes a cycle; recover a path between its endpoints
            // through the already-joined edges by BFS
            std::vector<std::vector<std::pair<int, int>>> adj(vertices);
            for (int j = 0; j < i; ++j) {
                adj[edges[j].u].push_back({edges[j].v, j});
                adj[edges[j].v].push_back({edges[j].u, j});
            }
            std::vector<int> via_edge(vertices, -1), prev(vertices, -1);
            std::vector<int> queue{edges[i].u};
            std::vector<char> seen(vertices, 0);
            seen[edges[i].u] = 1;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int u = queue[h];
                for (auto [w, j] : adj[u]) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        prev[w] = u;
                        via_edge[w] = j;
                        queue.push_back(w);
                    }
                }
            }
            std::vector<int> cycle{i};
            for (int x = edges[i].v; x != edges[i].u; x = prev[x]) cycle.push_back(via_edge[x]);
            return cycle;
        }
    }
    return {};
}

ReducedSeifertGraph reduce(const SeifertGraph& g) {
    ReducedSeifertGraph r;
    r.vertices = g.vertices;
    std::map<std::pair<int, int>, int> index;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge_ends[e];
        auto key = std::minmax(a, b);
        auto it = index.find(key);
        if (it == index.end()) {
            index[key] = r.edge_count();
            r.edges.push_back({key.first, key.second, {e}});
        } else {
            r.edges[it->second].lifts.push_back(e);
        }
    }
    return r;
}

MixedPairReport classify_pair(const SeifertGraph& g, const ReducedSeifertGraph& r,
                              int edge1, int edge2) {
    if (edge1 == edge2) throw std::invalid_argument("classify_pair: edges must be distinct");
    const ReducedEdge& a = r.edges.at(edge1);
    const ReducedEdge& b = r.edges.at(edge2);
    // Distinct reduced edges have distinct vertex pairs, so they share at most
    // one vertex.
    int shared = -1;
    for (int x : {a.u, a.v})
        for (int y : {b.u, b.v})
            if (x == y) {
                if (shared >= 0 && shared != x)
                    throw std::logic_error("classify_pair: reduced edges share two vertices");
                shared = x;
            }
    if (shared < 0) throw std::invalid_argument("classify_pair: edges are disjoint");

    // Cyclic word over {1,2} given by the lifts of the two edges around the
    // shared vertex, other edges ignored.
    std::vector<char> in_a(g.edge_count(), 0), in_b(g.edge_count(), 0);
    for (int e : a.lifts) in_a[e] = 1;
    for (int e : b.lifts) in_b[e] = 1;
    std::vector<int> word;
    for (int e : g.rotation[shared]) {
        if (in_a[e]) word.push_back(1);
        else if (in_b[e]) word.push_back(2);
    }
    const int L = static_cast<int>(word.size());
    if (L != a.multiplicity() + b.multiplicity())
        throw std::logic_error("classify_pair: attachment count mismatch at shared vertex");

    MixedPairReport rep;
    rep.edge1 = edge1;
    rep.edge2 = edge2;
    rep.shared_vertex = shared;

    // Maximal cyclic runs; start at a 1-run boundary so wrapped runs merge.
    int start = -1;
    for (int i = 0; i < L; ++i)
        if (word[i] == 1 && word[(i + L - 1) % L] == 2) {
            start = i;
            break;
        }
    if (start < 0) throw std::logic_error("classify_pair: degenerate attachment word");
    int i = 0;
    while (i < L) {
        int val = word[(start + i) % L];
        int len = 0;
        while (i < L && word[(start + i) % L] == val) {
            ++len;
            ++i;
        }
        (val == 1 ? rep.runs_a : rep.runs_b).push_back(len);
    }
    rep.mixing_index = static_cast<int>(rep.runs_a.size());
    rep.mixed = rep.mixing_index >= 2;
    return rep;
}

int theta(const SeifertGraph& g, const ReducedSeifertGraph& r) {
    int count = 0;
    for (int i = 0; i < r.edge_count(); ++i)
        for (int j = i + 1; j < r.edge_count(); ++j) {
            const ReducedEdge& a = r.edges[i];
            const ReducedEdge& b = r.edges[j];
            const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (!share) continue;
            if (classify_pair(g, r, i, j).mixed) ++count;
        }
    return count;
}

nlohmann::json SeifertStats::to_json() const {
    return {{"v", v},        {"e", e},         {"e_prime", e_prime},
            {"mu", mu},      {"theta", theta}, {"is_tree", tree},
            {"components", components}, {"multiplicities", multiplicities}};
}

SeifertStats seifert_stats(const LinkDiagram& d) {
    const SeifertGraph g = build_seifert_graph(seifert_circles(d));
    const ReducedSeifertGraph r = reduce(g);
    SeifertStats s;
    s.v = g.vertices;
    s.e = g.edge_count();
    s.e_prime = r.edge_count();
    s.mu = r.mu();
    s.theta = theta(g, r);
    s.components = r.component_count();
    s.tree = r.is_tree();
    for (const auto& e : r.edges) s.multiplicities.push_back(e.multiplicity());
    std::sort(s.multiplicities.begin(), s.multiplicities.end());
    return s;
}

}  // namespace sl3web
