#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "sl3web/seifert.hpp"

using namespace sl3web;

namespace {

LinkDiagram trefoil() { return LinkDiagram::from_braid_word({1, 1, 1}, 2); }

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(SL3WEB_FIXTURES) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Two reduced edges at a shared vertex 0, with a prescribed cyclic word of
// lifts around it (1 = first edge, 2 = second).
SeifertGraph pair_graph(const std::vector<int>& word) {
    SeifertGraph g;
    g.vertices = 3;
    g.rotation.resize(3);
    for (int w : word) {
        const int other = w == 1 ? 1 : 2;
        const int e = g.edge_count();
        g.edge_ends.push_back({0, other});
        g.rotation[0].push_back(e);
        g.rotation[other].push_back(e);
    }
    return g;
}

}  // namespace

TEST_CASE("trefoil seifert graph") {
    const SeifertGraph g = build_seifert_graph(seifert_circles(trefoil()));
    CHECK(g.vertices == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.bipartite());

    const ReducedSeifertGraph r = reduce(g);
    CHECK(r.edge_count() == 1);
    CHECK(r.edges[0].multiplicity() == 3);
    CHECK(r.mu() == 1);
    CHECK(r.is_tree());
    CHECK(theta(g, r) == 0);
}

TEST_CASE("edgeless graphs") {
    const SeifertGraph g = build_seifert_graph(seifert_circles(LinkDiagram::unknot()));
    CHECK(g.vertices == 1);
    CHECK(g.edge_count() == 0);
    const ReducedSeifertGraph r = reduce(g);
    CHECK(r.edge_count() == 0);
    CHECK(r.is_tree());
    CHECK(r.mu() == 0);
}

TEST_CASE("classify pair run profiles") {
    // two consecutive blocks: separated
    {
        const SeifertGraph g = pair_graph({1, 1, 1, 2, 2});
        const ReducedSeifertGraph r = reduce(g);
        REQUIRE(r.edge_count() == 2);
        const MixedPairReport rep = classify_pair(g, r, 0, 1);
        CHECK(rep.mixing_index == 1);
        CHECK_FALSE(rep.mixed);
        CHECK(rep.runs_a == std::vector<int>{3});
        CHECK(rep.runs_b == std::vector<int>{2});
    }
    // alternating: mixed with index 2
    {
        const SeifertGraph g = pair_graph({1, 2, 1, 2});
        const ReducedSeifertGraph r = reduce(g);
        const MixedPairReport rep = classify_pair(g, r, 0, 1);
        CHECK(rep.mixing_index == 2);
        CHECK(rep.mixed);
        CHECK(rep.runs_a == std::vector<int>{1, 1});
        CHECK(rep.runs_b == std::vector<int>{1, 1});
    }
    // wrap-around: (1,2,2,1,2,1) has runs (1+1+...) merged across the seam
    {
        const SeifertGraph g = pair_graph({1, 2, 2, 1, 2, 1});
        const ReducedSeifertGraph r = reduce(g);
        const MixedPairReport rep = classify_pair(g, r, 0, 1);
        CHECK(rep.mixing_index == 2);
        CHECK(rep.mixed);
    }
    // rotating the cyclic word never changes the classification
    {
        std::vector<int> word = {1, 2, 2, 1, 2, 1, 1, 2};
        for (std::size_t rot = 0; rot < word.size(); ++rot) {
            std::vector<int> rotated;
            for (std::size_t i = 0; i < word.size(); ++i)
                rotated.push_back(word[(i + rot) % word.size()]);
            const SeifertGraph g = pair_graph(rotated);
            const ReducedSeifertGraph r = reduce(g);
            const MixedPairReport rep = classify_pair(g, r, 0, 1);
            CHECK(rep.mixing_index == 3);
            // symmetry in the two edges
            const MixedPairReport swapped = classify_pair(g, r, 1, 0);
            CHECK(swapped.mixing_index == 3);
        }
    }
    // disjoint or identical edges are rejected
    {
        SeifertGraph g;
        g.vertices = 4;
        g.edge_ends = {{0, 1}, {2, 3}};
        g.rotation = {{0}, {0}, {1}, {1}};
        const ReducedSeifertGraph r = reduce(g);
        CHECK_THROWS_AS(classify_pair(g, r, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(classify_pair(g, r, 0, 0), std::invalid_argument);
    }
}

TEST_CASE("theta of small braid closures") {
    // trefoil on three strands: two reduced edges alternating around the
    // middle circle, one mixed pair
    const LinkDiagram t3 = LinkDiagram::from_braid_word({1, 2, 1, 2}, 3);
    const SeifertGraph g = build_seifert_graph(seifert_circles(t3));
    const ReducedSeifertGraph r = reduce(g);
    CHECK(g.vertices == 3);
    CHECK(r.edge_count() == 2);
    CHECK(r.mu() == 2);
    CHECK(theta(g, r) == 1);

    // prime positive braid closures: mu = e' = v - 1 and theta = v - 2
    for (int v = 2; v <= 4; ++v) {
        std::vector<int> word;
        for (int rep = 0; rep < v + 1; ++rep)
            for (int i = 1; i < v; ++i) word.push_back(i);
        const LinkDiagram d = LinkDiagram::from_braid_word(word, v);
        const SeifertStats s = seifert_stats(d);
        CHECK(s.v == v);
        CHECK(s.e_prime == v - 1);
        CHECK(s.mu == v - 1);
        CHECK(s.theta == v - 2);
    }
}

TEST_CASE("alternating positive braids have theta zero") {
    for (int n : {2, 3, 5, 7}) {
        const LinkDiagram d = LinkDiagram::from_braid_word(std::vector<int>(n, 1), 2);
        const SeifertStats s = seifert_stats(d);
        CHECK(s.theta == 0);
        CHECK(s.mu == 1);
        CHECK(s.tree);
    }
}

TEST_CASE("bipartiteness of seifert graphs") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 30; ++rep) {
        const int strands = 2 + static_cast<int>(rng() % 3);
        const int len = 1 + static_cast<int>(rng() % 8);
        std::vector<int> word;
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng() % (strands - 1));
            if (rng() & 1) g = -g;
            word.push_back(g);
        }
        const LinkDiagram d = LinkDiagram::from_braid_word(word, strands);
        CHECK(build_seifert_graph(seifert_circles(d)).bipartite());
    }
}

TEST_CASE("cycle certificates") {
    // a reduced graph with a cycle: connected sum arrangement fails, so build
    // a diagram whose circles bound a 4-cycle: the (2,2,2) pretzel-like braid
    const LinkDiagram d = LinkDiagram::from_braid_word({1, 1, 2, 2, 1, 1, 2, 2}, 3);
    const SeifertGraph g = build_seifert_graph(seifert_circles(d));
    const ReducedSeifertGraph r = reduce(g);
    if (!r.is_tree()) {
        CHECK(!r.find_cycle().empty());
    }
    // trees have no cycle
    const ReducedSeifertGraph rt = reduce(build_seifert_graph(seifert_circles(trefoil())));
    CHECK(rt.find_cycle().empty());
}

TEST_CASE("stats of the bundled 12-crossing positive diagram") {
    const LinkDiagram d = LinkDiagram::from_pd_code(fixture("11n183.pd"));
    REQUIRE(d.crossings() == 12);
    CHECK(d.all_positive());
    const SeifertStats s = seifert_stats(d);
    CHECK(s.v == 7);
    CHECK(s.e == 12);
    CHECK(s.e_prime == 6);
    CHECK(s.mu == 6);
    CHECK(s.theta == 7);
    CHECK(s.tree);
    CHECK(s.components == 1);
}

TEST_CASE("stats json shape") {
    const nlohmann::json j = seifert_stats(trefoil()).to_json();
    CHECK(j["v"] == 2);
    CHECK(j["e"] == 3);
    CHECK(j["e_prime"] == 1);
    CHECK(j["mu"] == 1);
    CHECK(j["theta"] == 0);
    CHECK(j["is_tree"] == true);
    CHECK(j["multiplicities"] == nlohmann::json::array({3}));
}
