#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl3web/statesum.hpp"

using namespace sl3web;

namespace {

const LaurentPoly two = LaurentPoly::quantum_int(2);
const LaurentPoly three = LaurentPoly::quantum_int(3);

LinkDiagram trefoil() { return LinkDiagram::from_braid_word({1, 1, 1}, 2); }

LaurentPoly q(int e) { return LaurentPoly::monomial(1, e); }

// <<positive trefoil>> worked out by hand through the skein relation:
// P = 2a^2 - a^4 + a^2 z^2, specialized at a = q^-3, z = q - q^-1 and
// multiplied by [3].
LaurentPoly trefoil_value() {
    return q(-2) + q(-4) + LaurentPoly::monomial(2, -6) + q(-8) - q(-12) - q(-14);
}

}  // namespace

TEST_CASE("unknots evaluate to [3]") {
    CHECK(invariant(LinkDiagram::unknot()) == three);
    // Reidemeister I: a positive kink
    CHECK(invariant(LinkDiagram::from_braid_word({1}, 2)) == three);
    CHECK(invariant(LinkDiagram::from_braid_word({-1}, 2)) == three);
    // Reidemeister II on top of a kink
    CHECK(invariant(LinkDiagram::from_braid_word({1, 1, -1}, 2)) == three);
    // identity braid closure: two split circles
    CHECK(invariant(LinkDiagram::from_braid_word({1, -1}, 2)) == three * three);
}

TEST_CASE("trefoil invariant matches the hand-computed value") {
    const LaurentPoly p = invariant(trefoil());
    CHECK(p == trefoil_value());
    CHECK(p.degree() == -2);  // 2(v - e) = 2(2 - 3)
    CHECK(p.coeff(-2) == 1);
}

TEST_CASE("state webs") {
    const LinkDiagram t = trefoil();
    const Web all_o = resolution_state_diagram(t, 0);
    CHECK(all_o.vertex_count() == 0);
    CHECK(all_o.free_loops() == 2);

    const Web all_w = resolution_state_diagram(t, 0b111);
    CHECK(all_w.vertex_count() == 6);
    CHECK(all_w.free_loops() == 0);

    // single crossing, W-resolved: the theta web
    const LinkDiagram kink = LinkDiagram::from_braid_word({1}, 2);
    const Web wweb = resolution_state_diagram(kink, 1);
    CHECK(wweb.vertex_count() == 2);
    CHECK(evaluate(wweb) == two * three);
}

TEST_CASE("state weights and phases") {
    const LinkDiagram t = trefoil();
    // all-O: Y(O) = q^(-2e) [3]^v
    const StateWeight o = state_weight(t, 0);
    CHECK(o.alpha_plus == 3);
    CHECK(o.beta_plus == 0);
    CHECK(o.weight == q(-6) * three * three);

    // all-W: phase (-1)^3 q^-9
    const StateWeight w = state_weight(t, 0b111);
    CHECK(w.beta_plus == 3);
    CHECK(w.phase == LaurentPoly::monomial(-1, -9));

    // negative trefoil, all-O: phase q^6
    const StateWeight m = state_weight(t.mirrored(), 0);
    CHECK(m.alpha_minus == 3);
    CHECK(m.phase == q(6));
}

TEST_CASE("state graphs") {
    const LinkDiagram t = trefoil();
    CHECK(state_graph(t, 0).edge_count() == 0);
    CHECK(state_graph(t, 0).vertices == 2);
    CHECK(state_graph(t, 0b111).edge_count() == 3);
    CHECK(state_graph(t, 0b001).edge_count() == 1);
}

TEST_CASE("weight degrees") {
    const LinkDiagram t = trefoil();
    CHECK(degree(t, 0) == 2 * (2 - 3));          // d(O) = 2(v - e)
    CHECK(degree(t, 0b001) == 2 * (2 - 3 - 1));  // one W-resolution
    CHECK(degree(t, 0b010) == 2 * (2 - 3 - 1));
}

TEST_CASE("reidemeister III invariance") {
    const LinkDiagram a = LinkDiagram::from_braid_word({1, 2, 1}, 3);
    const LinkDiagram b = LinkDiagram::from_braid_word({2, 1, 2}, 3);
    CHECK(invariant(a) == invariant(b));

    const LinkDiagram c = LinkDiagram::from_braid_word({1, 2, 1, 1}, 3);
    const LinkDiagram d = LinkDiagram::from_braid_word({2, 1, 2, 1}, 3);
    CHECK(invariant(c) == invariant(d));
}

TEST_CASE("same link, different positive diagrams") {
    // the trefoil as a 2-braid and as a 3-braid closure
    const LaurentPoly a = invariant(trefoil());
    const LaurentPoly b = invariant(LinkDiagram::from_braid_word({1, 2, 1, 2}, 3));
    CHECK(a == b);
}

TEST_CASE("mirror swaps q and q inverse") {
    for (const auto& word :
         std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 1, 1, 1}, {1, -2, 1, -2}}) {
        const LinkDiagram d = LinkDiagram::from_braid_word(word, 3);
        CHECK(invariant(d.mirrored()) == invariant(d).substitute_q_inverse());
    }
}

TEST_CASE("disjoint union multiplies") {
    const LinkDiagram t = trefoil();
    const LinkDiagram u = LinkDiagram::from_braid_word({1, 1, 1, 1, 1}, 2);
    CHECK(invariant(LinkDiagram::disjoint_union(t, u)) == invariant(t) * invariant(u));
    CHECK(invariant(LinkDiagram::disjoint_union(t, LinkDiagram::unknot())) ==
          invariant(t) * three);
}

TEST_CASE("connected sum identity") {
    const LinkDiagram t = trefoil();
    const LinkDiagram u = LinkDiagram::from_braid_word({1, 1, 1, 1, 1}, 2);
    const LinkDiagram sum = LinkDiagram::connected_sum(t, t.some_arc(), u, u.some_arc());
    CHECK(three * invariant(sum) == invariant(t) * invariant(u));
    // summing with a crossingless circle changes nothing
    const LinkDiagram trivial =
        LinkDiagram::connected_sum(t, t.some_arc(), LinkDiagram::unknot(), 0);
    CHECK(invariant(trivial) == invariant(t));
}

TEST_CASE("the figure-eight value is palindromic") {
    const LinkDiagram fig8 =
        LinkDiagram::from_pd_code("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
    const LaurentPoly p = invariant(fig8);
    CHECK(p == p.substitute_q_inverse());
    CHECK(p.coeff(0) != 0);
}

TEST_CASE("connected sum is independent of the chosen arcs") {
    const LinkDiagram t = trefoil();
    const auto arcs = t.out_darts();
    const LaurentPoly expect = invariant(LinkDiagram::connected_sum(t, arcs[0], t, arcs[0]));
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        const LinkDiagram sum =
            LinkDiagram::connected_sum(t, arcs[i], t, arcs[(3 * i) % arcs.size()]);
        CHECK(invariant(sum) == expect);
    }
}

TEST_CASE("positive diagrams take even exponents only") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        const int strands = 2 + static_cast<int>(rng() % 3);
        std::vector<int> word;
        const int len = 3 + static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i)
            word.push_back(1 + static_cast<int>(rng() % (strands - 1)));
        const LinkDiagram d = LinkDiagram::from_braid_word(word, strands);
        const LaurentPoly p = invariant(d);
        for (const auto& [e, c] : p.terms()) CHECK(e % 2 == 0);
        if (d.connected()) {
            const auto s = seifert_circles(d);
            CHECK(p.degree() == 2 * (s.circle_count() - d.crossings()));
            CHECK(p.coeff(p.degree()) == 1);
        }
    }
}

TEST_CASE("state graph component count bounds the weight degree") {
    // a state whose graph has v - k components weighs in at most 2(v - e - k)
    std::mt19937_64 rng(17);
    WebMemo memo;
    for (int rep = 0; rep < 6; ++rep) {
        const int strands = 2 + static_cast<int>(rng() % 2);
        std::vector<int> word;
        const int len = 3 + static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i)
            word.push_back(1 + static_cast<int>(rng() % (strands - 1)));
        const LinkDiagram d = LinkDiagram::from_braid_word(word, strands);
        const int v = seifert_circles(d).circle_count();
        const int e = d.crossings();
        for (State s = 0; s < (State{1} << e); ++s) {
            const int comps = state_graph(d, s).component_count();
            CHECK(degree(d, s, &memo) <= 2 * (comps - e));
            (void)v;
        }
    }
}

TEST_CASE("crossing cap") {
    StatesumOptions opts;
    opts.crossing_cap = 2;
    CHECK_THROWS_AS(invariant(trefoil(), opts), CapExceeded);
}

TEST_CASE("worker partitioning changes nothing") {
    const LinkDiagram d = LinkDiagram::from_braid_word({1, 2, 1, 2, 1, 2}, 3);
    StatesumOptions seq, par;
    par.workers = 4;
    CHECK(invariant(d, seq) == invariant(d, par));
}

TEST_CASE("ow move experiment stays within the degree law") {
    const OwExperimentReport rep = ow_move_experiment(trefoil(), 200, 5);
    CHECK(rep.violations == 0);
    CHECK(rep.trials > 0);
    CHECK(rep.delta_zero + rep.delta_two == rep.trials);

    // flips from the all-O state always drop the degree by 2
    WebMemo memo;
    for (int c = 0; c < 3; ++c)
        CHECK(degree(trefoil(), State{1} << c, &memo) == degree(trefoil(), 0, &memo) - 2);

    CHECK_THROWS_AS(ow_move_experiment(trefoil().mirrored(), 10, 1), std::invalid_argument);
}
