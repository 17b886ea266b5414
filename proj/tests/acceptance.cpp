// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact integer arithmetic; there are no tolerances.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "sl3web/analysis.hpp"
#include "sl3web/homfly.hpp"
#include "sl3web/knotinfo.hpp"
#include "sl3web/statesum.hpp"

using namespace sl3web;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!ok) ++failures;
}

std::string fixture_path(const std::string& name) {
    return std::string(SL3WEB_FIXTURES) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinkDiagram braid(const std::vector<int>& w, int strands) {
    return LinkDiagram::from_braid_word(w, strands);
}

LinkDiagram torus2(int n) { return braid(std::vector<int>(n, 1), 2); }

LinkDiagram random_braid(std::mt19937_64& rng, bool positive_only, int max_crossings) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const int len = 2 + static_cast<int>(rng() % (max_crossings - 1));
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng() % (strands - 1));
        if (!positive_only && (rng() & 1)) g = -g;
        word.push_back(g);
    }
    return braid(word, strands);
}

const LaurentPoly kTwo = LaurentPoly::quantum_int(2);
const LaurentPoly kThree = LaurentPoly::quantum_int(3);

void criterion1_oracle_equivalence() {
    std::vector<std::pair<std::string, LinkDiagram>> corpus;
    for (int n = 2; n <= 9; ++n) corpus.push_back({"T(2," + std::to_string(n) + ")", torus2(n)});
    corpus.push_back({"T(3,4)", braid({1, 2, 1, 2, 1, 2, 1, 2}, 3)});
    {
        const LinkDiagram t = torus2(3);
        const LinkDiagram f = torus2(5);
        corpus.push_back({"3_1 # 3_1", LinkDiagram::connected_sum(t, t.some_arc(), t, t.some_arc())});
        corpus.push_back({"3_1 # 5_1", LinkDiagram::connected_sum(t, t.some_arc(), f, f.some_arc())});
    }
    corpus.push_back({"11n183 diagram", LinkDiagram::from_pd_code(slurp(fixture_path("11n183.pd")))});
    std::mt19937_64 rng(20240001);
    for (int i = 0; i < 10; ++i)
        corpus.push_back({"random braid " + std::to_string(i), random_braid(rng, false, 10)});

    int bad = 0;
    for (const auto& [name, d] : corpus) {
        const LaurentPoly lhs = invariant(d);
        const LaurentPoly rhs = specialize_sl3(homfly(d));
        if (lhs != rhs) {
            ++bad;
            std::cout << "  mismatch on " << name << "\n";
        }
    }
    report(1, bad == 0,
           "state sum equals [3] P(q^-3, q - q^-1) on " + std::to_string(corpus.size()) +
               " diagrams (" + std::to_string(bad) + " mismatches)");
}

void criterion2_table() {
    const char* env = std::getenv("SL3WEB_KNOTINFO_CSV");
    const bool external = env != nullptr;
    const std::string csv_path = external ? env : fixture_path("knot_homfly.csv");
    HomflyConvention conv;  // v/z variables, per-knot mirror
    std::ifstream csv(csv_path);
    std::ifstream exp(fixture_path("table_expected.csv"));
    const auto data = parse_knotinfo_csv(csv, conv);
    const auto expected = parse_expected_table(exp);
    const TableCheck chk = check_table(data, expected, conv);

    std::ostringstream detail;
    detail << chk.rows_matched << "/" << chk.rows_present << " present rows match, "
           << chk.rows_expected << " expected total";
    for (const auto& m : chk.mismatches) std::cout << "  " << m << "\n";
    if (external) {
        report(2, chk.complete(), "table reproduction from " + csv_path + ": " + detail.str());
    } else {
        // The bundled csv covers the knots whose diagrams ship with the
        // repository; a complete KnotInfo export exercises all 33 rows.
        const bool ok = chk.calibrated && chk.all_present_match() && chk.rows_present >= 8;
        report(2, ok,
               "table pipeline on the bundled csv: " + detail.str() +
                   " (set SL3WEB_KNOTINFO_CSV to a full export for the 33-row census)");
    }
}

void criterion3_worked_example() {
    const LinkDiagram d = LinkDiagram::from_pd_code(slurp(fixture_path("11n183.pd")));
    const InvariantReport rep = analyze(d);
    const bool ok = rep.stats.v == 7 && rep.stats.e_prime == 6 && rep.stats.mu == 6 &&
                    rep.stats.theta == 7 && rep.g.gamma2 == 1 && rep.g.gamma3 == 0;
    std::ostringstream detail;
    detail << "bundled 12-crossing positive diagram: v=" << rep.stats.v
           << " e'=" << rep.stats.e_prime << " mu=" << rep.stats.mu
           << " theta=" << rep.stats.theta << " gamma2=" << rep.g.gamma2
           << " gamma3=" << rep.g.gamma3;
    report(3, ok, detail.str());
}

void criterion4_coefficient_theorems() {
    std::vector<LinkDiagram> corpus;
    for (int n = 2; n <= 9; ++n) corpus.push_back(torus2(n));
    corpus.push_back(braid({1, 2, 1, 2}, 3));
    corpus.push_back(braid({1, 2, 1, 2, 1, 2, 1, 2}, 3));
    corpus.push_back(braid({1, 2, 1, 2, 1, 2, 1, 2, 1, 2}, 3));
    corpus.push_back(braid({1, 1, 2, 2, 1, 2}, 3));
    corpus.push_back(LinkDiagram::from_pd_code(slurp(fixture_path("11n183.pd"))));
    {
        const LinkDiagram t = torus2(3);
        corpus.push_back(LinkDiagram::connected_sum(t, t.some_arc(), t, t.some_arc()));
    }
    std::mt19937_64 rng(20240004);
    while (corpus.size() < 24) {
        LinkDiagram d = random_braid(rng, true, 9);
        if (d.connected()) corpus.push_back(std::move(d));
    }
    int bad = 0;
    for (const auto& d : corpus) {
        try {
            verify_coefficient_theorems(d);
        } catch (const std::exception& ex) {
            ++bad;
            std::cout << "  " << ex.what() << "\n";
        }
    }
    report(4, bad == 0,
           "gamma1/gamma2/gamma3 closed forms, leading degree and even exponents on " +
               std::to_string(corpus.size()) + " connected positive diagrams (" +
               std::to_string(bad) + " failures)");
}

void criterion5_web_identities() {
    bool ok = true;
    for (int k = 0; k <= 6; ++k) {
        const auto cap = square_chain(k, SquareChainClosure::HalfCappedLoop);
        ok = ok && evaluate(cap.web) == cap.expected &&
             cap.expected == kTwo.pow(k + 1) * kThree;
    }
    for (int k = 0; k <= 6; k += 2) {
        const auto tr = square_chain(k, SquareChainClosure::Trace);
        LaurentPoly expect = kTwo * kTwo * kThree;
        for (int i = 1; i <= k / 2; ++i) expect += kTwo.pow(2 * i) * kThree;
        ok = ok && evaluate(tr.web) == tr.expected && tr.expected == expect;
    }
    for (int k = 1; k <= 6; k += 2) {
        const auto cr = square_chain(k, SquareChainClosure::Cross);
        ok = ok && evaluate(cr.web) == cr.expected;
    }
    // two circles vs the web reached by one move: [3]^2 vs [2][3]
    Web circles;
    circles.add_loops(2);
    const Web bubble = apply_ow_move(circles, {-1, -1, false});
    ok = ok && evaluate(circles) == kThree * kThree && evaluate(bubble) == kTwo * kThree;
    report(5, ok, "square-chain fixtures k = 0..6 match their closed forms; [3]^2 vs [2][3]");
}

void criterion6_ow_moves() {
    std::mt19937_64 rng(20240006);
    WebMemo memo;
    int trials = 0, violations = 0, web_violations = 0;
    while (trials < 1000) {
        const LinkDiagram d = random_braid(rng, true, 8);
        const int n = d.crossings();
        for (int rep = 0; rep < 8 && trials < 1200; ++rep) {
            const State s = rng() & ((State{1} << n) - 1);
            std::vector<int> o_sites;
            for (int c = 0; c < n; ++c)
                if (!(s >> c & 1)) o_sites.push_back(c);
            if (o_sites.empty()) continue;
            const int c = o_sites[rng() % o_sites.size()];
            const State s2 = s | (State{1} << c);
            ++trials;
            const int before = degree(d, s, &memo);
            const int after = degree(d, s2, &memo);
            if (after != before && after != before - 2) ++violations;
            // web-level statement: the web degree moves by exactly one
            EvalOptions opts;
            opts.memo = &memo;
            const int wb = evaluate(resolution_state_diagram(d, s), opts).degree();
            const int wa = evaluate(resolution_state_diagram(d, s2), opts).degree();
            if (wa != wb + 1 && wa != wb - 1) ++web_violations;
        }
    }
    report(6, violations == 0 && web_violations == 0,
           std::to_string(trials) + " random (diagram, state, flip) probes: weight degree in "
                                    "{d, d-2} and web degree moves by 1 (" +
               std::to_string(violations + web_violations) + " violations)");
}

void criterion7_confluence() {
    std::mt19937_64 rng(20240007);
    int webs = 0, bad = 0;
    while (webs < 100) {
        const LinkDiagram d = random_braid(rng, rng() & 1, 8);
        const State s = rng() & ((State{1} << d.crossings()) - 1);
        const Web w = resolution_state_diagram(d, s);
        if (w.vertex_count() == 0) continue;
        ++webs;
        const LaurentPoly reference = evaluate(w);
        for (int rep = 0; rep < 5; ++rep) {
            EvalOptions opts;
            opts.random_order = &rng;
            if (evaluate(w, opts) != reference) ++bad;
        }
    }
    report(7, bad == 0,
           "100 random state webs, 5 randomized reduction orders each (" + std::to_string(bad) +
               " disagreements)");
}

void criterion8_combinatorics() {
    bool ok = true;
    for (int m = 2; m <= 8; ++m) {
        const MixingCombinatoricsReport rep = verify_mixing_combinatorics(m);
        ok = ok && rep.formula_ok && rep.symmetry_ok && rep.constraints_ok &&
             rep.alternating_sum == 0;
    }
    report(8, ok, "support counts match the closed formula, the index symmetry and the "
                  "vanishing alternating sum for m = 2..8");
}

void criterion9_structural_identities() {
    std::vector<std::pair<LinkDiagram, LinkDiagram>> pairs = {
        {torus2(3), torus2(3)}, {torus2(3), torus2(5)},   {torus2(5), torus2(7)},
        {torus2(3), braid({1, 2, 1, 2}, 3)}, {braid({1, 2, 1, 2, 1, 2, 1, 2}, 3), torus2(4)},
    };
    bool ok = true;
    for (const auto& [a, b] : pairs) {
        const LaurentPoly pa = invariant(a), pb = invariant(b);
        const LinkDiagram sum = LinkDiagram::connected_sum(a, a.some_arc(), b, b.some_arc());
        ok = ok && kThree * invariant(sum) == pa * pb;
        ok = ok && invariant(LinkDiagram::disjoint_union(a, b)) == pa * pb;
    }
    bool thm_ok = true;
    try {
        connected_sum_check(torus2(3), torus2(3));
        connected_sum_check(torus2(3), torus2(5));
    } catch (const std::exception& ex) {
        thm_ok = false;
        std::cout << "  " << ex.what() << "\n";
    }
    report(9, ok && thm_ok,
           "[3]<<a # b>> = <<a>><<b>> and <<a || b>> = <<a>><<b>> on 5 pairs; connected-sum "
           "coefficient bookkeeping on 3_1 # 3_1 and 3_1 # 5_1");
}

void criterion10_fibered_and_braid() {
    bool fib_ok = true;
    for (int n = 2; n <= 9; ++n) fib_ok = fib_ok && fibered_criterion(torus2(n)).fibered;
    fib_ok = fib_ok && fibered_criterion(braid({1, 2, 1, 2, 1, 2, 1, 2}, 3)).fibered;
    fib_ok = fib_ok && fibered_criterion(braid({1, 2, 1, 2, 1, 2, 1, 2, 1, 2}, 3)).fibered;
    const LinkDiagram d11 = LinkDiagram::from_pd_code(slurp(fixture_path("11n183.pd")));
    fib_ok = fib_ok && fibered_criterion(d11).fibered;

    // engine-computed reports for the bundled diagrams
    const Gammas g31 = gammas(invariant(torus2(3)));
    const Gammas g51 = gammas(invariant(torus2(5)));
    const Gammas g183 = gammas(invariant(d11));
    bool braid_ok = !braid_positivity_obstruction(g31, true, 1).obstructed &&
                    !braid_positivity_obstruction(g51, true, 1).obstructed &&
                    braid_positivity_obstruction(g183, true, 1).obstructed;
    // tabulated coefficients for the three ten-crossing knots whose diagrams
    // are not bundled: 10_139 has gamma3 = 2, 10_154 and 10_161 have 1
    braid_ok = braid_ok && !braid_positivity_obstruction({-16, 1, 1, 2}, true, 1).obstructed;
    braid_ok = braid_ok && braid_positivity_obstruction({-14, 1, 1, 1}, true, 1).obstructed;
    braid_ok = braid_ok && braid_positivity_obstruction({-12, 1, 1, 1}, true, 1).obstructed;

    report(10, fib_ok && braid_ok,
           "tree criterion on the torus family and the 12-crossing diagram; braid-positivity "
           "obstruction flags gamma3 in {0,1} and passes gamma3 = p+1");
}

}  // namespace

int main() {
    try {
        criterion1_oracle_equivalence();
        criterion2_table();
        criterion3_worked_example();
        criterion4_coefficient_theorems();
        criterion5_web_identities();
        criterion6_ow_moves();
        criterion7_confluence();
        criterion8_combinatorics();
        criterion9_structural_identities();
        criterion10_fibered_and_braid();
    } catch (const std::exception& ex) {
        std::cout << "[FAIL] acceptance run aborted: " << ex.what() << std::endl;
        return 1;
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
