#include "sl3web/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl3web {

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("verification failed: " + what);
}

}  // namespace

Gammas gammas(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("gammas of the zero polynomial");
    Gammas g;
    g.n = p.degree();
    g.gamma1 = p.coeff(g.n);
    g.gamma2 = p.coeff(g.n - 2);
    g.gamma3 = p.coeff(g.n - 4);
    return g;
}

nlohmann::json InvariantReport::to_json() const {
    nlohmann::json j;
    j["polynomial"] = polynomial.to_json();
    j["polynomial_str"] = polynomial.str();
    j["leading_degree"] = g.n;
    j["gamma1"] = g.gamma1;
    j["gamma2"] = g.gamma2;
    j["gamma3"] = g.gamma3;
    j["seifert"] = stats.to_json();
    j["connected"] = connected;
    j["all_positive"] = all_positive;
    if (fibered) j["fibered_criterion"] = *fibered;
    j["braid_positivity_obstructed"] = braid_positivity_obstructed;
    j["reasons"] = obstruction_reasons;
    return j;
}

InvariantReport analyze(const LinkDiagram& d, const StatesumOptions& opts) {
    InvariantReport rep;
    rep.polynomial = invariant(d, opts);
    rep.g = gammas(rep.polynomial);
    rep.stats = seifert_stats(d);
    rep.connected = d.connected();
    rep.all_positive = d.all_positive();
    if (rep.connected && rep.all_positive) rep.fibered = rep.stats.tree;
    const BraidObstruction bo = braid_positivity_obstruction(rep.g, false, std::nullopt);
    rep.braid_positivity_obstructed = bo.obstructed;
    rep.obstruction_reasons = bo.reasons;
    return rep;
}

CoefficientCheck verify_coefficient_theorems(const LinkDiagram& d, const StatesumOptions& opts) {
    if (!d.all_positive())
        throw std::invalid_argument("coefficient theorems: diagram must be all-positive");
    if (!d.connected())
        throw std::invalid_argument("coefficient theorems: diagram must be connected");

    CoefficientCheck out;
    const LaurentPoly p = invariant(d, opts);
    out.g = gammas(p);
    out.stats = seifert_stats(d);
    const auto& st = out.stats;

    require(out.g.n == 2 * (st.v - st.e), "leading degree equals 2(v - e)");
    require(out.g.gamma1 == 1, "gamma1 = 1");
    require(out.g.gamma2 == st.v - st.e_prime, "gamma2 = v - e'");
    const std::int64_t g2 = out.g.gamma2;
    require(out.g.gamma3 == (g2 + 1) * g2 / 2 + st.mu - st.theta,
            "gamma3 = (gamma2+1) gamma2 / 2 + mu - theta");
    require(g2 <= 1, "gamma2 <= 1 on connected positive diagrams");

    out.even_exponents = true;
    for (const auto& [e, c] : p.terms())
        if (e % 2 != 0) out.even_exponents = false;
    require(out.even_exponents, "all exponents even");

    // trinomial identity behind the all-O contribution: the third coefficient
    // of [3]^v is v + C(v,2) = C(v+1,2)
    const LaurentPoly tri = LaurentPoly::quantum_int(3).pow(st.v);
    require(tri.coeff(2 * st.v - 4) == binom(st.v, 1) + binom(st.v, 2),
            "trinomial coefficient identity");
    require(binom(st.v, 1) + binom(st.v, 2) == binom(st.v + 1, 2),
            "hockey-stick form of the trinomial coefficient");
    return out;
}

FiberedVerdict fibered_criterion(const LinkDiagram& d, const StatesumOptions& opts) {
    if (!d.all_positive() || !d.connected())
        throw std::invalid_argument("fibered criterion: needs a connected positive diagram");
    const SeifertGraph g = build_seifert_graph(seifert_circles(d));
    const ReducedSeifertGraph r = reduce(g);
    FiberedVerdict v;
    v.fibered = r.is_tree();
    if (!v.fibered) v.cycle = r.find_cycle();

    const Gammas gm = gammas(invariant(d, opts));
    require((gm.gamma2 == 1) == v.fibered, "gamma2 = 1 iff reduced Seifert graph is a tree");
    return v;
}

BraidObstruction braid_positivity_obstruction(const Gammas& g, bool assume_knot,
                                              std::optional<int> prime_count_hint) {
    BraidObstruction out;
    if (g.gamma1 != 1) {
        out.obstructed = true;
        out.reasons.push_back("gamma1 != 1");
    }
    if (g.gamma2 != 1) {
        out.obstructed = true;
        out.reasons.push_back("gamma2 = " + std::to_string(g.gamma2) +
                              " but a positive braid closure with one split component needs gamma2 = 1");
    }
    if (assume_knot && prime_count_hint) {
        const int p = *prime_count_hint;
        if (g.gamma3 != p + 1) {
            out.obstructed = true;
            out.reasons.push_back("gamma3 = " + std::to_string(g.gamma3) + " but a knot with " +
                                  std::to_string(p) + " prime factor(s) needs gamma3 = " +
                                  std::to_string(p + 1));
        }
    }
    return out;
}

ConnectedSumCheck connected_sum_check(const LinkDiagram& d1, const LinkDiagram& d2,
                                      const StatesumOptions& opts) {
    if (!d1.all_positive() || !d2.all_positive())
        throw std::invalid_argument("connected sum check: diagrams must be positive");
    ConnectedSumCheck out;
    const LaurentPoly p1 = invariant(d1, opts);
    const LaurentPoly p2 = invariant(d2, opts);
    const LinkDiagram sum = LinkDiagram::connected_sum(d1, d1.some_arc(), d2, d2.some_arc());
    const LaurentPoly ps = invariant(sum, opts);

    out.g1 = gammas(p1);
    out.g2 = gammas(p2);
    out.gsum = gammas(ps);
    const SeifertStats s1 = seifert_stats(d1), s2 = seifert_stats(d2), ss = seifert_stats(sum);
    out.lambda1 = s1.mu - s1.theta;
    out.lambda2 = s2.mu - s2.theta;
    out.lambda_sum = ss.mu - ss.theta;

    out.gamma2_additive = out.gsum.gamma2 == out.g1.gamma2 + out.g2.gamma2 - 1;
    out.lambda_additive = out.lambda_sum == out.lambda1 + out.lambda2;
    const std::int64_t g2 = out.gsum.gamma2;
    out.gamma3_formula = out.gsum.gamma3 == (g2 + 1) * g2 / 2 + out.lambda_sum;
    out.product_identity = LaurentPoly::quantum_int(3) * ps == p1 * p2;

    require(out.gamma2_additive, "gamma2 additivity under connected sum");
    require(out.lambda_additive, "lambda additivity under connected sum");
    require(out.gamma3_formula, "gamma3 formula under connected sum");
    require(out.product_identity, "[3] <<d1 # d2>> = <<d1>> <<d2>>");
    return out;
}

AltBraidFactors alternating_positive_braid_classifier(const LinkDiagram& d) {
    if (!d.all_positive())
        throw std::invalid_argument("alternating braid classifier: diagram must be positive");
    if (!d.is_alternating())
        throw std::invalid_argument("alternating braid classifier: diagram must be alternating");
    if (!d.connected())
        throw std::invalid_argument("alternating braid classifier: diagram must be non-split");

    const SeifertGraph g = build_seifert_graph(seifert_circles(d));
    const ReducedSeifertGraph r = reduce(g);
    require(theta(g, r) == 0, "alternating diagrams have theta = 0");
    require(r.is_tree(), "reduced Seifert graph of an alternating positive braid is a tree");
    AltBraidFactors out;
    for (const auto& e : r.edges) {
        require(e.multiplicity() >= 2,
                "reduced diagram: every twist region of a (2,n) factor has n >= 2 crossings");
        out.factors.push_back(e.multiplicity());
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

MixingCombinatoricsReport verify_mixing_combinatorics(int m) {
    if (m < 2) throw std::invalid_argument("mixing combinatorics: m must be at least 2");
    if (m > 20) throw std::invalid_argument("mixing combinatorics: m too large to enumerate");
    MixingCombinatoricsReport rep;
    rep.m = m;
    rep.counts.assign(m + 2, std::vector<std::int64_t>(m + 2, 0));
    rep.constraints_ok = true;
    rep.alternating_sum = 0;

    // supports: I_u, I_v nonempty subsets of the m slots; slot j holds the
    // u-block at position 2j and the v-block at 2j+1 around the vertex
    for (unsigned iu = 1; iu < (1u << m); ++iu) {
        for (unsigned iv = 1; iv < (1u << m); ++iv) {
            // present blocks in cyclic position order
            std::vector<int> word;  // 1 = u block, 2 = v block
            for (int j = 0; j < m; ++j) {
                if (iu >> j & 1) word.push_back(1);
                if (iv >> j & 1) word.push_back(2);
            }
            const int L = static_cast<int>(word.size());
            int runs = 0;
            bool has2 = false;
            for (int i = 0; i < L; ++i) {
                if (word[i] == 2) has2 = true;
                if (word[i] == 1 && word[(i + L - 1) % L] != 1) ++runs;
            }
            const int state_index = has2 ? runs : 0;
            if (state_index != 1) continue;  // not semi-mixed
            const int u = __builtin_popcount(iu);
            const int v = __builtin_popcount(iv);
            rep.counts[u][v] += 1;
            if (u + v > m + 1 || __builtin_popcount(iu & iv) > 1) rep.constraints_ok = false;
            rep.alternating_sum += ((u + v) % 2 == 0) ? 1 : -1;
        }
    }

    // closed form, written for u <= v
    auto cbar = [&](int u, int v) -> std::int64_t {
        if (u == 1) return binom(m, v);
        std::int64_t s = 0;
        for (int i = v + 1; i <= m - u + 2; ++i)
            s += checked_mul(binom(i - 1, v), binom(m - i, u - 2));
        return s;
    };

    rep.formula_ok = true;
    for (int u = 1; u <= m + 1; ++u)
        for (int v = 1; v <= m + 1; ++v) {
            const std::int64_t want = (u + v > m + 1)
                                          ? 0
                                          : checked_mul(static_cast<std::int64_t>(m),
                                                        u <= v ? cbar(u, v) : cbar(v, u));
            if (rep.counts[u][v] != want) rep.formula_ok = false;
        }

    rep.symmetry_ok = true;
    for (int u = 2; u <= m; ++u)
        for (int v = 2; v <= m; ++v)
            if (rep.counts[u][v] != rep.counts[u + 1][v - 1]) rep.symmetry_ok = false;

    return rep;
}

SemiMixedAudit semi_mixed_state_audit(const LinkDiagram& d) {
    if (!d.all_positive())
        throw std::invalid_argument("semi-mixed audit: diagram must be positive");
    const int e = d.crossings();
    if (e > 16) throw std::invalid_argument("semi-mixed audit: too many crossings to enumerate");

    const SeifertGraph g = build_seifert_graph(seifert_circles(d));
    const ReducedSeifertGraph r = reduce(g);
    const int v = g.vertices;

    // reduced edge id per crossing
    std::vector<int> reduced_of(e, -1);
    for (int i = 0; i < r.edge_count(); ++i)
        for (int c : r.edges[i].lifts) reduced_of[c] = i;

    // mixed pairs of reduced edges
    std::set<std::pair<int, int>> mixed_pairs;
    for (int i = 0; i < r.edge_count(); ++i)
        for (int j = i + 1; j < r.edge_count(); ++j) {
            const auto& a = r.edges[i];
            const auto& b = r.edges[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) continue;
            if (classify_pair(g, r, i, j).mixed) mixed_pairs.insert({i, j});
        }
    if (mixed_pairs.empty())
        throw std::invalid_argument("semi-mixed audit: diagram has no mixed pair of reduced edges");

    SemiMixedAudit out;
    out.degrees_ok = true;
    out.web_identity_ok = true;
    WebMemo memo;
    const LaurentPoly two = LaurentPoly::quantum_int(2);
    const LaurentPoly three = LaurentPoly::quantum_int(3);

    for (State s = 1; s < (State{1} << e); ++s) {
        std::set<int> present;
        for (int c = 0; c < e; ++c)
            if (s >> c & 1) present.insert(reduced_of[c]);
        if (present.size() != 2) continue;
        const int i = *present.begin(), j = *present.rbegin();
        if (!mixed_pairs.count({i, j})) continue;

        // state mixing index: runs of edge-i lifts among the state's own
        // W-resolved crossings around the shared vertex
        const auto& a = r.edges[i];
        const auto& b = r.edges[j];
        int shared = -1;
        for (int x : {a.u, a.v})
            for (int y : {b.u, b.v})
                if (x == y) shared = x;
        std::vector<int> word;
        for (int c : g.rotation[shared]) {
            if (!(s >> c & 1)) continue;
            if (reduced_of[c] == i) word.push_back(1);
            else if (reduced_of[c] == j) word.push_back(2);
        }
        const int L = static_cast<int>(word.size());
        int n_state = 0;
        for (int p = 0; p < L; ++p)
            if (word[p] == 1 && word[(p + L - 1) % L] != 1) ++n_state;

        const StateWeight sw = state_weight(d, s, &memo);
        const int beta = sw.beta_plus;
        ++out.states_checked;

        const int want_deg = 2 * (v - e - 2 - n_state) + std::max(2, 2 * (n_state - 1));
        if (sw.weight.is_zero() || sw.weight.degree() != want_deg) out.degrees_ok = false;

        LaurentPoly expect = two.pow(2);
        for (int t = 1; t <= n_state - 1; ++t) expect += two.pow(2 * t);
        expect = two.pow(beta - 2 * n_state) * three.pow(v - 2) * expect;
        if (sw.web_value != expect) out.web_identity_ok = false;

        if (n_state == 1) {
            ++out.semi_mixed_states;
            out.semi_mixed_leading_sum += sw.weight.coeff(2 * (v - e - 2));
        }
    }
    return out;
}

}  // namespace sl3web
