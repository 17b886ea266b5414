#include "sl3web/statesum.hpp"

#include <stdexcept>
#include <thread>

namespace sl3web {

// Builds the closed web of a state. W-resolved crossings contribute a sink
// (taking the two incoming strands) and a source (emitting the two outgoing
// ones) joined by a rung; O-resolved crossings pass strands through. The
// rotations below place the piece in the crossing disc so the web inherits
// the diagram's embedding:
//   positive: sink (slot0, rung, slot3), source (slot1, slot2, rung)
//   negative: sink (slot0, slot1, rung), source (slot2, slot3, rung)
Web resolution_state_diagram(const LinkDiagram& d, State s) {
    const int n = d.crossings();
    if (n > 63) throw CapExceeded("state web: too many crossings for a 64-bit state");
    Web w;
    w.add_loops(d.free_loops());

    std::vector<int> sink_of(n, -1), source_of(n, -1);
    for (int c = 0; c < n; ++c) {
        if (!(s >> c & 1)) continue;
        sink_of[c] = w.add_vertex(false);
        source_of[c] = w.add_vertex(true);
    }

    // slot -> (web vertex, rotation position) for W crossings
    auto stub = [&](int c, int slot) -> std::pair<int, int> {
        const bool pos = d.sign(c) > 0;
        if (pos) {
            switch (slot) {
                case 0: return {sink_of[c], 0};
                case 3: return {sink_of[c], 2};
                case 1: return {source_of[c], 0};
                case 2: return {source_of[c], 1};
            }
        } else {
            switch (slot) {
                case 0: return {sink_of[c], 0};
                case 1: return {sink_of[c], 1};
                case 2: return {source_of[c], 0};
                case 3: return {source_of[c], 1};
            }
        }
        throw std::logic_error("state web: bad slot");
    };

    std::vector<std::array<int, 3>> rot(w.vertex_count(), {-1, -1, -1});
    std::vector<char> seen(4 * n, 0);  // visited incoming darts

    // walk from each W-source out-slot to the next W-sink in-slot
    for (int c = 0; c < n; ++c) {
        if (!(s >> c & 1)) continue;
        const bool pos = d.sign(c) > 0;
        const int outs[2] = {pos ? 1 : 2, pos ? 2 : 3};
        for (int out_slot : outs) {
            int dart = d.arc_to(4 * c + out_slot);
            while (!(s >> (dart / 4) & 1)) {
                seen[dart] = 1;
                const int c2 = dart / 4;
                dart = d.arc_to(4 * c2 + LinkDiagram::o_successor(d.sign(c2), dart % 4));
            }
            seen[dart] = 1;
            auto [sv, spos] = stub(c, out_slot);
            auto [hv, hpos] = stub(dart / 4, dart % 4);
            const int e = w.add_edge(sv, hv);
            rot[sv][spos] = 2 * e;
            rot[hv][hpos] = 2 * e + 1;
        }
        // rung
        const int e = w.add_edge(source_of[c], sink_of[c]);
        rot[source_of[c]][2] = 2 * e;
        rot[sink_of[c]][pos ? 1 : 2] = 2 * e + 1;
    }

    // circles made entirely of O-resolved passages
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (seen[d0] || !d.in_slot(d0 / 4, d0 % 4)) continue;
        if (s >> (d0 / 4) & 1) continue;
        int dart = d0;
        do {
            seen[dart] = 1;
            const int c2 = dart / 4;
            dart = d.arc_to(4 * c2 + LinkDiagram::o_successor(d.sign(c2), dart % 4));
        } while (dart != d0);
        w.add_loops(1);
    }

    for (int v = 0; v < w.vertex_count(); ++v) w.set_rotation(v, rot[v]);
    w.validate();
    return w;
}

StateWeight state_weight(const LinkDiagram& d, State s, WebMemo* memo) {
    StateWeight sw;
    for (int c = 0; c < d.crossings(); ++c) {
        const bool wres = s >> c & 1;
        if (d.sign(c) > 0) {
            (wres ? sw.beta_plus : sw.alpha_plus)++;
        } else {
            (wres ? sw.beta_minus : sw.alpha_minus)++;
        }
    }
    const int beta = sw.beta_plus + sw.beta_minus;
    const int exp = -2 * (sw.alpha_plus - sw.alpha_minus) - 3 * (sw.beta_plus - sw.beta_minus);
    sw.phase = LaurentPoly::monomial(beta % 2 == 0 ? 1 : -1, exp);
    EvalOptions opts;
    opts.memo = memo;
    sw.web_value = evaluate(resolution_state_diagram(d, s), opts);
    sw.weight = sw.phase * sw.web_value;
    return sw;
}

int degree(const LinkDiagram& d, State s, WebMemo* memo) {
    const StateWeight sw = state_weight(d, s, memo);
    if (sw.weight.is_zero()) throw std::logic_error("state weight vanished");
    return sw.weight.degree();
}

SeifertGraph state_graph(const LinkDiagram& d, State s) {
    const SeifertGraph full = build_seifert_graph(seifert_circles(d));
    std::vector<int> keep;
    for (int c = 0; c < d.crossings(); ++c)
        if (s >> c & 1) keep.push_back(c);
    return spanning_subgraph(full, keep);
}

LaurentPoly invariant(const LinkDiagram& d, const StatesumOptions& opts) {
    const int n = d.crossings();
    if (n > opts.crossing_cap)
        throw CapExceeded("state sum needs 2^" + std::to_string(n) +
                          " states; raise the crossing cap to allow this");
    const State total = State{1} << n;
    const int workers = std::max(1, std::min<int>(opts.workers, 64));

    auto run_range = [&](State lo, State hi, LaurentPoly* out) {
        WebMemo memo;
        LaurentPoly acc;
        for (State s = lo; s < hi; ++s) acc += state_weight(d, s, &memo).weight;
        *out = std::move(acc);
    };

    if (workers == 1 || total < 64) {
        LaurentPoly acc;
        run_range(0, total, &acc);
        return acc;
    }
    std::vector<LaurentPoly> parts(workers);
    std::vector<std::thread> threads;
    const State chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const State lo = std::min<State>(total, w * chunk);
        const State hi = std::min<State>(total, lo + chunk);
        threads.emplace_back(run_range, lo, hi, &parts[w]);
    }
    for (auto& t : threads) t.join();
    LaurentPoly acc;
    for (auto& p : parts) acc += p;
    return acc;
}

OwExperimentReport ow_move_experiment(const LinkDiagram& d, int trials, std::uint64_t seed) {
    if (!d.all_positive())
        throw std::invalid_argument("ow experiment: diagram must be all-positive");
    const int n = d.crossings();
    if (n == 0) throw std::invalid_argument("ow experiment: diagram has no crossings");
    std::mt19937_64 rng(seed);
    WebMemo memo;
    OwExperimentReport rep;
    for (int t = 0; t < trials; ++t) {
        const State s = rng() & ((State{1} << n) - 1);
        std::vector<int> o_sites;
        for (int c = 0; c < n; ++c)
            if (!(s >> c & 1)) o_sites.push_back(c);
        if (o_sites.empty()) continue;
        const int c = o_sites[rng() % o_sites.size()];
        const State s2 = s | (State{1} << c);
        const int before = degree(d, s, &memo);
        const int after = degree(d, s2, &memo);
        ++rep.trials;
        if (after == before)
            ++rep.delta_zero;
        else if (after == before - 2)
            ++rep.delta_two;
        else
            ++rep.violations;
    }
    return rep;
}

}  // namespace sl3web
