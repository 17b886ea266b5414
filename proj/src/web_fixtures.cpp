#include "sl3web/web.hpp"

#include <stdexcept>

namespace sl3web {

// A chain of k squares in a row. Corner b_i sits on the bottom rail, t_i on
// the top rail, 0 <= i <= k; b_i is a sink for even i and the two rails have
// opposite parities. Legs leave the chain at b_0, t_0 (left) and b_k, t_k
// (right); each closure below wires those four legs up differently.
SquareChainFixture square_chain(int k, SquareChainClosure closure) {
    if (k < 0) throw std::invalid_argument("square_chain: k must be >= 0");
    if (closure == SquareChainClosure::Trace && k % 2 != 0)
        throw std::invalid_argument("square_chain: trace closure needs even k");
    // The cross wiring only embeds for odd k: at k = 0 the two arcs cross,
    // and for even k >= 2 the graph contains a K(3,3) minor.
    if (closure == SquareChainClosure::Cross && k % 2 == 0)
        throw std::invalid_argument("square_chain: cross closure needs odd k");

    Web w;
    std::vector<int> b(k + 1), t(k + 1);
    for (int i = 0; i <= k; ++i) {
        b[i] = w.add_vertex(i % 2 == 1);  // sink when even
        t[i] = w.add_vertex(i % 2 == 0);  // source when even
    }
    auto edge = [&](int x, int y) {
        return w.is_source(x) ? w.add_edge(x, y) : w.add_edge(y, x);
    };
    std::vector<int> V(k + 1), B(k + 1), T(k + 1);
    for (int i = 0; i <= k; ++i) V[i] = edge(t[i], b[i]);
    for (int i = 1; i <= k; ++i) {
        B[i] = edge(b[i - 1], b[i]);
        T[i] = edge(t[i - 1], t[i]);
    }

    auto dart_at = [&](int e, int v) {
        return w.edge(e).src == v ? 2 * e : 2 * e + 1;
    };

    const LaurentPoly q2 = LaurentPoly::quantum_int(2);
    const LaurentPoly q3 = LaurentPoly::quantum_int(3);

    // closure edges between the four leg slots
    int left_b = -1, left_t = -1, right_b = -1, right_t = -1;  // edges carrying the legs
    LaurentPoly expected;
    switch (closure) {
        case SquareChainClosure::HalfCappedLoop: {
            // bubble cap on the right, remaining strand closed around
            int cap = edge(t[k], b[k]);
            int outer = edge(t[0], b[0]);
            right_t = right_b = cap;
            left_t = left_b = outer;
            expected = q2.pow(k + 1) * q3;
            break;
        }
        case SquareChainClosure::Cross: {
            if (k % 2 == 0) {
                int c1 = edge(t[0], b[k]);
                int c2 = edge(t[k], b[0]);
                left_t = c1;
                right_b = c1;
                right_t = c2;
                left_b = c2;
                expected = q2 * q3;
                for (int i = 1; i <= k / 2; ++i) expected += q2.pow(2 * i - 1) * q3;
            } else {
                int c1 = edge(t[0], t[k]);
                int c2 = edge(b[k], b[0]);
                left_t = c1;
                right_t = c1;
                right_b = c2;
                left_b = c2;
                expected = q3 * q3;
                for (int i = 1; i <= (k + 1) / 2; ++i) expected += q2.pow(2 * i - 2) * q3;
            }
            break;
        }
        case SquareChainClosure::Trace: {
            int A = w.add_vertex(true);
            int Bv = w.add_vertex(false);
            int e1 = w.add_edge(A, b[0]);
            int e2 = w.add_edge(t[k], Bv);
            int e3 = w.add_edge(A, Bv);
            int e4 = w.add_edge(A, b[k]);
            int e5 = w.add_edge(t[0], Bv);
            w.set_rotation(A, {2 * e1, 2 * e3, 2 * e4});
            w.set_rotation(Bv, {2 * e5 + 1, 2 * e2 + 1, 2 * e3 + 1});
            left_b = e1;
            right_t = e2;
            right_b = e4;
            left_t = e5;
            expected = q2 * q2 * q3;
            for (int i = 1; i <= k / 2; ++i) expected += q2.pow(2 * i) * q3;
            break;
        }
    }

    // rail rotations, counterclockwise in the plane drawing
    if (k == 0) {
        w.set_rotation(b[0], {dart_at(V[0], b[0]), dart_at(left_b, b[0]), dart_at(right_b, b[0])});
        w.set_rotation(t[0], {dart_at(right_t, t[0]), dart_at(left_t, t[0]), dart_at(V[0], t[0])});
    } else {
        w.set_rotation(b[0], {dart_at(B[1], b[0]), dart_at(V[0], b[0]), dart_at(left_b, b[0])});
        w.set_rotation(t[0], {dart_at(T[1], t[0]), dart_at(left_t, t[0]), dart_at(V[0], t[0])});
        for (int i = 1; i < k; ++i) {
            w.set_rotation(b[i], {dart_at(B[i + 1], b[i]), dart_at(V[i], b[i]), dart_at(B[i], b[i])});
            w.set_rotation(t[i], {dart_at(T[i + 1], t[i]), dart_at(T[i], t[i]), dart_at(V[i], t[i])});
        }
        w.set_rotation(b[k], {dart_at(V[k], b[k]), dart_at(B[k], b[k]), dart_at(right_b, b[k])});
        w.set_rotation(t[k], {dart_at(right_t, t[k]), dart_at(T[k], t[k]), dart_at(V[k], t[k])});
    }

    w.validate();
    return {w, expected};
}

}  // namespace sl3web
