#include "sl3web/homfly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "sl3web/statesum.hpp"

namespace sl3web {

std::string HomflyPoly::str(const std::string& a_name, const std::string& z_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // decreasing a-degree, then decreasing z-degree
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [ae, ze] = it->first;
        const std::int64_t c = it->second;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        auto var = [](const std::string& n, int e) -> std::string {
            if (e == 0) return "";
            if (e == 1) return n;
            return n + "^" + std::to_string(e);
        };
        std::string av = var(a_name, ae), zv = var(z_name, ze);
        if (mag != 1 || (av.empty() && zv.empty())) factors = std::to_string(mag);
        for (const auto& f : {av, zv}) {
            if (f.empty()) continue;
            if (!factors.empty()) factors += "*";
            factors += f;
        }
        out << factors;
    }
    return out.str();
}

namespace {

// Skein-level view of a diagram: per crossing a sign and, per passage, the
// successor port. Ports: 4c+0 under-in, 4c+1 over-in, 4c+2 under-out,
// 4c+3 over-out.
struct SkeinDiagram {
    std::vector<int> sign;
    std::vector<int> succ;  // out-port -> in-port; identity slots unused (-1)
    int free_loops = 0;

    int crossings() const { return static_cast<int>(sign.size()); }
};

constexpr int UI = 0, OI = 1, UO = 2, OO = 3;

SkeinDiagram to_skein(const LinkDiagram& d) {
    SkeinDiagram sd;
    const int n = d.crossings();
    sd.sign.resize(n);
    sd.succ.assign(4 * n, -1);
    sd.free_loops = d.free_loops();
    auto port_of_slot = [&](int c, int slot) {
        const bool pos = d.sign(c) > 0;
        switch (slot) {
            case 0: return 4 * c + UI;
            case 2: return 4 * c + UO;
            case 1: return 4 * c + (pos ? OO : OI);
            case 3: return 4 * c + (pos ? OI : OO);
        }
        throw std::logic_error("bad slot");
    };
    for (int c = 0; c < n; ++c) {
        sd.sign[c] = d.sign(c);
        for (int slot = 0; slot < 4; ++slot) {
            if (d.in_slot(c, slot)) continue;
            const int to = d.arc_to(4 * c + slot);
            sd.succ[port_of_slot(c, slot)] = port_of_slot(to / 4, to % 4);
        }
    }
    return sd;
}

// Remove crossing c by the oriented smoothing (under-in continues to
// over-out, over-in to under-out). Paths that close up entirely inside the
// crossing become free loops.
SkeinDiagram smooth_crossing(const SkeinDiagram& sd, int c) {
    SkeinDiagram out;
    const int n = sd.crossings();
    out.free_loops = sd.free_loops;
    std::vector<int> cmap(n, -1);
    for (int i = 0, k = 0; i < n; ++i)
        if (i != c) {
            cmap[i] = k++;
            out.sign.push_back(sd.sign[i]);
        }
    out.succ.assign(4 * (n - 1), -1);

    // Within crossing c, the smoothing joins UI->OO and OI->UO. Follow
    // through c until landing on a port of another crossing.
    auto resolve = [&](int port) {
        int p = port;
        int guard = 0;
        while (p / 4 == c) {
            p = (p % 4 == UI) ? sd.succ[4 * c + OO] : sd.succ[4 * c + UO];
            if (++guard > 2) return -1;  // closed loop inside the crossing
        }
        return p;
    };

    for (int i = 0; i < n; ++i) {
        if (i == c) continue;
        for (int o : {UO, OO}) {
            int t = sd.succ[4 * i + o];
            if (t / 4 == c) t = resolve(t);
            if (t < 0) throw std::logic_error("smoothing: unexpected dead end");
            out.succ[4 * cmap[i] + o] = 4 * cmap[t / 4] + t % 4;
        }
    }
    // Strands that close up through c alone become free circles. The
    // through-paths are UI->OO and OI->UO; an arc OO->UI closes the first, an
    // arc UO->OI the second, and the pair OO->OI, UO->UI chains both into one
    // circle.
    const bool oo_ui = sd.succ[4 * c + OO] == 4 * c + UI;
    const bool uo_oi = sd.succ[4 * c + UO] == 4 * c + OI;
    const bool oo_oi = sd.succ[4 * c + OO] == 4 * c + OI;
    const bool uo_ui = sd.succ[4 * c + UO] == 4 * c + UI;
    out.free_loops += (oo_ui ? 1 : 0) + (uo_oi ? 1 : 0) + (oo_oi && uo_ui ? 1 : 0);
    return out;
}

// Switch the crossing: over and under swap, sign flips.
SkeinDiagram switch_crossing(const SkeinDiagram& sd, int c) {
    SkeinDiagram out = sd;
    out.sign[c] = -out.sign[c];
    // ports swap: UI<->OI, UO<->OO at c; rewire both the slots and all
    // references to them
    auto swap_port = [&](int p) {
        if (p / 4 != c) return p;
        const int r = p % 4;
        const int s = (r == UI) ? OI : (r == OI) ? UI : (r == UO) ? OO : UO;
        return 4 * c + s;
    };
    std::vector<int> ns(out.succ.size(), -1);
    for (std::size_t p = 0; p < out.succ.size(); ++p) {
        if (sd.succ[p] < 0) continue;
        ns[swap_port(static_cast<int>(p))] = swap_port(sd.succ[p]);
    }
    out.succ = std::move(ns);
    return out;
}

// Number of link components (strand orbits), not counting free loops.
int strand_count(const SkeinDiagram& sd) {
    const int n = sd.crossings();
    std::vector<char> seen(4 * n, 0);
    int comps = 0;
    for (int p0 = 0; p0 < 4 * n; ++p0) {
        if (p0 % 4 != UI && p0 % 4 != OI) continue;
        if (seen[p0]) continue;
        ++comps;
        int p = p0;
        do {
            seen[p] = 1;
            const int c = p / 4;
            const int out = (p % 4 == UI) ? UO : OO;
            p = sd.succ[4 * c + out];
        } while (p != p0);
    }
    return comps;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

SkeinDiagram restrict_to(const SkeinDiagram& sd, const std::vector<int>& crossings) {
    SkeinDiagram out;
    std::vector<int> cmap(sd.crossings(), -1);
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        cmap[crossings[i]] = static_cast<int>(i);
        out.sign.push_back(sd.sign[crossings[i]]);
    }
    out.succ.assign(4 * crossings.size(), -1);
    for (int c : crossings)
        for (int o : {UO, OO}) {
            const int t = sd.succ[4 * c + o];
            out.succ[4 * cmap[c] + o] = 4 * cmap[t / 4] + t % 4;
        }
    return out;
}

// Canonical relabeling key: breadth-first from every crossing, encoding signs
// and port wiring; minimum over starts.
std::string canonical_key(const SkeinDiagram& sd) {
    const int n = sd.crossings();
    if (n == 0) return "@" + std::to_string(sd.free_loops);
    // undirected adjacency for traversal
    std::vector<std::array<int, 4>> nbr(n);
    std::vector<int> pred(4 * n, -1);
    for (int p = 0; p < 4 * n; ++p)
        if (sd.succ[p] >= 0) pred[sd.succ[p]] = p;
    for (int c = 0; c < n; ++c) {
        nbr[c][0] = sd.succ[4 * c + UO] / 4;
        nbr[c][1] = sd.succ[4 * c + OO] / 4;
        nbr[c][2] = pred[4 * c + UI] / 4;
        nbr[c][3] = pred[4 * c + OI] / 4;
    }
    std::string best;
    for (int start = 0; start < n; ++start) {
        std::vector<int> label(n, -1), order;
        label[start] = 0;
        order.push_back(start);
        for (std::size_t h = 0; h < order.size(); ++h) {
            for (int t : nbr[order[h]]) {
                if (label[t] < 0) {
                    label[t] = static_cast<int>(order.size());
                    order.push_back(t);
                }
            }
        }
        std::string enc;
        enc.reserve(n * 6);
        for (int c : order) {
            enc.push_back(sd.sign[c] > 0 ? '+' : '-');
            for (int o : {UO, OO}) {
                const int t = sd.succ[4 * c + o];
                enc.push_back(static_cast<char>(1 + label[t / 4]));
                enc.push_back(static_cast<char>('0' + t % 4));
            }
        }
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best + "@" + std::to_string(sd.free_loops);
}

using Memo = std::unordered_map<std::string, HomflyPoly>;

HomflyPoly eval_skein(const SkeinDiagram& sd, Memo& memo);

// delta = (a^-1 - a) / z: the extra factor per split component.
HomflyPoly delta_factor() {
    return HomflyPoly::monomial(1, -1, -1) - HomflyPoly::monomial(1, 1, -1);
}

// Evaluate one connected crossing-bearing diagram.
//
// Walk the strands of the ORIGINAL diagram in a fixed order. At every first
// visit of a crossing via its under strand, record the smoothed branch and
// switch the crossing in an accumulator copy; the walk itself stays on the
// original connectivity, which switching never changes. At the end the
// accumulated diagram is descending, hence an unlink of k strands.
HomflyPoly eval_connected(const SkeinDiagram& sd0, Memo& memo) {
    const std::string key = canonical_key(sd0);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    SkeinDiagram acc = sd0;
    HomflyPoly factor = HomflyPoly::one();
    std::vector<std::pair<HomflyPoly, SkeinDiagram>> branches;

    const int n = sd0.crossings();
    std::vector<char> visited(n, 0);
    std::vector<char> port_seen(4 * n, 0);
    for (int p0 = 0; p0 < 4 * n; ++p0) {
        if (p0 % 4 != UI && p0 % 4 != OI) continue;
        if (port_seen[p0]) continue;
        int p = p0;
        do {
            port_seen[p] = 1;
            const int c = p / 4;
            const int role = p % 4;  // role in the original diagram
            if (!visited[c]) {
                visited[c] = 1;
                if (role == UI) {
                    const int sign = acc.sign[c];
                    SkeinDiagram smoothed = smooth_crossing(acc, c);
                    if (sign > 0) {
                        // P(L+) = a^2 P(L-) + a z P(L0)
                        branches.push_back({factor * HomflyPoly::monomial(1, 1, 1),
                                            std::move(smoothed)});
                        factor *= HomflyPoly::monomial(1, 2, 0);
                    } else {
                        // P(L-) = a^-2 P(L+) - a^-1 z P(L0)
                        branches.push_back({factor * HomflyPoly::monomial(-1, -1, 1),
                                            std::move(smoothed)});
                        factor *= HomflyPoly::monomial(1, -2, 0);
                    }
                    acc = switch_crossing(acc, c);
                }
            }
            p = sd0.succ[4 * c + (role == UI ? UO : OO)];
        } while (p != p0);
    }

    const int k = strand_count(sd0);
    HomflyPoly result = factor * delta_factor().pow(k - 1);
    for (auto& [coef, sm] : branches) result += coef * eval_skein(sm, memo);
    memo[key] = result;
    return result;
}

HomflyPoly eval_skein(const SkeinDiagram& sd, Memo& memo) {
    // split components multiply, with one delta factor per extra piece
    const int n = sd.crossings();
    Dsu dsu(n);
    for (int c = 0; c < n; ++c)
        for (int o : {UO, OO}) dsu.unite(c, sd.succ[4 * c + o] / 4);
    std::vector<std::vector<int>> groups;
    {
        std::vector<int> root_index(n, -1);
        for (int c = 0; c < n; ++c) {
            int r = dsu.find(c);
            if (root_index[r] < 0) {
                root_index[r] = static_cast<int>(groups.size());
                groups.emplace_back();
            }
            groups[root_index[r]].push_back(c);
        }
    }
    const int pieces = static_cast<int>(groups.size()) + sd.free_loops;
    if (pieces == 0) throw std::logic_error("homfly of the empty diagram is undefined");
    HomflyPoly result = delta_factor().pow(pieces - 1);
    for (const auto& g : groups) result *= eval_connected(restrict_to(sd, g), memo);
    return result;
}

}  // namespace

HomflyPoly homfly(const LinkDiagram& d, const HomflyOptions& opts) {
    if (d.crossings() > opts.crossing_cap)
        throw CapExceeded("homfly: diagram exceeds the crossing cap");
    if (d.crossings() == 0 && d.free_loops() == 0)
        throw std::invalid_argument("homfly of the empty diagram is undefined");
    Memo memo;
    return eval_skein(to_skein(d), memo);
}

LaurentPoly specialize_sl3(const HomflyPoly& p) {
    // a = q^-3, z = q - q^-1, times [3]. Negative z powers are cleared first.
    int min_z = 0;
    for (const auto& [k, c] : p.terms()) min_z = std::min(min_z, k.second);
    const int shift = -min_z;
    const LaurentPoly z = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
    LaurentPoly num;
    for (const auto& [k, c] : p.terms()) {
        const auto [ae, ze] = k;
        num += LaurentPoly::monomial(c, -3 * ae) * z.pow(ze + shift);
    }
    LaurentPoly result = shift == 0 ? num : divide_exact(num, z.pow(shift));
    return result * LaurentPoly::quantum_int(3);
}

namespace {

// Tiny recursive-descent parser: expr := term (('+'|'-') term)*;
// term := factor (('*')? factor)*; factor := base ('^' int)?;
// base := int | var | '(' expr ')' | '-' factor.
struct ExprParser {
    const std::string& s;
    std::size_t i = 0;
    const std::string& a_name;
    const std::string& z_name;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool match_word(const std::string& w) {
        skip();
        if (s.compare(i, w.size(), w) == 0) {
            // variable names must not run into a longer identifier
            const std::size_t j = i + w.size();
            if (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                return false;
            i = j;
            return true;
        }
        return false;
    }

    HomflyPoly parse_expr() {
        HomflyPoly r = parse_term();
        for (;;) {
            if (eat('+'))
                r += parse_term();
            else if (eat('-'))
                r = r - parse_term();
            else
                return r;
        }
    }

    HomflyPoly parse_term() {
        HomflyPoly r = parse_factor();
        for (;;) {
            skip();
            if (eat('*')) {
                r *= parse_factor();
                continue;
            }
            // implicit multiplication: a factor can start right away
            if (i < s.size() && (s[i] == '(' || std::isalpha(static_cast<unsigned char>(s[i])) ||
                                 std::isdigit(static_cast<unsigned char>(s[i])))) {
                r *= parse_factor();
                continue;
            }
            return r;
        }
    }

    HomflyPoly parse_factor() {
        HomflyPoly base = parse_base();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            int e = parse_int();
            if (neg) e = -e;
            if (e >= 0) return base.pow(static_cast<unsigned>(e));
            // negative exponents only make sense for single variables
            if (base == HomflyPoly::monomial(1, 1, 0)) return HomflyPoly::monomial(1, e, 0);
            if (base == HomflyPoly::monomial(1, 0, 1)) return HomflyPoly::monomial(1, 0, e);
            throw std::invalid_argument("polynomial parse: negative exponent on a non-variable");
        }
        return base;
    }

    HomflyPoly parse_base() {
        skip();
        if (i >= s.size()) throw std::invalid_argument("polynomial parse: unexpected end of input");
        if (eat('(')) {
            HomflyPoly r = parse_expr();
            if (!eat(')')) throw std::invalid_argument("polynomial parse: missing ')'");
            return r;
        }
        if (eat('-')) return -parse_factor();
        if (std::isdigit(static_cast<unsigned char>(s[i])))
            return HomflyPoly::monomial(parse_int(), 0, 0);
        if (match_word(a_name)) return HomflyPoly::monomial(1, 1, 0);
        if (match_word(z_name)) return HomflyPoly::monomial(1, 0, 1);
        throw std::invalid_argument("polynomial parse: unexpected token near '" +
                                    s.substr(i, 8) + "'");
    }

    int parse_int() {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("polynomial parse: expected an integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw std::invalid_argument("polynomial parse: integer too large");
            ++i;
        }
        return static_cast<int>(v);
    }
};

}  // namespace

HomflyPoly parse_homfly_expression(const std::string& text, const std::string& a_name,
                                   const std::string& z_name) {
    ExprParser p{text, 0, a_name, z_name};
    HomflyPoly r = p.parse_expr();
    p.skip();
    if (p.i != text.size())
        throw std::invalid_argument("polynomial parse: trailing input near '" +
                                    text.substr(p.i, 8) + "'");
    return r;
}

}  // namespace sl3web
