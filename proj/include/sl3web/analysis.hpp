#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3web/diagram.hpp"
#include "sl3web/laurent.hpp"
#include "sl3web/seifert.hpp"
#include "sl3web/statesum.hpp"

namespace sl3web {

struct Gammas {
    int n = 0;  // leading degree
    std::int64_t gamma1 = 0, gamma2 = 0, gamma3 = 0;
};

/// Leading degree and the three coefficients at exponent spacing 2.
Gammas gammas(const LaurentPoly& p);

struct InvariantReport {
    LaurentPoly polynomial;
    Gammas g;
    SeifertStats stats;
    bool connected = false;
    bool all_positive = false;
    std::optional<bool> fibered;  // tree criterion; positive connected diagrams only
    bool braid_positivity_obstructed = false;  // hint-free coefficient obstruction
    std::vector<std::string> obstruction_reasons;
    nlohmann::json to_json() const;
};

InvariantReport analyze(const LinkDiagram& d, const StatesumOptions& opts = {});

/// Checks the closed-form coefficient statements on a connected positive
/// diagram against the state-sum polynomial; any mismatch throws.
struct CoefficientCheck {
    Gammas g;
    SeifertStats stats;
    bool even_exponents = false;
};
CoefficientCheck verify_coefficient_theorems(const LinkDiagram& d,
                                             const StatesumOptions& opts = {});

/// Tree test on the reduced Seifert graph, cross-checked against gamma2 = 1.
/// The certificate carries a cycle when the answer is negative.
struct FiberedVerdict {
    bool fibered = false;
    std::vector<int> cycle;  // reduced edge ids witnessing non-tree
};
FiberedVerdict fibered_criterion(const LinkDiagram& d, const StatesumOptions& opts = {});

/// Obstruction from the braid-positivity coefficient constraints: gamma2 must
/// be 1 and, for a knot with a known prime decomposition number p, gamma3
/// must equal p + 1. Never asserts positivity, only obstructs.
struct BraidObstruction {
    bool obstructed = false;
    std::vector<std::string> reasons;
};
BraidObstruction braid_positivity_obstruction(const Gammas& g, bool assume_knot,
                                              std::optional<int> prime_count_hint);

/// Connected-sum coefficient bookkeeping on two positive diagrams.
struct ConnectedSumCheck {
    Gammas g1, g2, gsum;
    std::int64_t lambda1 = 0, lambda2 = 0, lambda_sum = 0;
    bool gamma2_additive = false;
    bool lambda_additive = false;
    bool gamma3_formula = false;
    bool product_identity = false;  // [3] <<d1 # d2>> = <<d1>> <<d2>>
};
ConnectedSumCheck connected_sum_check(const LinkDiagram& d1, const LinkDiagram& d2,
                                      const StatesumOptions& opts = {});

/// For an alternating positive braid closure: the Seifert data must force a
/// connected sum of (2,n) torus factors; reports the factor list.
struct AltBraidFactors {
    std::vector<int> factors;  // n_i per (2, n_i) factor
};
AltBraidFactors alternating_positive_braid_classifier(const LinkDiagram& d);

/// Brute-force verification of the semi-mixed support combinatorics at a
/// mixed pair of reduced edges with mixing index m.
struct MixingCombinatoricsReport {
    int m = 0;
    // C[u][v] = number of support pairs (|I_u| = u, |I_v| = v), 1-indexed
    std::vector<std::vector<std::int64_t>> counts;
    bool formula_ok = false;     // matches the closed form
    bool symmetry_ok = false;    // C_{u,v} = C_{u+1,v-1} for u,v > 1
    bool constraints_ok = false; // |I_u|+|I_v| <= m+1 and |intersection| <= 1
    std::int64_t alternating_sum = 0;  // sum over supports of (-1)^(u+v); must vanish
};
MixingCombinatoricsReport verify_mixing_combinatorics(int m);

/// Enumerates the states of a positive diagram lying over one mixed pair of
/// reduced edges and checks their degrees and web values against the closed
/// forms; also sums the leading terms of the semi-mixed states.
struct SemiMixedAudit {
    int states_checked = 0;
    int semi_mixed_states = 0;
    bool degrees_ok = false;
    bool web_identity_ok = false;
    std::int64_t semi_mixed_leading_sum = 0;  // must vanish
};
SemiMixedAudit semi_mixed_state_audit(const LinkDiagram& d);

}  // namespace sl3web
