#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sl3web/diagram.hpp"
#include "sl3web/laurent.hpp"
#include "sl3web/seifert.hpp"
#include "sl3web/web.hpp"

namespace sl3web {

/// A state assigns O or W to every crossing; bit c set means W at crossing c.
using State = std::uint64_t;

/// The fully resolved closed web of a state.
Web resolution_state_diagram(const LinkDiagram& d, State s);

struct StateWeight {
    int alpha_plus = 0, beta_plus = 0, alpha_minus = 0, beta_minus = 0;
    LaurentPoly phase;      // (-1)^(b+ + b-) q^(-2(a+ - a-) - 3(b+ - b-))
    LaurentPoly web_value;  // evaluation of the state web
    LaurentPoly weight;     // phase * web_value
};

using WebMemo = std::unordered_map<std::string, LaurentPoly>;

StateWeight state_weight(const LinkDiagram& d, State s, WebMemo* memo = nullptr);

/// Maximum exponent of the state weight.
int degree(const LinkDiagram& d, State s, WebMemo* memo = nullptr);

/// State graph: spanning subgraph of the Seifert graph keeping the edges of
/// W-resolved crossings.
SeifertGraph state_graph(const LinkDiagram& d, State s);

struct StatesumOptions {
    int crossing_cap = 20;
    int workers = 1;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The quantum sl3 polynomial as the sum of all 2^e state weights.
LaurentPoly invariant(const LinkDiagram& d, const StatesumOptions& opts = {});

struct OwExperimentReport {
    int trials = 0;
    int delta_zero = 0;   // d(s') = d(s)
    int delta_two = 0;    // d(s') = d(s) - 2
    int violations = 0;   // anything else (must stay 0)
};

/// Random (state, O->W flip) probes on a positive diagram; checks that the
/// weight degree never increases and drops by at most 2.
OwExperimentReport ow_move_experiment(const LinkDiagram& d, int trials, std::uint64_t seed);

}  // namespace sl3web
