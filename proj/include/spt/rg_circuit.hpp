// Hierarchical application of the convolution gate and multiscale string operators.
#pragma once

#include <vector>

#include "spt/conv_gate.hpp"
#include "spt/reference.hpp"

namespace spt {

// Returns l with L = 3^l, or throws.
int exact_log3(int L);

struct LegLayout {
    int L = 0;
    int l = 0;
    int depth = 0;
    // renormalised[k]: legs still renormalised after k layers (k = 0: every site).
    std::vector<std::vector<int>> renormalised;
    // Layer at which a site became an ancilla; 0 if it never did.
    std::vector<int> ancilla_layer;

    std::vector<int> ancillas(int layer) const;
    std::vector<int> all_ancillas() const;
    bool is_renormalised(int site, int layer) const;
};

LegLayout make_layout(int L, int depth);

// Layer k (1-based) of the circuit: the gate on each consecutive triple of layer k-1 legs.
template <class State>
void apply_layer(State& state, const cmat& gate, const LegLayout& lay, int k) {
    const auto& legs = lay.renormalised.at(k - 1);
    for (std::size_t t = 0; t + 2 < legs.size(); t += 3) state.apply_local(gate, {legs[t], legs[t + 1], legs[t + 2]});
}

// Applies `depth` layers of the gate to consecutive triples of renormalised legs.
template <class State>
LegLayout run_circuit(State& state, const cmat& gate, int L, int depth) {
    LegLayout lay = make_layout(L, depth);
    for (int k = 1; k <= depth; ++k) apply_layer(state, gate, lay, k);
    return lay;
}

// End points of the multiscale string: first and last renormalised legs at the deepest
// layer that still has at least two legs; the same physical end points are used at every depth.
std::pair<int, int> string_span(int L);
int max_string_depth(int L);

// S^R_g at i, R_g on renormalised legs strictly between, S^L_g at j (legs of layer d).
std::vector<LocalOp> mso_string(const SptModel& m, const LegLayout& lay, int d, int g, int i, int j);

// <psi| Q^dag (S x 1) Q |psi>, evaluated by running the circuit on a copy.
template <class State>
cplx mso_expectation(const State& psi, const SptModel& m, const cmat& gate, int d, int g, int i, int j) {
    State s = psi;
    LegLayout lay = run_circuit(s, gate, psi.num_sites(), d);
    return s.product_expectation(mso_string(m, lay, d, g, i, j));
}

}  // namespace spt
