// Symmetry-breaking recogniser. Here the symmetry acts by shifts S_g and the order
// parameter R_g is diagonal.
#pragma once

#include <array>

#include "spt/dense_state.hpp"
#include "spt/group.hpp"
#include "spt/linalg.hpp"
#include "spt/rg_circuit.hpp"

namespace spt {

// (g, h, k) -> (g - h, maj(g, h, k), k - h)
std::array<int, 3> ssb_gate_classical(const FiniteAbelianGroup& G, int g, int h, int k);

// S_g = sum_x |x + g><x|
cmat shift_rep(const FiniteAbelianGroup& G, int g);

struct SsbGate {
    cmat cs_minus_left;   // centre controls, |g> -> |g - h> on the left leg
    cmat cs_minus_right;  // centre controls, |k> -> |k - h> on the right leg
    cmat ccs_plus;        // outer legs (a, b) control; centre += a when a = b
    cmat C;               // ccs_plus * cs_minus_right * cs_minus_left
};

SsbGate ssb_gate(const FiniteAbelianGroup& G);

// Number of basis triples on which the gate disagrees with the classical table.
int ssb_truth_table_mismatches(const FiniteAbelianGroup& G, const cmat& C);
// max_g |C (S_g x S_g x S_g) - (1 x S_g x 1) C|
double ssb_symmetry_defect(const FiniteAbelianGroup& G, const cmat& C);

template <class State>
LegLayout run_ssb(State& state, const FiniteAbelianGroup& G, int depth) {
    return run_circuit(state, ssb_gate(G).C, state.num_sites(), depth);
}

// Largest |<R_g>|, g != e, over the renormalised legs of layer d.
template <class State>
double para_uniformity(const State& state, const FiniteAbelianGroup& G, const LegLayout& lay, int d) {
    double worst = 0;
    for (int site : lay.renormalised.at(d))
        for (int g = 1; g < G.order(); ++g)
            worst = std::max(worst, std::abs(state.product_expectation({{site, regular_rep(G, g)}})));
    return worst;
}

// prod_i (sqrt(1 - eps)|g> + sqrt(eps/(|G|-1)) sum_{x != g}|x>)
DenseState ordered_state_with_flips(const FiniteAbelianGroup& G, int L, int g, double eps);
// prod_i |+>, |+> the uniform superposition
DenseState paramagnet_state(const FiniteAbelianGroup& G, int L);

// Overlap of the renormalised legs of layer d with |g>: probability that all of them read g.
double renormalised_fidelity(const DenseState& state, const LegLayout& lay, int d, int g);

}  // namespace spt
