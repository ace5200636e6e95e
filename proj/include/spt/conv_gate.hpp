// The three-qudit convolution gate C = CCR * CS^R * CS^L * D and its identities.
#pragma once

#include <string>
#include <vector>

#include "spt/linalg.hpp"
#include "spt/reference.hpp"

namespace spt {

// Majority vote with the centre winning ties.
int maj(int g, int h, int k);

// Which of the three output tensors of the detect ring enter transposed.
struct RingLabeling {
    bool left = false;    // ancilla tensor on bonds (r1, l2)
    bool centre = false;  // renormalised tensor on bonds (l1, r3)
    bool right = false;   // ancilla tensor on bonds (r2, l3)
    std::string describe() const;
};

cmat detect_for_labeling(const SptModel& m, const RingLabeling& ring);
// max deviation of D(A x A x A) from |G| |0> x A x |0> with open virtual legs
double no_error_defect(const SptModel& m, const cmat& D);

struct DetectResult {
    cmat D;
    RingLabeling ring;
};
// Every ring labeling passing unitarity and the no-error identity.
std::vector<DetectResult> detect_candidates(const SptModel& m);
// The first candidate for which the full gate obeys the majority-vote identity.
DetectResult detect_unitary(const SptModel& m);

struct ControlledGates {
    cmat cs_left;
    cmat cs_right;
    cmat ccr;
};
ControlledGates controlled_gates(const SptModel& m);

enum class AncillaConvention { GMinusH, HMinusG };

struct ConvGate {
    cmat detect;
    cmat cs_left;
    cmat cs_right;
    cmat ccr;
    cmat C;
    RingLabeling ring;
    AncillaConvention ancillas = AncillaConvention::GMinusH;
};

struct CorollaryReport {
    int triples = 0;
    double defect_g_minus_h = 0;  // a_L = Gamma(g-h), a_R = Gamma(h-k)
    double defect_h_minus_g = 0;  // a_L = Gamma(h-g), a_R = Gamma(k-h)
};

// C (R_g x R_h x R_k)(A x A x A) = |G| |a_L> x R_maj A x |a_R> over every triple.
// With early_exit the scan stops once neither convention can hold.
CorollaryReport majority_corollary(const SptModel& m, const cmat& C, bool early_exit = false);

// Builds the gate and fails loudly if unitarity or the majority corollary breaks.
ConvGate conv_gate(const SptModel& m);

double gate_unitarity_defect(const ConvGate& c);
// C R_g^{x3} = (1 x R_g x 1) C
double gate_symmetry_defect(const SptModel& m, const cmat& C);

struct PushdownReport {
    double max_defect = 0;
    double max_commutator = 0;
};
// C^dag (1 x S^L_g x 1) C against the renormalised-string expansion, every g.
PushdownReport pushdown_sl(const SptModel& m, const cmat& C);

// Open-leg input (R_g A)(R_h A)(R_k A) as a |G|^3 x chi^2 matrix, columns (l1, r3).
cmat error_triple_tensor(const SptModel& m, int g, int h, int k);

}  // namespace spt
