// Regular representation R_g and the maximally non-commutative projective irreps V_g.
#pragma once

#include <vector>

#include "spt/group.hpp"
#include "spt/linalg.hpp"

namespace spt {

struct ClockShiftPair {
    int N;
    cmat Z;
    cmat X;
    explicit ClockShiftPair(int n) : N(n), Z(clock_pow(n, 1)), X(shift_pow(n, 1)) {}
    // max |ZX - zeta XZ|
    double relation_defect() const;
};

// V_g = tensor over blocks a of X^{g_{2a-1}} Z^{w_a g_{2a}}.
cmat projective_rep(const FactorSet& fs, int g);

// R_g = sum_h chi_h(g) |h><h|
cmat regular_rep(const FiniteAbelianGroup& G, int g);

class ProjectiveRep {
public:
    explicit ProjectiveRep(const FactorSet& fs);
    const FactorSet& factor_set() const { return fs_; }
    int dim() const { return dim_; }
    const cmat& V(int g) const { return V_[g]; }

    double fusion_defect() const;       // V_g V_h = omega(g,h) V_{g+h}
    double commutator_defect() const;   // V_g V_h = lambda(g,h) V_h V_g
    double conjugation_defect() const;  // V_g^dag = sigma_g V_{-g}
    double trace_defect() const;        // |Tr V_g| = sqrt|G| [g=e]

private:
    FactorSet fs_;
    int dim_;
    std::vector<cmat> V_;
};

// max over index tuples of |(1/|G|) sum_g [V_g^dag]_{ij} [V_g]_{kl} - delta_il delta_jk / sqrt|G||
double schur_check(const FactorSet& fs);

}  // namespace spt
