// Canonical perfect MPS tensor, shift operators, string operators and
// periodic transfer-matrix expectations.
#pragma once

#include <utility>
#include <vector>

#include "spt/group.hpp"
#include "spt/linalg.hpp"
#include "spt/projective.hpp"

namespace spt {

// One MPS site: block A^s (Dl x Dr) for every physical label s.
using SiteTensor = std::vector<cmat>;
using LocalOp = std::pair<int, cmat>;  // (site, operator)

struct MpsTensor {
    FactorSet fs;
    int chi = 1;
    SiteTensor A;  // A^g = V^dag_{Gamma^{-1}(g)}

    double orthogonality_defect() const;  // Tr[(A^g)^dag A^h] = sqrt|G| delta
    double injectivity_defect() const;    // sum_g A^g_ij conj(A^g_kl) = sqrt|G| delta_ik delta_jl
    double pullthrough_defect() const;    // chi_h(g) A^h = V_g^dag A^h V_g
};

MpsTensor canonical_tensor(const FactorSet& fs);

// Everything derived from one maximally non-commutative factor set.
class SptModel {
public:
    explicit SptModel(const FactorSet& fs);

    const FactorSet& fs() const { return fs_; }
    const FiniteAbelianGroup& group() const { return fs_.group(); }
    int order() const { return fs_.order(); }
    int chi() const { return tensor_.chi; }

    const cmat& V(int g) const { return rep_.V(g); }
    const cmat& A(int g) const { return tensor_.A[g]; }
    const SiteTensor& tensor() const { return tensor_.A; }
    const MpsTensor& mps_tensor() const { return tensor_; }
    const cmat& R(int g) const { return R_[g]; }
    const cmat& SL(int g) const { return SL_[g]; }
    const cmat& SR(int g) const { return SR_[g]; }

    // A(1 x V_g) = S^R_g A and A(V_g^dag x 1) = S^L_g A as tensor identities.
    double shift_identity_defect() const;
    double shift_product_defect() const;   // R_g = S^L_g S^R_g
    double shift_fusion_defect() const;    // S^R_g S^R_h = omega(g,h) S^R_{g+h}
    double shift_commutation_defect() const;
    double shift_adjoint_defect() const;   // (S^R_g)^dag = sigma_g S^R_{-g}
    double shift_irrep_defect() const;     // R_h^dag S^L_g R_h = chi_{Gamma g}(h) S^L_g, conj for S^R

private:
    FactorSet fs_;
    ProjectiveRep rep_;
    MpsTensor tensor_;
    std::vector<cmat> R_, SL_, SR_;
};

struct ShiftOperators {
    cmat S_L;
    cmat S_R;
};
ShiftOperators shift_operators(const FactorSet& fs, int g);

// S^R_g at i, R_g on i+1..j-1, S^L_g at j.
std::vector<LocalOp> string_operator(const SptModel& m, int g, int i, int j, int L);
// Trivial-class string: R_g on every site of [i, j].
std::vector<LocalOp> trivial_string_operator(const FiniteAbelianGroup& G, int g, int i, int j, int L);

// -sum_g S^R_g x S^L_g on a neighbouring pair.
cmat parent_term(const SptModel& m);

// Site tensors of the reference state: canonical tensor if MNC, |0> product if trivial.
SiteTensor reference_site_tensor(const FactorSet& fs);

// Periodic transfer-matrix expectation <psi|prod ops|psi>/<psi|psi> for arbitrary site tensors.
cplx string_expectation_tm(const std::vector<SiteTensor>& tensors, const std::vector<LocalOp>& ops);

}  // namespace spt
