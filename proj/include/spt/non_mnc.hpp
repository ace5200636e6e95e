// Non-maximally-non-commutative factor sets: G = Z_{pq} x Z_{pq} with w = q.
// The center C = pG ~ Z_q^2 carries a flavour label; the quotient Z_p^2 is MNC
// and is recognised by the ordinary circuit after the flavour is measured.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spt/mps_chain.hpp"
#include "spt/recognition.hpp"
#include "spt/reference.hpp"

namespace spt {

class CentralExtension {
public:
    CentralExtension(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    const FactorSet& factor_set() const { return fs_; }
    const FiniteAbelianGroup& group() const { return fs_.group(); }
    const FiniteAbelianGroup& center() const { return C_; }     // Z_q^2
    const FiniteAbelianGroup& quotient() const { return Q_.group(); }  // Z_p^2
    const FactorSet& quotient_factor_set() const { return Q_; }

    // Residue-level maps; every argument and result is an element index.
    int pi(int g) const;            // g mod p
    int pi_inverse(int gbar) const;  // residues < p
    int iota(int c) const;          // p c
    int pi_star(int gbar) const;    // q gbar
    int iota_star(int g) const;     // g mod q
    int tau(int c) const;           // residues < q

    // g = pi^{-1}(ub g) + iota(ut g)
    std::pair<int, int> split(int g) const;
    // g = pi_*(bar g) + tau(tilde g)
    std::pair<int, int> dual_split(int g) const;
    // ((a +_{pq} b) - (a +_p b)) / p, a, b in Z_p^2
    int delta_tilde(int a, int b) const;
    // ((a +_{pq} b) - (a +_q b)) / q, a, b in Z_q^2
    int delta_bar(int a, int b) const;

    // Site space H_l (p) x H_flav (q^2) x H_re (p).
    int site_dim() const { return p_ * p_ * q_ * q_; }
    int label(int l, int flavour, int r) const { return (l * C_.order() + flavour) * p_ + r; }
    int flavour_of(int label) const { return (label / p_) % C_.order(); }

    cmat V(int gbar) const { return V_[gbar]; }
    cmat R_tilde(int g) const;
    // V*_{ub g} x R~_g x V_{ub g}
    cmat pair_rep(int g) const;
    cmat S_L(int gbar) const;  // V*_gbar x 1 x 1
    cmat S_R(int gbar) const;  // 1 x 1 x V_gbar
    cmat W(int htilde) const;
    cmat X(int h) const;

    // A^{(l, f, r)} = |l><r| delta_{f, anchor}
    SiteTensor reference_tensor(int anchor = 0) const;
    // Intra-site singlet on (l, r) with flavour e: a symmetric product state.
    SiteTensor trivial_tensor() const;

    // S^R_gbar at i, pair_rep(pi^{-1} gbar) on i+1..j-1, S^L_gbar at j.
    std::vector<LocalOp> string_operator(int gbar, int i, int j, int L) const;
    // chi_{tau(anchor)}(pi^{-1} gbar) raised to the number of interior sites.
    cplx string_phase(int gbar, int anchor, int i, int j) const;

    // Restrictions to H_l x H_re once the flavour is fixed.
    cmat mnc_rep(int gbar) const;   // V*_gbar x V_gbar
    cmat mnc_S_R(int gbar) const;   // 1 x V_gbar

    // Violations of the cocycle identities and twisted addition laws (exact integer counts).
    int extension_violations() const;
    // max_g distance between the sorted eigenvalue multisets of pair_rep(g) and R_g.
    double eigenvalue_multiset_defect() const;
    // max |pair_rep(g) pair_rep(h) - pair_rep(g + h)|
    double linearity_defect() const;
    // max |pair_rep(g) X_h - chi_g(h) X_h pair_rep(g)|
    double commutation_defect() const;
    // max |Tr[O_a O_b^dag] - |G| delta_ab| over O = pair_rep(g) X_h
    double gram_defect() const;

private:
    int p_, q_;
    FactorSet fs_;
    FactorSet Q_;
    FiniteAbelianGroup C_;
    std::vector<cmat> V_;
};

enum class RemainderSign { Minus, Plus };

// rem_i = delta_bar(sum_{j<i} h_j, h_i) in Z_p^2.
std::vector<int> remainders(const CentralExtension& ext, const std::vector<int>& flavours);

// Unitary |k><a,b| |G|^{-1/4} A^k_ab mapping the pair basis of H_l x H_re to the
// regular basis of the quotient MNC model.
cmat pair_to_canonical(const SptModel& quotient);

MpsChain general_reference_chain(const CentralExtension& ext, int L, int anchor = 0);
MpsChain trivial_pair_chain(const CentralExtension& ext, int L);

struct RemainderOutcome {
    std::vector<int> flavours;
    std::vector<int> rem;
    MpsChain mnc;               // quotient state in the regular basis of the MNC model
    double symmetry_defect = 0;  // max_g |<prod mnc_rep(g)> - 1| before the basis change
};

// Measure every flavour, apply S^R_{+Gamma^{-1}(rem_i)} (or the minus variant), drop the flavour factor and
// change basis to the quotient MNC model.
RemainderOutcome remove_remainder(const CentralExtension& ext, const SptModel& quotient, MpsChain state,
                                  std::uint64_t seed, RemainderSign sign = RemainderSign::Plus);

struct NonMncReport {
    RemainderOutcome outcome;
    RecognitionReport recognition;
};

NonMncReport recognize_non_mnc(const CentralExtension& ext, const MpsChain& state, int d_max,
                               const RecognitionOptions& opt = {},
                               RemainderSign sign = RemainderSign::Plus);

}  // namespace spt
