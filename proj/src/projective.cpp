#include "spt/projective.hpp"

#include <cmath>

namespace spt {

double ClockShiftPair::relation_defect() const {
    cplx zeta = Phase(1, N).value();
    return max_abs(Z * X - zeta * X * Z);
}

cmat projective_rep(const FactorSet& fs, int g) {
    if (!fs.is_mnc()) throw domain_error("projective_rep requires a maximally non-commutative factor set");
    if (!fs.has_block_form()) throw domain_error("projective_rep requires block form prod_a Z_N x Z_N");
    const auto& G = fs.group();
    auto r = G.residues(g);
    std::vector<cmat> blocks;
    for (int a = 0; a + 1 < G.rank(); a += 2) {
        int N = G.moduli()[a];
        int w = fs.entry(a, a + 1);
        blocks.push_back(shift_pow(N, r[a]) * clock_pow(N, w * r[a + 1]));
    }
    return kron_all(blocks);
}

cmat regular_rep(const FiniteAbelianGroup& G, int g) {
    const int n = G.order();
    cmat R = cmat::Zero(n, n);
    for (int h = 0; h < n; ++h) R(h, h) = G.character(h, g).value();
    return R;
}

ProjectiveRep::ProjectiveRep(const FactorSet& fs) : fs_(fs) {
    const int n = fs.order();
    dim_ = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    V_.reserve(n);
    for (int g = 0; g < n; ++g) V_.push_back(projective_rep(fs, g));
}

double ProjectiveRep::fusion_defect() const {
    const int n = fs_.order();
    const auto& G = fs_.group();
    double m = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            m = std::max(m, max_abs(V_[g] * V_[h] - fs_.omega(g, h).value() * V_[G.add(g, h)]));
    return m;
}

double ProjectiveRep::commutator_defect() const {
    const int n = fs_.order();
    double m = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            m = std::max(m, max_abs(V_[g] * V_[h] - fs_.lambda(g, h).value() * V_[h] * V_[g]));
    return m;
}

double ProjectiveRep::conjugation_defect() const {
    const int n = fs_.order();
    double m = 0;
    for (int g = 0; g < n; ++g)
        m = std::max(m, max_abs(V_[g].adjoint() - fs_.sigma(g).value() * V_[fs_.group().neg(g)]));
    return m;
}

double ProjectiveRep::trace_defect() const {
    const int n = fs_.order();
    double m = 0;
    for (int g = 0; g < n; ++g) {
        double expect = g == 0 ? std::sqrt(static_cast<double>(n)) : 0.0;
        m = std::max(m, std::abs(std::abs(V_[g].trace()) - expect));
    }
    return m;
}

double schur_check(const FactorSet& fs) {
    ProjectiveRep rep(fs);
    const int n = fs.order();
    const int D = rep.dim();
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
    double m = 0;
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int k = 0; k < D; ++k)
                for (int l = 0; l < D; ++l) {
                    cplx s = 0;
                    for (int g = 0; g < n; ++g) s += std::conj(rep.V(g)(j, i)) * rep.V(g)(k, l);
                    s /= static_cast<double>(n);
                    double expect = (i == l && j == k) ? inv_sqrt : 0.0;
                    m = std::max(m, std::abs(s - expect));
                }
    return m;
}

}  // namespace spt
