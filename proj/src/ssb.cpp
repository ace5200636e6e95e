#include "spt/ssb.hpp"

#include <cmath>

#include "spt/conv_gate.hpp"
#include "spt/projective.hpp"

namespace spt {

std::array<int, 3> ssb_gate_classical(const FiniteAbelianGroup& G, int g, int h, int k) {
    return {G.sub(g, h), maj(g, h, k), G.sub(k, h)};
}

cmat shift_rep(const FiniteAbelianGroup& G, int g) {
    const int n = G.order();
    cmat S = cmat::Zero(n, n);
    for (int x = 0; x < n; ++x) S(G.add(x, g), x) = 1.0;
    return S;
}

SsbGate ssb_gate(const FiniteAbelianGroup& G) {
    const int n = G.order();
    const cmat I = cmat::Identity(n, n);
    SsbGate s;
    s.cs_minus_left = cmat::Zero(n * n * n, n * n * n);
    s.cs_minus_right = s.cs_minus_left;
    s.ccs_plus = s.cs_minus_left;
    for (int h = 0; h < n; ++h) {
        const cmat back = shift_rep(G, G.neg(h));
        s.cs_minus_left += kron_all({back, projector(n, h), I});
        s.cs_minus_right += kron_all({I, projector(n, h), back});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const cmat mid = a == b ? shift_rep(G, a) : I;
            s.ccs_plus += kron_all({projector(n, a), mid, projector(n, b)});
        }
    s.C = s.ccs_plus * s.cs_minus_right * s.cs_minus_left;
    return s;
}

int ssb_truth_table_mismatches(const FiniteAbelianGroup& G, const cmat& C) {
    const int n = G.order();
    int bad = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const auto out = ssb_gate_classical(G, g, h, k);
                const int col = (g * n + h) * n + k;
                const int row = (out[0] * n + out[1]) * n + out[2];
                cvec e = cvec::Zero(n * n * n);
                e[row] = 1.0;
                if ((C.col(col) - e).cwiseAbs().maxCoeff() > 1e-14) ++bad;
            }
    return bad;
}

double ssb_symmetry_defect(const FiniteAbelianGroup& G, const cmat& C) {
    const int n = G.order();
    const cmat I = cmat::Identity(n, n);
    double d = 0;
    for (int g = 0; g < n; ++g) {
        const cmat S = shift_rep(G, g);
        d = std::max(d, max_abs(C * kron_all({S, S, S}) - kron_all({I, S, I}) * C));
    }
    return d;
}

namespace {

DenseState product_state(int n, int L, const cvec& site) {
    DenseState s(n, L);
    cvec v = site;
    for (int i = 1; i < L; ++i) {
        cvec w(v.size() * n);
        for (Eigen::Index a = 0; a < v.size(); ++a)
            for (int b = 0; b < n; ++b) w[a * n + b] = v[a] * site[b];
        v = std::move(w);
    }
    s.amplitudes() = v;
    s.normalize();
    return s;
}

}  // namespace

DenseState ordered_state_with_flips(const FiniteAbelianGroup& G, int L, int g, double eps) {
    const int n = G.order();
    cvec site = cvec::Constant(n, std::sqrt(eps / (n - 1)));
    site[g] = std::sqrt(1.0 - eps);
    return product_state(n, L, site);
}

DenseState paramagnet_state(const FiniteAbelianGroup& G, int L) {
    const int n = G.order();
    return product_state(n, L, cvec::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

double renormalised_fidelity(const DenseState& state, const LegLayout& lay, int d, int g) {
    std::vector<LocalOp> ops;
    for (int site : lay.renormalised.at(d)) ops.emplace_back(site, projector(state.local_dim(), g));
    return state.product_expectation(ops).real();
}

}  // namespace spt
