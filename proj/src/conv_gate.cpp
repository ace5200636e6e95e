#include "spt/conv_gate.hpp"

#include <cmath>

namespace spt {

int maj(int g, int h, int k) {
    if (g == h || g == k) return g;
    return h;
}

std::string RingLabeling::describe() const {
    auto t = [](bool b) { return b ? "T" : "-"; };
    return std::string("left:") + t(left) + " centre:" + t(centre) + " right:" + t(right);
}

cmat detect_for_labeling(const SptModel& m, const RingLabeling& ring) {
    const int n = m.order();
    const int chi = m.chi();
    // Ring a -(x1)- b -(mL)- c -(x2)- d -(mR)- e -(x3)- f -(r)- a, so that
    // D = N Tr[conj(A^x1) Y^mL conj(A^x2) Y^mR conj(A^x3) Y^r].
    std::vector<cmat> Ab(n), YL(n), YR(n), Yr(n);
    for (int g = 0; g < n; ++g) {
        Ab[g] = m.A(g).conjugate();
        YL[g] = ring.left ? cmat(m.A(g).transpose()) : m.A(g);
        YR[g] = ring.right ? cmat(m.A(g).transpose()) : m.A(g);
        // centre tensor carries indices (a, f) = (l1, r3); in the trace it appears as (f, a)
        Yr[g] = ring.centre ? m.A(g) : cmat(m.A(g).transpose());
    }
    const double norm = std::pow(static_cast<double>(n), -1.5);
    std::vector<cmat> P1(n * n), P2(n * n), P3(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            P1[x * n + y] = Ab[x] * YL[y];
            P2[x * n + y] = Ab[x] * YR[y];
            P3[x * n + y] = Ab[x] * Yr[y];
        }
    const int N3 = n * n * n;
    cmat D = cmat::Zero(N3, N3);
    for (int x1 = 0; x1 < n; ++x1)
        for (int mL = 0; mL < n; ++mL)
            for (int x2 = 0; x2 < n; ++x2)
                for (int mR = 0; mR < n; ++mR) {
                    cmat P12 = P1[x1 * n + mL] * P2[x2 * n + mR];
                    for (int x3 = 0; x3 < n; ++x3)
                        for (int r = 0; r < n; ++r) {
                            const cmat& p3 = P3[x3 * n + r];
                            cplx tr = 0;
                            for (int i = 0; i < chi; ++i)
                                for (int j = 0; j < chi; ++j) tr += P12(i, j) * p3(j, i);
                            D((mL * n + r) * n + mR, (x1 * n + x2) * n + x3) = norm * tr;
                        }
                }
    return D;
}

cmat error_triple_tensor(const SptModel& m, int g, int h, int k) {
    const int n = m.order();
    const int chi = m.chi();
    const auto& G = m.group();
    cmat T(n * n * n, chi * chi);
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2) {
            cmat P = m.A(x1) * m.A(x2);
            cplx ph12 = (G.character(x1, g) * G.character(x2, h)).value();
            for (int x3 = 0; x3 < n; ++x3) {
                cmat Q = ph12 * G.character(x3, k).value() * (P * m.A(x3));
                for (int a = 0; a < chi; ++a)
                    for (int f = 0; f < chi; ++f) T((x1 * n + x2) * n + x3, a * chi + f) = Q(a, f);
            }
        }
    return T;
}

namespace {

cmat expected_output(const SptModel& m, int aL, int renorm_error, int aR) {
    const int n = m.order();
    const int chi = m.chi();
    const auto& G = m.group();
    cmat E = cmat::Zero(n * n * n, chi * chi);
    for (int r = 0; r < n; ++r) {
        cmat blk = static_cast<double>(n) * G.character(r, renorm_error).value() * m.A(r);
        for (int a = 0; a < chi; ++a)
            for (int f = 0; f < chi; ++f) E((aL * n + r) * n + aR, a * chi + f) = blk(a, f);
    }
    return E;
}

}  // namespace

double no_error_defect(const SptModel& m, const cmat& D) {
    return max_abs(D * error_triple_tensor(m, 0, 0, 0) - expected_output(m, 0, 0, 0));
}

std::vector<DetectResult> detect_candidates(const SptModel& m) {
    std::vector<DetectResult> out;
    for (int mask = 0; mask < 8; ++mask) {
        RingLabeling ring{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
        cmat D = detect_for_labeling(m, ring);
        if (unitarity_defect(D) > 1e-10 || no_error_defect(m, D) > 1e-10) continue;
        out.push_back({std::move(D), ring});
    }
    return out;
}

namespace {

cmat compose(const ControlledGates& c, const cmat& D) { return c.ccr * c.cs_right * c.cs_left * D; }

bool corollary_holds(const CorollaryReport& r) {
    return r.defect_g_minus_h < 1e-10 || r.defect_h_minus_g < 1e-10;
}

}  // namespace

DetectResult detect_unitary(const SptModel& m) {
    auto cands = detect_candidates(m);
    auto ctl = controlled_gates(m);
    for (auto& c : cands)
        if (corollary_holds(majority_corollary(m, compose(ctl, c.D), true))) return std::move(c);
    throw std::runtime_error("no detect-ring labeling yields the majority-vote identity");
}

ControlledGates controlled_gates(const SptModel& m) {
    const int n = m.order();
    const auto& G = m.group();
    const auto& fs = m.fs();
    const cmat I = cmat::Identity(n, n);
    ControlledGates c{cmat::Zero(n * n * n, n * n * n), cmat::Zero(n * n * n, n * n * n),
                      cmat::Zero(n * n * n, n * n * n)};
    for (int g = 0; g < n; ++g) {
        c.cs_left += kron_all({projector(n, fs.gamma(g)), m.SL(g).adjoint(), I});
        c.cs_right += fs.sigma(g).conj().value() * kron_all({I, m.SR(g).adjoint(), projector(n, fs.gamma(G.neg(g)))});
    }
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp) {
            const cmat mid = g == gp ? cmat(m.R(g).adjoint()) : I;
            c.ccr += kron_all({projector(n, fs.gamma(G.neg(g))), mid, projector(n, fs.gamma(gp))});
        }
    return c;
}

CorollaryReport majority_corollary(const SptModel& m, const cmat& C, bool early_exit) {
    const int n = m.order();
    const auto& G = m.group();
    const auto& fs = m.fs();
    CorollaryReport rep;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                cmat out = C * error_triple_tensor(m, g, h, k);
                const int mj = maj(g, h, k);
                cmat e1 = expected_output(m, fs.gamma(G.sub(g, h)), mj, fs.gamma(G.sub(h, k)));
                cmat e2 = expected_output(m, fs.gamma(G.sub(h, g)), mj, fs.gamma(G.sub(k, h)));
                rep.defect_g_minus_h = std::max(rep.defect_g_minus_h, max_abs(out - e1));
                rep.defect_h_minus_g = std::max(rep.defect_h_minus_g, max_abs(out - e2));
                ++rep.triples;
                if (early_exit && rep.defect_g_minus_h > 1e-10 && rep.defect_h_minus_g > 1e-10) return rep;
            }
    return rep;
}

ConvGate conv_gate(const SptModel& m) {
    ConvGate c;
    auto det = detect_unitary(m);
    auto ctl = controlled_gates(m);
    c.C = compose(ctl, det.D);
    c.detect = std::move(det.D);
    c.ring = det.ring;
    c.cs_left = std::move(ctl.cs_left);
    c.cs_right = std::move(ctl.cs_right);
    c.ccr = std::move(ctl.ccr);
    if (gate_unitarity_defect(c) > 1e-10) throw std::runtime_error("convolution gate is not unitary");
    auto rep = majority_corollary(m, c.C);
    if (rep.defect_g_minus_h < 1e-10)
        c.ancillas = AncillaConvention::GMinusH;
    else if (rep.defect_h_minus_g < 1e-10)
        c.ancillas = AncillaConvention::HMinusG;
    else
        throw std::runtime_error("convolution gate fails the majority-vote identity");
    return c;
}

double gate_unitarity_defect(const ConvGate& c) {
    return std::max({unitarity_defect(c.detect), unitarity_defect(c.cs_left), unitarity_defect(c.cs_right),
                     unitarity_defect(c.ccr), unitarity_defect(c.C)});
}

double gate_symmetry_defect(const SptModel& m, const cmat& C) {
    const int n = m.order();
    const cmat I = cmat::Identity(n, n);
    double d = 0;
    for (int g = 0; g < n; ++g) {
        cmat R3 = kron_all({m.R(g), m.R(g), m.R(g)});
        cmat mid = kron_all({I, m.R(g), I});
        d = std::max(d, max_abs(C * R3 - mid * C));
    }
    return d;
}

PushdownReport pushdown_sl(const SptModel& m, const cmat& C) {
    const int n = m.order();
    const cmat I = cmat::Identity(n, n);
    cmat P = cmat::Zero(n * n * n, n * n * n);
    for (int k = 0; k < n; ++k) P += kron_all({m.SR(k), m.R(k), m.SL(k)});
    P /= static_cast<double>(n);
    PushdownReport rep;
    for (int g = 0; g < n; ++g) {
        cmat lhs = C.adjoint() * kron_all({I, m.SL(g), I}) * C;
        cmat t1 = kron_all({m.R(g), m.SL(g), I});
        cmat t2 = kron_all({m.SL(g), I, I});
        cmat rhs = t1 + (t2 - t1) * P;
        rep.max_defect = std::max(rep.max_defect, max_abs(lhs - rhs));
        rep.max_commutator = std::max({rep.max_commutator, commutator_norm(t1, t2), commutator_norm(t1, P),
                                       commutator_norm(t2, P)});
    }
    return rep;
}

}  // namespace spt
