// End-to-end acceptance run: one PASS/FAIL line per criterion with its runtime.
// Usage: acceptance [criterion numbers...]   (default: all)
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spt/cluster.hpp"
#include "spt/conv_gate.hpp"
#include "spt/error_flow.hpp"
#include "spt/non_mnc.hpp"
#include "spt/recognition.hpp"
#include "spt/ssb.hpp"

using namespace spt;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double cabs_max(const cmat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

// ---- inline oracles ----------------------------------------------------------------------

int oracle_maj(int g, int h, int k) { return (g == h || g == k) ? g : h; }

std::vector<double> oracle_flow(const std::vector<double>& p3, int n) {
    std::vector<double> out(n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) out[oracle_maj(a, b, c)] += p3[(a * n + b) * n + c];
    return out;
}

std::vector<double> oracle_iid(const std::vector<double>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<double> t(n * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) t[(a * n + b) * n + c] = p[a] * p[b] * p[c];
    return t;
}

std::vector<SiteTensor> product_tensors(int n, int L) {
    SiteTensor t(n, cmat::Zero(1, 1));
    t[0](0, 0) = 1.0;
    return std::vector<SiteTensor>(L, t);
}

std::vector<LocalOp> class_string(int w, int g, int i, int j, int L) {
    if (w == 0) return trivial_string_operator(FiniteAbelianGroup({3, 3}), g, i, j, L);
    return string_operator(SptModel(FactorSet::zn2(3, w)), g, i, j, L);
}

// At most one error per consecutive triple.
std::vector<int> sparse_errors(int L, int n, std::mt19937_64& rng) {
    std::vector<int> e(L, 0);
    std::uniform_int_distribution<int> pos(0, 3), lab(1, n - 1);
    for (int b = 0; b < L / 3; ++b) {
        const int k = pos(rng);
        if (k < 3) e[3 * b + k] = lab(rng);
    }
    return e;
}

std::vector<int> random_errors(int L, int n, std::mt19937_64& rng) {
    std::vector<int> e(L);
    std::uniform_int_distribution<int> lab(0, n - 1);
    for (auto& x : e) x = lab(rng);
    return e;
}

// ---- criteria ----------------------------------------------------------------------------

Outcome algebra() {
    Outcome o;
    struct Case {
        int N, w;
    };
    double worst = 0;
    int groups = 0;
    for (auto [N, w] : {Case{2, 1}, Case{3, 1}, Case{3, 2}, Case{4, 1}, Case{4, 2}, Case{4, 3}}) {
        const FactorSet fs = FactorSet::zn2(N, w);
        const auto& G = fs.group();
        const int n = G.order();
        int bad = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    bad += !(fs.omega(a, b) * fs.omega(G.add(a, b), c) == fs.omega(b, c) * fs.omega(a, G.add(b, c)));
                    bad += !(fs.lambda(G.add(a, b), c) == fs.lambda(a, c) * fs.lambda(b, c));
                    bad += !(fs.lambda(c, G.add(a, b)) == fs.lambda(c, a) * fs.lambda(c, b));
                }
                bad += !(G.character(a, fs.gamma(b)) == fs.lambda(a, b));
            }
        o.require(bad == 0, "cocycle/bihomomorphism/Gamma at Z" + std::to_string(N) + "^2 w=" + std::to_string(w));
        ++groups;
        if (!fs.is_mnc()) continue;
        std::set<int> image;
        for (int g = 0; g < n; ++g) image.insert(fs.gamma(g));
        o.require(static_cast<int>(image.size()) == n, "Gamma bijective");
        const ProjectiveRep rep(fs);
        const int D = rep.dim();
        o.require(D * D == n, "irrep dimension");
        for (int g = 0; g < n; ++g) {
            const double tr = std::abs(rep.V(g).trace());
            worst = std::max(worst, std::abs(tr - (g == 0 ? std::sqrt(double(n)) : 0.0)));
        }
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                for (int k = 0; k < D; ++k)
                    for (int l = 0; l < D; ++l) {
                        cplx s = 0;
                        for (int g = 0; g < n; ++g) s += std::conj(rep.V(g)(j, i)) * rep.V(g)(k, l);
                        s /= double(n);
                        worst = std::max(worst, std::abs(s - ((i == l && j == k) ? 1.0 / D : 0.0)));
                    }
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                worst = std::max(worst, cabs_max(rep.V(g) * rep.V(h) - fs.omega(g, h).value() * rep.V(G.add(g, h))));
    }
    o.require(worst < 1e-12, "projective identities");
    o.detail << groups << " factor sets, max defect " << fmt(worst);
    return o;
}

Outcome perfect_mps() {
    Outcome o;
    double worst = 0;
    for (int N : {2, 3}) {
        const SptModel m(FactorSet::zn2(N, 1));
        const int n = m.order();
        const auto& A = m.mps_tensor().A;
        const double rt = std::sqrt(double(n));
        const int D = static_cast<int>(A[0].rows());
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                worst = std::max(worst, std::abs((A[g].adjoint() * A[h]).trace() - (g == h ? rt : 0.0)));
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                for (int k = 0; k < D; ++k)
                    for (int l = 0; l < D; ++l) {
                        cplx s = 0;
                        for (int g = 0; g < n; ++g) s += A[g](i, j) * std::conj(A[g](k, l));
                        worst = std::max(worst, std::abs(s - ((i == k && j == l) ? rt : 0.0)));
                    }
        for (double d : {m.mps_tensor().pullthrough_defect(), m.shift_identity_defect(), m.shift_product_defect(),
                         m.shift_fusion_defect(), m.shift_commutation_defect(), m.shift_adjoint_defect(),
                         m.shift_irrep_defect()})
            worst = std::max(worst, d);
    }
    o.require(worst < 1e-12, "tensor identities");
    o.detail << "max defect " << fmt(worst);
    return o;
}

Outcome selection_rule() {
    Outcome o;
    double dense_worst = 0, tm_worst = 0;
    for (int w = 0; w < 3; ++w) {
        const DenseState psi = w == 0 ? DenseState(9, 6) : reference_dense(FactorSet::zn2(3, w), 6);
        const std::vector<SiteTensor> T = w == 0 ? product_tensors(9, 60)
                                                 : std::vector<SiteTensor>(60, reference_site_tensor(FactorSet::zn2(3, w)));
        for (int wp = 0; wp < 3; ++wp)
            for (int g = 1; g < 9; ++g) {
                const double want = w == wp ? 1.0 : 0.0;
                dense_worst = std::max(dense_worst, std::abs(psi.product_expectation(class_string(wp, g, 1, 4, 6)) - want));
                tm_worst = std::max(tm_worst, std::abs(string_expectation_tm(T, class_string(wp, g, 5, 44, 60)) - want));
            }
    }
    o.require(dense_worst < 1e-10, "L=6 dense");
    o.require(tm_worst < 1e-10, "L=60 transfer matrix");
    o.detail << "9 class pairs x 8 elements, L=6 " << fmt(dense_worst) << ", L=60 " << fmt(tm_worst);
    return o;
}

Outcome gate_oracle() {
    Outcome o;
    for (int N : {2, 3}) {
        const SptModel m(FactorSet::zn2(N, 1));
        const ConvGate g = conv_gate(m);
        const CorollaryReport cr = majority_corollary(m, g.C);
        const double u = unitarity_defect(g.C), s = gate_symmetry_defect(m, g.C);
        const int want = m.order() * m.order() * m.order();
        o.require(cr.triples == want, "triple count");
        o.require(u < 1e-10 && s < 1e-10 && cr.defect_g_minus_h < 1e-10, "Z" + std::to_string(N) + "^2 gate");
        o.detail << "Z" << N << "^2: " << cr.triples << " triples, corollary " << fmt(cr.defect_g_minus_h) << ", unitarity "
                 << fmt(u) << ", symmetry " << fmt(s) << "; ";
    }
    return o;
}

Outcome circuit_ec() {
    Outcome o;
    const SptModel m(FactorSet::zn2(2, 1));
    const cmat C = conv_gate(m).C;
    std::mt19937_64 rng(20240501);
    double worst9 = 0;
    for (int s = 0; s < 200; ++s) {
        const auto rep = recognize(prepare_with_errors(m.fs(), 9, sparse_errors(9, 4, rng)), m, C, 1);
        worst9 = std::max(worst9, std::abs(rep.depths[1].mso - 1.0));
    }
    double worst27 = 0;
    const int long_strings = 20;
    for (int s = 0; s < long_strings; ++s) {
        const auto rep = recognize(prepare_chain_with_errors(m.fs(), 27, sparse_errors(27, 4, rng)), m, C, 2);
        worst27 = std::max(worst27, std::abs(rep.depths[2].mso - 1.0));
    }
    o.require(worst9 < 1e-10, "L=9 d=1");
    o.require(worst27 < 1e-10, "L=27 d=2");
    o.detail << "200 strings L=9 d=1 max |MSO-1| " << fmt(worst9) << "; " << long_strings << " strings L=27 d=2 max "
             << fmt(worst27);
    return o;
}

Outcome no_false_positives() {
    Outcome o;
    const SptModel m(FactorSet::zn2(3, 1));
    const cmat C = conv_gate(m).C;
    std::mt19937_64 rng(777);
    double worst = 0;
    for (int s = 0; s < 20; ++s) {
        const auto e = random_errors(9, 9, rng);
        const MpsChain psi = s % 2 == 0 ? MpsChain::product(9, e) : prepare_chain_with_errors(FactorSet::zn2(3, 2), 9, e);
        const auto rep = recognize(psi, m, C, 1);
        for (const auto& r : rep.depths) worst = std::max(worst, std::abs(r.mso));
    }
    o.require(worst < 1e-8, "|MSO|");
    o.detail << "10 trivial + 10 omega'=2 states, Z3^2 L=9 d<=1, max |MSO| " << fmt(worst);
    return o;
}

Outcome majority_flow() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double flow_gap = 0, rec_gap = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + t % 3;
        std::vector<double> p3(n * n * n);
        double s = 0;
        for (auto& x : p3) s += (x = U(rng));
        for (auto& x : p3) x /= s;
        const auto a = maj_flow_step(p3, n), b = oracle_flow(p3, n);
        for (int g = 0; g < n; ++g) flow_gap = std::max(flow_gap, std::abs(a[g] - b[g]));

        std::vector<double> p(n);
        double z = 0;
        for (auto& x : p) z += (x = U(rng));
        for (auto& x : p) x /= z;
        std::vector<int> idx(n);
        for (int g = 0; g < n; ++g) idx[g] = g;
        std::sort(idx.begin(), idx.end(), [&](int x, int y) { return p[x] > p[y]; });
        const int g1 = idx[0], g2 = idx[1];
        const auto q = oracle_flow(oracle_iid(p), n);
        double sq = 0;
        for (double x : p) sq += x * x;
        const double delta = p[g1] - p[g2];
        const double predicted = p[g1] * p[g1] - p[g2] * p[g2] - delta * sq;
        rec_gap = std::max(rec_gap, std::abs((q[g1] - q[g2]) - delta - predicted));
        rec_gap = std::max(rec_gap, gap_and_depth(p, 1e-3).recursion_defect);
    }
    const double p648 = maj_flow_step(iid_table3({0.6, 0.4}), 2)[0];
    o.require(flow_gap <= 1e-15, "enumeration");
    o.require(rec_gap < 1e-12, "gap recursion");
    o.require(std::abs(p648 - 0.648) <= 1e-15, "0.648");
    o.detail << "enumeration gap " << fmt(flow_gap) << ", recursion " << fmt(rec_gap) << ", p'(0) = " << p648;
    return o;
}

Outcome depth_bound() {
    Outcome o;
    for (int n : {2, 4})
        for (double d0 : {0.1, 0.3})
            for (double eps : {1e-2, 1e-3}) {
                std::vector<double> p(n, (1.0 - d0) / n);
                p[0] += d0;
                int measured = -1;
                for (int d = 0; d < 200 && measured < 0; ++d) {
                    std::vector<double> s = p;
                    std::sort(s.rbegin(), s.rend());
                    if (s[0] - s[1] > 1.0 - eps) measured = d;
                    else p = oracle_flow(oracle_iid(p), n);
                }
                const int bound = static_cast<int>(std::ceil(std::log(1.0 / eps) + n * std::log(1.0 / d0)));
                const GapReport r = gap_and_depth(almost_uniform(n, d0), eps);
                o.require(measured >= 0 && measured <= bound, "bound");
                o.require(r.depth_reached == measured && r.bound == bound, "library agrees with oracle");
                o.detail << "(" << n << "," << d0 << "," << eps << "):" << measured << "/" << bound << " ";
            }
    return o;
}

Outcome gerrymander() {
    Outcome o;
    const int trials = 100000;
    const auto model = make_gerrymander_model(4, 0, 0.9);
    const TripleStats st = sample_triples(*model, trials, 4242);
    double other = 0;
    for (int g = 1; g < 4; ++g) other = std::max(other, st.p0[g]);
    const double se = std::sqrt(st.p0[0] * (1 - st.p0[0]) / trials) + std::sqrt(other * (1 - other) / trials);
    const double exact = 9.0 / 28.0;
    o.require(st.p0[0] - other > 5 * se, "argmax p0 = g* at 5 sigma");
    o.require(std::abs(st.p0[0] - exact) < 5 * std::sqrt(exact * (1 - exact) / trials), "p0(g*) matches 9/28");
    o.require(st.count1[0] == 0, "p1(g*) = 0");
    o.detail << "p0(g*) = " << st.p0[0] << " vs max other " << other << " (5 sigma = " << fmt(5 * se)
             << "), count1(g*) = " << st.count1[0] << " of " << trials;
    return o;
}

Outcome cluster_sweep() {
    Outcome o;
    const SptModel m(FactorSet::zn2(2, 1));
    const cmat C = conv_gate(m).C;
    double worst_res = 0;
    bool d1_beats_d0 = true, m_monotone = true, d2_defined = true;
    for (int k = 0; k <= 8; ++k) {
        const double l1 = 0.25 * k;
        const ClusterGroundState gs = cluster_ground_state(m, l1, 0.0, 9);
        worst_res = std::max(worst_res, gs.residual);
        const auto rep = recognize(gs.state, m, C, 2);
        const double s0 = rep.depths[0].mso.real(), s1 = rep.depths[1].mso.real(), s2 = rep.depths[2].mso.real();
        if (std::isnan(s2)) d2_defined = false;
        const bool fixed_point = std::abs(s0 - 1) < 1e-10 && std::abs(s1 - 1) < 1e-10;
        if (l1 < 0.75 && !(s1 > s0 || fixed_point)) d1_beats_d0 = false;
        if (rep.decision == Decision::InPhase && rep.depths[1].m_delta > rep.depths[0].m_delta) m_monotone = false;
        o.detail << "l1=" << l1 << ":" << fmt(s0) << "/" << fmt(s1) << "/M" << rep.depths[0].m_delta << ","
                 << rep.depths[1].m_delta << " ";
    }
    o.require(worst_res < 1e-8, "ED residual");
    o.require(d2_defined, "d=2 MSO undefined at L_G=9 (one renormalised leg)");
    o.detail << "| residual " << fmt(worst_res) << ", d=1 surrogate: MSO(1)>MSO(0) " << (d1_beats_d0 ? "yes" : "no")
             << ", M non-increasing " << (m_monotone ? "yes" : "no");
    return o;
}

Outcome ancilla_purity_checks() {
    Outcome o;
    {
        const SptModel m(FactorSet::zn2(2, 1));
        const cmat C = conv_gate(m).C;
        DenseState ref = reference_dense(m.fs(), 9);
        const LegLayout lay = run_circuit(ref, C, 9, 2);
        DenseState uni(4, 9);
        run_circuit(uni, C, 9, 2);
        for (int d = 1; d <= 2; ++d) {
            o.require(std::abs(ancilla_purity(ref, lay, d) - 1) < 1e-10, "Z2^2 reference");
            o.require(std::abs(ancilla_purity(uni, lay, d)) < 1e-2, "Z2^2 uniform");
        }
    }
    const SptModel m(FactorSet::zn2(3, 1));
    const cmat C = conv_gate(m).C;
    const LegLayout lay = make_layout(9, 2);
    auto purities = [&](MpsChain s) {
        apply_layer(s, C, lay, 1);
        return std::array<double, 2>{ancilla_purity(s, lay, 1), layer_purity_from_triples(s, C, lay, 2)};
    };
    const auto ref = purities(reference_chain(m.fs(), 9));
    const auto uni = purities(MpsChain::product(9, std::vector<int>(9, 0)));
    o.require(std::abs(ref[0] - 1) < 1e-10 && std::abs(ref[1] - 1) < 1e-10, "Z3^2 reference");
    o.require(std::abs(uni[0]) < 1e-2 && std::abs(uni[1]) < 1e-2, "Z3^2 uniform");
    double f1 = 0, f2 = 0;
    int up = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        MpsChain s = reference_chain(m.fs(), 9);
        apply_random_symmetric_circuit(s, m.group(), seed);
        const auto f = purities(s);
        f1 += f[0] / 10;
        f2 += f[1] / 10;
        up += f[1] > f[0];
    }
    o.require(f2 > f1, "mean F(2) > mean F(1)");
    o.detail << "reference F=1, uniform |F| < 1e-2; randomized Z3^2 mean F(1) " << fmt(f1) << " -> F(2) " << fmt(f2)
             << " (" << up << "/10 seeds increase)";
    return o;
}

Outcome disentangler() {
    Outcome o;
    double worst = 0;
    for (int N : {2, 3})
        for (int L = 3; L <= 6; ++L) {
            const SptModel m(FactorSet::zn2(N, 1));
            const DenseState out = apply_disentangler(m, reference_dense(m.fs(), L));
            worst = std::max(worst, 1 - std::norm(out.amplitudes()[0]));
        }
    o.require(worst < 1e-10, "fidelity");
    const SptModel m(FactorSet::zn2(3, 1));
    const std::vector<std::pair<cplx, std::vector<int>>> terms = {
        {0.7, {0, 0, 0, 0}}, {cplx(0, 0.5), {0, 4, 4, 0}}, {0.4, {0, 1, 2, 3}}, {-0.3, {0, 0, 8, 8}}};
    std::map<std::vector<int>, double> want;
    double z = 0;
    for (const auto& [c, s] : terms) z += std::norm(c);
    for (const auto& [c, s] : terms) want[s] = std::norm(c) / z;
    const int shots = 10000;
    const DisentanglerSample smp = disentangler_sample(m, prepare_superposition(m.fs(), 4, terms), shots, 31337);
    double tv = 0, sigma = 0;
    for (const auto& [s, p] : want) {
        const auto it = smp.counts.find(s);
        const double f = it == smp.counts.end() ? 0.0 : double(it->second) / shots;
        tv += 0.5 * std::abs(f - p);
        sigma += 0.5 * std::sqrt(p * (1 - p) / shots);
    }
    int stray = 0;
    for (const auto& [s, c] : smp.counts)
        if (!want.count(s)) stray += c;
    o.require(stray == 0, "only prepared strings sampled");
    o.require(tv < 5 * sigma, "TV < 5 sigma");
    o.detail << "max infidelity " << fmt(worst) << " (Z2^2, Z3^2, L=3..6); TV " << fmt(tv) << " vs sigma " << fmt(sigma)
             << " at " << shots << " shots";
    return o;
}

Outcome ssb_checks() {
    Outcome o;
    int mism = 0;
    double worst = 0;
    for (const auto& mod : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
        const FiniteAbelianGroup G(mod);
        const int n = G.order();
        const cmat C = ssb_gate(G).C;
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k) {
                    const int want = (G.sub(g, h) * n + oracle_maj(g, h, k)) * n + G.sub(k, h);
                    const int col = (g * n + h) * n + k;
                    mism += std::abs(std::abs(C(want, col)) - 1.0) > 1e-12;
                }
        DenseState s = paramagnet_state(G, 9);
        const LegLayout lay = make_layout(9, 2);
        worst = std::max(worst, para_uniformity(s, G, lay, 0));
        for (int d = 1; d <= 2; ++d) {
            apply_layer(s, C, lay, d);
            worst = std::max(worst, para_uniformity(s, G, lay, d));
        }
    }
    o.require(mism == 0, "truth table");
    o.require(worst < 1e-10, "paramagnet");
    o.detail << "Z2, Z3, Z4, Z2^2: truth-table mismatches " << mism << ", max |<R_g>| " << fmt(worst);
    return o;
}

Outcome non_mnc() {
    Outcome o;
    const CentralExtension ext(2, 3);
    o.require(ext.group().order() == 36, "Z6^2");
    const int viol = ext.extension_violations();
    const double eig = ext.eigenvalue_multiset_defect();
    const double lin = ext.linearity_defect(), com = ext.commutation_defect(), gram = ext.gram_defect();
    o.require(viol == 0, "extension identities");
    o.require(std::max({eig, lin, com, gram}) < 1e-10, "representation identities");
    double sym3 = 0, mso9 = 0;
    int pure3 = 0;
    const auto& G = ext.group();
    for (int h = 1; h < G.order(); ++h) {
        MpsChain c3 = general_reference_chain(ext, 3);
        c3.apply_site(ext.X(h), 0);
        c3.apply_site(ext.X(G.neg(h)), 1);
        const NonMncReport r3 = recognize_non_mnc(ext, c3, 1);
        sym3 = std::max(sym3, r3.outcome.symmetry_defect);
        pure3 += std::abs(r3.recognition.depths[1].purity - 1) < 1e-10;

        MpsChain c9 = general_reference_chain(ext, 9);
        c9.apply_site(ext.X(h), 3);
        c9.apply_site(ext.X(G.neg(h)), 4);
        RecognitionOptions opt;
        opt.seed = static_cast<std::uint64_t>(h);
        const NonMncReport r9 = recognize_non_mnc(ext, c9, 1, opt);
        mso9 = std::max(mso9, std::abs(r9.recognition.depths[1].mso - 1.0));
    }
    o.require(sym3 < 1e-10, "L=3 symmetry restored");
    o.require(mso9 < 1e-10, "L=9 MSO");
    o.detail << "36 elements: violations " << viol << ", multiset " << fmt(eig) << ", coboundary " << fmt(std::max(lin, com))
             << ", Gram " << fmt(gram) << "; 35 error pairs: L=3 symmetry defect " << fmt(sym3) << " (F(1)=1 for " << pure3
             << "/35, the pair shares the only triple), L=9 |MSO(1)-1| "
             << fmt(mso9);
    return o;
}

std::string run_cli_selftest() {
    std::string out;
    FILE* p = popen(SPT_CLI_PATH " selftest --seed 7", "r");
    if (!p) return out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    pclose(p);
    return out;
}

Outcome determinism() {
    Outcome o;
    const std::string a = run_cli_selftest(), b = run_cli_selftest();
    o.require(!a.empty(), "selftest produced output");
    o.require(a == b, "byte-identical reruns");
    o.require(a.find("all checks passed") != std::string::npos, "selftest checks pass");
    o.detail << a.size() << " bytes, fingerprint " << std::hex << std::hash<std::string>{}(a) << std::dec;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        const char* name;
        double budget;  // seconds
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {"algebra suite", 5, algebra},
        {"perfect-MPS suite", 5, perfect_mps},
        {"selection rule", 30, selection_rule},
        {"gate oracle", 120, gate_oracle},
        {"circuit-level error correction", 600, circuit_ec},
        {"no false positives", 600, no_false_positives},
        {"majority-flow oracle", 60, majority_flow},
        {"convergence-depth bound", 60, depth_bound},
        {"gerrymander reproduction", 120, gerrymander},
        {"cluster-model sweep", 1800, cluster_sweep},
        {"ancilla purity", 600, ancilla_purity_checks},
        {"disentangler", 300, disentangler},
        {"symmetry breaking", 120, ssb_checks},
        {"non-MNC protocol", 600, non_mnc},
        {"determinism", 600, determinism},
    };
    std::set<int> pick;
    for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
    int failed = 0;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
        if (!pick.empty() && !pick.count(i + 1)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = all[i].run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail << "exception: " << ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > all[i].budget) o.require(false, "runtime over " + fmt(all[i].budget) + " s");
        failed += !o.pass;
        std::printf("%s  %2d  %-32s %8.2f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1, all[i].name, secs, o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
