#include "spt/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "spt/cluster.hpp"
#include "spt/conv_gate.hpp"
#include "spt/error_flow.hpp"
#include "spt/experiment.hpp"
#include "spt/non_mnc.hpp"
#include "spt/recognition.hpp"
#include "spt/ssb.hpp"

namespace spt {

namespace {

class Transcript {
public:
    void add(double x) { text_ += format_number(x) + ";"; }
    void add(cplx z) {
        add(z.real());
        add(z.imag());
    }
    std::string fingerprint() const { return hex64(fnv1a(text_)); }

private:
    std::string text_;
};

std::vector<FactorSet> algebra_cases() {
    return {FactorSet::zn2(2, 1), FactorSet::zn2(3, 1), FactorSet::zn2(3, 2),
            FactorSet::zn2(4, 1), FactorSet::zn2(4, 2), FactorSet::zn2(4, 3)};
}

SelftestRow algebra(Transcript& t) {
    double worst = 0;
    for (const auto& fs : algebra_cases()) {
        const int n = fs.order();
        const auto& G = fs.group();
        int bad = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    bad += !(fs.omega(a, b) * fs.omega(G.add(a, b), c) == fs.omega(b, c) * fs.omega(a, G.add(b, c)));
        t.add(bad);
        worst = std::max(worst, static_cast<double>(bad));
        if (!fs.is_mnc()) continue;
        const ProjectiveRep rep(fs);
        for (double d : {rep.fusion_defect(), rep.commutator_defect(), rep.trace_defect(), schur_check(fs)}) {
            t.add(d);
            worst = std::max(worst, d);
        }
    }
    return {1, "algebra", worst < 1e-12, "max defect " + format_number(worst), ""};
}

SelftestRow perfect_mps(Transcript& t) {
    double worst = 0;
    for (int N : {2, 3}) {
        const SptModel m(FactorSet::zn2(N, 1));
        const auto& T = m.mps_tensor();
        for (double d : {T.orthogonality_defect(), T.injectivity_defect(), T.pullthrough_defect(),
                         m.shift_identity_defect(), m.shift_product_defect(), m.shift_fusion_defect(),
                         m.shift_commutation_defect(), m.shift_adjoint_defect(), m.shift_irrep_defect()}) {
            t.add(d);
            worst = std::max(worst, d);
        }
    }
    return {2, "perfect MPS", worst < 1e-12, "max defect " + format_number(worst), ""};
}

SelftestRow selection(Transcript& t) {
    const int L = 12;
    double worst = 0;
    for (int w = 1; w < 3; ++w) {
        const FactorSet fs = FactorSet::zn2(3, w);
        const std::vector<SiteTensor> T(L, reference_site_tensor(fs));
        for (int wp = 0; wp < 3; ++wp) {
            for (int g = 1; g < 9; ++g) {
                std::vector<LocalOp> ops = wp == 0 ? trivial_string_operator(fs.group(), g, 2, 8, L)
                                                   : string_operator(SptModel(FactorSet::zn2(3, wp)), g, 2, 8, L);
                const cplx v = string_expectation_tm(T, ops);
                t.add(v);
                worst = std::max(worst, std::abs(std::abs(v) - (w == wp ? 1.0 : 0.0)));
            }
        }
    }
    return {3, "selection rule", worst < 1e-10, "max deviation " + format_number(worst), ""};
}

SelftestRow gate_oracle(Transcript& t) {
    const SptModel m(FactorSet::zn2(2, 1));
    const ConvGate g = conv_gate(m);
    const CorollaryReport cr = majority_corollary(m, g.C);
    const double u = gate_unitarity_defect(g);
    const double s = gate_symmetry_defect(m, g.C);
    for (double d : {cr.defect_g_minus_h, u, s}) t.add(d);
    const double worst = std::max({cr.defect_g_minus_h, u, s});
    return {4, "gate oracle", worst < 1e-10 && cr.triples == 64, std::to_string(cr.triples) + " triples, max defect " + format_number(worst), ""};
}

std::vector<int> one_error_per_triple(int L, int n, std::mt19937_64& rng) {
    std::vector<int> e(L, 0);
    std::uniform_int_distribution<int> pos(0, 3), lab(1, n - 1);
    for (int b = 0; b < L / 3; ++b) {
        const int k = pos(rng);
        if (k < 3) e[3 * b + k] = lab(rng);
    }
    return e;
}

SelftestRow circuit_ec(Transcript& t, std::uint64_t seed) {
    const SptModel m(FactorSet::zn2(2, 1));
    const cmat C = conv_gate(m).C;
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int s = 0; s < 20; ++s) {
        const auto e = one_error_per_triple(9, 4, rng);
        const auto rep = recognize(prepare_with_errors(m.fs(), 9, e), m, C, 1);
        t.add(rep.depths[1].mso);
        worst = std::max(worst, std::abs(rep.depths[1].mso - 1.0));
    }
    return {5, "circuit error correction", worst < 1e-10, "20 strings, max |MSO - 1| " + format_number(worst), ""};
}

SelftestRow false_positives(Transcript& t, std::uint64_t seed) {
    const SptModel m(FactorSet::zn2(2, 1));
    const cmat C = conv_gate(m).C;
    double worst = 0;
    for (int s = 0; s < 3; ++s) {
        DenseState psi(4, 9);
        apply_symmetric_brickwork(psi, m.group(), 2, seed + s);
        const auto rep = recognize(psi, m, C, 1);
        for (const auto& r : rep.depths) {
            t.add(r.mso);
            worst = std::max(worst, std::abs(r.mso));
        }
    }
    return {6, "no false positives", worst < 1e-8, "max |MSO| " + format_number(worst), ""};
}

std::vector<double> enumerate_flow(const Table3& p3, int n) {
    std::vector<double> out(n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) out[maj(a, b, c)] += p3[(a * n + b) * n + c];
    return out;
}

SelftestRow flow_oracle(Transcript& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 3;
        Table3 p3(n * n * n);
        double s = 0;
        for (auto& x : p3) s += (x = U(rng));
        for (auto& x : p3) x /= s;
        const auto a = maj_flow_step(p3, n), b = enumerate_flow(p3, n);
        for (int g = 0; g < n; ++g) {
            t.add(a[g]);
            worst = std::max(worst, std::abs(a[g] - b[g]));
        }
    }
    const double p = maj_flow_step(iid_table3({0.6, 0.4}), 2)[0];
    t.add(p);
    const bool ok = worst < 1e-14 && std::abs(p - 0.648) < 1e-15;
    return {7, "majority flow", ok, "enumeration gap " + format_number(worst) + ", p' = " + format_number(p), ""};
}

SelftestRow depth_bound(Transcript& t) {
    bool ok = true;
    for (int n : {2, 4})
        for (double d0 : {0.1, 0.3})
            for (double eps : {1e-2, 1e-3}) {
                const GapReport r = gap_and_depth(almost_uniform(n, d0), eps);
                t.add(r.depth_reached);
                t.add(r.bound);
                ok = ok && r.depth_reached >= 0 && r.depth_reached <= r.bound;
            }
    return {8, "convergence depth bound", ok, "8 cases", ""};
}

SelftestRow gerrymander(Transcript& t, std::uint64_t seed) {
    const auto model = make_gerrymander_model(4, 0, 0.9);
    const TripleStats st = sample_triples(*model, 20000, seed);
    for (int g = 0; g < 4; ++g) {
        t.add(st.count0[g]);
        t.add(st.count1[g]);
    }
    const int lead = static_cast<int>(std::max_element(st.p0.begin(), st.p0.end()) - st.p0.begin());
    const bool ok = lead == 0 && st.count1[0] == 0;
    return {9, "gerrymander", ok, "p0(g*) = " + format_number(st.p0[0]) + ", count1(g*) = " + std::to_string(st.count1[0]), ""};
}

SelftestRow cluster(Transcript& t, std::uint64_t seed) {
    const SptModel m(FactorSet::zn2(2, 1));
    const cmat C = conv_gate(m).C;
    LanczosOptions lo;
    lo.seed = seed;
    const ClusterGroundState gs0 = cluster_ground_state(m, 0.0, 0.0, 3, lo);
    const ClusterGroundState gs1 = cluster_ground_state(m, 1.5, 0.0, 3, lo);
    const cplx s0 = recognize(gs0.state, m, C, 0).depths[0].mso;
    const cplx s1 = recognize(gs1.state, m, C, 0).depths[0].mso;
    for (double x : {gs0.energy, gs1.energy, gs0.residual < 1e-8 ? 1.0 : 0.0}) t.add(x);
    t.add(s0);
    t.add(s1);
    const bool ok = std::abs(gs0.energy - cluster_fixed_point_energy(m, 3)) < 1e-8 && std::abs(s0 - 1.0) < 1e-8 &&
                    std::abs(s1) < std::abs(s0);
    return {10, "cluster model", ok, "E0 = " + format_number(gs0.energy), ""};
}

SelftestRow purity(Transcript& t) {
    const SptModel m(FactorSet::zn2(2, 1));
    const cmat C = conv_gate(m).C;
    DenseState ref = reference_dense(m.fs(), 9);
    const LegLayout lay = run_circuit(ref, C, 9, 2);
    DenseState uni(4, 9);
    run_circuit(uni, C, 9, 2);
    const double f1 = ancilla_purity(ref, lay, 1), f2 = ancilla_purity(ref, lay, 2);
    const double u1 = ancilla_purity(uni, lay, 1), u2 = ancilla_purity(uni, lay, 2);
    for (double x : {f1, f2, u1, u2}) t.add(x);
    const bool ok = std::abs(f1 - 1) < 1e-10 && std::abs(f2 - 1) < 1e-10 && std::abs(u1) < 1e-2 && std::abs(u2) < 1e-2;
    return {11, "ancilla purity", ok, "F = " + format_number(f1) + ", uniform " + format_number(u1), ""};
}

SelftestRow disentangler(Transcript& t, std::uint64_t seed) {
    const SptModel m(FactorSet::zn2(2, 1));
    const DenseState out = apply_disentangler(m, reference_dense(m.fs(), 4));
    const double fid = std::norm(out.amplitudes()[0]);
    const DenseState psi = prepare_superposition(m.fs(), 4, {{0.8, {0, 0, 0, 0}}, {0.6, {0, 1, 1, 0}}});
    const DisentanglerSample smp = disentangler_sample(m, psi, 2000, seed);
    t.add(fid);
    t.add(smp.total_variation);
    for (const auto& [k, c] : smp.counts) t.add(c);
    const bool ok = std::abs(fid - 1) < 1e-10 && smp.total_variation < 5 * smp.tv_sigma;
    return {12, "disentangler", ok, "TV " + format_number(smp.total_variation), ""};
}

SelftestRow ssb(Transcript& t) {
    int mism = 0;
    for (const auto& mod : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
        const FiniteAbelianGroup G(mod);
        mism += ssb_truth_table_mismatches(G, ssb_gate(G).C);
    }
    const FiniteAbelianGroup G({2});
    DenseState s = paramagnet_state(G, 9);
    const LegLayout lay = make_layout(9, 2);
    double worst = para_uniformity(s, G, lay, 0);
    for (int d = 1; d <= 2; ++d) {
        apply_layer(s, ssb_gate(G).C, lay, d);
        worst = std::max(worst, para_uniformity(s, G, lay, d));
    }
    t.add(mism);
    t.add(worst);
    return {13, "symmetry breaking", mism == 0 && worst < 1e-10, "mismatches " + std::to_string(mism) + ", max |<R>| " + format_number(worst), ""};
}

SelftestRow non_mnc(Transcript& t, std::uint64_t seed) {
    const CentralExtension ext(2, 3);
    const int viol = ext.extension_violations();
    const double eig = ext.eigenvalue_multiset_defect();
    t.add(viol);
    t.add(eig);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> H(1, ext.group().order() - 1), S(0, 7);
    double worst = 0;
    for (int k = 0; k < 2; ++k) {
        const int h = H(rng), i = S(rng);
        MpsChain c = general_reference_chain(ext, 9);
        c.apply_site(ext.X(h), i);
        c.apply_site(ext.X(ext.group().neg(h)), i + 1);
        RecognitionOptions o;
        o.seed = seed + k;
        const NonMncReport rep = recognize_non_mnc(ext, c, 1, o);
        t.add(rep.recognition.depths[1].mso);
        worst = std::max(worst, std::abs(rep.recognition.depths[1].mso - 1.0));
    }
    const bool ok = viol == 0 && eig < 1e-10 && worst < 1e-10;
    return {14, "non-MNC", ok, "violations " + std::to_string(viol) + ", max |MSO - 1| " + format_number(worst), ""};
}

const char* const kNames[] = {"algebra", "perfect MPS", "selection rule", "gate oracle",
                              "circuit error correction", "no false positives", "majority flow",
                              "convergence depth bound", "gerrymander", "cluster model", "ancilla purity",
                              "disentangler", "symmetry breaking", "non-MNC"};

}  // namespace

std::vector<SelftestRow> run_selftest(std::uint64_t seed) {
    std::vector<std::function<SelftestRow(Transcript&)>> checks = {
        [](Transcript& t) { return algebra(t); },
        [](Transcript& t) { return perfect_mps(t); },
        [](Transcript& t) { return selection(t); },
        [](Transcript& t) { return gate_oracle(t); },
        [seed](Transcript& t) { return circuit_ec(t, seed); },
        [seed](Transcript& t) { return false_positives(t, seed); },
        [seed](Transcript& t) { return flow_oracle(t, seed); },
        [](Transcript& t) { return depth_bound(t); },
        [seed](Transcript& t) { return gerrymander(t, seed); },
        [seed](Transcript& t) { return cluster(t, seed); },
        [](Transcript& t) { return purity(t); },
        [seed](Transcript& t) { return disentangler(t, seed); },
        [](Transcript& t) { return ssb(t); },
        [seed](Transcript& t) { return non_mnc(t, seed); },
    };
    std::vector<SelftestRow> rows;
    for (const auto& check : checks) {
        Transcript t;
        SelftestRow r;
        r.id = static_cast<int>(rows.size()) + 1;
        r.name = kNames[r.id - 1];
        try {
            r = check(t);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.fingerprint = t.fingerprint();
        rows.push_back(r);
    }
    return rows;
}

std::string format_selftest(const std::vector<SelftestRow>& rows) {
    std::ostringstream out;
    int failed = 0;
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%2d  %-26s %-4s  ", r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL");
        out << buf << r.fingerprint << "  " << r.detail << "\n";
        failed += !r.pass;
    }
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
    return out.str();
}

}  // namespace spt
