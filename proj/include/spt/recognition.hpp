// State preparation, indicator measurements and the phase decision.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "spt/dense_state.hpp"
#include "spt/mps_chain.hpp"
#include "spt/projective.hpp"
#include "spt/reference.hpp"
#include "spt/rg_circuit.hpp"

namespace spt {

// ---- preparation -------------------------------------------------------------------------

DenseState reference_dense(const FactorSet& fs, int L);
MpsChain reference_chain(const FactorSet& fs, int L);

// R_{g_i} on every site i (errors[i] is a group index; 0 means no error).
template <class State>
void apply_errors(State& state, const FiniteAbelianGroup& G, const std::vector<int>& errors) {
    if (static_cast<int>(errors.size()) != state.num_sites()) throw std::invalid_argument("error string length mismatch");
    for (int i = 0; i < state.num_sites(); ++i)
        if (errors[i] != 0) state.apply_local(regular_rep(G, errors[i]), {i});
}

DenseState prepare_with_errors(const FactorSet& fs, int L, const std::vector<int>& errors);
MpsChain prepare_chain_with_errors(const FactorSet& fs, int L, const std::vector<int>& errors);

// sum_k c_k R_{g_k} |Psi>, normalised; throws on an all-zero amplitude map.
DenseState prepare_superposition(const FactorSet& fs, int L,
                                 const std::vector<std::pair<cplx, std::vector<int>>>& terms);

// Onsite diag(e^{i phi}, ..., e^{i phi}, e^{-(N-1) i phi}) on each Z_N factor.
cmat symmetric_phase_gate(const FiniteAbelianGroup& G, const std::vector<double>& phis);

// Independent uniform angle per Z_N factor per site; returns the angles used.
template <class State>
std::vector<double> apply_random_symmetric_circuit(State& state, const FiniteAbelianGroup& G, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 2.0 * std::acos(-1.0));
    std::vector<double> all;
    for (int i = 0; i < state.num_sites(); ++i) {
        std::vector<double> phis(G.rank());
        for (auto& p : phis) p = U(rng);
        all.insert(all.end(), phis.begin(), phis.end());
        state.apply_local(symmetric_phase_gate(G, phis), {i});
    }
    return all;
}

// Haar-random unitary on each total-charge block of two sites: commutes with R_g x R_g.
cmat random_symmetric_two_site(const FiniteAbelianGroup& G, std::mt19937_64& rng);

// Brickwork of symmetric two-site gates on |0...0>: a short-range entangled trivial-phase state.
template <class State>
void apply_symmetric_brickwork(State& state, const FiniteAbelianGroup& G, int layers, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int L = state.num_sites();
    for (int layer = 0; layer < layers; ++layer)
        for (int i = layer % 2; i + 1 < L; i += 2) state.apply_local(random_symmetric_two_site(G, rng), {i, i + 1});
}

// ---- indicators --------------------------------------------------------------------------

// Average over depth-d ancillas of (<Pi_0> - 1/|G|) / (1 - 1/|G|).
template <class State>
double ancilla_purity(const State& state, const LegLayout& lay, int d) {
    if (d < 1) throw std::domain_error("ancilla purity needs d >= 1");
    const auto sites = lay.ancillas(d);
    if (sites.empty()) throw std::domain_error("no ancillas at this depth");
    const int n = state.local_dim();
    const cmat P0 = projector(n, 0);
    double acc = 0;
    for (int s : sites) {
        const double p0 = state.product_expectation({{s, P0}}).real();
        acc += (p0 - 1.0 / n) / (1.0 - 1.0 / n);
    }
    return acc / static_cast<double>(sites.size());
}

// F^(d) for a chain holding layers 1..d-1: each layer-d gate is applied to the reduced
// density matrix of its triple instead of the full state.
double layer_purity_from_triples(const MpsChain& state, const cmat& gate, const LegLayout& lay, int d);

// Smallest M with p - delta sqrt(p(1-p)/M) > 1/n for p = (1 + (n-1) S)/n; -1 means no signal.
int sample_complexity(double S, double delta, int n);

// Order of a group element.
int element_order(const FiniteAbelianGroup& G, int g);

enum class Decision { InPhase, OutOfPhase, Inconclusive };
std::string to_string(Decision d);

struct RecognitionOptions {
    int g_bullet = -1;     // -1: the element (1, 0, ..., 0)
    double delta = 3.0;
    int shots = 0;
    std::uint64_t seed = 1;
    double tau_in = 0.9;
    double tau_out = 1e-6;
};

struct DepthReport {
    int depth = 0;
    cplx mso;
    double purity = std::numeric_limits<double>::quiet_NaN();  // undefined at d = 0
    double p_identity = 0;      // probability of string eigenvalue 1
    int m_delta = -1;
    double shot_estimate = std::numeric_limits<double>::quiet_NaN();
};

struct RecognitionReport {
    std::vector<DepthReport> depths;
    Decision decision = Decision::Inconclusive;
    int g_bullet = 0;
    int span_first = 0;
    int span_last = 0;
};

int default_g_bullet(const FiniteAbelianGroup& G);

// Probability that the string for g (powers of its factors) has eigenvalue 1.
template <class State>
double string_identity_probability(const State& s, const std::vector<LocalOp>& ops, int n) {
    cplx acc = 1.0;  // m = 0
    std::vector<LocalOp> pw = ops;
    for (int m = 1; m < n; ++m) {
        if (m > 1)
            for (std::size_t t = 0; t < ops.size(); ++t) pw[t].second = (pw[t].second * ops[t].second).eval();
        acc += s.product_expectation(pw);
    }
    return acc.real() / n;
}

Decision decide(cplx mso, const RecognitionOptions& opt);

// Layers 1..d_max are applied; the string is evaluated only where two renormalised legs
// remain (d <= max_string_depth(L)) and reported as NaN beyond. The decision uses the
// deepest depth with a defined string.
template <class State>
RecognitionReport recognize(const State& psi, const SptModel& m, const cmat& gate, int d_max,
                            const RecognitionOptions& opt = {}) {
    const int L = psi.num_sites();
    const auto [i, j] = string_span(L);
    const int d_string = max_string_depth(L);
    if (d_max < 0 || d_max > exact_log3(L)) throw std::invalid_argument("d_max exceeds log3(L)");
    RecognitionReport rep;
    rep.g_bullet = opt.g_bullet >= 0 ? opt.g_bullet : default_g_bullet(m.group());
    rep.span_first = i;
    rep.span_last = j;
    const int n = element_order(m.group(), rep.g_bullet);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    LegLayout lay = make_layout(L, d_max);
    State s = psi;
    for (int d = 0; d <= d_max; ++d) {
        if (d > 0) apply_layer(s, gate, lay, d);
        DepthReport r;
        r.depth = d;
        if (d > 0) r.purity = ancilla_purity(s, lay, d);
        if (d <= d_string) {
            const auto ops = mso_string(m, lay, d, rep.g_bullet, i, j);
            r.mso = s.product_expectation(ops);
            r.p_identity = string_identity_probability(s, ops, n);
            r.m_delta = sample_complexity(r.mso.real(), opt.delta, n);
            if (opt.shots > 0) {
                std::seed_seq sq{opt.seed, static_cast<std::uint64_t>(d)};
                std::mt19937_64 rng(sq);
                std::binomial_distribution<int> B(opt.shots, std::clamp(r.p_identity, 0.0, 1.0));
                r.shot_estimate = static_cast<double>(B(rng)) / opt.shots;
            }
        } else {
            r.mso = {nan, nan};
            r.p_identity = nan;
        }
        rep.depths.push_back(r);
    }
    rep.decision = decide(rep.depths[std::min(d_max, d_string)].mso, opt);
    return rep;
}

// ---- disentangler ------------------------------------------------------------------------

// |G|^{-L/2} sum Tr[W^{o_1 i_1} ... W^{o_L i_L}] |o><i| with W^{oi} = conj(A^i) conj(A^o).
DenseState apply_disentangler(const SptModel& m, const DenseState& psi);

// Output site i of the disentangler carries Gamma(g_{i+1} - g_i); invert with g_0 = e.
std::vector<int> domain_walls_to_errors(const FactorSet& fs, const std::vector<int>& walls);
std::vector<int> errors_to_domain_walls(const FactorSet& fs, const std::vector<int>& errors);

struct DisentanglerSample {
    std::map<std::vector<int>, int> counts;  // error string (g_0 = e) -> count
    std::map<std::vector<int>, double> exact;  // exact probabilities of the same strings
    int shots = 0;
    double total_variation = 0;
    double tv_sigma = 0;  // 1/2 sum_s sqrt(p_s (1 - p_s) / shots)
};

DisentanglerSample disentangler_sample(const SptModel& m, const DenseState& psi, int shots, std::uint64_t seed);

}  // namespace spt
