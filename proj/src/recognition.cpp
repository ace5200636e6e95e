#include "spt/recognition.hpp"

#include <algorithm>
#include <stdexcept>

namespace spt {

DenseState reference_dense(const FactorSet& fs, int L) {
    return mps_to_dense(std::vector<SiteTensor>(L, reference_site_tensor(fs)));
}

MpsChain reference_chain(const FactorSet& fs, int L) {
    return MpsChain::from_periodic(std::vector<SiteTensor>(L, reference_site_tensor(fs)));
}

DenseState prepare_with_errors(const FactorSet& fs, int L, const std::vector<int>& errors) {
    DenseState s = reference_dense(fs, L);
    apply_errors(s, fs.group(), errors);
    return s;
}

MpsChain prepare_chain_with_errors(const FactorSet& fs, int L, const std::vector<int>& errors) {
    MpsChain s = reference_chain(fs, L);
    apply_errors(s, fs.group(), errors);
    return s;
}

DenseState prepare_superposition(const FactorSet& fs, int L,
                                 const std::vector<std::pair<cplx, std::vector<int>>>& terms) {
    const DenseState ref = reference_dense(fs, L);
    DenseState out = ref;
    out.amplitudes().setZero();
    for (const auto& [c, errors] : terms) {
        if (c == cplx(0)) continue;
        DenseState s = ref;
        apply_errors(s, fs.group(), errors);
        out.amplitudes() += c * s.amplitudes();
    }
    if (out.norm() < 1e-300) throw std::invalid_argument("error amplitude map is identically zero");
    out.normalize();
    return out;
}

cmat symmetric_phase_gate(const FiniteAbelianGroup& G, const std::vector<double>& phis) {
    if (static_cast<int>(phis.size()) != G.rank()) throw std::invalid_argument("one angle per group factor required");
    std::vector<cmat> f;
    for (int a = 0; a < G.rank(); ++a) {
        const int N = G.moduli()[a];
        cmat d = cmat::Zero(N, N);
        for (int x = 0; x + 1 < N; ++x) d(x, x) = std::polar(1.0, phis[a]);
        d(N - 1, N - 1) = std::polar(1.0, -(N - 1) * phis[a]);
        f.push_back(d);
    }
    return kron_all(f);
}

cmat random_symmetric_two_site(const FiniteAbelianGroup& G, std::mt19937_64& rng) {
    const int n = G.order();
    std::normal_distribution<double> N(0.0, 1.0);
    cmat U = cmat::Zero(n * n, n * n);
    for (int q = 0; q < n; ++q) {
        std::vector<int> idx;
        for (int a = 0; a < n; ++a) idx.push_back(a * n + G.sub(q, a));
        const int k = static_cast<int>(idx.size());
        cmat Z(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) Z(r, c) = {N(rng), N(rng)};
        Eigen::HouseholderQR<cmat> qr(Z);
        cmat Q = qr.householderQ();
        const cmat R = qr.matrixQR();
        for (int c = 0; c < k; ++c) {
            const cplx d = R(c, c);
            if (std::abs(d) > 0) Q.col(c) *= d / std::abs(d);
        }
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) U(idx[r], idx[c]) = Q(r, c);
    }
    return U;
}

double layer_purity_from_triples(const MpsChain& state, const cmat& gate, const LegLayout& lay, int d) {
    if (d < 1) throw std::domain_error("ancilla purity needs d >= 1");
    const auto& legs = lay.renormalised.at(d - 1);
    const int n = state.local_dim();
    const cmat P0 = projector(n, 0);
    const cmat I = cmat::Identity(n, n);
    const cmat left = kron_all({P0, I, I});
    const cmat right = kron_all({I, I, P0});
    double acc = 0;
    int count = 0;
    for (std::size_t t = 0; t + 2 < legs.size(); t += 3) {
        const cmat rho = state.reduced_density({legs[t], legs[t + 1], legs[t + 2]});
        const cmat out = gate * rho * gate.adjoint();
        for (const cmat* P : {&left, &right}) {
            const double p0 = (*P * out).trace().real();
            acc += (p0 - 1.0 / n) / (1.0 - 1.0 / n);
            ++count;
        }
    }
    if (count == 0) throw std::domain_error("no ancillas at this depth");
    return acc / count;
}

int sample_complexity(double S, double delta, int n) {
    if (n < 2) throw std::invalid_argument("g_bullet must have order at least 2");
    if (!(S > 0)) return -1;
    const double p = (1.0 + (n - 1) * std::min(S, 1.0)) / n;
    const double gap = p - 1.0 / n;
    const double m = delta * delta * p * (1.0 - p) / (gap * gap);
    return std::max(1, static_cast<int>(std::ceil(m - 1e-9)));
}

int element_order(const FiniteAbelianGroup& G, int g) {
    int k = 1;
    for (int x = g; x != 0; x = G.add(x, g)) ++k;
    return k;
}

std::string to_string(Decision d) {
    switch (d) {
        case Decision::InPhase: return "in-phase";
        case Decision::OutOfPhase: return "out-of-phase";
        default: return "inconclusive";
    }
}

Decision decide(cplx mso, const RecognitionOptions& opt) {
    if (mso.real() > 1.0 - opt.tau_in) return Decision::InPhase;
    if (std::abs(mso) < opt.tau_out) return Decision::OutOfPhase;
    return Decision::Inconclusive;
}

int default_g_bullet(const FiniteAbelianGroup& G) {
    std::vector<int> r(G.rank(), 0);
    r[0] = 1;
    return G.index(r);
}

DenseState apply_disentangler(const SptModel& m, const DenseState& psi) {
    const int n = m.order();
    const int chi = m.chi();
    const int L = psi.num_sites();
    if (psi.local_dim() != n) throw std::invalid_argument("state and model disagree on the local dimension");
    // W^{oi}_{ab} stored as M[a][b](o, i).
    std::vector<std::vector<cmat>> M(chi, std::vector<cmat>(chi, cmat::Zero(n, n)));
    for (int o = 0; o < n; ++o)
        for (int i = 0; i < n; ++i) {
            const cmat W = m.A(i).conjugate() * m.A(o).conjugate();
            for (int a = 0; a < chi; ++a)
                for (int b = 0; b < chi; ++b) M[a][b](o, i) = W(a, b);
        }
    const std::size_t D = psi.size();
    std::vector<std::size_t> stride(L);
    {
        std::size_t s = 1;
        for (int k = L - 1; k >= 0; --k) {
            stride[k] = s;
            s *= static_cast<std::size_t>(n);
        }
    }
    auto apply_site = [&](const cmat& op, const cvec& in, cvec& out, int k) {
        const std::size_t st = stride[k];
        for (std::size_t idx = 0; idx < D; ++idx) {
            const int x = static_cast<int>((idx / st) % n);
            if (x != 0) continue;
            for (int o = 0; o < n; ++o) {
                cplx acc = 0;
                for (int i = 0; i < n; ++i) acc += op(o, i) * in[static_cast<Eigen::Index>(idx + i * st)];
                out[static_cast<Eigen::Index>(idx + o * st)] += acc;
            }
        }
    };
    cvec result = cvec::Zero(static_cast<Eigen::Index>(D));
    for (int a0 = 0; a0 < chi; ++a0) {
        std::vector<cvec> X(chi, cvec::Zero(static_cast<Eigen::Index>(D)));
        X[a0] = psi.amplitudes();
        for (int k = 0; k < L; ++k) {
            std::vector<cvec> Y(chi, cvec::Zero(static_cast<Eigen::Index>(D)));
            for (int a = 0; a < chi; ++a)
                for (int b = 0; b < chi; ++b) apply_site(M[a][b], X[a], Y[b], k);
            X = std::move(Y);
        }
        result += X[a0];
    }
    result *= std::pow(static_cast<double>(n), -0.5 * L);
    DenseState out(n, L);
    out.amplitudes() = result;
    return out;
}

std::vector<int> domain_walls_to_errors(const FactorSet& fs, const std::vector<int>& walls) {
    const auto& G = fs.group();
    std::vector<int> g(walls.size(), 0);
    for (std::size_t i = 0; i + 1 < walls.size(); ++i) g[i + 1] = G.add(g[i], fs.gamma_inverse(walls[i]));
    return g;
}

std::vector<int> errors_to_domain_walls(const FactorSet& fs, const std::vector<int>& errors) {
    const auto& G = fs.group();
    const std::size_t L = errors.size();
    std::vector<int> w(L);
    for (std::size_t i = 0; i < L; ++i) w[i] = fs.gamma(G.sub(errors[(i + 1) % L], errors[i]));
    return w;
}

DisentanglerSample disentangler_sample(const SptModel& m, const DenseState& psi, int shots, std::uint64_t seed) {
    const DenseState out = apply_disentangler(m, psi);
    const cvec& a = out.amplitudes();
    std::vector<double> cdf(static_cast<std::size_t>(a.size()));
    double acc = 0;
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        acc += std::norm(a[k]);
        cdf[static_cast<std::size_t>(k)] = acc;
    }
    DisentanglerSample res;
    res.shots = shots;
    auto to_errors = [&](std::size_t idx) { return domain_walls_to_errors(m.fs(), out.digits(idx)); };
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        const double p = std::norm(a[k]) / acc;
        if (p > 1e-14) res.exact[to_errors(static_cast<std::size_t>(k))] += p;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, acc);
    for (int s = 0; s < shots; ++s) {
        const double u = U(rng);
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        ++res.counts[to_errors(idx)];
    }
    if (shots > 0) {
        std::map<std::vector<int>, double> keys = res.exact;
        for (const auto& [k, c] : res.counts) keys.emplace(k, 0.0);
        for (const auto& [k, p] : keys) {
            const auto it = res.counts.find(k);
            const double q = it == res.counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
            res.total_variation += 0.5 * std::abs(q - p);
            res.tv_sigma += 0.5 * std::sqrt(p * (1.0 - p) / shots);
        }
    }
    return res;
}

}  // namespace spt
