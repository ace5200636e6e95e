#include "spt/cluster.hpp"

#include <cmath>
#include <stdexcept>

namespace spt {

void LocalHamiltonian::add_term(std::vector<int> sites, const cmat& op) {
    const int k = static_cast<int>(sites.size());
    const int dk = ipow(d_, k);
    if (op.rows() != dk || op.cols() != dk) throw std::invalid_argument("term dimension does not match its sites");
    for (int s : sites)
        if (s < 0 || s >= L_) throw std::out_of_range("term site out of range");
    Term t;
    t.sites = std::move(sites);
    t.op = op;
    t.columns.resize(dk);
    for (int c = 0; c < dk; ++c)
        for (int r = 0; r < dk; ++r)
            if (std::abs(op(r, c)) > 1e-15) t.columns[c].push_back({r, op(r, c)});
    terms_.push_back(std::move(t));
}

std::size_t LocalHamiltonian::dim() const {
    std::size_t D = 1;
    for (int i = 0; i < L_; ++i) D *= static_cast<std::size_t>(d_);
    return D;
}

void LocalHamiltonian::apply(const cvec& in, cvec& out) const {
    const std::size_t D = dim();
    out.setZero(static_cast<Eigen::Index>(D));
    std::vector<std::ptrdiff_t> stride(L_);
    {
        std::ptrdiff_t s = 1;
        for (int i = L_ - 1; i >= 0; --i) {
            stride[i] = s;
            s *= d_;
        }
    }
    for (const auto& t : terms_) {
        const int k = static_cast<int>(t.sites.size());
        std::vector<std::ptrdiff_t> st(k);
        for (int a = 0; a < k; ++a) st[a] = stride[t.sites[a]];
        // Offset of local configuration r relative to configuration 0 on the term's sites.
        const int dk = static_cast<int>(t.columns.size());
        std::vector<std::ptrdiff_t> off(dk);
        for (int r = 0; r < dk; ++r) {
            std::ptrdiff_t o = 0;
            int x = r;
            for (int a = k - 1; a >= 0; --a) {
                o += (x % d_) * st[a];
                x /= d_;
            }
            off[r] = o;
        }
        for (std::size_t idx = 0; idx < D; ++idx) {
            const cplx v = in[static_cast<Eigen::Index>(idx)];
            if (v == cplx(0)) continue;
            int c = 0;
            for (int a = 0; a < k; ++a) c = c * d_ + static_cast<int>((static_cast<std::ptrdiff_t>(idx) / st[a]) % d_);
            const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(idx) - off[c];
            for (const auto& e : t.columns[c]) out[base + off[e.row]] += e.value * v;
        }
    }
}

double LocalHamiltonian::max_hermiticity_defect() const {
    double d = 0;
    for (const auto& t : terms_) d = std::max(d, max_abs(t.op - t.op.adjoint()));
    return d;
}

namespace {

int element(const FiniteAbelianGroup& G, int a, int b) { return G.index(std::vector<int>{a, b}); }

void require_square(const SptModel& m) {
    const auto& mod = m.group().moduli();
    if (mod.size() != 2 || mod[0] != mod[1]) throw std::invalid_argument("cluster model needs G = Z_N x Z_N");
}

}  // namespace

LocalHamiltonian cluster_hamiltonian(const SptModel& m, double lambda1, double lambda2, int LG) {
    require_square(m);
    if (LG < 2) throw std::invalid_argument("cluster chain needs at least two sites");
    const auto& G = m.group();
    const int N = G.moduli()[0];
    const int n = m.order();
    cmat cluster = cmat::Zero(n * n, n * n);
    cmat onsite = cmat::Zero(n, n);
    cmat across = cmat::Zero(n * n, n * n);
    for (int a = 0; a < N; ++a) {
        const int ga0 = element(G, a, 0), g0a = element(G, 0, a), gaa = element(G, a, a);
        for (int g : {ga0, g0a}) cluster -= kron(m.SR(g), m.SL(g));
        onsite -= lambda1 * (m.R(ga0) + m.R(g0a));
        onsite -= lambda2 * m.R(gaa);
        across -= lambda2 * kron(m.R(g0a), m.R(ga0));
    }
    cluster = 0.5 * (cluster + cluster.adjoint()).eval();
    const cmat I = cmat::Identity(n, n);
    const cmat bond = cluster + kron(onsite, I) + across;
    LocalHamiltonian H(n, LG);
    for (int i = 0; i < LG; ++i) H.add_term({i, (i + 1) % LG}, bond);
    return H;
}

double cluster_fixed_point_energy(const SptModel& m, int LG) {
    require_square(m);
    return -2.0 * m.group().moduli()[0] * LG;
}

ClusterGroundState cluster_ground_state(const SptModel& m, double lambda1, double lambda2, int LG,
                                        const LanczosOptions& opt) {
    LocalHamiltonian H = cluster_hamiltonian(m, lambda1, lambda2, LG);
    const std::size_t D = H.dim();
    if (D > DenseState::size_cap()) throw resource_error("cluster Hilbert space exceeds the dense size cap");
    MatVec mv = [&](const cvec& in, cvec& out) { H.apply(in, out); };
    LanczosResult r = lanczos_with_gap(D, mv, opt);
    if (!r.converged) throw numerical_error("Lanczos did not reach the residual tolerance");
    ClusterGroundState gs;
    gs.state = DenseState(m.order(), LG);
    gs.state.amplitudes() = r.vector;
    // Fix the global phase so that the largest amplitude is real and positive.
    Eigen::Index imax;
    gs.state.amplitudes().cwiseAbs().maxCoeff(&imax);
    const cplx ph = gs.state.amplitudes()[imax] / std::abs(gs.state.amplitudes()[imax]);
    gs.state.amplitudes() /= ph;
    gs.energy = r.energy;
    gs.first_excited = r.second;
    gs.residual = r.residual;
    gs.degenerate = r.degenerate;
    gs.matvecs = r.matvecs;
    return gs;
}

}  // namespace spt
