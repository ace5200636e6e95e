#include "spt/non_mnc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "spt/conv_gate.hpp"

namespace spt {

namespace {

std::vector<int> map_residues(const std::vector<int>& r, int mul, int mod) {
    std::vector<int> out(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) out[a] = (r[a] * mul) % mod;
    return out;
}

// Root-of-unity exponent k of z = exp(2 pi i k / n), with the distance to that root.
std::pair<int, double> root_key(cplx z, int n) {
    const double t = std::arg(z) * n / (2.0 * std::numbers::pi);
    const int k = static_cast<int>(std::lround(t));
    const cplx root = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    return {((k % n) + n) % n, std::abs(z - root)};
}

}  // namespace

CentralExtension::CentralExtension(int p, int q)
    : p_(p), q_(q), fs_(FactorSet::zn2(p * q, q)), Q_(FactorSet::zn2(p, 1)), C_({q, q}) {
    if (p < 2 || q < 2) throw std::invalid_argument("p and q must be at least 2");
    const ProjectiveRep rep(Q_);
    for (int g = 0; g < Q_.order(); ++g) V_.push_back(rep.V(g));
}

int CentralExtension::pi(int g) const {
    const auto r = group().residues(g);
    return quotient().index(map_residues(r, 1, p_));
}

int CentralExtension::pi_inverse(int gbar) const { return group().index(quotient().residues(gbar)); }

int CentralExtension::iota(int c) const { return group().index(map_residues(C_.residues(c), p_, p_ * q_)); }

int CentralExtension::pi_star(int gbar) const {
    return group().index(map_residues(quotient().residues(gbar), q_, p_ * q_));
}

int CentralExtension::iota_star(int g) const { return C_.index(map_residues(group().residues(g), 1, q_)); }

int CentralExtension::tau(int c) const { return group().index(C_.residues(c)); }

std::pair<int, int> CentralExtension::split(int g) const {
    const auto r = group().residues(g);
    std::vector<int> ub(r.size()), ut(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
        ub[a] = r[a] % p_;
        ut[a] = (r[a] - ub[a]) / p_;
    }
    return {quotient().index(ub), C_.index(ut)};
}

std::pair<int, int> CentralExtension::dual_split(int g) const {
    const auto r = group().residues(g);
    std::vector<int> bar(r.size()), tilde(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
        tilde[a] = r[a] % q_;
        bar[a] = (r[a] - tilde[a]) / q_;
    }
    return {quotient().index(bar), C_.index(tilde)};
}

int CentralExtension::delta_tilde(int a, int b) const {
    const auto ra = quotient().residues(a), rb = quotient().residues(b);
    std::vector<int> c(ra.size());
    for (std::size_t t = 0; t < ra.size(); ++t) {
        const int s = ra[t] + rb[t];
        c[t] = ((s % (p_ * q_)) - (s % p_)) / p_ % q_;
    }
    return C_.index(c);
}

int CentralExtension::delta_bar(int a, int b) const {
    const auto ra = C_.residues(a), rb = C_.residues(b);
    std::vector<int> c(ra.size());
    for (std::size_t t = 0; t < ra.size(); ++t) {
        const int s = ra[t] + rb[t];
        c[t] = ((s % (p_ * q_)) - (s % q_)) / q_ % p_;
    }
    return quotient().index(c);
}

cmat CentralExtension::R_tilde(int g) const {
    const int n = C_.order();
    cmat R = cmat::Zero(n, n);
    for (int c = 0; c < n; ++c) R(c, c) = group().character(tau(c), g).value();
    return R;
}

cmat CentralExtension::pair_rep(int g) const {
    const cmat& v = V_[pi(g)];
    return kron_all({v.conjugate(), R_tilde(g), v});
}

cmat CentralExtension::S_L(int gbar) const {
    return kron_all({V_[gbar].conjugate(), cmat::Identity(C_.order(), C_.order()), cmat::Identity(p_, p_)});
}

cmat CentralExtension::S_R(int gbar) const {
    return kron_all({cmat::Identity(p_, p_), cmat::Identity(C_.order(), C_.order()), V_[gbar]});
}

cmat CentralExtension::W(int htilde) const {
    const int n = C_.order();
    cmat out = cmat::Zero(site_dim(), site_dim());
    for (int l = 0; l < n; ++l) {
        cmat shift = cmat::Zero(n, n);
        shift(C_.add(l, htilde), l) = 1.0;
        out += kron_all({cmat::Identity(p_, p_), shift, V_[Q_.gamma_inverse(delta_bar(l, htilde))]});
    }
    return out;
}

cmat CentralExtension::X(int h) const {
    const auto [hbar, ht] = dual_split(h);
    const int n = C_.order();
    const cmat& front = V_[Q_.gamma_inverse(hbar)];
    cmat out = cmat::Zero(site_dim(), site_dim());
    for (int l = 0; l < n; ++l) {
        cmat shift = cmat::Zero(n, n);
        shift(C_.add(l, ht), l) = 1.0;
        out += kron_all({cmat::Identity(p_, p_), shift, front * V_[Q_.gamma_inverse(delta_bar(l, ht))]});
    }
    return out;
}

SiteTensor CentralExtension::reference_tensor(int anchor) const {
    SiteTensor A(site_dim(), cmat::Zero(p_, p_));
    for (int l = 0; l < p_; ++l)
        for (int r = 0; r < p_; ++r) A[label(l, anchor, r)](l, r) = 1.0;
    return A;
}

SiteTensor CentralExtension::trivial_tensor() const {
    SiteTensor A(site_dim(), cmat::Zero(1, 1));
    for (int l = 0; l < p_; ++l) A[label(l, 0, l)](0, 0) = 1.0 / std::sqrt(static_cast<double>(p_));
    return A;
}

std::vector<LocalOp> CentralExtension::string_operator(int gbar, int i, int j, int L) const {
    if (!(0 <= i && i < j && j < L)) throw std::invalid_argument("string needs 0 <= i < j < L");
    std::vector<LocalOp> ops;
    ops.emplace_back(i, S_R(gbar));
    const cmat mid = pair_rep(pi_inverse(gbar));
    for (int k = i + 1; k < j; ++k) ops.emplace_back(k, mid);
    ops.emplace_back(j, S_L(gbar));
    return ops;
}

cplx CentralExtension::string_phase(int gbar, int anchor, int i, int j) const {
    return group().character(tau(anchor), pi_inverse(gbar)).pow(j - i - 1).value();
}

cmat CentralExtension::mnc_rep(int gbar) const { return kron(V_[gbar].conjugate(), V_[gbar]); }

cmat CentralExtension::mnc_S_R(int gbar) const { return kron(cmat::Identity(p_, p_), V_[gbar]); }

int CentralExtension::extension_violations() const {
    const auto& G = group();
    const auto& Qg = quotient();
    int bad = 0;
    for (int a = 0; a < Qg.order(); ++a)
        for (int b = 0; b < Qg.order(); ++b)
            for (int c = 0; c < Qg.order(); ++c) {
                const int lhs = C_.add(delta_tilde(a, b), delta_tilde(Qg.add(a, b), c));
                const int rhs = C_.add(delta_tilde(a, Qg.add(b, c)), delta_tilde(b, c));
                bad += lhs != rhs;
            }
    for (int a = 0; a < C_.order(); ++a)
        for (int b = 0; b < C_.order(); ++b)
            for (int c = 0; c < C_.order(); ++c) {
                const int lhs = Qg.add(delta_bar(a, b), delta_bar(C_.add(a, b), c));
                const int rhs = Qg.add(delta_bar(a, C_.add(b, c)), delta_bar(b, c));
                bad += lhs != rhs;
            }
    for (int x = 0; x < Qg.order(); ++x) {
        bad += pi(pi_inverse(x)) != x;
        bad += iota_star(pi_star(x)) != 0;
    }
    for (int c = 0; c < C_.order(); ++c) {
        bad += iota_star(tau(c)) != c;
        bad += pi(iota(c)) != 0;
    }
    for (int g = 0; g < G.order(); ++g) {
        const auto [ub, ut] = split(g);
        const auto [bar, tl] = dual_split(g);
        bad += G.add(pi_inverse(ub), iota(ut)) != g;
        bad += G.add(pi_star(bar), tau(tl)) != g;
        for (int h = 0; h < G.order(); ++h) {
            const auto [ub2, ut2] = split(h);
            const auto [bar2, tl2] = dual_split(h);
            const auto [ubs, uts] = split(G.add(g, h));
            const auto [bars, tls] = dual_split(G.add(g, h));
            bad += ubs != Qg.add(ub, ub2);
            bad += uts != C_.add(C_.add(ut, ut2), delta_tilde(ub, ub2));
            bad += tls != C_.add(tl, tl2);
            bad += bars != Qg.add(Qg.add(bar, bar2), delta_bar(tl, tl2));
        }
    }
    return bad;
}

double CentralExtension::eigenvalue_multiset_defect() const {
    const auto& G = group();
    const int n = p_ * q_;
    double worst = 0;
    for (int g = 0; g < G.order(); ++g) {
        Eigen::ComplexEigenSolver<cmat> es(pair_rep(g));
        std::vector<int> got, want;
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            const auto [key, dist] = root_key(es.eigenvalues()[k], n);
            got.push_back(key);
            worst = std::max(worst, dist);
        }
        for (int h = 0; h < G.order(); ++h) want.push_back(root_key(G.character(h, g).value(), n).first);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) return std::numeric_limits<double>::infinity();
    }
    return worst;
}

double CentralExtension::linearity_defect() const {
    const auto& G = group();
    double d = 0;
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) d = std::max(d, max_abs(pair_rep(g) * pair_rep(h) - pair_rep(G.add(g, h))));
    return d;
}

double CentralExtension::commutation_defect() const {
    const auto& G = group();
    double d = 0;
    for (int h = 0; h < G.order(); ++h) {
        const cmat x = X(h);
        for (int g = 0; g < G.order(); ++g) {
            const cmat r = pair_rep(g);
            d = std::max(d, max_abs(r * x - G.character(g, h).value() * x * r));
        }
    }
    return d;
}

double CentralExtension::gram_defect() const {
    const auto& G = group();
    const int n = G.order();
    const int D = site_dim();
    cmat M(static_cast<Eigen::Index>(D) * D, static_cast<Eigen::Index>(n) * n);
    for (int h = 0; h < n; ++h) {
        const cmat x = X(h);
        for (int g = 0; g < n; ++g) {
            const cmat O = pair_rep(g) * x;
            M.col(g * n + h) = Eigen::Map<const cvec>(O.data(), O.size());
        }
    }
    const cmat gram = M.adjoint() * M;
    return max_abs(gram - static_cast<double>(n) * cmat::Identity(gram.rows(), gram.cols()));
}

std::vector<int> remainders(const CentralExtension& ext, const std::vector<int>& flavours) {
    std::vector<int> rem;
    int sum = 0;
    for (int f : flavours) {
        rem.push_back(ext.delta_bar(sum, f));
        sum = ext.center().add(sum, f);
    }
    return rem;
}

cmat pair_to_canonical(const SptModel& quotient) {
    const int n = quotient.order();
    const int chi = quotient.chi();
    cmat U = cmat::Zero(n, chi * chi);
    const double s = std::pow(static_cast<double>(n), -0.25);
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < chi; ++a)
            for (int b = 0; b < chi; ++b) U(k, a * chi + b) = s * quotient.A(k)(a, b);
    return U;
}

MpsChain general_reference_chain(const CentralExtension& ext, int L, int anchor) {
    return MpsChain::from_periodic(std::vector<SiteTensor>(L, ext.reference_tensor(anchor)));
}

MpsChain trivial_pair_chain(const CentralExtension& ext, int L) {
    return MpsChain::from_periodic(std::vector<SiteTensor>(L, ext.trivial_tensor()));
}

RemainderOutcome remove_remainder(const CentralExtension& ext, const SptModel& quotient, MpsChain state,
                                  std::uint64_t seed, RemainderSign sign) {
    if (state.local_dim() != ext.site_dim()) throw std::invalid_argument("state does not live on the extension site space");
    if (!(quotient.fs().group() == ext.quotient())) throw std::invalid_argument("quotient model does not match");
    const int L = state.num_sites();
    const int nf = ext.center().order();
    std::vector<int> cls(ext.site_dim());
    for (int s = 0; s < ext.site_dim(); ++s) cls[s] = ext.flavour_of(s);
    RemainderOutcome out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < L; ++i) out.flavours.push_back(state.measure(i, cls, nf, rng));
    std::vector<std::vector<int>> keep(L);
    for (int i = 0; i < L; ++i)
        for (int l = 0; l < ext.p(); ++l)
            for (int r = 0; r < ext.p(); ++r) keep[i].push_back(ext.label(l, out.flavours[i], r));
    MpsChain mnc = state.restrict_labels(keep);
    mnc.normalize();
    out.rem = remainders(ext, out.flavours);
    const auto& Q = ext.quotient_factor_set();
    for (int i = 0; i < L; ++i) {
        if (out.rem[i] == 0) continue;
        int x = Q.gamma_inverse(out.rem[i]);
        if (sign == RemainderSign::Minus) x = Q.group().neg(x);
        mnc.apply_site(ext.mnc_S_R(x), i);
    }
    for (int g = 0; g < Q.order(); ++g) {
        std::vector<LocalOp> ops;
        for (int i = 0; i < L; ++i) ops.emplace_back(i, ext.mnc_rep(g));
        out.symmetry_defect = std::max(out.symmetry_defect, std::abs(mnc.product_expectation(ops) - 1.0));
    }
    const cmat U = pair_to_canonical(quotient);
    for (int i = 0; i < L; ++i) mnc.apply_site(U, i);
    out.mnc = std::move(mnc);
    return out;
}

NonMncReport recognize_non_mnc(const CentralExtension& ext, const MpsChain& state, int d_max,
                               const RecognitionOptions& opt, RemainderSign sign) {
    const SptModel quotient(ext.quotient_factor_set());
    const cmat gate = conv_gate(quotient).C;
    NonMncReport rep;
    rep.outcome = remove_remainder(ext, quotient, state, opt.seed, sign);
    const auto& mnc = rep.outcome.mnc;
    const double amplitudes = std::pow(static_cast<double>(mnc.local_dim()), mnc.num_sites());
    if (amplitudes <= static_cast<double>(DenseState::size_cap()))
        rep.recognition = recognize(mnc.to_dense(), quotient, gate, d_max, opt);
    else
        rep.recognition = recognize(mnc, quotient, gate, d_max, opt);
    return rep;
}

}  // namespace spt
