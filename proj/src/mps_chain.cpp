#include "spt/mps_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

namespace spt {

MpsChain MpsChain::from_periodic(const std::vector<SiteTensor>& tensors) {
    const int L = static_cast<int>(tensors.size());
    if (L == 0) throw std::invalid_argument("empty tensor list");
    MpsChain m;
    m.d_ = static_cast<int>(tensors[0].size());
    const int D0 = static_cast<int>(tensors[0][0].rows());
    if (tensors[L - 1][0].cols() != D0) throw std::invalid_argument("periodic bond mismatch");
    m.A_.resize(L);
    if (L == 1) {
        for (const auto& a : tensors[0]) m.A_[0].push_back(cmat::Constant(1, 1, a.trace()));
        return m;
    }
    for (int i = 0; i < L; ++i) {
        const auto& T = tensors[i];
        if (static_cast<int>(T.size()) != m.d_) throw std::invalid_argument("physical dimension mismatch");
        const int Dl = static_cast<int>(T[0].rows());
        const int Dr = static_cast<int>(T[0].cols());
        for (int s = 0; s < m.d_; ++s) {
            cmat M;
            if (i == 0) {
                M = cmat::Zero(1, D0 * Dr);
                for (int a = 0; a < D0; ++a)
                    for (int r = 0; r < Dr; ++r) M(0, a * Dr + r) = T[s](a, r);
            } else if (i == L - 1) {
                M = cmat::Zero(D0 * Dl, 1);
                for (int a = 0; a < D0; ++a)
                    for (int l = 0; l < Dl; ++l) M(a * Dl + l, 0) = T[s](l, a);
            } else {
                M = cmat::Zero(D0 * Dl, D0 * Dr);
                for (int a = 0; a < D0; ++a) M.block(a * Dl, a * Dr, Dl, Dr) = T[s];
            }
            m.A_[i].push_back(std::move(M));
        }
    }
    return m;
}

MpsChain MpsChain::product(int local_dim, const std::vector<int>& labels) {
    MpsChain m;
    m.d_ = local_dim;
    for (int lab : labels) {
        SiteTensor t(local_dim, cmat::Zero(1, 1));
        t[lab](0, 0) = 1.0;
        m.A_.push_back(std::move(t));
    }
    return m;
}

int MpsChain::max_bond() const {
    int b = 1;
    for (const auto& t : A_) b = std::max<int>(b, static_cast<int>(std::max(t[0].rows(), t[0].cols())));
    return b;
}

void MpsChain::apply_site(const cmat& op, int site) {
    if (op.rows() != d_ || op.cols() != d_) throw std::invalid_argument("operator dimension mismatch");
    SiteTensor out(d_, cmat::Zero(A_[site][0].rows(), A_[site][0].cols()));
    for (int s = 0; s < d_; ++s)
        for (int t = 0; t < d_; ++t)
            if (op(s, t) != cplx(0)) out[s] += op(s, t) * A_[site][t];
    A_[site] = std::move(out);
}

void MpsChain::apply_contiguous(const cmat& op, int first, int k) {
    if (k == 1) {
        apply_site(op, first);
        return;
    }
    const int D = ipow(d_, k);
    std::vector<cmat> theta(A_[first].begin(), A_[first].end());
    for (int t = 1; t < k; ++t) {
        std::vector<cmat> next;
        next.reserve(theta.size() * d_);
        for (const auto& th : theta)
            for (int s = 0; s < d_; ++s) next.push_back(th * A_[first + t][s]);
        theta = std::move(next);
    }
    const Eigen::Index Dl = theta[0].rows();
    const Eigen::Index Dr = theta[0].cols();
    std::vector<cmat> th2(D, cmat::Zero(Dl, Dr));
    for (int c = 0; c < D; ++c)
        for (int cp = 0; cp < D; ++cp)
            if (op(c, cp) != cplx(0)) th2[c] += op(c, cp) * theta[cp];
    theta = std::move(th2);

    Eigen::Index left = Dl;
    for (int t = 0; t < k - 1; ++t) {
        const int rest = ipow(d_, k - t - 1);
        cmat M(d_ * left, rest * Dr);
        for (int s = 0; s < d_; ++s)
            for (int r = 0; r < rest; ++r) M.block(s * left, r * Dr, left, Dr) = theta[s * rest + r];
        Eigen::BDCSVD<cmat> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        Eigen::Index keep = 0;
        const double top = sv.size() ? sv(0) : 0.0;
        while (keep < sv.size() && sv(keep) > cutoff * top) ++keep;
        keep = std::max<Eigen::Index>(keep, 1);
        cmat U = svd.matrixU().leftCols(keep);
        cmat SV = sv.head(keep).cast<cplx>().asDiagonal() * svd.matrixV().leftCols(keep).adjoint();
        for (int s = 0; s < d_; ++s) A_[first + t][s] = U.block(s * left, 0, left, keep);
        std::vector<cmat> next(rest);
        for (int r = 0; r < rest; ++r) next[r] = SV.block(0, r * Dr, keep, Dr);
        theta = std::move(next);
        left = keep;
    }
    for (int s = 0; s < d_; ++s) A_[first + k - 1][s] = theta[s];
}

void MpsChain::apply_local(const cmat& op, const std::vector<int>& sites) {
    const int k = static_cast<int>(sites.size());
    for (int s : sites)
        if (s < 0 || s >= num_sites()) throw std::invalid_argument("site out of range");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return sites[a] < sites[b]; });
    std::vector<int> pos(k);
    for (int t = 0; t < k; ++t) pos[t] = sites[perm[t]];
    for (int t = 1; t < k; ++t)
        if (pos[t] == pos[t - 1]) throw std::invalid_argument("sites must be distinct");
    const cmat sorted_op = permute_factors(op, d_, perm);

    cmat swap = cmat::Zero(d_ * d_, d_ * d_);
    for (int a = 0; a < d_; ++a)
        for (int b = 0; b < d_; ++b) swap(b * d_ + a, a * d_ + b) = 1.0;
    std::vector<int> done;
    for (int t = 1; t < k; ++t)
        while (pos[t] > pos[0] + t) {
            apply_contiguous(swap, pos[t] - 1, 2);
            done.push_back(pos[t] - 1);
            --pos[t];
        }
    apply_contiguous(sorted_op, pos[0], k);
    for (auto it = done.rbegin(); it != done.rend(); ++it) apply_contiguous(swap, *it, 2);
}

cplx MpsChain::product_expectation(const std::vector<LocalOp>& ops) const {
    const int L = num_sites();
    std::vector<const cmat*> at(L, nullptr);
    for (const auto& [s, op] : ops) {
        if (s < 0 || s >= L) throw std::invalid_argument("operator site out of range");
        if (at[s]) throw std::invalid_argument("at most one operator per site");
        at[s] = &op;
    }
    cmat num = cmat::Identity(1, 1);
    cmat den = num;
    for (int i = 0; i < L; ++i) {
        const auto& T = A_[i];
        cmat nn = cmat::Zero(T[0].cols(), T[0].cols());
        cmat dd = nn;
        for (int s = 0; s < d_; ++s) dd += T[s].adjoint() * den * T[s];
        if (!at[i]) {
            for (int s = 0; s < d_; ++s) nn += T[s].adjoint() * num * T[s];
        } else {
            const cmat& O = *at[i];
            if (O.rows() != d_) throw std::invalid_argument("operator dimension mismatch");
            for (int s = 0; s < d_; ++s) {
                cmat left = T[s].adjoint() * num;
                for (int t = 0; t < d_; ++t)
                    if (O(s, t) != cplx(0)) nn += O(s, t) * left * T[t];
            }
        }
        double scale = max_abs(dd);
        if (scale > 0) {
            nn /= scale;
            dd /= scale;
        }
        num = std::move(nn);
        den = std::move(dd);
    }
    return num(0, 0) / den(0, 0);
}

double MpsChain::norm2() const {
    cmat E = cmat::Identity(1, 1);
    for (const auto& T : A_) {
        cmat n = cmat::Zero(T[0].cols(), T[0].cols());
        for (int s = 0; s < d_; ++s) n += T[s].adjoint() * E * T[s];
        E = std::move(n);
    }
    return E(0, 0).real();
}

void MpsChain::normalize() {
    const double n2 = norm2();
    if (!(n2 > 0)) throw numerical_error("cannot normalise a zero MPS");
    const double f = 1.0 / std::sqrt(n2);
    for (auto& a : A_[0]) a *= f;
}

int MpsChain::measure(int site, const std::vector<int>& outcome_class, int num_classes, std::mt19937_64& rng) {
    if (static_cast<int>(outcome_class.size()) != d_) throw std::invalid_argument("outcome map has wrong size");
    std::vector<double> p(num_classes, 0.0);
    for (int c = 0; c < num_classes; ++c) {
        cmat P = cmat::Zero(d_, d_);
        for (int s = 0; s < d_; ++s)
            if (outcome_class[s] == c) P(s, s) = 1.0;
        p[c] = std::max(0.0, product_expectation({{site, P}}).real());
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    std::uniform_real_distribution<double> U(0.0, total);
    double u = U(rng);
    int chosen = num_classes - 1;
    for (int c = 0; c < num_classes; ++c) {
        if (u < p[c]) {
            chosen = c;
            break;
        }
        u -= p[c];
    }
    while (p[chosen] == 0.0) chosen = (chosen + num_classes - 1) % num_classes;
    cmat P = cmat::Zero(d_, d_);
    for (int s = 0; s < d_; ++s)
        if (outcome_class[s] == chosen) P(s, s) = 1.0;
    apply_site(P, site);
    normalize();
    return chosen;
}

MpsChain MpsChain::restrict_labels(const std::vector<std::vector<int>>& keep) const {
    if (static_cast<int>(keep.size()) != num_sites()) throw std::invalid_argument("one label list per site");
    MpsChain m;
    m.d_ = static_cast<int>(keep[0].size());
    m.cutoff = cutoff;
    for (int i = 0; i < num_sites(); ++i) {
        if (static_cast<int>(keep[i].size()) != m.d_) throw std::invalid_argument("uniform restricted dimension");
        SiteTensor t;
        for (int s : keep[i]) t.push_back(A_[i][s]);
        m.A_.push_back(std::move(t));
    }
    return m;
}

cmat MpsChain::reduced_density(const std::vector<int>& sites) const {
    const int L = num_sites();
    if (sites.empty()) throw std::invalid_argument("no sites requested");
    for (std::size_t t = 0; t < sites.size(); ++t) {
        if (sites[t] < 0 || sites[t] >= L) throw std::out_of_range("site out of range");
        if (t > 0 && sites[t] <= sites[t - 1]) throw std::invalid_argument("sites must be sorted and distinct");
    }
    const int mid = sites[sites.size() / 2];
    auto kept = [&](int i) { return std::find(sites.begin(), sites.end(), i) != sites.end(); };
    // Left environments E (bra x ket) for every (ket, bra) configuration of kept sites left of mid.
    int Kl = 1;
    std::vector<cmat> E{cmat::Identity(1, 1)};
    for (int i = 0; i < mid; ++i) {
        const auto& T = A_[i];
        if (!kept(i)) {
            for (auto& e : E) {
                cmat n = cmat::Zero(T[0].cols(), T[0].cols());
                for (int s = 0; s < d_; ++s) n += T[s].adjoint() * e * T[s];
                e = std::move(n);
            }
            continue;
        }
        const int K2 = Kl * d_;
        std::vector<cmat> next(static_cast<std::size_t>(K2) * K2);
        for (int k = 0; k < Kl; ++k)
            for (int b = 0; b < Kl; ++b)
                for (int s = 0; s < d_; ++s)
                    for (int sp = 0; sp < d_; ++sp)
                        next[static_cast<std::size_t>(k * d_ + s) * K2 + (b * d_ + sp)] =
                            T[sp].adjoint() * E[static_cast<std::size_t>(k) * Kl + b] * T[s];
        E = std::move(next);
        Kl = K2;
    }
    // Right environments R (ket x bra) for kept sites right of mid.
    int Kr = 1;
    std::vector<cmat> R{cmat::Identity(1, 1)};
    for (int i = L - 1; i > mid; --i) {
        const auto& T = A_[i];
        if (!kept(i)) {
            for (auto& r : R) {
                cmat n = cmat::Zero(T[0].rows(), T[0].rows());
                for (int s = 0; s < d_; ++s) n += T[s] * r * T[s].adjoint();
                r = std::move(n);
            }
            continue;
        }
        const int K2 = Kr * d_;
        std::vector<cmat> next(static_cast<std::size_t>(K2) * K2);
        for (int k = 0; k < Kr; ++k)
            for (int b = 0; b < Kr; ++b)
                for (int s = 0; s < d_; ++s)
                    for (int sp = 0; sp < d_; ++sp)
                        next[static_cast<std::size_t>(s * Kr + k) * K2 + (sp * Kr + b)] =
                            T[s] * R[static_cast<std::size_t>(k) * Kr + b] * T[sp].adjoint();
        R = std::move(next);
        Kr = K2;
    }
    const auto& T = A_[mid];
    const int K = Kl * d_ * Kr;
    cmat rho = cmat::Zero(K, K);
    for (auto& e : E) e.transposeInPlace();
    for (int kr = 0; kr < Kr; ++kr)
        for (int br = 0; br < Kr; ++br) {
            const cmat& r = R[static_cast<std::size_t>(kr) * Kr + br];
            for (int s = 0; s < d_; ++s) {
                const cmat Tr = T[s] * r;
                for (int sp = 0; sp < d_; ++sp) {
                    const cmat M = Tr * T[sp].adjoint();
                    for (int kl = 0; kl < Kl; ++kl)
                        for (int bl = 0; bl < Kl; ++bl)
                            rho((kl * d_ + s) * Kr + kr, (bl * d_ + sp) * Kr + br) =
                                E[static_cast<std::size_t>(kl) * Kl + bl].cwiseProduct(M).sum();
                }
            }
        }
    const cplx tr = rho.trace();
    if (std::abs(tr) == 0.0) throw numerical_error("zero-norm state");
    return rho / tr;
}

DenseState MpsChain::to_dense() const {
    const int L = num_sites();
    DenseState st(d_, L);
    cmat P = cmat::Identity(1, 1);  // rows: prefix configurations, cols: open bond
    for (int i = 0; i < L; ++i) {
        const auto& T = A_[i];
        const Eigen::Index Dr = T[0].cols();
        cmat Q(P.rows() * d_, Dr);
        for (Eigen::Index c = 0; c < P.rows(); ++c)
            for (int s = 0; s < d_; ++s) Q.row(c * d_ + s) = P.row(c) * T[s];
        P = std::move(Q);
    }
    for (Eigen::Index c = 0; c < P.rows(); ++c) st.amplitudes()(c) = P(c, 0);
    st.normalize();
    return st;
}

}  // namespace spt
