#include "spt/dense_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <set>

namespace spt {

namespace {

std::size_t g_size_cap = std::size_t{1} << 24;

std::size_t checked_size(int d, int L) {
    std::size_t n = 1;
    for (int i = 0; i < L; ++i) {
        n *= static_cast<std::size_t>(d);
        if (n > g_size_cap) throw resource_error("dense state exceeds the amplitude cap");
    }
    return n;
}

}  // namespace

std::size_t DenseState::size_cap() { return g_size_cap; }
void DenseState::set_size_cap(std::size_t cap) { g_size_cap = cap; }

DenseState::DenseState(int local_dim, int num_sites) : d_(local_dim), L_(num_sites) {
    if (local_dim < 1 || num_sites < 1) throw std::invalid_argument("dense state needs positive dimensions");
    amp_ = cvec::Zero(static_cast<Eigen::Index>(checked_size(d_, L_)));
    amp_(0) = 1.0;
}

std::vector<int> DenseState::digits(std::size_t idx) const {
    std::vector<int> dg(L_);
    for (int s = L_ - 1; s >= 0; --s) {
        dg[s] = static_cast<int>(idx % d_);
        idx /= d_;
    }
    return dg;
}

std::size_t DenseState::index(const std::vector<int>& dg) const {
    std::size_t idx = 0;
    for (int s = 0; s < L_; ++s) idx = idx * d_ + dg[s];
    return idx;
}

std::vector<std::size_t> DenseState::offsets(const std::vector<int>& sites) const {
    const int k = static_cast<int>(sites.size());
    std::vector<std::size_t> stride(k);
    for (int t = 0; t < k; ++t) {
        if (sites[t] < 0 || sites[t] >= L_) throw std::invalid_argument("site out of range");
        std::size_t st = 1;
        for (int s = sites[t] + 1; s < L_; ++s) st *= d_;
        stride[t] = st;
    }
    std::set<int> uniq(sites.begin(), sites.end());
    if (static_cast<int>(uniq.size()) != k) throw std::invalid_argument("sites must be distinct");
    const int D = ipow(d_, k);
    std::vector<std::size_t> off(D);
    for (int c = 0; c < D; ++c) {
        int r = c;
        std::size_t o = 0;
        for (int t = k - 1; t >= 0; --t) {
            o += static_cast<std::size_t>(r % d_) * stride[t];
            r /= d_;
        }
        off[c] = o;
    }
    return off;
}

std::vector<std::size_t> DenseState::bases(const std::vector<int>& sites) const {
    std::vector<char> target(L_, 0);
    for (int s : sites) target[s] = 1;
    std::vector<int> free_sites;
    for (int s = 0; s < L_; ++s)
        if (!target[s]) free_sites.push_back(s);
    std::vector<std::size_t> stride(L_);
    std::size_t st = 1;
    for (int s = L_ - 1; s >= 0; --s) {
        stride[s] = st;
        st *= d_;
    }
    std::size_t count = 1;
    for (std::size_t i = 0; i < free_sites.size(); ++i) count *= d_;
    std::vector<std::size_t> b;
    b.reserve(count);
    std::vector<int> ctr(free_sites.size(), 0);
    for (std::size_t n = 0; n < count; ++n) {
        std::size_t o = 0;
        for (std::size_t i = 0; i < free_sites.size(); ++i) o += ctr[i] * stride[free_sites[i]];
        b.push_back(o);
        for (int i = static_cast<int>(free_sites.size()) - 1; i >= 0; --i) {
            if (++ctr[i] < d_) break;
            ctr[i] = 0;
        }
    }
    return b;
}

void DenseState::apply_local(const cmat& op, const std::vector<int>& sites, bool check_norm) {
    const int D = ipow(d_, static_cast<int>(sites.size()));
    if (op.rows() != D || op.cols() != D) throw std::invalid_argument("operator dimension mismatch");
    const auto off = offsets(sites);
    const auto base = bases(sites);
    const double before = check_norm ? norm() : 0.0;
    // Row-major copy of the nonzero entries keeps the inner loop tight and its order fixed.
    std::vector<std::vector<std::pair<int, cplx>>> rows(D);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            if (op(i, j) != cplx(0)) rows[i].emplace_back(j, op(i, j));
    std::vector<cplx> in(D), out(D);
    for (std::size_t b : base) {
        for (int c = 0; c < D; ++c) in[c] = amp_(static_cast<Eigen::Index>(b + off[c]));
        for (int i = 0; i < D; ++i) {
            cplx s = 0;
            for (const auto& [j, v] : rows[i]) s += v * in[j];
            out[i] = s;
        }
        for (int c = 0; c < D; ++c) amp_(static_cast<Eigen::Index>(b + off[c])) = out[c];
    }
    if (check_norm && std::abs(norm() - before) > 1e-10 * std::max(1.0, before))
        throw numerical_error("unitary application changed the norm");
}

cplx DenseState::expectation(const cmat& op, const std::vector<int>& sites) const {
    DenseState tmp = *this;
    tmp.apply_local(op, sites, false);
    return amp_.dot(tmp.amp_) / amp_.squaredNorm();
}

cplx DenseState::product_expectation(const std::vector<LocalOp>& ops) const {
    DenseState tmp = *this;
    for (const auto& [s, op] : ops) tmp.apply_local(op, {s}, false);
    return amp_.dot(tmp.amp_) / amp_.squaredNorm();
}

void DenseState::normalize() {
    double n = norm();
    if (n == 0) throw numerical_error("cannot normalise the zero vector");
    amp_ /= n;
}

cplx DenseState::overlap(const DenseState& other) const {
    if (other.size() != size()) throw std::invalid_argument("overlap of states with different sizes");
    return amp_.dot(other.amp_);
}

void DenseState::dump(const std::string& path, const std::vector<int>& moduli) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    auto put = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) f.put(static_cast<char>((v >> (8 * b)) & 0xff));
    };
    put(moduli.size());
    for (int m : moduli) put(static_cast<std::uint64_t>(m));
    put(static_cast<std::uint64_t>(L_));
    for (Eigen::Index i = 0; i < amp_.size(); ++i) {
        double re = amp_(i).real(), im = amp_(i).imag();
        std::uint64_t u;
        std::memcpy(&u, &re, 8);
        put(u);
        std::memcpy(&u, &im, 8);
        put(u);
    }
}

DenseState mps_to_dense(const std::vector<SiteTensor>& tensors) {
    const int L = static_cast<int>(tensors.size());
    if (L == 0) throw std::invalid_argument("empty tensor list");
    const int d = static_cast<int>(tensors[0].size());
    checked_size(d, L);
    const int D0 = static_cast<int>(tensors[0][0].rows());
    // P(c, a*Dk + b) = (A^{c_1} ... A^{c_k})_{ab}
    int Dk = D0;
    cmat P = cmat::Zero(1, D0 * D0);
    for (int a = 0; a < D0; ++a) P(0, a * D0 + a) = 1.0;
    for (int k = 0; k < L; ++k) {
        const auto& T = tensors[k];
        if (static_cast<int>(T.size()) != d) throw std::invalid_argument("physical dimension mismatch");
        if (T[0].rows() != Dk) throw std::invalid_argument("bond dimension mismatch");
        const int Dn = static_cast<int>(T[0].cols());
        cmat Q(P.rows() * d, D0 * Dn);
        for (Eigen::Index c = 0; c < P.rows(); ++c)
            for (int s = 0; s < d; ++s)
                for (int a = 0; a < D0; ++a)
                    Q.block(c * d + s, a * Dn, 1, Dn) = P.block(c, a * Dk, 1, Dk) * T[s];
        P = std::move(Q);
        Dk = Dn;
    }
    if (Dk != D0) throw std::invalid_argument("periodic bond mismatch");
    DenseState st(d, L);
    for (Eigen::Index c = 0; c < P.rows(); ++c) {
        cplx tr = 0;
        for (int a = 0; a < D0; ++a) tr += P(c, a * D0 + a);
        st.amplitudes()(c) = tr;
    }
    st.normalize();
    return st;
}

}  // namespace spt
