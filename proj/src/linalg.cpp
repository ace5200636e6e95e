#include "spt/linalg.hpp"

#include <stdexcept>

namespace spt {

int ipow(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

cmat clock_pow(int N, int k) {
    cmat z = cmat::Zero(N, N);
    for (int a = 0; a < N; ++a) z(a, a) = Phase(static_cast<std::int64_t>(a) * k, N).value();
    return z;
}

cmat shift_pow(int N, int k) {
    cmat x = cmat::Zero(N, N);
    int s = ((k % N) + N) % N;
    for (int a = 0; a < N; ++a) x((a + s) % N, a) = 1.0;
    return x;
}

cmat kron(const cmat& a, const cmat& b) {
    cmat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

cmat kron_all(const std::vector<cmat>& factors) {
    if (factors.empty()) return cmat::Identity(1, 1);
    cmat r = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) r = kron(r, factors[i]);
    return r;
}

cmat projector(int n, int i) {
    cmat p = cmat::Zero(n, n);
    p(i, i) = 1.0;
    return p;
}

double max_abs(const cmat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const cmat& m) {
    if (m.rows() != m.cols()) return 1e300;
    return max_abs(m.adjoint() * m - cmat::Identity(m.rows(), m.cols()));
}

double commutator_norm(const cmat& a, const cmat& b) { return max_abs(a * b - b * a); }

cmat permute_factors(const cmat& op, int d, const std::vector<int>& perm) {
    const int k = static_cast<int>(perm.size());
    const int D = ipow(d, k);
    if (op.rows() != D || op.cols() != D) throw std::invalid_argument("permute_factors: dimension mismatch");
    // new index digits n_t = old digit at position perm[t]
    std::vector<int> map(D);
    std::vector<int> dig(k);
    for (int nidx = 0; nidx < D; ++nidx) {
        int r = nidx;
        for (int t = k - 1; t >= 0; --t) {
            dig[t] = r % d;
            r /= d;
        }
        std::vector<int> od(k);
        for (int t = 0; t < k; ++t) od[perm[t]] = dig[t];
        int o = 0;
        for (int t = 0; t < k; ++t) o = o * d + od[t];
        map[nidx] = o;
    }
    cmat out(D, D);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) out(i, j) = op(map[i], map[j]);
    return out;
}

}  // namespace spt
