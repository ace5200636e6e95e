#include "spt/lanczos.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

namespace spt {

LanczosResult lanczos_ground_state(std::size_t dim, const MatVec& H, const LanczosOptions& opt) {
    LanczosResult res;
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> N(0.0, 1.0);
    cvec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = {N(rng), N(rng)};
    v.normalize();

    const int m = static_cast<int>(std::min<std::size_t>(opt.krylov_dim, dim));
    std::vector<cvec> basis;
    cvec w(dim);
    for (int restart = 0; restart < opt.max_restarts; ++restart) {
        basis.clear();
        basis.push_back(v);
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        int k = 0;
        for (; k < m; ++k) {
            H(basis[k], w);
            ++res.matvecs;
            const double alpha = basis[k].dot(w).real();
            T(k, k) = alpha;
            // Full reorthogonalisation, applied twice for stability.
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : basis) w -= b * b.dot(w);
            const double beta = w.norm();
            if (k + 1 == m || beta < 1e-13) {
                ++k;
                break;
            }
            T(k, k + 1) = T(k + 1, k) = beta;
            basis.push_back(w / beta);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.topLeftCorner(k, k));
        const Eigen::VectorXd y = es.eigenvectors().col(0);
        v.setZero();
        for (int j = 0; j < k; ++j) v += y[j] * basis[j];
        v.normalize();
        H(v, w);
        ++res.matvecs;
        const double e = v.dot(w).real();
        res.energy = e;
        res.second = k > 1 ? es.eigenvalues()[1] : e;
        res.residual = (w - e * v).norm();
        if (res.residual < opt.tol) {
            res.converged = true;
            break;
        }
    }
    res.vector = v;
    return res;
}

LanczosResult lanczos_with_gap(std::size_t dim, const MatVec& H, const LanczosOptions& opt) {
    LanczosResult res = lanczos_ground_state(dim, H, opt);
    if (dim < 2) return res;
    const cvec v0 = res.vector;
    const double shift = 2.0 * std::abs(res.energy) + 10.0;
    MatVec deflated = [&](const cvec& in, cvec& out) {
        H(in, out);
        out += shift * v0 * v0.dot(in);
    };
    LanczosOptions o2 = opt;
    o2.seed = opt.seed + 1;
    o2.tol = std::max(opt.tol, 1e-8);
    LanczosResult ex = lanczos_ground_state(dim, deflated, o2);
    res.second = ex.energy;
    res.matvecs += ex.matvecs;
    res.degenerate = std::abs(res.second - res.energy) < opt.degeneracy_tol;
    return res;
}

}  // namespace spt
