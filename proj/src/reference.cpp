#include "spt/reference.hpp"

#include <cmath>
#include <map>

namespace spt {

namespace {

double sqrt_order(const FactorSet& fs) { return std::sqrt(static_cast<double>(fs.order())); }

}  // namespace

MpsTensor canonical_tensor(const FactorSet& fs) {
    if (!fs.is_mnc()) throw domain_error("canonical tensor requires a maximally non-commutative factor set");
    ProjectiveRep rep(fs);
    MpsTensor t;
    t.fs = fs;
    t.chi = rep.dim();
    for (int g = 0; g < fs.order(); ++g) t.A.push_back(rep.V(fs.gamma_inverse(g)).adjoint());
    const double tol = 1e-12;
    if (t.orthogonality_defect() > tol || t.injectivity_defect() > tol || t.pullthrough_defect() > tol)
        throw std::runtime_error("canonical tensor failed its perfectness checks");
    return t;
}

double MpsTensor::orthogonality_defect() const {
    const int n = fs.order();
    double m = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            cplx v = (A[g].adjoint() * A[h]).trace();
            double expect = g == h ? sqrt_order(fs) : 0.0;
            m = std::max(m, std::abs(v - expect));
        }
    return m;
}

double MpsTensor::injectivity_defect() const {
    const int n = fs.order();
    double m = 0;
    for (int i = 0; i < chi; ++i)
        for (int j = 0; j < chi; ++j)
            for (int k = 0; k < chi; ++k)
                for (int l = 0; l < chi; ++l) {
                    cplx s = 0;
                    for (int g = 0; g < n; ++g) s += A[g](i, j) * std::conj(A[g](k, l));
                    double expect = (i == k && j == l) ? sqrt_order(fs) : 0.0;
                    m = std::max(m, std::abs(s - expect));
                }
    return m;
}

double MpsTensor::pullthrough_defect() const {
    ProjectiveRep rep(fs);
    const int n = fs.order();
    double m = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            cmat lhs = fs.group().character(h, g).value() * A[h];
            cmat rhs = rep.V(g).adjoint() * A[h] * rep.V(g);
            m = std::max(m, max_abs(lhs - rhs));
        }
    return m;
}

ShiftOperators shift_operators(const FactorSet& fs, int g) {
    if (!fs.is_mnc()) throw domain_error("shift operators require a maximally non-commutative factor set");
    const auto& G = fs.group();
    const int n = fs.order();
    ShiftOperators s{cmat::Zero(n, n), cmat::Zero(n, n)};
    const int Gg = fs.gamma(g);
    const Phase sig = fs.sigma(G.neg(g)).conj();
    for (int h = 0; h < n; ++h) {
        int hi = fs.gamma_inverse(h);
        s.S_R(h, G.sub(h, Gg)) = (fs.omega(g, hi) * sig).value();
        s.S_L(h, G.add(h, Gg)) = fs.omega(hi, g).conj().value();
    }
    return s;
}

SptModel::SptModel(const FactorSet& fs) : fs_(fs), rep_(fs), tensor_(canonical_tensor(fs)) {
    const int n = fs.order();
    for (int g = 0; g < n; ++g) {
        R_.push_back(regular_rep(fs.group(), g));
        auto s = shift_operators(fs, g);
        SL_.push_back(std::move(s.S_L));
        SR_.push_back(std::move(s.S_R));
    }
}

double SptModel::shift_identity_defect() const {
    const int n = order();
    double m = 0;
    for (int g = 0; g < n; ++g)
        for (int hp = 0; hp < n; ++hp) {
            cmat r = A(hp) * V(g);
            cmat l = V(g).adjoint() * A(hp);
            for (int h = 0; h < n; ++h) {
                r -= SR_[g](hp, h) * A(h);
                l -= SL_[g](hp, h) * A(h);
            }
            m = std::max({m, max_abs(r), max_abs(l)});
        }
    return m;
}

double SptModel::shift_product_defect() const {
    double m = 0;
    for (int g = 0; g < order(); ++g) m = std::max(m, max_abs(SL_[g] * SR_[g] - R_[g]));
    return m;
}

double SptModel::shift_fusion_defect() const {
    const auto& G = group();
    double m = 0;
    for (int g = 0; g < order(); ++g)
        for (int h = 0; h < order(); ++h)
            m = std::max(m, max_abs(SR_[g] * SR_[h] - fs_.omega(g, h).value() * SR_[G.add(g, h)]));
    return m;
}

double SptModel::shift_commutation_defect() const {
    double m = 0;
    for (int g = 0; g < order(); ++g)
        for (int h = 0; h < order(); ++h) {
            cplx lgh = fs_.lambda(g, h).value();
            cplx lhg = fs_.lambda(h, g).value();
            m = std::max(m, max_abs(SR_[g] * SR_[h] - lgh * SR_[h] * SR_[g]));
            m = std::max(m, max_abs(SR_[g] * R_[h] - lgh * R_[h] * SR_[g]));
            m = std::max(m, max_abs(SL_[g] * R_[h] - lhg * R_[h] * SL_[g]));
        }
    return m;
}

double SptModel::shift_adjoint_defect() const {
    double m = 0;
    for (int g = 0; g < order(); ++g)
        m = std::max(m, max_abs(SR_[g].adjoint() - fs_.sigma(g).value() * SR_[group().neg(g)]));
    return m;
}

double SptModel::shift_irrep_defect() const {
    const auto& G = group();
    double m = 0;
    for (int g = 0; g < order(); ++g)
        for (int h = 0; h < order(); ++h) {
            cplx c = G.character(fs_.gamma(g), h).value();
            m = std::max(m, max_abs(R_[h].adjoint() * SL_[g] * R_[h] - c * SL_[g]));
            m = std::max(m, max_abs(R_[h].adjoint() * SR_[g] * R_[h] - std::conj(c) * SR_[g]));
        }
    return m;
}

std::vector<LocalOp> string_operator(const SptModel& m, int g, int i, int j, int L) {
    if (!(0 <= i && i < j && j < L)) throw std::invalid_argument("string operator needs 0 <= i < j < L");
    std::vector<LocalOp> ops;
    if (g == 0) return ops;
    ops.emplace_back(i, m.SR(g));
    for (int k = i + 1; k < j; ++k) ops.emplace_back(k, m.R(g));
    ops.emplace_back(j, m.SL(g));
    return ops;
}

std::vector<LocalOp> trivial_string_operator(const FiniteAbelianGroup& G, int g, int i, int j, int L) {
    if (!(0 <= i && i < j && j < L)) throw std::invalid_argument("string operator needs 0 <= i < j < L");
    std::vector<LocalOp> ops;
    if (g == 0) return ops;
    for (int k = i; k <= j; ++k) ops.emplace_back(k, regular_rep(G, g));
    return ops;
}

cmat parent_term(const SptModel& m) {
    const int n = m.order();
    cmat H = cmat::Zero(n * n, n * n);
    for (int g = 0; g < n; ++g) H -= kron(m.SR(g), m.SL(g));
    return H;
}

SiteTensor reference_site_tensor(const FactorSet& fs) {
    if (fs.is_mnc()) return canonical_tensor(fs).A;
    if (static_cast<int>(fs.center().size()) == fs.order()) {
        SiteTensor t(fs.order(), cmat::Zero(1, 1));
        t[0](0, 0) = 1.0;
        return t;
    }
    throw domain_error("reference state for partially central factor sets lives in the non-MNC module");
}

cplx string_expectation_tm(const std::vector<SiteTensor>& tensors, const std::vector<LocalOp>& ops) {
    const int L = static_cast<int>(tensors.size());
    if (L == 0) throw std::invalid_argument("empty tensor list");
    std::map<int, const cmat*> at;
    for (const auto& [s, op] : ops) {
        if (s < 0 || s >= L) throw std::invalid_argument("operator site out of range");
        if (at.count(s)) throw std::invalid_argument("at most one operator per site");
        at[s] = &op;
    }
    // Environment over the doubled loop index: E[(a,a'),(b,b')] built from conj(A) x A.
    const int D0 = static_cast<int>(tensors[0][0].rows());
    cmat num = cmat::Identity(D0 * D0, D0 * D0);
    cmat den = num;
    for (int i = 0; i < L; ++i) {
        const auto& T = tensors[i];
        const int d = static_cast<int>(T.size());
        const int Dl = static_cast<int>(T[0].rows());
        const int Dr = static_cast<int>(T[0].cols());
        if (Dl * Dl != den.cols()) throw std::invalid_argument("bond dimension mismatch");
        cmat En = cmat::Zero(Dl * Dl, Dr * Dr);
        cmat Ed = cmat::Zero(Dl * Dl, Dr * Dr);
        for (int s = 0; s < d; ++s) Ed += kron(T[s].conjugate(), T[s]);
        auto it = at.find(i);
        if (it == at.end()) {
            En = Ed;
        } else {
            const cmat& O = *it->second;
            if (O.rows() != d) throw std::invalid_argument("operator dimension mismatch");
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t)
                    if (O(s, t) != cplx(0)) En += O(s, t) * kron(T[s].conjugate(), T[t]);
        }
        num = num * En;
        den = den * Ed;
        double scale = max_abs(den);
        if (scale > 0) {
            num /= scale;
            den /= scale;
        }
    }
    if (tensors.back()[0].cols() != D0) throw std::invalid_argument("periodic bond mismatch");
    return num.trace() / den.trace();
}

}  // namespace spt
