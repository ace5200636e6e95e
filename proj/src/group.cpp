#include "spt/group.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace spt {

int gcd_int(int a, int b) { return std::gcd(a, b); }

int mod_inverse(int a, int n) {
    a = ((a % n) + n) % n;
    for (int x = 1; x < n; ++x)
        if ((a * x) % n == 1) return x;
    if (n == 1) return 0;
    throw domain_error("no modular inverse of " + std::to_string(a) + " mod " + std::to_string(n));
}

Phase::Phase(std::int64_t k, std::int64_t n) {
    if (n <= 0) throw structural_error("phase denominator must be positive");
    k %= n;
    if (k < 0) k += n;
    std::int64_t g = std::gcd(k, n);
    if (k == 0) g = n;
    num = k / g;
    den = n / g;
}

Phase Phase::operator*(const Phase& o) const {
    std::int64_t l = std::lcm(den, o.den);
    return Phase(num * (l / den) + o.num * (l / o.den), l);
}

Phase Phase::conj() const { return Phase(-num, den); }

Phase Phase::pow(std::int64_t e) const { return Phase(num * e, den); }

cplx Phase::value() const {
    if (num == 0) return {1.0, 0.0};
    // Exact values on the axes avoid 1e-17 residues in later comparisons.
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == den) return {0.0, 1.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    double a = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(a), std::sin(a)};
}

GroupElement add(const GroupElement& g, const GroupElement& h) {
    if (g.moduli != h.moduli || g.residues.size() != h.residues.size())
        throw structural_error("group elements belong to different groups");
    GroupElement r = g;
    for (std::size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = (g.residues[i] + h.residues[i]) % g.moduli[i];
    return r;
}

Phase character(const GroupElement& g, const GroupElement& h) {
    if (g.moduli != h.moduli) throw structural_error("group elements belong to different groups");
    Phase p;
    for (std::size_t i = 0; i < g.residues.size(); ++i)
        p = p * Phase(static_cast<std::int64_t>(g.residues[i]) * h.residues[i], g.moduli[i]);
    return p;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw structural_error("group needs at least one modulus");
    order_ = 1;
    for (int n : moduli_) {
        if (n < 2) throw structural_error("every modulus must be >= 2");
        order_ *= n;
    }
    const int M = rank();
    digits_.assign(static_cast<std::size_t>(order_) * M, 0);
    for (int idx = 0; idx < order_; ++idx) {
        int r = idx;
        for (int i = M - 1; i >= 0; --i) {
            digits_[idx * M + i] = r % moduli_[i];
            r /= moduli_[i];
        }
    }
    add_.resize(static_cast<std::size_t>(order_) * order_);
    neg_.resize(order_);
    std::vector<int> s(M);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            for (int i = 0; i < M; ++i) s[i] = (digits_[a * M + i] + digits_[b * M + i]) % moduli_[i];
            add_[a * order_ + b] = index(s);
        }
        for (int i = 0; i < M; ++i) s[i] = (moduli_[i] - digits_[a * M + i]) % moduli_[i];
        neg_[a] = index(s);
    }
}

std::vector<int> FiniteAbelianGroup::residues(int idx) const {
    if (idx < 0 || idx >= order_) throw structural_error("group element index out of range");
    return {digits_.begin() + idx * rank(), digits_.begin() + (idx + 1) * rank()};
}

int FiniteAbelianGroup::index(const std::vector<int>& r) const {
    if (static_cast<int>(r.size()) != rank()) throw structural_error("residue vector has wrong length");
    int idx = 0;
    for (int i = 0; i < rank(); ++i) {
        int v = ((r[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
        idx = idx * moduli_[i] + v;
    }
    return idx;
}

int FiniteAbelianGroup::index(const GroupElement& g) const {
    if (g.moduli != moduli_) throw structural_error("element does not belong to this group");
    return index(g.residues);
}

Phase FiniteAbelianGroup::character(int g, int h) const {
    Phase p;
    const int M = rank();
    for (int i = 0; i < M; ++i)
        p = p * Phase(static_cast<std::int64_t>(digits_[g * M + i]) * digits_[h * M + i], moduli_[i]);
    return p;
}

std::string FiniteAbelianGroup::label(int idx) const {
    std::ostringstream os;
    os << '(';
    auto r = residues(idx);
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ')';
    return os.str();
}

FactorSet::FactorSet(FiniteAbelianGroup group, const std::vector<std::tuple<int, int, int>>& entries)
    : group_(std::move(group)) {
    const int M = group_.rank();
    const int n = group_.order();
    w_.assign(static_cast<std::size_t>(M) * M, 0);
    for (auto [i, j, w] : entries) {
        if (i < 0 || j < 0 || i >= M || j >= M || i >= j)
            throw structural_error("factor set entries must be strictly upper triangular");
        int g = gcd_int(group_.moduli()[i], group_.moduli()[j]);
        w_[i * M + j] = ((w % g) + g) % g;
    }
    omega_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        auto ga = group_.residues(a);
        for (int b = 0; b < n; ++b) {
            auto hb = group_.residues(b);
            Phase p;
            for (int i = 0; i < M; ++i)
                for (int j = i + 1; j < M; ++j) {
                    int w = w_[i * M + j];
                    if (w == 0) continue;
                    int g = gcd_int(group_.moduli()[i], group_.moduli()[j]);
                    p = p * Phase(static_cast<std::int64_t>(w) * ga[j] * hb[i], g);
                }
            omega_[a * n + b] = p;
        }
    }
    gamma_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int x = 0; x < n && gamma_[g] < 0; ++x) {
            bool ok = true;
            for (int h = 0; h < n && ok; ++h) ok = group_.character(h, x) == lambda(h, g);
            if (ok) gamma_[g] = x;
        }
        if (gamma_[g] < 0) throw structural_error("commutator phase is not a character");
    }
    mnc_ = center().size() == 1;
    if (mnc_) {
        gamma_inv_.assign(n, -1);
        for (int g = 0; g < n; ++g) gamma_inv_[gamma_[g]] = g;
    }
}

FactorSet FactorSet::zn2(int N, int w) { return FactorSet(FiniteAbelianGroup({N, N}), {{0, 1, w}}); }

std::vector<std::tuple<int, int, int>> FactorSet::entries() const {
    std::vector<std::tuple<int, int, int>> out;
    const int M = group_.rank();
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j)
            if (w_[i * M + j] != 0) out.emplace_back(i, j, w_[i * M + j]);
    return out;
}

int FactorSet::gamma_inverse(int g) const {
    if (!mnc_) throw domain_error("Gamma not invertible: factor set is not maximally non-commutative");
    return gamma_inv_[g];
}

std::vector<int> FactorSet::center() const {
    std::vector<int> c;
    const int n = group_.order();
    for (int g = 0; g < n; ++g) {
        bool central = true;
        for (int h = 0; h < n && central; ++h) central = lambda(g, h).is_one();
        if (central) c.push_back(g);
    }
    return c;
}

bool FactorSet::has_block_form() const {
    const int M = group_.rank();
    if (M % 2 != 0) return false;
    const auto& N = group_.moduli();
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
            bool paired = (i % 2 == 0) && (j == i + 1);
            if (paired && N[i] != N[j]) return false;
            if (!paired && w_[i * M + j] != 0) return false;
        }
    return true;
}

}  // namespace spt
