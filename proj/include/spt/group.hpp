// Finite Abelian groups prod_i Z_{N_i}, characters, gauge-fixed factor sets.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace spt {

using cplx = std::complex<double>;

// Exact root of unity exp(2 pi i num/den), kept reduced with 0 <= num < den.
struct Phase {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Phase() = default;
    Phase(std::int64_t k, std::int64_t n);

    Phase operator*(const Phase& o) const;
    Phase conj() const;
    Phase pow(std::int64_t e) const;
    bool is_one() const { return num == 0; }
    bool operator==(const Phase& o) const { return num == o.num && den == o.den; }
    cplx value() const;
};

class structural_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FiniteAbelianGroup;

struct GroupElement {
    std::vector<int> residues;
    std::vector<int> moduli;

    bool operator==(const GroupElement& o) const {
        return residues == o.residues && moduli == o.moduli;
    }
};

GroupElement add(const GroupElement& g, const GroupElement& h);
Phase character(const GroupElement& g, const GroupElement& h);

// Elements are addressed by their lexicographic index (component 1 most significant).
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<int> moduli);

    const std::vector<int>& moduli() const { return moduli_; }
    int rank() const { return static_cast<int>(moduli_.size()); }
    int order() const { return order_; }

    std::vector<int> residues(int idx) const;
    int index(const std::vector<int>& residues) const;
    GroupElement element(int idx) const { return {residues(idx), moduli_}; }
    int index(const GroupElement& g) const;

    int add(int a, int b) const { return add_[a * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int identity() const { return 0; }

    // chi_g(h) = prod_i zeta_{N_i}^{g_i h_i}
    Phase character(int g, int h) const;

    std::string label(int idx) const;
    bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }

private:
    std::vector<int> moduli_;
    int order_ = 1;
    std::vector<int> digits_;  // order x rank residue table
    std::vector<int> add_;
    std::vector<int> neg_;
};

// omega(g,h) = prod_{i<j} zeta_{gcd(N_i,N_j)}^{w_ij g_j h_i}, w strictly upper triangular.
class FactorSet {
public:
    FactorSet() = default;
    FactorSet(FiniteAbelianGroup group, const std::vector<std::tuple<int, int, int>>& entries);

    // Z_N x Z_N with a single entry w_12 = w.
    static FactorSet zn2(int N, int w);

    const FiniteAbelianGroup& group() const { return group_; }
    int order() const { return group_.order(); }
    int entry(int i, int j) const { return w_[i * group_.rank() + j]; }
    std::vector<std::tuple<int, int, int>> entries() const;

    Phase omega(int g, int h) const { return omega_[g * group_.order() + h]; }
    Phase lambda(int g, int h) const { return omega(g, h) * omega(h, g).conj(); }
    Phase sigma(int g) const { return omega(g, g); }

    // Gamma(g): the unique element with chi_h(Gamma(g)) = lambda(h, g) for all h.
    int gamma(int g) const { return gamma_[g]; }
    int gamma_inverse(int g) const;

    std::vector<int> center() const;
    bool is_mnc() const { return mnc_; }

    // Block structure prod_a (Z_{N_a} x Z_{N_a}) pairing factors 2a-1, 2a only.
    bool has_block_form() const;

private:
    FiniteAbelianGroup group_;
    std::vector<int> w_;
    std::vector<Phase> omega_;
    std::vector<int> gamma_;
    std::vector<int> gamma_inv_;
    bool mnc_ = false;
};

int gcd_int(int a, int b);
int mod_inverse(int a, int n);

}  // namespace spt
