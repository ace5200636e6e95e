// Full many-body state vectors over (C^d)^{tensor L}, site 0 most significant.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spt/linalg.hpp"
#include "spt/reference.hpp"

namespace spt {

class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DenseState {
public:
    DenseState() = default;
    // |0...0>
    DenseState(int local_dim, int num_sites);

    static std::size_t size_cap();
    static void set_size_cap(std::size_t cap);

    int local_dim() const { return d_; }
    int num_sites() const { return L_; }
    std::size_t size() const { return static_cast<std::size_t>(amp_.size()); }
    const cvec& amplitudes() const { return amp_; }
    cvec& amplitudes() { return amp_; }

    std::vector<int> digits(std::size_t idx) const;
    std::size_t index(const std::vector<int>& digits) const;

    // Unitary ops assert norm preservation; non-unitary ops (projectors) are allowed
    // with check_norm = false and the caller renormalises.
    void apply_local(const cmat& op, const std::vector<int>& sites, bool check_norm = true);
    cplx expectation(const cmat& op, const std::vector<int>& sites) const;
    cplx product_expectation(const std::vector<LocalOp>& ops) const;

    double norm() const { return amp_.norm(); }
    void normalize();
    cplx overlap(const DenseState& other) const;  // <this|other>

    void dump(const std::string& path, const std::vector<int>& moduli) const;

private:
    std::vector<std::size_t> offsets(const std::vector<int>& sites) const;
    std::vector<std::size_t> bases(const std::vector<int>& sites) const;

    int d_ = 1;
    int L_ = 0;
    cvec amp_;
};

// amplitudes Tr[A^{g_1} ... A^{g_L}], normalised.
DenseState mps_to_dense(const std::vector<SiteTensor>& tensors);

}  // namespace spt
