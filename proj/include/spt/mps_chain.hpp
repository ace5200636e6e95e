// Open-chain MPS used where dense vectors exceed the amplitude cap. Periodic
// states are carried by an extra loop index threaded through every bond.
#pragma once

#include <random>
#include <vector>

#include "spt/dense_state.hpp"
#include "spt/reference.hpp"

namespace spt {

class MpsChain {
public:
    MpsChain() = default;

    static MpsChain from_periodic(const std::vector<SiteTensor>& tensors);
    static MpsChain product(int local_dim, const std::vector<int>& labels);

    int num_sites() const { return static_cast<int>(A_.size()); }
    int local_dim() const { return d_; }
    int max_bond() const;
    const SiteTensor& site(int i) const { return A_[i]; }
    SiteTensor& site(int i) { return A_[i]; }

    // Gate on an arbitrary ordered site list; non-adjacent sites are routed by swaps.
    void apply_local(const cmat& op, const std::vector<int>& sites);
    // Single-site operator without truncation (projectors, diagonal phases).
    void apply_site(const cmat& op, int site);

    double norm2() const;
    void normalize();
    cplx product_expectation(const std::vector<LocalOp>& ops) const;

    // Projective measurement of one site in the computational basis, grouped by
    // an outcome map label -> class; returns the observed class.
    int measure(int site, const std::vector<int>& outcome_class, int num_classes, std::mt19937_64& rng);

    // Keep only the listed physical labels at every site (used after measuring a factor).
    MpsChain restrict_labels(const std::vector<std::vector<int>>& keep) const;

    DenseState to_dense() const;
    // Reduced density matrix of the listed sites (sorted, distinct), factors in site order.
    cmat reduced_density(const std::vector<int>& sites) const;

    double cutoff = 1e-14;

private:
    void apply_contiguous(const cmat& op, int first, int k);

    int d_ = 1;
    std::vector<SiteTensor> A_;
};

}  // namespace spt
