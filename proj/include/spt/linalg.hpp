// Small dense complex matrices and tensor-product helpers.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "spt/group.hpp"

namespace spt {

using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

// Z = sum_a zeta^{a k} |a><a|
cmat clock_pow(int N, int k);
// X = sum_a |a+k><a|
cmat shift_pow(int N, int k);

cmat kron(const cmat& a, const cmat& b);
cmat kron_all(const std::vector<cmat>& factors);

// Projector |i><i| of dimension n.
cmat projector(int n, int i);

double max_abs(const cmat& m);
double unitarity_defect(const cmat& m);
double commutator_norm(const cmat& a, const cmat& b);

// Reorder the tensor factors of an operator on k sites of dimension d:
// the returned operator acts with factor perm[t] of the input placed at slot t.
cmat permute_factors(const cmat& op, int d, const std::vector<int>& perm);

// Integer power with non-negative exponent.
int ipow(int base, int exp);

}  // namespace spt
