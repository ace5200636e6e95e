// Restarted Lanczos for the lowest eigenpair of a Hermitian operator given as a matvec.
#pragma once

#include <cstdint>
#include <functional>

#include "spt/linalg.hpp"

namespace spt {

using MatVec = std::function<void(const cvec& in, cvec& out)>;

struct LanczosOptions {
    int krylov_dim = 60;
    int max_restarts = 200;
    double tol = 1e-10;          // residual norm |Hv - Ev|
    double degeneracy_tol = 1e-10;
    std::uint64_t seed = 7;
};

struct LanczosResult {
    double energy = 0;
    double second = 0;  // lowest eigenvalue of H deflated by the ground state
    cvec vector;
    double residual = 0;
    int matvecs = 0;
    bool converged = false;
    bool degenerate = false;
};

LanczosResult lanczos_ground_state(std::size_t dim, const MatVec& H, const LanczosOptions& opt = {});

// Ground state plus the first excited level from a second run on H + c|v><v|.
LanczosResult lanczos_with_gap(std::size_t dim, const MatVec& H, const LanczosOptions& opt = {});

}  // namespace spt
