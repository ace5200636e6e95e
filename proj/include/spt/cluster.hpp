// Z_N cluster chain with onsite and nearest-neighbour longitudinal fields, written in the
// basis where the onsite symmetry is diagonal, and its exact ground state.
#pragma once

#include <utility>
#include <vector>

#include "spt/dense_state.hpp"
#include "spt/lanczos.hpp"
#include "spt/reference.hpp"

namespace spt {

// Sum of few-site operators on a periodic chain of `L` sites of dimension `d`.
class LocalHamiltonian {
public:
    LocalHamiltonian(int d, int L) : d_(d), L_(L) {}

    void add_term(std::vector<int> sites, const cmat& op);
    void apply(const cvec& in, cvec& out) const;
    std::size_t dim() const;
    int local_dim() const { return d_; }
    int num_sites() const { return L_; }
    double max_hermiticity_defect() const;

private:
    struct Entry {
        int row;
        cplx value;
    };
    struct Term {
        std::vector<int> sites;
        std::vector<std::vector<Entry>> columns;  // sparse by column
        cmat op;
    };
    int d_, L_;
    std::vector<Term> terms_;
};

// G = Z_N x Z_N with L_G sites. Each site carries two Z_N factors; the cluster terms are the
// shift-operator products S^R_g x S^L_g for g in {(a,0)} and {(0,a)}, and the fields act as
// Z^a on single factors and Z^a x Z^a on neighbouring factors.
LocalHamiltonian cluster_hamiltonian(const SptModel& m, double lambda1, double lambda2, int LG);

struct ClusterGroundState {
    DenseState state;
    double energy = 0;
    double first_excited = 0;
    double residual = 0;
    bool degenerate = false;
    int matvecs = 0;
};

ClusterGroundState cluster_ground_state(const SptModel& m, double lambda1, double lambda2, int LG,
                                        const LanczosOptions& opt = {});

// Energy of the unperturbed model: every cluster term (including a = 0) contributes -1.
double cluster_fixed_point_energy(const SptModel& m, int LG);

}  // namespace spt
