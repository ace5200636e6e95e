// Classical majority-vote renormalisation of error distributions.
#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace spt {

// Three-site table p3[(g*n + h)*n + k].
using Table3 = std::vector<double>;

Table3 iid_table3(const std::vector<double>& p);
std::vector<double> centre_marginal(const Table3& p3, int n);

// p'(g) = p(g) + sum_h (p(g,h,g) - p(h,g,h)), with p(g) the centre marginal.
std::vector<double> maj_flow_step(const Table3& p3, int n);

struct Dominance {
    std::vector<double> f;  // f(g) = sum_h (p(g,h,g) - p(h,g,h))
    int leader = 0;         // argmax of the single-site marginal
    bool dominant = false;
};
Dominance dominance_check(const Table3& p3, int n);

struct GapReport {
    std::vector<std::vector<double>> marginals;  // p_d for d = 0..depth reached
    std::vector<double> gap;                     // delta_d
    int depth_reached = -1;                      // first d with delta_d > 1 - eps; -1 if never
    int bound = 0;                               // ceil(ln(1/eps) + |G| ln(1/delta_0))
    bool generic = true;                         // false when the top two marginals tie exactly
    double recursion_defect = 0;                 // max |delta_{d+1} - delta_d - (p1^2 - p2^2 - delta sum p^2)|
};
GapReport gap_and_depth(const std::vector<double>& p0, double eps, int max_depth = 200);

// Worst-case family: one label at (1 - delta)/|G| + delta, the rest at (1 - delta)/|G|.
std::vector<double> almost_uniform(int n, double delta);

std::pair<int, int> top_two(const std::vector<double>& p);

// Samplers of error strings in {0..n-1}^L.
class ErrorModel {
public:
    virtual ~ErrorModel() = default;
    virtual int num_labels() const = 0;
    virtual std::vector<int> sample(int L, std::mt19937_64& rng) const = 0;
    virtual std::string name() const = 0;
};

std::unique_ptr<ErrorModel> make_iid_model(std::vector<double> p);
// Keeps the previous label with probability exp(-1/xi), otherwise redraws from p.
std::unique_ptr<ErrorModel> make_markov_model(std::vector<double> p, double xi);
// Stationary tiles (x, g*, x) with probability f and (x) otherwise, x uniform over labels != g*.
std::unique_ptr<ErrorModel> make_gerrymander_model(int n, int g_star, double f);
// Translation-invariant open MPS with iid complex Gaussian tensor entries.
std::unique_ptr<ErrorModel> make_random_mps_model(int n, int chi, std::uint64_t tensor_seed);
// X-basis outcomes of prod_i exp(i (sum_a theta_a) Z_i ... Z_{i+k}) |+...+>, theta_a uniform.
std::unique_ptr<ErrorModel> make_circuit_model(int k);

std::vector<int> blockwise_maj(const std::vector<int>& s);

struct MonteCarloReport {
    int n = 0;
    std::vector<std::vector<double>> marginal;  // [depth][g], pooled over sites
    std::vector<std::vector<double>> std_error;  // [depth][g]
    std::vector<double> gap;
};

MonteCarloReport sample_majority_tree(const ErrorModel& model, int L, int d, int trials, std::uint64_t seed);

struct PairCorrelation {
    double max_abs_cov = 0;   // max over (g,h) of |p(g,h) - p(g) p(h)|
    double max_z = 0;         // max over (g,h) of |cov| / stderr
};
// Correlation between two neighbouring renormalised sites (first two) at depth d.
PairCorrelation pair_correlation(const ErrorModel& model, int L, int d, int trials, std::uint64_t seed);

// Single-site statistics of the centre of one aligned triple: p0 at the centre, p1 = maj.
struct TripleStats {
    std::vector<double> p0;
    std::vector<double> p1;
    std::vector<int> count0;
    std::vector<int> count1;
    int trials = 0;
};
TripleStats sample_triples(const ErrorModel& model, int trials, std::uint64_t seed);

}  // namespace spt
