// Run configuration: one `key = value` per line, value a JSON literal, `#` starts a comment.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spt {

struct RunConfig {
    std::string kind;  // recognize | flow | ssb | nonmnc | sweep
    std::uint64_t seed = 0;

    // recognize, ssb
    std::vector<int> moduli{2, 2};
    std::vector<std::array<int, 3>> omega{{0, 1, 1}};  // (i, j, w), 0-based factor indices
    int L = 9;
    int depth = 1;
    std::string state = "reference";  // recognize: reference | product | randomized; ssb: paramagnet | ordered
    std::vector<int> errors;          // recognize: group index per site, empty for none
    int shots = 0;
    int g_bullet = -1;
    double delta = 3.0;
    double tau_in = 0.9;
    double tau_out = 1e-6;
    double eps = 0.0;  // ssb ordered: flip probability
    int sector = 0;    // ssb ordered: ordered label

    // flow
    std::string error_model = "iid";  // iid | markov | gerrymander | random_mps | circuit
    std::vector<double> p{0.6, 0.4};
    double xi = 1.0;
    double f = 0.9;
    int labels = 4;
    int chi = 2;
    int k = 2;
    int trials = 0;  // 0: exact flow of the iid marginal

    // nonmnc
    int ext_p = 2;
    int ext_q = 3;
    int pair_element = 0;  // X_h at pair_site, X_{-h} at pair_site + 1; 0 for none
    int pair_site = 0;

    // sweep
    int N = 2;
    int LG = 9;
    std::vector<double> lambda1{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    double lambda2 = 0.0;
};

// Every problem found, not just the first.
class config_error : public std::runtime_error {
public:
    explicit config_error(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

// A configuration that is valid but exceeds the simulation caps.
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws config_error listing all problems, or cap_error for pre-flight cap violations.
RunConfig parse_config(const std::string& text);
void validate_config(const RunConfig& cfg);
// Canonical text form; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const RunConfig& cfg);
// JSON object with every field, for the run summary.
std::string config_json(const RunConfig& cfg);

const std::vector<std::string>& config_keys();

}  // namespace spt
