#include "spt/config.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spt/dense_state.hpp"
#include "spt/group.hpp"
#include "spt/rg_circuit.hpp"

namespace spt {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

struct Field {
    std::string key;
    std::function<void(RunConfig&, const json&)> read;
    std::function<json(const RunConfig&)> write;
};

template <class T>
Field field(const char* key, T RunConfig::*member) {
    return {key, [member](RunConfig& c, const json& j) { c.*member = j.get<T>(); },
            [member](const RunConfig& c) { return json(c.*member); }};
}

const std::vector<Field>& fields() {
    static const std::vector<Field> f = {
        field("kind", &RunConfig::kind),
        field("seed", &RunConfig::seed),
        field("moduli", &RunConfig::moduli),
        field("omega", &RunConfig::omega),
        field("L", &RunConfig::L),
        field("depth", &RunConfig::depth),
        field("state", &RunConfig::state),
        field("errors", &RunConfig::errors),
        field("shots", &RunConfig::shots),
        field("g_bullet", &RunConfig::g_bullet),
        field("delta", &RunConfig::delta),
        field("tau_in", &RunConfig::tau_in),
        field("tau_out", &RunConfig::tau_out),
        field("eps", &RunConfig::eps),
        field("sector", &RunConfig::sector),
        field("error_model", &RunConfig::error_model),
        field("p", &RunConfig::p),
        field("xi", &RunConfig::xi),
        field("f", &RunConfig::f),
        field("labels", &RunConfig::labels),
        field("chi", &RunConfig::chi),
        field("k", &RunConfig::k),
        field("trials", &RunConfig::trials),
        field("ext_p", &RunConfig::ext_p),
        field("ext_q", &RunConfig::ext_q),
        field("pair_element", &RunConfig::pair_element),
        field("pair_site", &RunConfig::pair_site),
        field("N", &RunConfig::N),
        field("LG", &RunConfig::LG),
        field("lambda1", &RunConfig::lambda1),
        field("lambda2", &RunConfig::lambda2),
    };
    return f;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool power_of_three(int L) {
    if (L < 1) return false;
    while (L % 3 == 0) L /= 3;
    return L == 1;
}

double amplitudes(int local_dim, int L) { return std::pow(static_cast<double>(local_dim), L); }

int group_order(const std::vector<int>& moduli) {
    return std::accumulate(moduli.begin(), moduli.end(), 1, std::multiplies<int>());
}

void check_group(const RunConfig& c, std::vector<std::string>& bad, bool need_mnc) {
    bool ok = !c.moduli.empty();
    if (!ok) bad.push_back("moduli must be non-empty");
    for (int m : c.moduli)
        if (m < 2) {
            bad.push_back("every modulus must be at least 2");
            ok = false;
        }
    if (!need_mnc) return;
    const int rank = static_cast<int>(c.moduli.size());
    bool nontrivial = false;
    for (const auto& [i, j, w] : c.omega) {
        if (w != 0) nontrivial = true;
        if (!(0 <= i && i < j && j < rank)) {
            if (rank == 1 && w != 0)
                bad.push_back("a cyclic group has no nontrivial projective class");
            else
                bad.push_back("omega entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is out of range");
            ok = false;
        }
    }
    if (!ok) return;
    if (!nontrivial) {
        bad.push_back("recognition needs a nontrivial omega");
        return;
    }
    try {
        std::vector<std::tuple<int, int, int>> e;
        for (const auto& [i, j, w] : c.omega) e.emplace_back(i, j, w);
        const FactorSet fs(FiniteAbelianGroup(c.moduli), e);
        if (!fs.is_mnc())
            bad.push_back("omega is not maximally non-commutative; nontrivial MNC classes need G = G' x G'");
    } catch (const std::exception& ex) {
        bad.push_back(std::string("invalid factor set: ") + ex.what());
    }
}

void check_length(int L, const char* key, std::vector<std::string>& bad) {
    if (!power_of_three(L) || L < 3) bad.push_back(std::string(key) + " must be a power of 3 and at least 3");
}

}  // namespace

config_error::config_error(std::vector<std::string> problems)
    : std::runtime_error("invalid configuration: " + join(problems)), problems_(std::move(problems)) {}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : fields()) k.push_back(f.key);
        return k;
    }();
    return keys;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::vector<std::string> bad;
    std::set<std::string> seen;
    std::map<std::string, const Field*> by_key;
    for (const auto& f : fields()) by_key[f.key] = &f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) {
            bad.push_back(where + "expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            bad.push_back(where + "unknown key '" + key + "'");
            continue;
        }
        if (!seen.insert(key).second) {
            bad.push_back(where + "duplicate key '" + key + "'");
            continue;
        }
        try {
            it->second->read(cfg, json::parse(value));
        } catch (const std::exception& ex) {
            bad.push_back(where + "bad value for '" + key + "': " + ex.what());
        }
    }
    if (!seen.count("kind")) bad.push_back("missing required key 'kind'");
    if (!seen.count("seed")) bad.push_back("missing required key 'seed'");
    if (!bad.empty()) throw config_error(bad);
    validate_config(cfg);
    return cfg;
}

void validate_config(const RunConfig& c) {
    std::vector<std::string> bad;
    static const std::set<std::string> kinds = {"recognize", "flow", "ssb", "nonmnc", "sweep"};
    if (!kinds.count(c.kind)) bad.push_back("kind must be one of recognize, flow, ssb, nonmnc, sweep");
    if (c.depth < 0) bad.push_back("depth must be non-negative");
    if (c.shots < 0) bad.push_back("shots must be non-negative");
    if (!(c.tau_in > 0 && c.tau_in <= 1)) bad.push_back("tau_in must lie in (0, 1]");
    if (!(c.tau_out > 0 && c.tau_out < 1)) bad.push_back("tau_out must lie in (0, 1)");
    if (!(c.delta > 0)) bad.push_back("delta must be positive");

    if (c.kind == "recognize") {
        check_group(c, bad, true);
        check_length(c.L, "L", bad);
        if (power_of_three(c.L) && c.L >= 3 && c.depth > exact_log3(c.L)) bad.push_back("depth exceeds log3(L)");
        static const std::set<std::string> states = {"reference", "product", "randomized"};
        if (!states.count(c.state)) bad.push_back("state must be reference, product or randomized");
        const int n = c.moduli.empty() ? 1 : group_order(c.moduli);
        if (!c.errors.empty() && static_cast<int>(c.errors.size()) != c.L) bad.push_back("errors must list one element per site");
        for (int e : c.errors)
            if (e < 0 || e >= n) bad.push_back("error element out of range");
        if (c.g_bullet >= n) bad.push_back("g_bullet out of range");
    } else if (c.kind == "flow") {
        static const std::set<std::string> models = {"iid", "markov", "gerrymander", "random_mps", "circuit"};
        if (!models.count(c.error_model)) bad.push_back("error_model must be iid, markov, gerrymander, random_mps or circuit");
        if (c.p.size() < 2) bad.push_back("p needs at least two labels");
        double s = 0;
        for (double x : c.p) {
            if (x < 0) bad.push_back("p entries must be non-negative");
            s += x;
        }
        if (std::abs(s - 1.0) > 1e-12) bad.push_back("p must sum to 1");
        if (!(c.xi > 0)) bad.push_back("xi must be positive");
        if (!(c.f >= 0 && c.f <= 1)) bad.push_back("f must lie in [0, 1]");
        if (c.labels < 3) bad.push_back("labels must be at least 3");
        if (c.chi < 1) bad.push_back("chi must be at least 1");
        if (c.k < 1 || c.k > 6) bad.push_back("k must lie in 1..6");
        if (c.trials < 0) bad.push_back("trials must be non-negative");
        if (c.error_model != "iid" && c.trials == 0) bad.push_back("non-iid error models need trials > 0");
    } else if (c.kind == "ssb") {
        check_group(c, bad, false);
        check_length(c.L, "L", bad);
        if (power_of_three(c.L) && c.L >= 3 && c.depth > exact_log3(c.L)) bad.push_back("depth exceeds log3(L)");
        if (c.state != "paramagnet" && c.state != "ordered") bad.push_back("state must be paramagnet or ordered");
        const int n = c.moduli.empty() ? 1 : group_order(c.moduli);
        if (c.sector < 0 || c.sector >= n) bad.push_back("sector out of range");
        if (!(c.eps >= 0 && c.eps < 1)) bad.push_back("eps must lie in [0, 1)");
    } else if (c.kind == "nonmnc") {
        if ((c.ext_p != 2 && c.ext_p != 3) || (c.ext_q != 2 && c.ext_q != 3)) bad.push_back("ext_p and ext_q must be 2 or 3");
        check_length(c.L, "L", bad);
        if (power_of_three(c.L) && c.L >= 3 && c.depth > exact_log3(c.L)) bad.push_back("depth exceeds log3(L)");
        const int n = c.ext_p * c.ext_q * c.ext_p * c.ext_q;
        if (c.pair_element < 0 || c.pair_element >= n) bad.push_back("pair_element out of range");
        if (c.pair_site < 0 || c.pair_site + 1 >= c.L) bad.push_back("pair_site must leave room for site pair_site + 1");
    } else if (c.kind == "sweep") {
        if (c.N != 2) bad.push_back("exact diagonalisation is restricted to N = 2");
        check_length(c.LG, "LG", bad);
        if (power_of_three(c.LG) && c.LG >= 3 && c.depth > exact_log3(c.LG)) bad.push_back("depth exceeds log3(LG)");
        if (c.lambda1.empty()) bad.push_back("lambda1 must be non-empty");
    }
    if (!bad.empty()) throw config_error(bad);

    const double cap = static_cast<double>(DenseState::size_cap());
    if (c.kind == "recognize") {
        const int n = group_order(c.moduli);
        if (amplitudes(n, c.L) > cap && (c.L > 27 || (n > 4 && c.depth > 1)))
            throw cap_error("state exceeds both the dense cap and the chain engine's reach");
    } else if (c.kind == "ssb") {
        if (amplitudes(group_order(c.moduli), c.L) > cap) throw cap_error("state exceeds the dense amplitude cap");
    } else if (c.kind == "nonmnc") {
        if (c.L > 9) throw cap_error("non-MNC chains are limited to L <= 9");
    } else if (c.kind == "sweep") {
        if (amplitudes(c.N * c.N, c.LG) > cap) throw cap_error("cluster Hilbert space exceeds the dense amplitude cap");
    } else if (c.kind == "flow") {
        if (c.trials > 0 && static_cast<double>(c.trials) * std::pow(3.0, c.depth) > 1e10)
            throw cap_error("Monte Carlo workload exceeds the sampling cap");
    }
}

std::string serialize_config(const RunConfig& cfg) {
    std::string out;
    for (const auto& f : fields()) out += f.key + " = " + f.write(cfg).dump() + "\n";
    return out;
}

std::string config_json(const RunConfig& cfg) {
    json j = json::object();
    for (const auto& f : fields()) j[f.key] = f.write(cfg);
    return j.dump();
}

}  // namespace spt
