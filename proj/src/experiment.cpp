#include "spt/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "spt/cluster.hpp"
#include "spt/conv_gate.hpp"
#include "spt/error_flow.hpp"
#include "spt/non_mnc.hpp"
#include "spt/recognition.hpp"
#include "spt/ssb.hpp"

namespace spt {

const char* const kVersion = "1.0.0";

using nlohmann::json;

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

namespace {

FactorSet factor_set_of(const RunConfig& c) {
    std::vector<std::tuple<int, int, int>> e;
    for (const auto& [i, j, w] : c.omega) e.emplace_back(i, j, w);
    return FactorSet(FiniteAbelianGroup(c.moduli), e);
}

RecognitionOptions options_of(const RunConfig& c) {
    RecognitionOptions o;
    o.g_bullet = c.g_bullet;
    o.delta = c.delta;
    o.shots = c.shots;
    o.seed = c.seed;
    o.tau_in = c.tau_in;
    o.tau_out = c.tau_out;
    return o;
}

const std::vector<std::string> kRecognitionHeader = {"tag", "depth", "mso_re", "mso_im", "purity", "M_delta", "decision"};

std::vector<std::string> recognition_row(const std::string& tag, const DepthReport& r, const RecognitionOptions& o) {
    const bool defined = !std::isnan(r.mso.real());
    return {tag,
            std::to_string(r.depth),
            format_number(r.mso.real()),
            format_number(r.mso.imag()),
            format_number(r.purity),
            std::to_string(r.m_delta),
            defined ? to_string(decide(r.mso, o)) : "undefined"};
}

json depth_json(const RecognitionReport& rep) {
    json a = json::array();
    for (const auto& r : rep.depths)
        a.push_back({{"depth", r.depth},
                     {"mso_re", format_number(r.mso.real())},
                     {"mso_im", format_number(r.mso.imag())},
                     {"purity", format_number(r.purity)},
                     {"p_identity", format_number(r.p_identity)},
                     {"M_delta", r.m_delta},
                     {"shot_estimate", format_number(r.shot_estimate)}});
    return a;
}

template <class State>
RecognitionReport prepare_and_recognize(State s, const SptModel& m, const RunConfig& c, const RecognitionOptions& o) {
    if (c.state == "randomized") apply_random_symmetric_circuit(s, m.group(), c.seed);
    if (!c.errors.empty()) apply_errors(s, m.group(), c.errors);
    return recognize(s, m, conv_gate(m).C, c.depth, o);
}

RunResult run_recognize(const RunConfig& c) {
    const FactorSet fs = factor_set_of(c);
    const SptModel m(fs);
    const RecognitionOptions o = options_of(c);
    const double amps = std::pow(static_cast<double>(m.order()), c.L);
    const bool dense = amps <= static_cast<double>(DenseState::size_cap());
    RecognitionReport rep;
    if (c.state == "product") {
        if (dense)
            rep = prepare_and_recognize(DenseState(m.order(), c.L), m, c, o);
        else
            rep = prepare_and_recognize(MpsChain::product(m.order(), std::vector<int>(c.L, 0)), m, c, o);
    } else if (dense) {
        rep = prepare_and_recognize(reference_dense(fs, c.L), m, c, o);
    } else {
        rep = prepare_and_recognize(reference_chain(fs, c.L), m, c, o);
    }
    RunResult res;
    res.kind = c.kind;
    res.header = kRecognitionHeader;
    for (const auto& r : rep.depths) res.rows.push_back(recognition_row(c.state, r, o));
    json s = {{"engine", dense ? "dense" : "chain"},
              {"decision", to_string(rep.decision)},
              {"g_bullet", rep.g_bullet},
              {"span", {rep.span_first, rep.span_last}},
              {"depths", depth_json(rep)}};
    res.summary = s.dump();
    return res;
}

std::unique_ptr<ErrorModel> model_of(const RunConfig& c) {
    if (c.error_model == "iid") return make_iid_model(c.p);
    if (c.error_model == "markov") return make_markov_model(c.p, c.xi);
    if (c.error_model == "gerrymander") return make_gerrymander_model(c.labels, 0, c.f);
    if (c.error_model == "random_mps") return make_random_mps_model(static_cast<int>(c.p.size()), c.chi, c.seed);
    return make_circuit_model(c.k);
}

RunResult run_flow(const RunConfig& c) {
    RunResult res;
    res.kind = c.kind;
    res.header = {"depth", "element", "marginal", "stderr", "gap"};
    json s;
    if (c.trials == 0) {
        std::vector<double> p = c.p;
        const int n = static_cast<int>(p.size());
        json gaps = json::array();
        for (int d = 0; d <= c.depth; ++d) {
            const auto [a, b] = top_two(p);
            const double gap = p[a] - p[b];
            gaps.push_back(format_number(gap));
            for (int g = 0; g < n; ++g)
                res.rows.push_back({std::to_string(d), std::to_string(g), format_number(p[g]), "0", format_number(gap)});
            if (d < c.depth) p = maj_flow_step(iid_table3(p), n);
        }
        const GapReport gr = gap_and_depth(c.p, 1e-3);
        s = {{"mode", "exact"}, {"gap", gaps}, {"depth_bound_eps_1e-3", gr.bound}, {"depth_reached_eps_1e-3", gr.depth_reached}};
    } else {
        const auto model = model_of(c);
        const int L = ipow(3, c.depth);
        const MonteCarloReport mc = sample_majority_tree(*model, L, c.depth, c.trials, c.seed);
        json gaps = json::array();
        for (int d = 0; d <= c.depth; ++d) {
            gaps.push_back(format_number(mc.gap[d]));
            for (int g = 0; g < mc.n; ++g)
                res.rows.push_back({std::to_string(d), std::to_string(g), format_number(mc.marginal[d][g]),
                                    format_number(mc.std_error[d][g]), format_number(mc.gap[d])});
        }
        s = {{"mode", "monte_carlo"}, {"model", model->name()}, {"L", L}, {"trials", c.trials}, {"gap", gaps}};
    }
    res.summary = s.dump();
    return res;
}

RunResult run_ssb_kind(const RunConfig& c) {
    const FiniteAbelianGroup G(c.moduli);
    DenseState s = c.state == "paramagnet" ? paramagnet_state(G, c.L) : ordered_state_with_flips(G, c.L, c.sector, c.eps);
    const cmat C = ssb_gate(G).C;
    const LegLayout lay = make_layout(c.L, c.depth);
    RecognitionOptions o = options_of(c);
    const int g = default_g_bullet(G);
    RunResult res;
    res.kind = c.kind;
    res.header = kRecognitionHeader;
    json depths = json::array();
    for (int d = 0; d <= c.depth; ++d) {
        if (d > 0) apply_layer(s, C, lay, d);
        DepthReport r;
        r.depth = d;
        cplx acc = 0;
        for (int site : lay.renormalised[d]) acc += s.product_expectation({{site, regular_rep(G, g)}});
        r.mso = acc / static_cast<double>(lay.renormalised[d].size());
        if (d > 0) r.purity = ancilla_purity(s, lay, d);
        const double uniform = para_uniformity(s, G, lay, d);
        auto row = recognition_row(c.state, r, o);
        row.back() = std::abs(r.mso) > 1.0 - c.tau_in ? "in-phase" : (uniform < c.tau_out ? "out-of-phase" : "inconclusive");
        res.rows.push_back(row);
        depths.push_back({{"depth", d}, {"indicator_abs", format_number(std::abs(r.mso))}, {"max_abs_R", format_number(uniform)}});
    }
    res.summary = json{{"g", g}, {"depths", depths}}.dump();
    return res;
}

RunResult run_nonmnc(const RunConfig& c) {
    const CentralExtension ext(c.ext_p, c.ext_q);
    MpsChain chain = general_reference_chain(ext, c.L);
    if (c.pair_element != 0) {
        chain.apply_site(ext.X(c.pair_element), c.pair_site);
        chain.apply_site(ext.X(ext.group().neg(c.pair_element)), c.pair_site + 1);
    }
    const RecognitionOptions o = options_of(c);
    const NonMncReport rep = recognize_non_mnc(ext, chain, c.depth, o);
    std::string flav;
    for (int f : rep.outcome.flavours) flav += std::to_string(f) + ",";
    const std::string hash = hex64(fnv1a(flav));
    int weight = 0;
    for (int r : rep.outcome.rem) weight += r != 0;
    RunResult res;
    res.kind = c.kind;
    res.header = kRecognitionHeader;
    res.header.push_back("flavor_outcome_hash");
    res.header.push_back("rem_weight");
    for (const auto& r : rep.recognition.depths) {
        auto row = recognition_row("reference", r, o);
        row.push_back(hash);
        row.push_back(std::to_string(weight));
        res.rows.push_back(row);
    }
    json s = {{"decision", to_string(rep.recognition.decision)},
              {"flavours", rep.outcome.flavours},
              {"rem", rep.outcome.rem},
              {"symmetry_defect", format_number(rep.outcome.symmetry_defect)},
              {"depths", depth_json(rep.recognition)}};
    res.summary = s.dump();
    return res;
}

RunResult run_sweep(const RunConfig& c) {
    const SptModel m(FactorSet::zn2(c.N, 1));
    const cmat gate = conv_gate(m).C;
    RecognitionOptions o = options_of(c);
    LanczosOptions lo;
    lo.seed = c.seed;
    RunResult res;
    res.kind = c.kind;
    res.header = {"lambda1", "lambda2", "depth", "mso_re", "mso_im", "purity", "M_delta", "decision"};
    json points = json::array();
    for (double l1 : c.lambda1) {
        const ClusterGroundState gs = cluster_ground_state(m, l1, c.lambda2, c.LG, lo);
        const RecognitionReport rep = recognize(gs.state, m, gate, c.depth, o);
        for (const auto& r : rep.depths) {
            auto row = recognition_row("", r, o);
            row.erase(row.begin());
            row.insert(row.begin(), format_number(c.lambda2));
            row.insert(row.begin(), format_number(l1));
            res.rows.push_back(row);
        }
        points.push_back({{"lambda1", format_number(l1)},
                          {"energy", format_number(gs.energy)},
                          {"gap", format_number(gs.first_excited - gs.energy)},
                          {"residual_below_1e-8", gs.residual < 1e-8},
                          {"decision", to_string(rep.decision)}});
    }
    res.summary = json{{"points", points}}.dump();
    return res;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << text;
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

RunResult run_experiment(const RunConfig& cfg) {
    validate_config(cfg);
    RunResult r;
    if (cfg.kind == "recognize")
        r = run_recognize(cfg);
    else if (cfg.kind == "flow")
        r = run_flow(cfg);
    else if (cfg.kind == "ssb")
        r = run_ssb_kind(cfg);
    else if (cfg.kind == "nonmnc")
        r = run_nonmnc(cfg);
    else
        r = run_sweep(cfg);
    json s = {{"kind", cfg.kind},
              {"version", kVersion},
              {"seed", cfg.seed},
              {"config", json::parse(config_json(cfg))},
              {"result", json::parse(r.summary)}};
    r.summary = s.dump(2);
    return r;
}

std::string to_csv(const RunResult& result) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "," : "") + cells[k];
        out += "\n";
    };
    line(result.header);
    for (const auto& r : result.rows) line(r);
    return out;
}

void emit_results(const RunResult& result, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    write_atomically(base / (result.kind + ".csv"), to_csv(result));
    write_atomically(base / (result.kind + "_summary.json"), result.summary + "\n");
}

}  // namespace spt
