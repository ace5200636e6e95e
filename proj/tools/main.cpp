// Command-line front end: one subcommand per pipeline plus the seeded selftest.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "spt/config.hpp"
#include "spt/dense_state.hpp"
#include "spt/experiment.hpp"
#include "spt/selftest.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kResource = 2, kNumerical = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spt::config_error({"cannot read config file " + path});
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_kind(const std::string& kind, const std::string& config_path, const std::string& out,
             const std::optional<std::uint64_t>& seed) {
    spt::RunConfig cfg = spt::parse_config(read_file(config_path));
    if (cfg.kind != kind) throw spt::config_error({"config kind '" + cfg.kind + "' does not match subcommand '" + kind + "'"});
    if (seed) cfg.seed = *seed;
    spt::validate_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    const spt::RunResult result = spt::run_experiment(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::filesystem::create_directories(out);
    spt::emit_results(result, out);
    std::ofstream(std::filesystem::path(out) / (kind + "_timing.txt")) << "wall_seconds " << secs << "\n";
    std::cout << spt::to_csv(result);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognition of symmetry-protected topological phases by renormalisation circuits"};
    app.set_version_flag("--version", spt::kVersion);
    app.require_subcommand(1);

    std::string config_path, out = "out";
    std::optional<std::uint64_t> seed;
    std::uint64_t selftest_seed = 1;

    const char* kinds[] = {"recognize", "flow", "ssb", "nonmnc", "sweep"};
    const char* blurbs[] = {"string-order recognition of an MNC phase", "majority-vote error flow",
                            "symmetry-breaking recogniser", "non-MNC extension protocol",
                            "cluster-model parameter sweep"};
    for (int k = 0; k < 5; ++k) {
        CLI::App* sub = app.add_subcommand(kinds[k], blurbs[k]);
        sub->add_option("--config", config_path, "run configuration (key = value lines)")->required();
        sub->add_option("--out", out, "output directory")->capture_default_str();
        sub->add_option("--seed", seed, "override the configured seed");
    }
    CLI::App* st = app.add_subcommand("selftest", "seeded invariant checks with fingerprints");
    st->add_option("--seed", selftest_seed, "seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "selftest") {
            const auto rows = spt::run_selftest(selftest_seed);
            std::cout << spt::format_selftest(rows);
            for (const auto& r : rows)
                if (!r.pass) return kNumerical;
            return kOk;
        }
        return run_kind(name, config_path, out, seed);
    } catch (const spt::config_error& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const spt::cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kResource;
    } catch (const spt::resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kResource;
    } catch (const spt::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    }
}
