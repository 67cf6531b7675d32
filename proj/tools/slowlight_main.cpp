#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slowlight/config.hpp"
#include "slowlight/scenario.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 2;
constexpr int exit_domain_error = 3;

int resolve_threads(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("SLOWLIGHT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

int write_outputs(const slowlight::RunResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << result.csv;
        return exit_ok;
    }
    {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return exit_config_error;
        }
        f << result.csv;
    }
    {
        const std::string manifest_path = out_path + ".manifest.json";
        std::ofstream f(manifest_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open manifest file '" << manifest_path << "'\n";
            return exit_config_error;
        }
        f << result.manifest.to_json();
    }
    return exit_ok;
}

int run_from_config(const std::string& config_path, const std::string& out_override,
                    int threads) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "config error: cannot read '" << config_path << "'\n";
        return exit_config_error;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    slowlight::ScenarioConfig cfg = slowlight::parse_config(buffer.str());
    if (!out_override.empty()) cfg.out = out_override;
    const slowlight::RunResult result = slowlight::run_scenario(cfg, resolve_threads(threads));
    return write_outputs(result, cfg.out);
}

int run_eit_estimate(double density, double wavelength, double gamma, double rabi,
                     const std::string& out_path) {
    slowlight::ScenarioConfig cfg;
    cfg.scenario = slowlight::Scenario::eit_estimate;
    cfg.density = density;
    cfg.wavelength = wavelength;
    cfg.gamma = gamma;
    cfg.rabi = rabi;
    cfg.echo = {{"scenario", "eit-estimate"},
                {"density", std::to_string(density)},
                {"wavelength", std::to_string(wavelength)},
                {"gamma", std::to_string(gamma)},
                {"rabi", std::to_string(rabi)}};
    const slowlight::RunResult result = slowlight::run_scenario(cfg);
    return write_outputs(result, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflection and transmission of optical wavepackets at the boundary "
                 "of an ultraslow-light medium"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    int threads = 0;
    CLI::App* run = app.add_subcommand("run", "Run a scenario from a config file");
    run->add_option("--config", config_path, "Path to a key = value scenario config")
        ->required();
    run->add_option("--out", out_path,
                    "CSV output path (default stdout); a .manifest.json is written "
                    "alongside when set");
    run->add_option("--threads", threads,
                    "Worker threads for sweep rows (default: SLOWLIGHT_THREADS or 1)");

    double density = 0.0, wavelength = 0.0, gamma = 1e7, rabi = 1e7;
    std::string eit_out;
    CLI::App* eit = app.add_subcommand(
        "estimate-eit", "Boundary-relevance estimate for an ideal radiative medium");
    eit->add_option("--density", density, "Atomic number density, m^-3")->required();
    eit->add_option("--wavelength", wavelength, "Optical wavelength, m")->required();
    eit->add_option("--gamma", gamma, "Radiative rate, rad/s (default 1e7)");
    eit->add_option("--rabi", rabi, "Driving Rabi frequency, rad/s (default 1e7)");
    eit->add_option("--out", eit_out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return run_from_config(config_path, out_path, threads);
        return run_eit_estimate(density, wavelength, gamma, rabi, eit_out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config_error;
    } catch (const slowlight::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
