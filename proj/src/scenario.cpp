#include "slowlight/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "slowlight/energy.hpp"
#include "slowlight/fresnel.hpp"

namespace slowlight {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::vector<double> log_spaced(const LogRange& r) {
    std::vector<double> out(r.n);
    const double llo = std::log(r.lo);
    const double lhi = std::log(r.hi);
    for (std::size_t i = 0; i < r.n; ++i)
        out[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                    static_cast<double>(r.n - 1));
    out.front() = r.lo;
    out.back() = r.hi;
    return out;
}

std::vector<double> lin_spaced(const LinRange& r) {
    std::vector<double> out(r.n);
    for (std::size_t i = 0; i < r.n; ++i)
        out[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(r.n - 1);
    out.back() = r.hi;
    return out;
}

MediumModel single_model(const ScenarioConfig& cfg) {
    if (cfg.alpha) return MediumModel(cfg.n0, *cfg.alpha, cfg.omega0);
    return model_for_group_velocity(cfg.n0, cfg.omega0,
                                    *cfg.vg_over_c * speed_of_light);
}

ManifestModel manifest_model(const MediumModel& m, std::optional<double> delta_omega) {
    ManifestModel out;
    out.vg_over_c = group_velocity_center(m) / speed_of_light;
    out.alpha = m.alpha;
    out.omega_c = cutoff_frequency(m);
    if (delta_omega) out.r = boundary_parameter_r(m, *delta_omega);
    return out;
}

ManifestGrid manifest_grid(const ScenarioConfig& cfg) {
    // Fraction of the analytic |A|^2 weight outside the grid span.
    const double sigma = cfg.delta_omega / (2.0 * std::sqrt(std::log(2.0)));
    return ManifestGrid{cfg.count, cfg.halfwidth,
                        std::erfc(cfg.halfwidth * cfg.delta_omega / sigma)};
}

std::vector<double> fig1b_vg_list(const ScenarioConfig& cfg) {
    if (!cfg.vg_list.empty()) return cfg.vg_list;
    if (cfg.vg_log_range) return log_spaced(*cfg.vg_log_range);
    return log_spaced(LogRange{1e-10, 1e-6, 241});
}

void run_fig1a(const ScenarioConfig& cfg, RunResult& out) {
    std::vector<double> vgs = cfg.vg_list;
    if (vgs.empty()) vgs = {1e-9, 1e-8, 2e-8};
    const LinRange det = cfg.detuning_range.value_or(LinRange{-1e-8, 1e-8, 801});
    out.csv += "vg_over_c,scaled_detuning,R\n";
    for (double vgc : vgs) {
        const MediumModel m =
            model_for_group_velocity(cfg.n0, cfg.omega0, vgc * speed_of_light);
        out.manifest.models.push_back(manifest_model(m, std::nullopt));
        for (double d : lin_spaced(det)) {
            const double R =
                boundary_coefficients(epsilon(m, cfg.omega0 * (1.0 + d))).reflectance_R;
            out.csv += fmt(vgc) + "," + fmt(d) + "," + fmt(R) + "\n";
        }
    }
}

void run_fig1b(const ScenarioConfig& cfg, RunResult& out) {
    const std::vector<double> vgs = fig1b_vg_list(cfg);
    out.csv += "vg_over_c,R_low_tail,R_high_tail\n";
    for (std::size_t i = 0; i < vgs.size(); ++i) {
        const MediumModel m =
            model_for_group_velocity(cfg.n0, cfg.omega0, vgs[i] * speed_of_light);
        if (i == 0 || i + 1 == vgs.size())
            out.manifest.models.push_back(manifest_model(m, std::nullopt));
        const double low =
            boundary_coefficients(epsilon(m, cfg.omega0 * (1.0 - 5e-9))).reflectance_R;
        const double high =
            boundary_coefficients(epsilon(m, cfg.omega0 * (1.0 + 5e-9))).reflectance_R;
        out.csv += fmt(vgs[i]) + "," + fmt(low) + "," + fmt(high) + "\n";
    }
}

void run_sweep(const ScenarioConfig& cfg, int threads, RunResult& out) {
    std::vector<double> vgs_over_c =
        cfg.vg_log_range ? log_spaced(*cfg.vg_log_range) : cfg.vg_list;
    std::vector<double> vgs(vgs_over_c.size());
    for (std::size_t i = 0; i < vgs.size(); ++i) vgs[i] = vgs_over_c[i] * speed_of_light;

    const PacketOptions packet{cfg.halfwidth, cfg.count};
    const SweepResult sweep =
        sweep_TE(cfg.n0, cfg.omega0, cfg.delta_omega, vgs, packet, threads);
    if (!sweep.errors.empty()) {
        const SweepError& e = sweep.errors.front();
        throw std::domain_error("sweep row " + std::to_string(e.index) + " (vg = " +
                                fmt(e.vg) + " m/s): " + e.message);
    }

    out.csv += "vg_over_c,TE\n";
    for (const SweepRow& row : sweep.rows)
        out.csv += fmt(row.vg_over_c) + "," + fmt(row.te) + "\n";

    for (double vgc : {vgs_over_c.front(), vgs_over_c.back()}) {
        const MediumModel m =
            model_for_group_velocity(cfg.n0, cfg.omega0, vgc * speed_of_light);
        out.manifest.models.push_back(manifest_model(m, cfg.delta_omega));
    }
    out.manifest.grid = manifest_grid(cfg);
}

void run_fig3(const ScenarioConfig& cfg, RunResult& out) {
    const MediumModel m = single_model(cfg);
    const double wc = cutoff_frequency(m);
    out.manifest.models.push_back(manifest_model(m, std::nullopt));

    LinRange range;
    if (cfg.freq_range) {
        range = *cfg.freq_range;
    } else {
        range = LinRange{(wc / cfg.omega0) * (1.0 + 1e-6), 3.0, 600};
    }
    // The ionosphere/waveguide comparison shares the cutoff frequency.
    const double omega_p = wc;
    out.csv += "scaled_frequency,vg_slow_over_c,vg_plasma_over_c\n";
    for (double x : lin_spaced(range)) {
        const double w = x * cfg.omega0;
        if (!(w > wc)) continue;
        const double vs = group_velocity_at(m, w) / speed_of_light;
        const double vp = plasma_group_velocity(omega_p, w) / speed_of_light;
        out.csv += fmt(x) + "," + fmt(vs) + "," + fmt(vp) + "\n";
    }
}

void run_custom_reflectance(const ScenarioConfig& cfg, RunResult& out) {
    const MediumModel m = single_model(cfg);
    out.manifest.models.push_back(manifest_model(m, std::nullopt));
    const LinRange det = cfg.detuning_range.value_or(LinRange{-1e-8, 1e-8, 801});
    out.csv += "scaled_detuning,R\n";
    for (double d : lin_spaced(det)) {
        const double R =
            boundary_coefficients(epsilon(m, cfg.omega0 * (1.0 + d))).reflectance_R;
        out.csv += fmt(d) + "," + fmt(R) + "\n";
    }
}

void run_eit(const ScenarioConfig& cfg, RunResult& out) {
    const EITParameters p(cfg.density, cfg.wavelength, cfg.gamma, cfg.rabi);
    const EitEstimate est = eit_boundary_parameter(p);
    out.manifest.eit = est;
    out.csv += "density,wavelength,r,delta_omega,vg_estimate\n";
    out.csv += fmt(cfg.density) + "," + fmt(cfg.wavelength) + "," + fmt(est.r) + "," +
               fmt(est.delta_omega) + "," + fmt(est.vg_estimate) + "\n";
}

}  // namespace

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["tool_version"] = version;
    j["scenario"] = scenario;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config_echo) echo[k] = v;
    j["config"] = echo;
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (const ManifestModel& m : models) {
        nlohmann::ordered_json jm;
        jm["vg_over_c"] = m.vg_over_c;
        jm["alpha"] = m.alpha;
        jm["omega_c"] = m.omega_c;
        if (m.r) jm["r"] = *m.r;
        ms.push_back(jm);
    }
    j["models"] = ms;
    if (grid) {
        nlohmann::ordered_json jg;
        jg["count"] = grid->count;
        jg["halfwidth"] = grid->halfwidth;
        jg["truncated_energy_fraction"] = grid->truncated_energy_fraction;
        j["grid"] = jg;
    }
    if (eit) {
        nlohmann::ordered_json je;
        je["r"] = eit->r;
        je["delta_omega"] = eit->delta_omega;
        je["vg_estimate"] = eit->vg_estimate;
        j["eit"] = je;
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const Spectrum& spec) {
    std::string out = "omega,amplitude_re,amplitude_im\n";
    for (std::size_t i = 0; i < spec.grid.count; ++i)
        out += fmt(spec.grid.point(i)) + "," + fmt(spec.amplitudes[i].real()) + "," +
               fmt(spec.amplitudes[i].imag()) + "\n";
    return out;
}

std::string to_csv(const TimeSeries& series) {
    std::string out = "time,envelope_re,envelope_im\n";
    for (std::size_t i = 0; i < series.envelope.size(); ++i)
        out += fmt(series.time(i)) + "," + fmt(series.envelope[i].real()) + "," +
               fmt(series.envelope[i].imag()) + "\n";
    return out;
}

RunResult run_scenario(const ScenarioConfig& cfg, int threads) {
    RunResult out;
    out.manifest.version = tool_version;
    out.manifest.scenario = std::string(scenario_name(cfg.scenario));
    out.manifest.config_echo = cfg.echo;

    switch (cfg.scenario) {
        case Scenario::fig1a: run_fig1a(cfg, out); break;
        case Scenario::fig1b: run_fig1b(cfg, out); break;
        case Scenario::fig2:
        case Scenario::custom_sweep: run_sweep(cfg, threads, out); break;
        case Scenario::fig3: run_fig3(cfg, out); break;
        case Scenario::custom_reflectance: run_custom_reflectance(cfg, out); break;
        case Scenario::eit_estimate: run_eit(cfg, out); break;
    }
    return out;
}

}  // namespace slowlight
