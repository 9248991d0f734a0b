// jcfs — stationary states of a two-level atom coupled to a quantized
// two-mode field: verification suites, spectra, band structure, densities.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jcfs/app.hpp"

namespace {

int write_output(const jcfs::app::TextOutput& output, const std::string& path,
                 const std::string& format) {
    if (path.empty()) {
        std::cout << (format == "json" ? output.json : output.csv);
        return 0;
    }
    std::ofstream csv(path);
    if (!csv) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    csv << output.csv;
    const std::string json_path =
        path + (path.size() > 4 && path.substr(path.size() - 4) == ".csv" ? "" : "") + ".json";
    std::ofstream json(json_path);
    json << output.json;
    std::cerr << "wrote " << path << " and " << json_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"stationary states of a two-level atom in a quantized two-mode field"};
    cli.require_subcommand(1);

    // ----- verify
    auto* verify = cli.add_subcommand("verify", "run the built-in verification suites");
    jcfs::app::VerifyOptions verify_options;
    std::optional<double> verify_alpha;
    verify->add_option("--n-max", verify_options.n_max, "plane-wave cutoff");
    verify->add_option("--alpha", verify_alpha, "restrict to one basis angle (radians)");
    verify->add_option("--check", verify_options.only, "run only checks matching this name");

    // ----- spectrum
    auto* spectrum = cli.add_subcommand("spectrum", "joint (H, P) eigenvalues");
    jcfs::app::SpectrumConfig spectrum_config;
    std::optional<double> spectrum_p, spectrum_xi;
    std::string spectrum_out, spectrum_format = "csv";
    spectrum->add_option("--alpha", spectrum_config.alpha, "basis angle (radians)");
    spectrum->add_option("--N", spectrum_config.N, "excitation number");
    spectrum->add_option("--Omega", spectrum_config.Omega, "photon energy, recoil units");
    spectrum->add_option("--Delta", spectrum_config.Delta, "detuning, recoil units");
    spectrum->add_option("--zeta", spectrum_config.zeta, "coupling, recoil units");
    spectrum->add_option("--xi", spectrum_xi, "override the effective coupling zeta^2/Delta");
    spectrum->add_option("--p", spectrum_p, "single total momentum, hbar k");
    spectrum->add_option("--p-min", spectrum_config.p_min, "momentum scan start");
    spectrum->add_option("--p-max", spectrum_config.p_max, "momentum scan end");
    spectrum->add_option("--p-step", spectrum_config.p_step, "momentum scan step");
    spectrum->add_flag("--adiabatic", spectrum_config.adiabatic,
                       "overlay the closed-form branches (alpha = 0)");
    spectrum->add_option("--n-max", spectrum_config.n_max, "plane-wave cutoff");
    spectrum->add_option("-o,--output", spectrum_out, "CSV path (JSON written alongside)");
    spectrum->add_option("--format", spectrum_format, "stdout format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // ----- bands
    auto* bands = cli.add_subcommand("bands", "Floquet and Mathieu band structure");
    jcfs::app::BandsConfig bands_config;
    std::string bands_out, bands_format = "csv";
    bands->add_option("--xi", bands_config.xi, "effective coupling");
    bands->add_option("--p", bands_config.p, "total momentum, hbar k");
    bands->add_option("--eps-min", bands_config.eps_min, "scan start, eps_rel");
    bands->add_option("--eps-max", bands_config.eps_max, "scan end, eps_rel");
    bands->add_option("--eps-step", bands_config.eps_step, "scan step");
    bands->add_option("--ode-tol", bands_config.ode_tol, "monodromy integration tolerance");
    bands->add_option("--levels", bands_config.levels, "Mathieu bands to compute");
    bands->add_option("-o,--output", bands_out, "CSV path (JSON written alongside)");
    bands->add_option("--format", bands_format, "stdout format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // ----- density
    auto* density = cli.add_subcommand("density", "reduced centre-of-mass density");
    jcfs::app::DensityConfig density_config;
    std::optional<double> density_xi;
    std::string density_out, density_format = "csv";
    density->add_flag("--adiabatic", density_config.adiabatic,
                      "use the standing-wave ground-band state");
    density->add_option("--alpha", density_config.alpha, "basis angle (radians)");
    density->add_option("--N", density_config.N, "excitation number");
    density->add_option("--Omega", density_config.Omega, "photon energy, recoil units");
    density->add_option("--Delta", density_config.Delta, "detuning, recoil units");
    density->add_option("--zeta", density_config.zeta, "coupling, recoil units");
    density->add_option("--xi", density_xi, "override the effective coupling zeta^2/Delta");
    density->add_option("--p", density_config.p, "total momentum, hbar k");
    density->add_option("--n-max", density_config.n_max, "plane-wave cutoff");
    density->add_option("--samples", density_config.samples, "grid points per period");
    density->add_option("-o,--output", density_out, "CSV path (JSON written alongside)");
    density->add_option("--format", density_format, "stdout format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (verify_alpha) verify_options.alphas = {*verify_alpha};
            const auto results = jcfs::app::run_verify(verify_options);
            bool all_pass = true;
            for (const auto& r : results) {
                std::printf("%-28s defect %.3e (tol %.1e) — %s\n", r.name.c_str(), r.defect,
                            r.tolerance, r.pass ? "PASS" : "FAIL");
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 1;
        }
        if (spectrum->parsed()) {
            if (spectrum_p) spectrum_config.p_min = spectrum_config.p_max = *spectrum_p;
            spectrum_config.xi_override = spectrum_xi;
            return write_output(jcfs::app::run_spectrum(spectrum_config), spectrum_out,
                                spectrum_format);
        }
        if (bands->parsed())
            return write_output(jcfs::app::run_bands(bands_config), bands_out, bands_format);
        if (density->parsed()) {
            density_config.xi_override = density_xi;
            return write_output(jcfs::app::run_density(density_config), density_out,
                                density_format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
