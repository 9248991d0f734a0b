// app.hpp — command implementations behind the CLI: verification suites and
// the spectrum / bands / density pipelines with CSV + JSON emission.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jcfs/adiabatic.hpp"
#include "jcfs/density.hpp"
#include "jcfs/stationary.hpp"

namespace jcfs::app {

struct CheckResult {
    std::string name;
    double defect = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    int n_max = 12;
    std::vector<double> alphas = {0.0, 0.3, 0.7853981633974483};
    std::string only;  // restrict to checks whose name contains this substring
};

std::vector<CheckResult> run_verify(const VerifyOptions& options);

// CSV plus a JSON companion carrying the same data and diagnostics; both
// embed the resolved configuration and unit conventions.
struct TextOutput {
    std::string csv;
    std::string json;
};

struct SpectrumConfig {
    double alpha = 0.0;
    int N = 1;
    double Omega = 100.0;
    double Delta = 100.0;
    double zeta = 1.0;
    std::optional<double> xi_override;
    double p_min = 0.0;
    double p_max = 0.0;
    double p_step = 0.1;
    bool adiabatic = false;
    int n_max = 12;
};

TextOutput run_spectrum(const SpectrumConfig& config);

struct BandsConfig {
    double xi = 0.5;
    double p = 0.0;
    double eps_min = -1.0;
    double eps_max = 6.0;
    double eps_step = 0.01;
    double ode_tol = 1e-10;
    int levels = 3;
};

TextOutput run_bands(const BandsConfig& config);

struct DensityConfig {
    bool adiabatic = false;
    double alpha = 0.0;
    int N = 1;
    double Omega = 100.0;
    double Delta = 100.0;
    double zeta = 1.0;
    std::optional<double> xi_override;
    double p = 0.0;
    int n_max = 12;
    int samples = 512;
};

TextOutput run_density(const DensityConfig& config);

std::string format_number(double value);  // fixed "%.12g" formatting

}  // namespace jcfs::app
