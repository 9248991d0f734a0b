#include "jcfs/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "jcfs/classical_field.hpp"
#include "jcfs/operators.hpp"

namespace jcfs::app {

using json = nlohmann::ordered_json;
using classical::BasisAngle;
using classical::ModeAmplitudes;
using hilbert::TruncatedSpace;
using ops::SystemParams;

namespace {

constexpr double kPi = std::numbers::pi;

SystemParams make_params(double Omega, double Delta, double zeta, double alpha, int N) {
    SystemParams p;
    p.Omega = Omega;
    p.Delta = Delta;
    p.zeta = zeta;
    p.alpha = BasisAngle(alpha);
    p.N = N;
    return p;
}

json units_block() {
    json u;
    u["energy"] = "recoil units, E_rec = hbar^2 k^2 / 2M; eps_rel = eps - N*Omega";
    u["momentum"] = "hbar k";
    u["length"] = "1/k (eta = k z)";
    u["normalization"] = "per-period mean of sum_m |a_m|^2 + |b_m|^2 = 1";
    return u;
}

void append_metadata_csv(std::string& out, const json& config) {
    out += "# units: energy in E_rec relative to N*Omega; momentum in hbar*k; eta in 1/k\n";
    out += "# normalization: per-period mean of sum |a_m|^2 + |b_m|^2 = 1\n";
    for (const auto& [key, value] : config.items()) {
        out += "# " + key + " = ";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += "\n";
    }
}

}  // namespace

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

// ---------------------------------------------------------------- verify --

namespace {

CheckResult check_classical(const std::string& name, bool momentum) {
    std::mt19937 rng(momentum ? 424243 : 424242);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kPi / 2.0);
    double defect = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ModeAmplitudes f{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const BasisAngle alpha(angle(rng));
        const auto profile = classical::assemble_fields(f, alpha);
        const double scale = std::max(1.0, classical::energy_closed(f));
        const double measured = momentum ? classical::momentum_integrated(profile)
                                         : classical::energy_integrated(profile);
        const double closed = momentum ? classical::momentum_closed(f, alpha)
                                       : classical::energy_closed(f);
        defect = std::max(defect, std::abs(measured - closed) / scale);
    }
    return {name, defect, 1e-10, defect < 1e-10};
}

CheckResult check_momentum_diagonal(int n_max) {
    double defect = 0.0;
    for (int N : {1, 2}) {
        const TruncatedSpace space(N, 0.3, n_max);
        Eigen::MatrixXcd dense = ops::p_total(space, make_params(100.0, 10.0, 2.0, 0.0, N)).dense();
        dense.diagonal().setZero();
        defect = std::max(defect, dense.cwiseAbs().maxCoeff());
    }
    return {"momentum-diagonal", defect, 1e-14, defect < 1e-14};
}

CheckResult check_commutators(const VerifyOptions& options) {
    double defect = 0.0;
    const int margin = std::min(2, options.n_max - 1);
    for (int N : {1, 2}) {
        for (double alpha : options.alphas) {
            for (double zeta : {0.0, 1.0, 5.0}) {
                const TruncatedSpace space(N, 0.3, options.n_max);
                const auto params = make_params(100.0, 10.0, zeta, alpha, N);
                const auto H = ops::h_total(space, params);
                const auto P = ops::p_total(space, params);
                const auto Nop = ops::excitation_number(space);
                const auto T = ops::combined_translation(space);
                const std::vector<hilbert::SparseOperator> set{H, P, Nop, T};
                for (size_t a = 0; a < set.size(); ++a)
                    for (size_t b = a + 1; b < set.size(); ++b)
                        defect = std::max(defect,
                                          hilbert::interior_norm(commutator(set[a], set[b]), margin));
            }
        }
    }
    return {"commutators", defect, 1e-10, defect < 1e-10};
}

CheckResult check_traveling_oracle(int n_max) {
    double defect = 0.0;
    for (int N : {1, 2}) {
        for (double p : {0.0, 0.4, 1.2}) {
            const auto params = make_params(100.0, 10.0, 1.0, 0.0, N);
            const auto space = stationary::space_for_momentum(N, p, std::max(n_max, 8));
            const auto states = stationary::solve_joint(space, params, p, 2 * N + 1);
            const auto oracle = stationary::reduce_traveling(params, p).eigenvalues();
            for (size_t i = 0; i < states.size(); ++i)
                defect = std::max(defect,
                                  std::abs(states[i].eps - double(N) * 100.0 - oracle[int(i)]));
        }
    }
    return {"traveling-oracle", defect, 1e-8, defect < 1e-8};
}

CheckResult check_basis_invariance(const VerifyOptions& options) {
    double defect = 0.0;
    const TruncatedSpace space(1, 0.3, options.n_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> base(
        ops::h_total(space, make_params(100.0, 10.0, 5.0, 0.0, 1)).dense());
    for (double alpha : options.alphas) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rotated(
            ops::h_total(space, make_params(100.0, 10.0, 5.0, alpha, 1)).dense());
        defect = std::max(defect,
                          (base.eigenvalues() - rotated.eigenvalues()).cwiseAbs().maxCoeff());
    }
    return {"spectrum-basis-invariance", defect, 1e-10, defect < 1e-10};
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    if (options.n_max < 2)
        throw std::invalid_argument("verify: n_max must be at least 2");
    std::vector<CheckResult> results;
    auto wanted = [&](const std::string& name) {
        return options.only.empty() || name.find(options.only) != std::string::npos;
    };
    if (wanted("classical-energy")) results.push_back(check_classical("classical-energy", false));
    if (wanted("classical-momentum")) results.push_back(check_classical("classical-momentum", true));
    if (wanted("momentum-diagonal")) results.push_back(check_momentum_diagonal(options.n_max));
    if (wanted("commutators")) results.push_back(check_commutators(options));
    if (wanted("traveling-oracle")) results.push_back(check_traveling_oracle(options.n_max));
    if (wanted("spectrum-basis-invariance")) results.push_back(check_basis_invariance(options));
    return results;
}

// -------------------------------------------------------------- spectrum --

TextOutput run_spectrum(const SpectrumConfig& config) {
    if (config.p_step <= 0.0 || config.p_max < config.p_min)
        throw std::invalid_argument("spectrum: need p_max >= p_min and p_step > 0");
    const bool traveling = std::abs(BasisAngle(config.alpha).value()) < 1e-15;
    const double xi = config.xi_override.value_or(
        config.Delta > 0.0 ? config.zeta * config.zeta / config.Delta : 0.0);

    json meta;
    meta["command"] = "spectrum";
    meta["alpha"] = config.alpha;
    meta["N"] = config.N;
    meta["Omega"] = config.Omega;
    meta["Delta"] = config.Delta;
    meta["zeta"] = config.zeta;
    meta["xi"] = xi;
    meta["adiabatic"] = config.adiabatic;
    meta["n_max"] = config.n_max;
    meta["p_min"] = config.p_min;
    meta["p_max"] = config.p_max;
    meta["p_step"] = config.p_step;
    meta["mode"] = traveling ? "traveling-reduction" : "momentum-sector-scan";

    std::string csv;
    append_metadata_csv(csv, meta);
    csv += config.adiabatic && traveling ? "p,branch,eps_rel,adiabatic_eps\n" : "p,branch,eps_rel\n";

    json rows = json::array();
    const auto params = make_params(config.Omega, config.Delta, config.zeta, config.alpha, config.N);
    for (double p = config.p_min; p <= config.p_max + 1e-12; p += config.p_step) {
        std::vector<double> eps_rel;
        std::vector<bool> lower_dominant;
        if (traveling) {
            const auto red = stationary::reduce_traveling(params, p);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(red.matrix);
            for (int i = 0; i < es.eigenvalues().size(); ++i) {
                eps_rel.push_back(es.eigenvalues()[i]);
                double a_weight = 0.0;
                for (int r = 0; r <= config.N; ++r) a_weight += es.eigenvectors()(r, i) * es.eigenvectors()(r, i);
                lower_dominant.push_back(a_weight >= 0.5);
            }
        } else {
            const auto space = stationary::space_for_momentum(config.N, p, config.n_max);
            const auto states = stationary::solve_joint(space, params, p, 2 * config.N + 1);
            for (const auto& st : states) {
                eps_rel.push_back(st.eps - double(config.N) * config.Omega);
                lower_dominant.push_back(st.amplitudes.lower_weight() >= 0.5);
            }
        }
        std::optional<adiabatic::TravelingSpectrum> overlay;
        if (config.adiabatic && traveling) overlay = adiabatic::spectrum_traveling(xi, p);
        int lower_rank = 0;
        for (size_t i = 0; i < eps_rel.size(); ++i) {
            json row;
            row["p"] = p;
            row["branch"] = int(i);
            row["eps_rel"] = eps_rel[i];
            csv += format_number(p) + "," + std::to_string(i) + "," + format_number(eps_rel[i]);
            if (overlay) {
                std::string cell;
                if (lower_dominant[i] && lower_rank < 2) {
                    const double value = lower_rank == 0 ? overlay->minus : overlay->plus;
                    cell = format_number(value);
                    row["adiabatic_eps"] = value;
                    ++lower_rank;
                }
                csv += "," + cell;
            }
            csv += "\n";
            rows.push_back(row);
        }
    }

    json out;
    out["config"] = meta;
    out["units"] = units_block();
    out["rows"] = rows;
    return {csv, out.dump(2) + "\n"};
}

// ----------------------------------------------------------------- bands --

TextOutput run_bands(const BandsConfig& config) {
    const auto floquet = adiabatic::band_structure(config.xi, config.p, config.eps_min,
                                                   config.eps_max, config.eps_step, config.ode_tol,
                                                   adiabatic::HillForm::full);
    const auto mathieu = adiabatic::mathieu_bands(config.xi, config.p, config.levels);

    json meta;
    meta["command"] = "bands";
    meta["xi"] = config.xi;
    meta["p"] = config.p;
    meta["eps_min"] = config.eps_min;
    meta["eps_max"] = config.eps_max;
    meta["eps_step"] = config.eps_step;
    meta["ode_tol"] = config.ode_tol;
    meta["levels"] = config.levels;

    std::string csv;
    append_metadata_csv(csv, meta);
    csv += "band_index,eps_rel,p_quasi\n";
    for (const auto& band : floquet.bands)
        for (size_t i = 0; i < band.eps.size(); ++i)
            csv += std::to_string(band.index) + "," + format_number(band.eps[i]) + "," +
                   format_number(band.p_quasi[i]) + "\n";

    std::vector<double> floquet_edges;
    for (const auto& band : floquet.bands) {
        floquet_edges.push_back(band.lo);
        floquet_edges.push_back(band.hi);
    }

    json out;
    out["config"] = meta;
    out["units"] = units_block();
    out["gaps"] = json::array();
    for (const auto& gap : floquet.gaps)
        out["gaps"].push_back({{"index", gap.index},
                               {"lower", gap.lower},
                               {"upper", gap.upper},
                               {"width", gap.width}});
    out["floquet_edges"] = floquet_edges;
    out["mathieu"] = {{"q_eff", mathieu.q_eff}, {"phi", mathieu.phi}, {"edges", mathieu.edges}};
    json disagreement = json::array();
    const size_t shared = std::min(floquet_edges.size(), mathieu.edges.size());
    for (size_t i = 0; i < shared; ++i)
        disagreement.push_back(std::abs(floquet_edges[i] - mathieu.edges[i]));
    out["edge_disagreement"] = disagreement;
    out["max_im_discriminant"] = floquet.max_im_discriminant;
    return {csv, out.dump(2) + "\n"};
}

// --------------------------------------------------------------- density --

TextOutput run_density(const DensityConfig& config) {
    const double xi = config.xi_override.value_or(
        config.Delta > 0.0 ? config.zeta * config.zeta / config.Delta : 0.0);

    stationary::AmplitudeField amps;
    double eps_rel = 0.0;
    if (config.adiabatic) {
        const auto state = adiabatic::ground_band_state(xi, config.p);
        amps = adiabatic::hill_state_amplitudes(state, xi, config.p);
        eps_rel = state.eps_rel;
    } else {
        const auto params =
            make_params(config.Omega, config.Delta, config.zeta, config.alpha, config.N);
        const auto space = stationary::space_for_momentum(config.N, config.p, config.n_max);
        const auto states = stationary::solve_joint(space, params, config.p, 1);
        if (states.empty())
            throw std::invalid_argument("density: no states at this momentum");
        amps = states[0].amplitudes;
        eps_rel = states[0].eps - double(config.N) * config.Omega;
    }
    const auto profile = density::reduced_density(amps, config.samples);

    json meta;
    meta["command"] = "density";
    meta["adiabatic"] = config.adiabatic;
    meta["alpha"] = config.alpha;
    meta["N"] = config.N;
    meta["Omega"] = config.Omega;
    meta["Delta"] = config.Delta;
    meta["zeta"] = config.zeta;
    meta["xi"] = xi;
    meta["p"] = config.p;
    meta["n_max"] = config.n_max;
    meta["samples"] = config.samples;
    meta["eps_rel"] = eps_rel;

    std::string csv;
    append_metadata_csv(csv, meta);
    csv += "eta,rho\n";
    for (int j = 0; j < profile.eta.size(); ++j)
        csv += format_number(profile.eta[j]) + "," + format_number(profile.rho[j]) + "\n";

    json out;
    out["config"] = meta;
    out["units"] = units_block();
    out["mean"] = density::mean(profile);
    out["uniformity"] = density::uniformity(profile);
    out["periodicity_pi"] = density::periodicity(profile, kPi);
    return {csv, out.dump(2) + "\n"};
}

}  // namespace jcfs::app
