#include "jcfs/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcfs::density {

DensityProfile reduced_density(const stationary::AmplitudeField& amps, int n_samples) {
    const int minimum = 2 * (2 * amps.n_max + 1);
    if (n_samples < minimum)
        throw std::invalid_argument("reduced_density: undersampled grid");
    DensityProfile d;
    d.eta.resize(n_samples);
    d.rho = Eigen::VectorXd::Zero(n_samples);
    for (int j = 0; j < n_samples; ++j)
        d.eta[j] = 2.0 * std::numbers::pi * j / n_samples;
    auto accumulate = [&](const Eigen::VectorXcd& coeffs) {
        const Eigen::VectorXcd samples = amps.sample(coeffs, n_samples);
        for (int j = 0; j < n_samples; ++j) d.rho[j] += std::norm(samples[j]);
    };
    for (const auto& c : amps.lower) accumulate(c);
    for (const auto& c : amps.upper) accumulate(c);
    return d;
}

double mean(const DensityProfile& d) {
    if (d.rho.size() == 0) throw std::invalid_argument("density: empty profile");
    return d.rho.mean();
}

double uniformity(const DensityProfile& d) {
    const double m = mean(d);
    double out = 0.0;
    for (Eigen::Index j = 0; j < d.rho.size(); ++j)
        out = std::max(out, std::abs(d.rho[j] - m));
    return out;
}

double periodicity(const DensityProfile& d, double period) {
    const auto S = d.rho.size();
    if (S == 0) throw std::invalid_argument("density: empty profile");
    const double steps = period / (2.0 * std::numbers::pi) * double(S);
    const auto shift = Eigen::Index(std::llround(steps));
    if (std::abs(steps - double(shift)) > 1e-9)
        throw std::invalid_argument("periodicity: period not commensurate with the sample grid");
    double out = 0.0;
    for (Eigen::Index j = 0; j < S; ++j)
        out = std::max(out, std::abs(d.rho[j] - d.rho[(j + shift) % S]));
    return out;
}

}  // namespace jcfs::density
