#include "jcfs/classical_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcfs::classical {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
}  // namespace

BasisAngle::BasisAngle(double radians) {
    if (!std::isfinite(radians))
        throw std::invalid_argument("BasisAngle: angle must be finite");
    alpha_ = std::fmod(radians, kHalfPi);
    if (alpha_ < 0.0) alpha_ += kHalfPi;
}

double BasisAngle::cos1() const { return std::cos(alpha_); }
double BasisAngle::sin1() const { return std::sin(alpha_); }
double BasisAngle::cos2() const { return std::cos(2.0 * alpha_); }
double BasisAngle::sin2() const { return std::sin(2.0 * alpha_); }

BasisAngle BasisAngle::standing() { return BasisAngle(kPi / 4.0); }

Eigen::Matrix2cd mode_pair(const BasisAngle& alpha) {
    Eigen::Matrix2cd r;
    r << alpha.cos1(), alpha.sin1(), -alpha.sin1(), alpha.cos1();
    return r;
}

Eigen::Vector2cd plane_wave_coefficients(const ModeAmplitudes& f, const BasisAngle& alpha) {
    return mode_pair(alpha).transpose() * Eigen::Vector2cd(f.f1, f.f2);
}

FieldProfile assemble_fields(const ModeAmplitudes& f, const BasisAngle& alpha, int n_samples) {
    if (n_samples < 64)
        throw std::invalid_argument("assemble_fields: need at least 64 samples per period");
    const Eigen::Vector2cd g = plane_wave_coefficients(f, alpha);
    FieldProfile profile;
    profile.z.resize(n_samples);
    profile.E.resize(n_samples);
    profile.B.resize(n_samples);
    const Complex i(0.0, 1.0);
    for (int j = 0; j < n_samples; ++j) {
        const double z = 2.0 * kPi * j / n_samples;
        profile.z[j] = z;
        const Complex plus = std::exp(i * z);
        const Complex minus = std::exp(-i * z);
        profile.E[j] = g[0] * plus + g[1] * minus;
        // B = (1 / i omega) dE/dz in the (e x e_z) direction, omega = c k = 1
        profile.B[j] = -g[0] * plus + g[1] * minus;
    }
    return profile;
}

double energy_closed(const ModeAmplitudes& f) {
    return std::norm(f.f1) + std::norm(f.f2);
}

double momentum_closed(const ModeAmplitudes& f, const BasisAngle& alpha) {
    const double diagonal = std::norm(f.f1) - std::norm(f.f2);
    const double cross = 2.0 * std::real(std::conj(f.f1) * f.f2);
    return alpha.cos2() * diagonal - alpha.sin2() * cross;
}

namespace {

void require_single_period(const FieldProfile& profile) {
    const auto n = profile.z.size();
    if (n < 2 || profile.E.size() != n || profile.B.size() != n)
        throw std::invalid_argument("field profile: inconsistent sample set");
    const double step = profile.z[1] - profile.z[0];
    for (Eigen::Index j = 1; j < n; ++j)
        if (std::abs(profile.z[j] - profile.z[j - 1] - step) > 1e-12)
            throw std::invalid_argument("field profile: samples are not uniformly spaced");
    if (std::abs(double(n) * step - 2.0 * kPi) > 1e-9)
        throw std::invalid_argument("field profile: samples do not span one period");
}

}  // namespace

double energy_integrated(const FieldProfile& profile) {
    require_single_period(profile);
    // uniform periodic grid: the trapezoid rule reduces to the sample mean
    double acc = 0.0;
    for (Eigen::Index j = 0; j < profile.z.size(); ++j)
        acc += 0.5 * (std::norm(profile.E[j]) + std::norm(profile.B[j]));
    return acc / double(profile.z.size());
}

double momentum_integrated(const FieldProfile& profile) {
    require_single_period(profile);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < profile.z.size(); ++j)
        acc += -std::real(profile.E[j] * std::conj(profile.B[j]));
    return acc / double(profile.z.size());
}

ModeAmplitudes basis_change(const ModeAmplitudes& f, const BasisAngle& from, const BasisAngle& to) {
    const Eigen::Vector2cd g = plane_wave_coefficients(f, from);
    const Eigen::Vector2cd ft = mode_pair(to) * g;
    return {ft[0], ft[1]};
}

}  // namespace jcfs::classical
