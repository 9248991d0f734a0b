// adiabatic.hpp — N = 1 large-detuning regime: elimination of the excited
// level, the traveling-wave closed-form spectrum, and the Floquet / Mathieu
// band analysis of the standing-wave amplitude equation.
//
// Energies here are relative to N*Omega (written eps_rel); momenta in hbar k.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "jcfs/operators.hpp"
#include "jcfs/stationary.hpp"

namespace jcfs::adiabatic {

using Complex = std::complex<double>;

// Effective light-shift coupling xi = zeta^2 / Delta and the detuning it came
// from; validity requires Delta to dominate both xi and the energy scale.
struct EffectiveParams {
    double xi = 0.0;
    double delta = 0.0;

    double validity_ratio(double eps_rel_scale = 1.0) const;
};

EffectiveParams adiabatic_eliminate(const ops::SystemParams& params);

// eps_rel(+-) = 1 + p^2 - xi +- sqrt(4 p^2 + xi^2)
struct TravelingSpectrum {
    double minus = 0.0;
    double plus = 0.0;
};

TravelingSpectrum spectrum_traveling(double xi, double p);

// Normalized constant amplitudes (a0, a1) of each branch, a0^2 + a1^2 = 1,
// with the attached plane-wave exponents p + 1 and p - 1.
struct TravelingBranch {
    double a0 = 0.0;
    double a1 = 0.0;
    double wave0 = 0.0;  // exponent of a0(eta)
    double wave1 = 0.0;  // exponent of a1(eta)
};

struct TravelingAmplitudes {
    TravelingBranch minus;
    TravelingBranch plus;
};

TravelingAmplitudes traveling_amplitudes(double xi, double p);

// Q(eta) = eps_rel + xi (1 - 2 cos 2 eta - i p sin 2 eta) + xi^2 sin^2 2 eta,
// period pi; complex when p != 0.
struct HillCoefficient {
    double xi = 0.0;
    double p = 0.0;
    double eps_rel = 0.0;

    Complex operator()(double eta) const;
};

HillCoefficient hill_coefficient(double xi, double p, double eps_rel);

// Variants of the xi^2 term in the band engine's potential.  Removing the
// first-derivative term from the damped amplitude equation
//   a'' + xi sin 2eta a' + (eps + xi (1 - cos 2eta - i p sin 2eta)) a = 0
// via a = abar * exp((xi/4) cos 2eta) leaves -(xi^2/4) sin^2 2eta ("full");
// "mathieu" drops the xi^2 harmonic altogether, giving the two-term cosine
// potential whose characteristic values the tridiagonal oracle computes.
enum class HillForm { mathieu, full };

std::function<Complex(double)> hill_potential(double xi, double p, double eps_rel, HillForm form);

// Trace of the monodromy matrix of abar'' + Q abar = 0 over one period pi.
Complex discriminant_of(const std::function<Complex(double)>& Q, double ode_tol);

Complex floquet_discriminant(double xi, double p, double eps_rel, double ode_tol,
                             HillForm form = HillForm::full);

struct Band {
    int index = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> eps;
    std::vector<double> p_quasi;
};

struct Gap {
    int index = 0;
    double lower = 0.0;
    double upper = 0.0;
    double width = 0.0;
};

struct BandStructure {
    std::vector<Band> bands;
    std::vector<Gap> gaps;
    double max_im_discriminant = 0.0;  // reality diagnostic of tr M
};

// Scan eps_rel over [lo, hi]: bands are maximal intervals with
// |Re tr M| <= 2, p_quasi = arccos(tr M / 2) / pi inside a band, edges
// refined by bisection to 1e-9.
BandStructure band_structure(double xi, double p, double eps_lo, double eps_hi,
                             double eps_step, double ode_tol,
                             HillForm form = HillForm::full);

// Band edges of the cosine-potential approximation via characteristic values
// of the tridiagonal Fourier truncation at q_eff = xi sqrt(1 - p^2/4);
// edges in eps_rel are (characteristic value) - xi.  Requires |p| < 2.
struct MathieuBands {
    double q_eff = 0.0;
    double phi = 0.0;                  // argument shift, read-only diagnostic
    std::vector<double> edges;         // eps_rel: a0, b1, a1, b2, a2, ...
    std::vector<Gap> gaps;
};

MathieuBands mathieu_bands(double xi, double p, int n_levels, int dimension = 48);

// a1(eta) = (-i d/d eta - p) a0(eta) by spectral differentiation; exact for
// band-limited 2 pi periodic samples on a uniform grid.
std::vector<Complex> a1_from_a0(const std::vector<Complex>& a0, double p);

// Lowest pi-periodic eigenstate of the gauged amplitude equation: the lower
// edge of the first band.  abar holds Fourier coefficients on e^{i 2 l eta}.
struct HillState {
    double eps_rel = 0.0;
    int half_width = 0;
    Eigen::VectorXcd abar;
};

HillState ground_band_state(double xi, double p, int half_width = 24);

// Undo the exp(-(xi/4) cos 2 eta) gauge, attach a1 via the momentum relation,
// and package as normalized amplitudes (b contribution is zero here).
stationary::AmplitudeField hill_state_amplitudes(const HillState& state, double xi, double p);

}  // namespace jcfs::adiabatic
