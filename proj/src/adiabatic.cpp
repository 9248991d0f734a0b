#include "jcfs/adiabatic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace jcfs::adiabatic {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kBandTol = 1e-8;  // |tr M| - 2 classification guard at band touchings
}  // namespace

double EffectiveParams::validity_ratio(double eps_rel_scale) const {
    const double scale = std::max({xi, std::abs(eps_rel_scale), 1e-300});
    return delta / scale;
}

EffectiveParams adiabatic_eliminate(const ops::SystemParams& params) {
    ops::validate(params);
    if (params.Delta <= 0.0)
        throw std::domain_error("adiabatic_eliminate: requires positive detuning");
    return {params.zeta * params.zeta / params.Delta, params.Delta};
}

TravelingSpectrum spectrum_traveling(double xi, double p) {
    const double root = std::sqrt(4.0 * p * p + xi * xi);
    const double base = 1.0 + p * p - xi;
    return {base - root, base + root};
}

TravelingAmplitudes traveling_amplitudes(double xi, double p) {
    // effective 2x2 over (a0, a1): diag ((p+1)^2 - xi, (p-1)^2 - xi), off-diag -xi
    Eigen::Matrix2d m;
    m << (p + 1.0) * (p + 1.0) - xi, -xi, -xi, (p - 1.0) * (p - 1.0) - xi;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
    auto branch = [&](int col) {
        TravelingBranch b;
        b.a0 = es.eigenvectors()(0, col);
        b.a1 = es.eigenvectors()(1, col);
        if (b.a0 < 0.0 || (b.a0 == 0.0 && b.a1 < 0.0)) { b.a0 = -b.a0; b.a1 = -b.a1; }
        b.wave0 = p + 1.0;
        b.wave1 = p - 1.0;
        return b;
    };
    return {branch(0), branch(1)};
}

Complex HillCoefficient::operator()(double eta) const {
    const double s2 = std::sin(2.0 * eta);
    return eps_rel + xi * (1.0 - 2.0 * std::cos(2.0 * eta)) + xi * xi * s2 * s2 -
           Complex(0.0, 1.0) * (xi * p * s2);
}

HillCoefficient hill_coefficient(double xi, double p, double eps_rel) {
    return {xi, p, eps_rel};
}

std::function<Complex(double)> hill_potential(double xi, double p, double eps_rel, HillForm form) {
    return [=](double eta) -> Complex {
        const double s2 = std::sin(2.0 * eta);
        Complex q = eps_rel + xi * (1.0 - 2.0 * std::cos(2.0 * eta)) -
                    Complex(0.0, 1.0) * (xi * p * s2);
        if (form == HillForm::full) q -= 0.25 * xi * xi * s2 * s2;
        return q;
    };
}

namespace {

// two complex solution columns as an 8-component real state
using MonodromyState = std::array<double, 8>;

struct MonodromyRhs {
    const std::function<Complex(double)>& Q;

    void operator()(const MonodromyState& u, MonodromyState& du, double eta) const {
        const Complex q = Q(eta);
        for (int col = 0; col < 2; ++col) {
            const int o = 4 * col;
            const Complex a(u[o], u[o + 1]);
            const Complex app = -q * a;
            du[o] = u[o + 2];
            du[o + 1] = u[o + 3];
            du[o + 2] = app.real();
            du[o + 3] = app.imag();
        }
    }
};

}  // namespace

Complex discriminant_of(const std::function<Complex(double)>& Q, double ode_tol) {
    if (ode_tol <= 0.0)
        throw std::invalid_argument("discriminant_of: ode tolerance must be > 0");
    namespace ode = boost::numeric::odeint;
    // integrate over a symmetric period; the trace is base-point independent
    MonodromyState u{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0};
    MonodromyRhs rhs{Q};
    try {
        auto stepper = ode::make_controlled(ode_tol, ode_tol, ode::runge_kutta_dopri5<MonodromyState>());
        ode::integrate_adaptive(stepper, rhs, u, -kPi / 2.0, kPi / 2.0, kPi / 400.0);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("discriminant_of: integration failed: ") + e.what());
    }
    const Complex m00(u[0], u[1]);
    const Complex m11(u[6], u[7]);
    return m00 + m11;
}

Complex floquet_discriminant(double xi, double p, double eps_rel, double ode_tol, HillForm form) {
    return discriminant_of(hill_potential(xi, p, eps_rel, form), ode_tol);
}

namespace {

double quasimomentum(double re_d) {
    const double c = std::clamp(re_d / 2.0, -1.0, 1.0);
    return std::acos(c) / kPi;
}

}  // namespace

BandStructure band_structure(double xi, double p, double eps_lo, double eps_hi, double eps_step,
                             double ode_tol, HillForm form) {
    if (!(eps_step > 0.0) || !(eps_hi > eps_lo))
        throw std::invalid_argument("band_structure: need eps_hi > eps_lo and eps_step > 0");
    const auto potential = [&](double e) { return hill_potential(xi, p, e, form); };

    BandStructure bs;
    auto probe = [&](double e) {
        const Complex d = discriminant_of(potential(e), ode_tol);
        bs.max_im_discriminant = std::max(bs.max_im_discriminant, std::abs(d.imag()));
        return d.real();
    };
    auto in_band = [](double re_d) { return std::abs(re_d) - 2.0 <= kBandTol; };

    // edge between a grid point inside and one outside, bisected to 1e-9
    auto refine = [&](double a, double b, bool a_inside) {
        while (b - a > 1e-9) {
            const double mid = 0.5 * (a + b);
            if (in_band(probe(mid)) == a_inside) a = mid; else b = mid;
        }
        return 0.5 * (a + b);
    };

    const int count = int(std::floor((eps_hi - eps_lo) / eps_step)) + 1;
    Band current;
    bool open = false;
    double prev_e = eps_lo;
    double prev_d = 0.0;
    for (int i = 0; i < count; ++i) {
        const double e = eps_lo + i * eps_step;
        const double d = probe(e);
        const bool inside = in_band(d);
        if (inside && !open) {
            current = Band{};
            current.index = int(bs.bands.size()) + 1;
            current.lo = (i == 0) ? e : refine(prev_e, e, false);
            open = true;
        } else if (!inside && open) {
            current.hi = refine(prev_e, e, true);
            bs.bands.push_back(std::move(current));
            open = false;
        }
        if (inside) {
            current.eps.push_back(e);
            current.p_quasi.push_back(quasimomentum(d));
        }
        prev_e = e;
        prev_d = d;
    }
    (void)prev_d;
    if (open) {
        current.hi = eps_lo + (count - 1) * eps_step;  // band continues past the scan window
        bs.bands.push_back(std::move(current));
    }
    for (size_t i = 0; i + 1 < bs.bands.size(); ++i) {
        const double lo = bs.bands[i].hi;
        const double hi = bs.bands[i + 1].lo;
        if (hi > lo)
            bs.gaps.push_back({int(i) + 1, lo, hi, hi - lo});
    }
    return bs;
}

namespace {

// characteristic values of y'' + (a - 2 q cos 2z) y = 0 by Fourier truncation
struct MathieuCharacteristics {
    std::vector<double> a_even;  // a0, a2, a4, ...  (pi-periodic, cosine)
    std::vector<double> a_odd;   // a1, a3, ...      (anti-periodic, cosine)
    std::vector<double> b_odd;   // b1, b3, ...      (anti-periodic, sine)
    std::vector<double> b_even;  // b2, b4, ...      (pi-periodic, sine)
};

std::vector<double> eigenvalues_tridiagonal(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

MathieuCharacteristics mathieu_characteristics(double q, int dim) {
    MathieuCharacteristics out;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    // cosine, pi-periodic: basis 1, cos 2z, cos 4z, ...
    for (int k = 0; k < dim; ++k) m(k, k) = 4.0 * k * k;
    m(0, 1) = m(1, 0) = q * std::sqrt(2.0);
    for (int k = 1; k + 1 < dim; ++k) m(k, k + 1) = m(k + 1, k) = q;
    out.a_even = eigenvalues_tridiagonal(m);
    // cosine, anti-periodic: basis cos z, cos 3z, ...
    m.setZero();
    for (int k = 0; k < dim; ++k) m(k, k) = double(2 * k + 1) * double(2 * k + 1);
    m(0, 0) += q;
    for (int k = 0; k + 1 < dim; ++k) m(k, k + 1) = m(k + 1, k) = q;
    out.a_odd = eigenvalues_tridiagonal(m);
    // sine, anti-periodic: basis sin z, sin 3z, ...
    m.setZero();
    for (int k = 0; k < dim; ++k) m(k, k) = double(2 * k + 1) * double(2 * k + 1);
    m(0, 0) -= q;
    for (int k = 0; k + 1 < dim; ++k) m(k, k + 1) = m(k + 1, k) = q;
    out.b_odd = eigenvalues_tridiagonal(m);
    // sine, pi-periodic: basis sin 2z, sin 4z, ...
    m.setZero();
    for (int k = 0; k < dim; ++k) m(k, k) = 4.0 * double(k + 1) * double(k + 1);
    for (int k = 0; k + 1 < dim; ++k) m(k, k + 1) = m(k + 1, k) = q;
    out.b_even = eigenvalues_tridiagonal(m);
    return out;
}

}  // namespace

MathieuBands mathieu_bands(double xi, double p, int n_levels, int dimension) {
    if (n_levels < 1) throw std::invalid_argument("mathieu_bands: need at least one level");
    if (dimension < 40) throw std::invalid_argument("mathieu_bands: truncation dimension must be >= 40");
    const double under_root = 1.0 - p * p / 4.0;
    if (under_root <= 0.0)
        throw std::domain_error("mathieu_bands: sqrt(1 - p^2/4) requires |p| < 2");
    MathieuBands out;
    out.q_eff = xi * std::sqrt(under_root);
    out.phi = 0.5 * std::acosh(1.0 / std::sqrt(under_root));
    const MathieuCharacteristics chars = mathieu_characteristics(out.q_eff, dimension);
    // characteristic values interleave a0 < b1 <= a1 < b2 <= a2 < ...
    auto a_char = [&](int r) { return r % 2 == 0 ? chars.a_even[r / 2] : chars.a_odd[r / 2]; };
    auto b_char = [&](int r) { return r % 2 == 0 ? chars.b_even[r / 2 - 1] : chars.b_odd[r / 2]; };
    for (int band = 0; band < n_levels; ++band) {
        out.edges.push_back(a_char(band) - xi);
        out.edges.push_back(b_char(band + 1) - xi);
    }
    for (int band = 0; band + 1 < n_levels; ++band) {
        const double lo = out.edges[2 * band + 1];
        const double hi = out.edges[2 * band + 2];
        out.gaps.push_back({band + 1, lo, hi, hi - lo});
    }
    return out;
}

std::vector<Complex> a1_from_a0(const std::vector<Complex>& a0, double p) {
    const int S = int(a0.size());
    if (S < 2) throw std::invalid_argument("a1_from_a0: need at least two samples");
    const Complex i(0.0, 1.0);
    // forward coefficients on integer harmonics k in [-S/2, S/2)
    std::vector<Complex> coeff(S);
    for (int k = 0; k < S; ++k) {
        const int wave = k < (S + 1) / 2 ? k : k - S;
        Complex acc(0.0, 0.0);
        for (int j = 0; j < S; ++j)
            acc += a0[j] * std::exp(-i * (2.0 * kPi * wave * j / S));
        coeff[k] = acc / double(S);
    }
    std::vector<Complex> out(S, Complex(0.0, 0.0));
    for (int k = 0; k < S; ++k) {
        const int wave = k < (S + 1) / 2 ? k : k - S;
        const Complex scaled = (double(wave) - p) * coeff[k];
        for (int j = 0; j < S; ++j)
            out[j] += scaled * std::exp(i * (2.0 * kPi * wave * j / S));
    }
    return out;
}

HillState ground_band_state(double xi, double p, int half_width) {
    if (half_width < 4) throw std::invalid_argument("ground_band_state: lattice too small");
    const int dim = 2 * half_width + 1;
    // operator -d^2 - W on e^{i 2 l eta}:
    //   diag (2l)^2 - xi + xi^2/8, first neighbors xi -+ p xi / 2,
    //   second neighbors -xi^2/16 (the cos 4 eta harmonic of the full form)
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int l = -half_width; l <= half_width; ++l) {
        const int row = l + half_width;
        m(row, row) = 4.0 * l * l - xi + xi * xi / 8.0;
        if (l + 1 <= half_width) {
            m(row + 1, row) = xi + p * xi / 2.0;
            m(row, row + 1) = xi - p * xi / 2.0;
        }
        if (l + 2 <= half_width) {
            m(row + 2, row) = -xi * xi / 16.0;
            m(row, row + 2) = -xi * xi / 16.0;
        }
    }
    HillState state;
    state.half_width = half_width;
    if (p == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        state.eps_rel = es.eigenvalues()[0];
        state.abar = es.eigenvectors().col(0).cast<Complex>();
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(m);
        int best = 0;
        for (int i = 1; i < dim; ++i)
            if (es.eigenvalues()[i].real() < es.eigenvalues()[best].real()) best = i;
        state.eps_rel = es.eigenvalues()[best].real();
        state.abar = es.eigenvectors().col(best);
    }
    state.abar.normalize();
    return state;
}

stationary::AmplitudeField hill_state_amplitudes(const HillState& state, double xi, double p) {
    const int pad = 12;  // gauge harmonics decay like I_k(xi/4)
    const int L = state.half_width;
    const int L2 = L + pad;
    Eigen::VectorXcd a0 = Eigen::VectorXcd::Zero(2 * L2 + 1);
    for (int lp = -L2; lp <= L2; ++lp) {
        Complex acc(0.0, 0.0);
        for (int k = -pad; k <= pad; ++k) {
            const int l = lp - k;
            if (l < -L || l > L) continue;
            acc += std::cyl_bessel_i(std::abs(k), xi / 4.0) * state.abar[l + L];
        }
        a0[lp + L2] = acc;
    }
    stationary::AmplitudeField amps;
    amps.q = 0.0;
    amps.N = 1;
    amps.n_max = 2 * L2;
    const int W = 2 * amps.n_max + 1;
    amps.lower.assign(2, Eigen::VectorXcd::Zero(W));
    amps.upper.assign(1, Eigen::VectorXcd::Zero(W));
    for (int lp = -L2; lp <= L2; ++lp) {
        const int n = 2 * lp;
        amps.lower[0][n + amps.n_max] = a0[lp + L2];
        amps.lower[1][n + amps.n_max] = (double(n) - p) * a0[lp + L2];
    }
    amps.normalize();
    return amps;
}

}  // namespace jcfs::adiabatic
