#include "jcfs/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcfs::stationary {

using hilbert::AtomLevel;
using hilbert::StateLabel;

double AmplitudeField::norm() const {
    double acc = 0.0;
    for (const auto& v : lower) acc += v.squaredNorm();
    for (const auto& v : upper) acc += v.squaredNorm();
    return std::sqrt(acc);
}

void AmplitudeField::normalize() {
    const double s = norm();
    if (s == 0.0) throw std::invalid_argument("AmplitudeField: cannot normalize zero field");
    for (auto& v : lower) v /= s;
    for (auto& v : upper) v /= s;
}

double AmplitudeField::lower_weight() const {
    double lo = 0.0, total = 0.0;
    for (const auto& v : lower) lo += v.squaredNorm();
    total = lo;
    for (const auto& v : upper) total += v.squaredNorm();
    return total == 0.0 ? 0.0 : lo / total;
}

Eigen::VectorXcd AmplitudeField::sample(const Eigen::VectorXcd& coeffs, int n_samples) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n_samples);
    const Complex i(0.0, 1.0);
    for (int j = 0; j < n_samples; ++j) {
        const double eta = 2.0 * std::numbers::pi * j / n_samples;
        Complex acc(0.0, 0.0);
        for (int n = -n_max; n <= n_max; ++n)
            acc += coeffs[n + n_max] * std::exp(i * ((q + n) * eta));
        out[j] = acc;
    }
    return out;
}

AmplitudeField AmplitudeField::from_state_vector(const TruncatedSpace& space,
                                                 const Eigen::VectorXcd& psi) {
    if (psi.size() != space.dim())
        throw std::invalid_argument("AmplitudeField: state vector does not match space");
    AmplitudeField amps;
    amps.q = space.momentum_offset();
    amps.n_max = space.max_plane_wave();
    amps.N = space.excitations();
    amps.lower.assign(amps.N + 1, Eigen::VectorXcd::Zero(space.grid_size()));
    amps.upper.assign(amps.N, Eigen::VectorXcd::Zero(space.grid_size()));
    for (int i = 0; i < space.dim(); ++i) {
        const StateLabel s = space.label(i);
        auto& dest = s.level == AtomLevel::lower ? amps.lower[s.m] : amps.upper[s.m];
        dest[s.n + amps.n_max] = psi[i];
    }
    return amps;
}

double default_cluster_tol(const TruncatedSpace& space) {
    // diagonal dominates: |q| + n_max plus the field part bounded by 2N+1
    const double scale = std::abs(space.momentum_offset()) + space.max_plane_wave() +
                         2.0 * space.excitations() + 1.0;
    return 1e-9 * scale;
}

Eigen::MatrixXcd momentum_sector(const TruncatedSpace& space, const SystemParams& params,
                                 double p, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("momentum_sector: tolerance must be > 0");
    const Eigen::MatrixXcd P = ops::p_total(space, params).dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(P);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("momentum_sector: eigendecomposition failed");
    std::vector<int> keep;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()[i] - p) <= tol) keep.push_back(i);
    Eigen::MatrixXcd V(space.dim(), keep.size());
    for (size_t c = 0; c < keep.size(); ++c) V.col(Eigen::Index(c)) = es.eigenvectors().col(keep[c]);
    return V;
}

namespace {

double masked_norm(const TruncatedSpace& space, const Eigen::VectorXcd& r, int margin) {
    const int cut = space.max_plane_wave() - margin;
    double acc = 0.0;
    for (int i = 0; i < space.dim(); ++i)
        if (std::abs(space.label(i).n) <= cut) acc += std::norm(r[i]);
    return std::sqrt(acc);
}

}  // namespace

std::vector<StationaryState> solve_joint(const TruncatedSpace& space, const SystemParams& params,
                                         double p, int k_eigs) {
    if (k_eigs < 1) throw std::invalid_argument("solve_joint: need k_eigs >= 1");
    const Eigen::MatrixXcd V = momentum_sector(space, params, p, default_cluster_tol(space));
    if (V.cols() == 0) return {};

    const Eigen::MatrixXcd H = ops::h_total(space, params).dense();
    const Eigen::MatrixXcd P = ops::p_total(space, params).dense();
    const Eigen::MatrixXcd T = ops::combined_translation(space).dense();
    const Eigen::MatrixXcd Hp = V.adjoint() * H * V;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Hp);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("solve_joint: eigendecomposition failed");

    const int count = std::min<int>(k_eigs, int(es.eigenvalues().size()));
    std::vector<StationaryState> states;
    states.reserve(count);
    for (int i = 0; i < count; ++i) {
        const Eigen::VectorXcd psi = V * es.eigenvectors().col(i);
        StationaryState st;
        st.eps = es.eigenvalues()[i];
        st.p = p;
        st.N = space.excitations();
        st.amplitudes = AmplitudeField::from_state_vector(space, psi);
        st.residual_h = masked_norm(space, H * psi - st.eps * psi, 2);
        st.residual_p = masked_norm(space, P * psi - p * psi, 2);
        st.t_expectation = (psi.adjoint() * (T * psi))(0, 0);
        states.push_back(std::move(st));
    }
    return states;
}

TravelingReduction reduce_traveling(const SystemParams& params, double p) {
    ops::validate(params);
    if (std::abs(params.alpha.value()) > 1e-15)
        throw std::invalid_argument("reduce_traveling: requires the traveling-wave basis (alpha = 0)");
    const int N = params.N;
    TravelingReduction red;
    red.N = N;
    red.p = p;
    red.matrix = Eigen::MatrixXd::Zero(2 * N + 1, 2 * N + 1);
    red.wave_numbers.resize(2 * N + 1);
    // rows: a_m at K = p - (2m - N), then b_m at K = p - (2m - N + 1)
    for (int m = 0; m <= N; ++m) {
        const double K = p - double(2 * m - N);
        red.wave_numbers[m] = K;
        red.matrix(m, m) = K * K;
    }
    for (int m = 0; m <= N - 1; ++m) {
        const int row = N + 1 + m;
        const double K = p - double(2 * m - N + 1);
        red.wave_numbers[row] = K;
        red.matrix(row, row) = K * K + params.Delta;
        // couplings: a_{m+1} <-> b_m with sqrt(m+1), a_m <-> b_m with sqrt(N-m)
        red.matrix(row, m + 1) = red.matrix(m + 1, row) = -params.zeta * std::sqrt(double(m + 1));
        red.matrix(row, m) = red.matrix(m, row) = -params.zeta * std::sqrt(double(N - m));
    }
    return red;
}

Eigen::VectorXd TravelingReduction::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix);
    return es.eigenvalues();
}

SampledAmplitudes amplitudes_on_grid(const StationaryState& state, int n_samples) {
    const int minimum = 2 * (2 * state.amplitudes.n_max + 1);
    if (n_samples < minimum)
        throw std::invalid_argument("amplitudes_on_grid: undersampled grid");
    SampledAmplitudes out;
    out.eta.resize(n_samples);
    for (int j = 0; j < n_samples; ++j)
        out.eta[j] = 2.0 * std::numbers::pi * j / n_samples;
    for (const auto& c : state.amplitudes.lower)
        out.lower.push_back(state.amplitudes.sample(c, n_samples));
    for (const auto& c : state.amplitudes.upper)
        out.upper.push_back(state.amplitudes.sample(c, n_samples));
    return out;
}

TruncatedSpace space_for_momentum(int N, double p, int n_max) {
    double q = p - std::round(p);
    if (q < 0.0) q += 1.0;
    const int offset = int(std::llround(p - q));
    if (std::abs(offset) + N >= n_max)
        throw std::invalid_argument("space_for_momentum: momentum outside representable grid");
    return {N, q, n_max};
}

}  // namespace jcfs::stationary
