// stationary.hpp — joint (H, P) eigensolver on the truncated space: exact
// momentum-sector projection followed by Hamiltonian diagonalization, plus
// the algebraic plane-wave reduction available at alpha = 0.
#pragma once

#include <optional>
#include <vector>

#include "jcfs/operators.hpp"

namespace jcfs::stationary {

using hilbert::Complex;
using hilbert::TruncatedSpace;
using ops::SystemParams;

// Fourier representation of the amplitudes on the grid e^{i(q+n)eta}:
// lower[m] holds a_m coefficients (m = 0..N), upper[m] holds b_m (m = 0..N-1).
// Normalization: sum_m per-period mean of |a_m|^2 + |b_m|^2 equals 1.
struct AmplitudeField {
    double q = 0.0;
    int n_max = 1;
    int N = 0;
    std::vector<Eigen::VectorXcd> lower;
    std::vector<Eigen::VectorXcd> upper;

    double norm() const;
    void normalize();
    double lower_weight() const;  // share of the norm carried by the a_m

    Eigen::VectorXcd sample(const Eigen::VectorXcd& coeffs, int n_samples) const;

    static AmplitudeField from_state_vector(const TruncatedSpace& space,
                                            const Eigen::VectorXcd& psi);
};

struct StationaryState {
    double eps = 0.0;   // absolute energy, recoil units (includes N*Omega)
    double p = 0.0;     // total momentum, hbar k
    int N = 0;
    AmplitudeField amplitudes;
    double residual_h = 0.0;  // interior-masked |(H - eps) psi|
    double residual_p = 0.0;  // interior-masked |(P - p) psi|
    Complex t_expectation{0.0, 0.0};
};

double default_cluster_tol(const TruncatedSpace& space);

// Orthonormal basis of the P eigenspace with eigenvalue within tol of p;
// empty when p is not in the spectrum.
Eigen::MatrixXcd momentum_sector(const TruncatedSpace& space, const SystemParams& params,
                                 double p, double tol);

// Eigenpairs of the projected Hamiltonian V^dag H V lifted back to the full
// space, sorted by energy; at most k_eigs states.  Empty result means the
// momentum sector is empty.
std::vector<StationaryState> solve_joint(const TruncatedSpace& space, const SystemParams& params,
                                         double p, int k_eigs);

// Closed algebraic eigensystem over the constant amplitudes at alpha = 0:
// dimension 2N+1, rows ordered a_0..a_N then b_0..b_{N-1}.  Eigenvalues are
// energies relative to N*Omega.
struct TravelingReduction {
    Eigen::MatrixXd matrix;
    std::vector<double> wave_numbers;  // plane-wave exponent per row
    int N = 0;
    double p = 0.0;

    Eigen::VectorXd eigenvalues() const;
};

TravelingReduction reduce_traveling(const SystemParams& params, double p);

struct SampledAmplitudes {
    Eigen::VectorXd eta;
    std::vector<Eigen::VectorXcd> lower;
    std::vector<Eigen::VectorXcd> upper;
};

// Trigonometric synthesis of the stored coefficients on a uniform eta grid
// over [0, 2 pi); rejects undersampling (< 2 * grid size).
SampledAmplitudes amplitudes_on_grid(const StationaryState& state, int n_samples);

// Convenience: smallest space placing total momentum p on the grid
// (q = fractional part of p) with all N momentum partners interior.
TruncatedSpace space_for_momentum(int N, double p, int n_max);

}  // namespace jcfs::stationary
