// density.hpp — reduced centre-of-mass probability density of the atom and
// its uniformity / periodicity diagnostics.
#pragma once

#include <Eigen/Dense>

#include "jcfs/stationary.hpp"

namespace jcfs::density {

// Samples of rho(eta) >= 0 over one period [0, 2 pi); the period mean is 1
// under the per-period amplitude normalization.
struct DensityProfile {
    Eigen::VectorXd eta;
    Eigen::VectorXd rho;
};

// rho(eta) = sum_m |a_m(eta)|^2 + |b_m(eta)|^2 from normalized amplitudes.
DensityProfile reduced_density(const stationary::AmplitudeField& amps, int n_samples = 512);

double mean(const DensityProfile& d);

// max |rho - mean|: zero for a perfectly uniform profile.
double uniformity(const DensityProfile& d);

// max |rho(eta) - rho(eta + period)|: zero for a perfectly periodic profile.
// The period must be commensurate with the sample grid.
double periodicity(const DensityProfile& d, double period);

}  // namespace jcfs::density
