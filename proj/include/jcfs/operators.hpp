// operators.hpp — builders for the commuting observables H, P, N, T of the
// atom + two-mode field system, in recoil units (E_rec = hbar^2 k^2 / 2M = 1,
// momenta in hbar k).
#pragma once

#include "jcfs/classical_field.hpp"
#include "jcfs/hilbert.hpp"

namespace jcfs::ops {

using classical::BasisAngle;
using hilbert::SparseOperator;
using hilbert::TruncatedSpace;

// Dimensionless system parameters.
//   Omega: photon energy hbar*omega / E_rec
//   Delta: detuning; the upper internal level sits at Omega + Delta, so the
//          bare two-level splitting is hbar*omega0 / E_rec = Omega + Delta
//   zeta:  dipole coupling beta / E_rec, real and nonnegative by phase choice
struct SystemParams {
    double Omega = 0.0;
    double Delta = 0.0;
    double zeta = 0.0;
    BasisAngle alpha{};
    int N = 1;
};

void validate(const SystemParams& params);

// hbar*omega (a1+ a1 + a2+ a2): diagonal, Omega*N on the lower sector and
// Omega*(N-1) on the upper sector.  Independent of alpha.
SparseOperator h_field(const TruncatedSpace& space, const SystemParams& params);

// cos 2a (a1+ a1 - a2+ a2) - sin 2a (a1+ a2 + a2+ a1), units hbar k.
SparseOperator p_field(const TruncatedSpace& space, const SystemParams& params);

// Kinetic (q+n)^2 plus the internal splitting Omega + Delta on the upper level.
SparseOperator h_atom(const TruncatedSpace& space, const SystemParams& params);

// Rotating-wave dipole coupling; every element flips the atomic level,
// changes one photon count by one and shifts n by +-1, with magnitude
// zeta * {cos a, sin a} * sqrt(Fock factor).  Hermitian by construction.
SparseOperator h_inter(const TruncatedSpace& space, const SystemParams& params);

SparseOperator h_total(const TruncatedSpace& space, const SystemParams& params);
SparseOperator p_total(const TruncatedSpace& space, const SystemParams& params);

// (1 + sigma3)/2 + a1+ a1 + a2+ a2: equals N * identity on the fixed sector;
// built from the per-state bookkeeping as a structural check.
SparseOperator excitation_number(const TruncatedSpace& space);

// sigma3 exp(i pi p_atom / hbar k): diagonal entries +-e^{i pi (q+n)}.
SparseOperator combined_translation(const TruncatedSpace& space);

}  // namespace jcfs::ops
