// hilbert.hpp — truncated atom+two-mode space and a small sparse-operator algebra
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace jcfs::hilbert {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

enum class AtomLevel { lower, upper };

struct StateLabel {
    AtomLevel level = AtomLevel::lower;
    int m = 0;  // photons in mode 1
    int n = 0;  // plane-wave index, centre-of-mass momentum q + n

    bool operator==(const StateLabel&) const = default;
};

// Fixed excitation number N, centre-of-mass plane waves e^{i(q+n)eta} with
// |n| <= n_max.  Mode-2 photon count is implied: N - m on the lower level,
// N - 1 - m on the upper level (the upper sector is empty for N = 0).
class TruncatedSpace {
public:
    TruncatedSpace(int n_excitations, double momentum_offset, int n_max);

    int excitations() const { return n_excitations_; }
    double momentum_offset() const { return momentum_offset_; }
    int max_plane_wave() const { return n_max_; }

    int grid_size() const { return 2 * n_max_ + 1; }      // plane-wave count
    int sector_count() const { return 2 * n_excitations_ + 1; }
    int dim() const { return sector_count() * grid_size(); }

    int index(const StateLabel& s) const;
    StateLabel label(int index) const;
    bool contains(const StateLabel& s) const;

    int mode2_count(const StateLabel& s) const;
    double momentum(const StateLabel& s) const { return momentum_offset_ + s.n; }

    bool operator==(const TruncatedSpace&) const = default;

private:
    int sector_of(const StateLabel& s) const;

    int n_excitations_ = 0;
    double momentum_offset_ = 0.0;
    int n_max_ = 1;
};

// Sparse matrix tied to a space; duplicate triplets are coalesced on build.
class SparseOperator {
public:
    SparseOperator(TruncatedSpace space, const std::vector<Triplet>& entries);
    SparseOperator(TruncatedSpace space, SparseMatrix matrix);

    const TruncatedSpace& space() const { return space_; }
    const SparseMatrix& matrix() const { return matrix_; }
    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix_); }

    SparseOperator adjoint() const;

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(Complex scale, const SparseOperator& a);

private:
    static void require_same_space(const SparseOperator& a, const SparseOperator& b);

    TruncatedSpace space_;
    SparseMatrix matrix_;
};

SparseOperator identity(const TruncatedSpace& space);

// Annihilation in mode 1 or 2 paired with the atomic raising that keeps the
// excitation number fixed: mode 1 maps |lower,m> -> sqrt(m)|upper,m-1>,
// mode 2 maps |lower,m> -> sqrt(N-m)|upper,m>.
SparseOperator mode_lowering(const TruncatedSpace& space, int which);
SparseOperator mode_raising(const TruncatedSpace& space, int which);

enum class Pauli { plus, minus, z };

// Two-level matrices acting on the atomic factor, pairing lower-m with
// upper-m states (the lower m = N state has no upper partner).
SparseOperator atom_sigma(const TruncatedSpace& space, Pauli which);

// Multiplication by e^{+i eta} (sign = +1) or e^{-i eta} (sign = -1): shifts
// n by sign; rows at the cutoff edge map to zero.
SparseOperator translation_phase(const TruncatedSpace& space, int sign);

// Centre-of-mass momentum -i d/d eta: diagonal q + n in units of hbar k.
SparseOperator cm_momentum(const TruncatedSpace& space);

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

// max |(A - A^dagger)_ij|
double hermiticity_defect(const SparseOperator& a);

// max |A_ij| over entries whose row and column both live at |n| <= n_max - margin,
// masking absorbing-edge artifacts.
double interior_norm(const SparseOperator& a, int margin);

}  // namespace jcfs::hilbert
