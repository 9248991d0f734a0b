#include "jcfs/hilbert.hpp"

#include <cmath>
#include <numbers>

namespace jcfs::hilbert {

TruncatedSpace::TruncatedSpace(int n_excitations, double momentum_offset, int n_max)
    : n_excitations_(n_excitations), momentum_offset_(momentum_offset), n_max_(n_max) {
    if (n_excitations < 0)
        throw std::invalid_argument("TruncatedSpace: excitation number must be >= 0");
    if (n_max < 1)
        throw std::invalid_argument("TruncatedSpace: plane-wave cutoff must be >= 1");
    if (!std::isfinite(momentum_offset))
        throw std::invalid_argument("TruncatedSpace: momentum offset must be finite");
}

int TruncatedSpace::sector_of(const StateLabel& s) const {
    // lower m = 0..N first, then upper m = 0..N-1
    return s.level == AtomLevel::lower ? s.m : n_excitations_ + 1 + s.m;
}

bool TruncatedSpace::contains(const StateLabel& s) const {
    if (std::abs(s.n) > n_max_) return false;
    if (s.level == AtomLevel::lower) return s.m >= 0 && s.m <= n_excitations_;
    return s.m >= 0 && s.m <= n_excitations_ - 1;
}

int TruncatedSpace::index(const StateLabel& s) const {
    if (!contains(s)) throw std::out_of_range("TruncatedSpace::index: label outside space");
    return sector_of(s) * grid_size() + (s.n + n_max_);
}

StateLabel TruncatedSpace::label(int index) const {
    if (index < 0 || index >= dim())
        throw std::out_of_range("TruncatedSpace::label: index outside space");
    const int sector = index / grid_size();
    const int n = index % grid_size() - n_max_;
    if (sector <= n_excitations_) return {AtomLevel::lower, sector, n};
    return {AtomLevel::upper, sector - (n_excitations_ + 1), n};
}

int TruncatedSpace::mode2_count(const StateLabel& s) const {
    return s.level == AtomLevel::lower ? n_excitations_ - s.m : n_excitations_ - 1 - s.m;
}

SparseOperator::SparseOperator(TruncatedSpace space, const std::vector<Triplet>& entries)
    : space_(space), matrix_(space.dim(), space.dim()) {
    matrix_.setFromTriplets(entries.begin(), entries.end());
}

SparseOperator::SparseOperator(TruncatedSpace space, SparseMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
    if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
        throw std::invalid_argument("SparseOperator: matrix does not match space dimension");
}

SparseOperator SparseOperator::adjoint() const {
    return {space_, SparseMatrix(matrix_.adjoint())};
}

void SparseOperator::require_same_space(const SparseOperator& a, const SparseOperator& b) {
    if (!(a.space_ == b.space_))
        throw std::invalid_argument("SparseOperator: operands live on different spaces");
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    SparseOperator::require_same_space(a, b);
    return {a.space_, SparseMatrix(a.matrix_ + b.matrix_)};
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    SparseOperator::require_same_space(a, b);
    return {a.space_, SparseMatrix(a.matrix_ - b.matrix_)};
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    SparseOperator::require_same_space(a, b);
    return {a.space_, SparseMatrix(a.matrix_ * b.matrix_)};
}

SparseOperator operator*(Complex scale, const SparseOperator& a) {
    return {a.space_, SparseMatrix(scale * a.matrix_)};
}

SparseOperator identity(const TruncatedSpace& space) {
    SparseMatrix m(space.dim(), space.dim());
    m.setIdentity();
    return {space, std::move(m)};
}

SparseOperator mode_lowering(const TruncatedSpace& space, int which) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("mode_lowering: mode index must be 1 or 2");
    const int N = space.excitations();
    std::vector<Triplet> t;
    for (int m = 0; m <= N; ++m) {
        const StateLabel from{AtomLevel::lower, m, 0};
        const StateLabel to{AtomLevel::upper, which == 1 ? m - 1 : m, 0};
        const double amp = which == 1 ? std::sqrt(double(m)) : std::sqrt(double(N - m));
        if (amp == 0.0 || !space.contains({to.level, to.m, 0})) continue;
        for (int n = -space.max_plane_wave(); n <= space.max_plane_wave(); ++n)
            t.emplace_back(space.index({to.level, to.m, n}), space.index({from.level, from.m, n}), amp);
    }
    return {space, t};
}

SparseOperator mode_raising(const TruncatedSpace& space, int which) {
    return mode_lowering(space, which).adjoint();
}

SparseOperator atom_sigma(const TruncatedSpace& space, Pauli which) {
    const int N = space.excitations();
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i) {
        const StateLabel s = space.label(i);
        switch (which) {
            case Pauli::z:
                t.emplace_back(i, i, s.level == AtomLevel::upper ? 1.0 : -1.0);
                break;
            case Pauli::plus:
                if (s.level == AtomLevel::lower && s.m <= N - 1)
                    t.emplace_back(space.index({AtomLevel::upper, s.m, s.n}), i, 1.0);
                break;
            case Pauli::minus:
                if (s.level == AtomLevel::upper)
                    t.emplace_back(space.index({AtomLevel::lower, s.m, s.n}), i, 1.0);
                break;
        }
    }
    return {space, t};
}

SparseOperator translation_phase(const TruncatedSpace& space, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("translation_phase: sign must be +1 or -1");
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i) {
        StateLabel s = space.label(i);
        s.n += sign;
        if (space.contains(s)) t.emplace_back(space.index(s), i, 1.0);
    }
    return {space, t};
}

SparseOperator cm_momentum(const TruncatedSpace& space) {
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i)
        t.emplace_back(i, i, space.momentum(space.label(i)));
    return {space, t};
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
    return a * b - b * a;
}

double hermiticity_defect(const SparseOperator& a) {
    const SparseMatrix d = a.matrix() - SparseMatrix(a.matrix().adjoint());
    double defect = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(d, k); it; ++it)
            defect = std::max(defect, std::abs(it.value()));
    return defect;
}

double interior_norm(const SparseOperator& a, int margin) {
    if (margin < 0) throw std::invalid_argument("interior_norm: margin must be >= 0");
    const int cut = a.space().max_plane_wave() - margin;
    double norm = 0.0;
    for (int k = 0; k < a.matrix().outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(a.matrix(), k); it; ++it) {
            const int n_row = std::abs(a.space().label(int(it.row())).n);
            const int n_col = std::abs(a.space().label(int(it.col())).n);
            if (n_row <= cut && n_col <= cut)
                norm = std::max(norm, std::abs(it.value()));
        }
    return norm;
}

}  // namespace jcfs::hilbert
