#include "jcfs/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcfs::ops {

using hilbert::AtomLevel;
using hilbert::StateLabel;
using hilbert::Triplet;

void validate(const SystemParams& params) {
    if (!std::isfinite(params.Omega) || !std::isfinite(params.Delta) || !std::isfinite(params.zeta))
        throw std::invalid_argument("SystemParams: parameters must be finite");
    if (params.zeta < 0.0)
        throw std::invalid_argument("SystemParams: coupling zeta must be >= 0");
    if (params.N < 0)
        throw std::invalid_argument("SystemParams: excitation number must be >= 0");
}

namespace {

void require_matching(const TruncatedSpace& space, const SystemParams& params) {
    validate(params);
    if (space.excitations() != params.N)
        throw std::invalid_argument("operator builder: space and params disagree on N");
}

}  // namespace

SparseOperator h_field(const TruncatedSpace& space, const SystemParams& params) {
    require_matching(space, params);
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i) {
        const StateLabel s = space.label(i);
        const int photons = s.m + space.mode2_count(s);
        t.emplace_back(i, i, params.Omega * photons);
    }
    return {space, t};
}

SparseOperator p_field(const TruncatedSpace& space, const SystemParams& params) {
    require_matching(space, params);
    const double c2 = params.alpha.cos2();
    const double s2 = params.alpha.sin2();
    const int N = params.N;
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i) {
        const StateLabel s = space.label(i);
        t.emplace_back(i, i, c2 * double(s.m - space.mode2_count(s)));
        // a1+ a2 + a2+ a1 couples m <-> m+1 within a sector
        const int top = s.level == AtomLevel::lower ? N : N - 1;
        if (s.m + 1 <= top) {
            const double f = s.level == AtomLevel::lower
                                 ? std::sqrt(double((s.m + 1) * (N - s.m)))
                                 : std::sqrt(double((s.m + 1) * (N - 1 - s.m)));
            const int j = space.index({s.level, s.m + 1, s.n});
            t.emplace_back(j, i, -s2 * f);
            t.emplace_back(i, j, -s2 * f);
        }
    }
    return {space, t};
}

SparseOperator h_atom(const TruncatedSpace& space, const SystemParams& params) {
    require_matching(space, params);
    const double omega0 = params.Omega + params.Delta;
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i) {
        const StateLabel s = space.label(i);
        const double kinetic = space.momentum(s) * space.momentum(s);
        t.emplace_back(i, i, kinetic + (s.level == AtomLevel::upper ? omega0 : 0.0));
    }
    return {space, t};
}

SparseOperator h_inter(const TruncatedSpace& space, const SystemParams& params) {
    require_matching(space, params);
    const double c = params.alpha.cos1();
    const double s = params.alpha.sin1();
    const double z = params.zeta;
    const int N = params.N;
    std::vector<Triplet> t;
    auto couple = [&](const StateLabel& from, AtomLevel to_level, int to_m, int dn, double value) {
        const StateLabel to{to_level, to_m, from.n + dn};
        if (value == 0.0 || !space.contains(to)) return;
        t.emplace_back(space.index(to), space.index(from), value);
        t.emplace_back(space.index(from), space.index(to), value);
    };
    for (int m = 0; m <= N; ++m) {
        for (int n = -space.max_plane_wave(); n <= space.max_plane_wave(); ++n) {
            const StateLabel lo{AtomLevel::lower, m, n};
            // sigma+ a1 with phase (cos a e^{+i eta} + sin a e^{-i eta})
            if (m >= 1) {
                const double f = std::sqrt(double(m));
                couple(lo, AtomLevel::upper, m - 1, +1, -z * c * f);
                couple(lo, AtomLevel::upper, m - 1, -1, -z * s * f);
            }
            // sigma+ a2 with phase (cos a e^{-i eta} - sin a e^{+i eta})
            if (m <= N - 1) {
                const double f = std::sqrt(double(N - m));
                couple(lo, AtomLevel::upper, m, -1, -z * c * f);
                couple(lo, AtomLevel::upper, m, +1, +z * s * f);
            }
        }
    }
    return {space, t};
}

SparseOperator h_total(const TruncatedSpace& space, const SystemParams& params) {
    return h_atom(space, params) + h_field(space, params) + h_inter(space, params);
}

SparseOperator p_total(const TruncatedSpace& space, const SystemParams& params) {
    return hilbert::cm_momentum(space) + p_field(space, params);
}

SparseOperator excitation_number(const TruncatedSpace& space) {
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i) {
        const StateLabel s = space.label(i);
        const int photons = s.m + space.mode2_count(s);
        const int excited = s.level == AtomLevel::upper ? 1 : 0;
        t.emplace_back(i, i, double(photons + excited));
    }
    return {space, t};
}

SparseOperator combined_translation(const TruncatedSpace& space) {
    const std::complex<double> i_pi(0.0, std::numbers::pi);
    std::vector<Triplet> t;
    for (int i = 0; i < space.dim(); ++i) {
        const StateLabel s = space.label(i);
        const double sigma3 = s.level == AtomLevel::upper ? 1.0 : -1.0;
        t.emplace_back(i, i, sigma3 * std::exp(i_pi * space.momentum(s)));
    }
    return {space, t};
}

}  // namespace jcfs::ops
