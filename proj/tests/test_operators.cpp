#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "jcfs/operators.hpp"

using namespace jcfs::ops;
using jcfs::hilbert::AtomLevel;
using jcfs::hilbert::Pauli;
using jcfs::hilbert::TruncatedSpace;
using jcfs::hilbert::commutator;
using jcfs::hilbert::hermiticity_defect;
using jcfs::hilbert::interior_norm;

namespace {

constexpr double kPi = std::numbers::pi;

SystemParams make_params(double Omega, double Delta, double zeta, double alpha, int N) {
    SystemParams p;
    p.Omega = Omega;
    p.Delta = Delta;
    p.zeta = zeta;
    p.alpha = BasisAngle(alpha);
    p.N = N;
    return p;
}

std::vector<double> sorted_spectrum(const jcfs::hilbert::SparseOperator& op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.dense());
    std::vector<double> w(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return w;
}

}  // namespace

TEST_CASE("field energy is diagonal in the photon count and alpha independent") {
    const TruncatedSpace space(1, 0.0, 2);
    const auto params = make_params(100.0, 10.0, 1.0, 0.0, 1);
    const auto hf = h_field(space, params);
    const int lo = space.index({AtomLevel::lower, 0, 0});
    const int up = space.index({AtomLevel::upper, 0, 0});
    CHECK(std::abs(hf.dense()(lo, lo) - 100.0) < 1e-12);
    CHECK(std::abs(hf.dense()(up, up)) < 1e-12);

    const auto rotated = h_field(space, make_params(100.0, 10.0, 1.0, 0.7, 1));
    CHECK((hf.dense() - rotated.dense()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("field momentum matrix elements") {
    const TruncatedSpace space(1, 0.0, 2);
    SUBCASE("traveling basis: diagonal 2m - N") {
        const auto pf = p_field(space, make_params(100.0, 10.0, 1.0, 0.0, 1));
        const int m1 = space.index({AtomLevel::lower, 1, 0});
        CHECK(std::abs(pf.dense()(m1, m1) - 1.0) < 1e-15);
        const int m0 = space.index({AtomLevel::lower, 0, 0});
        CHECK(std::abs(pf.dense()(m0, m1)) < 1e-15);
    }
    SUBCASE("standing basis: purely off-diagonal") {
        const auto pf = p_field(space, make_params(100.0, 10.0, 1.0, kPi / 4.0, 1));
        const int m0 = space.index({AtomLevel::lower, 0, 0});
        const int m1 = space.index({AtomLevel::lower, 1, 0});
        CHECK(std::abs(pf.dense()(m0, m0)) < 1e-15);
        CHECK(std::abs(pf.dense()(m0, m1) + 1.0) < 1e-15);
        CHECK(hermiticity_defect(pf) == 0.0);
    }
    SUBCASE("lower-sector trace vanishes at any angle") {
        for (double alpha : {0.0, 0.3, kPi / 4.0}) {
            const auto pf = p_field(space, make_params(100.0, 10.0, 1.0, alpha, 1));
            double trace = 0.0;
            for (int m = 0; m <= 1; ++m) {
                const int i = space.index({AtomLevel::lower, m, 0});
                trace += pf.dense()(i, i).real();
            }
            CHECK(std::abs(trace) < 1e-15);
        }
    }
    SUBCASE("off-diagonal block norm scales with |sin 2a|") {
        const TruncatedSpace two(2, 0.0, 1);
        for (double alpha : {0.1, 0.3, 0.6}) {
            const auto pf = p_field(two, make_params(0.0, 0.0, 0.0, alpha, 2));
            double off = 0.0;
            for (int m = 0; m <= 1; ++m) {
                const int i = two.index({AtomLevel::lower, m, 0});
                const int j = two.index({AtomLevel::lower, m + 1, 0});
                off = std::max(off, std::abs(pf.dense()(i, j)));
            }
            const double expected = std::abs(std::sin(2.0 * alpha)) * std::sqrt(2.0);
            CHECK(off == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("atomic Hamiltonian diagonal") {
    const TruncatedSpace space(1, 0.0, 3);
    const auto params = make_params(100.0, 10.0, 0.0, 0.0, 1);
    const auto ha = h_atom(space, params);
    const int lo = space.index({AtomLevel::lower, 0, 2});
    CHECK(std::abs(ha.dense()(lo, lo) - 4.0) < 1e-12);
    // internal splitting Omega + Delta on the upper level
    const int up = space.index({AtomLevel::upper, 0, 0});
    CHECK(std::abs(ha.dense()(up, up) - 110.0) < 1e-12);
    CHECK(hermiticity_defect(ha) == 0.0);
}

TEST_CASE("interaction matrix elements") {
    const TruncatedSpace space(1, 0.0, 3);
    SUBCASE("traveling basis") {
        const auto hi = h_inter(space, make_params(100.0, 10.0, 2.0, 0.0, 1));
        const auto dense = hi.dense();
        const int from = space.index({AtomLevel::lower, 1, 0});
        const int to = space.index({AtomLevel::upper, 0, 1});
        CHECK(std::abs(dense(to, from) + 2.0) < 1e-15);
        // no mode-1 path out of the lower m = 0 states
        const int vac = space.index({AtomLevel::lower, 0, 0});
        const int up_minus = space.index({AtomLevel::upper, 0, 1});
        CHECK(std::abs(dense(up_minus, vac)) < 1e-15);  // only the a2 channel at n-1
        CHECK(hermiticity_defect(hi) == 0.0);
    }
    SUBCASE("standing basis") {
        const auto hi = h_inter(space, make_params(100.0, 10.0, 2.0, kPi / 4.0, 1));
        const int from = space.index({AtomLevel::lower, 1, 0});
        const int to = space.index({AtomLevel::upper, 0, -1});
        CHECK(std::abs(hi.dense()(to, from) + 2.0 / std::sqrt(2.0)) < 1e-14);
    }
    SUBCASE("every element flips the level and shifts n by one") {
        const auto hi = h_inter(space, make_params(100.0, 10.0, 1.5, 0.4, 1));
        for (int k = 0; k < hi.matrix().outerSize(); ++k)
            for (jcfs::hilbert::SparseMatrix::InnerIterator it(hi.matrix(), k); it; ++it) {
                const auto row = space.label(int(it.row()));
                const auto col = space.label(int(it.col()));
                CHECK(row.level != col.level);
                CHECK(std::abs(row.n - col.n) == 1);
            }
    }
}

TEST_CASE("total operators") {
    const TruncatedSpace space(1, 0.2, 4);
    SUBCASE("no interaction leaves the total Hamiltonian diagonal") {
        const auto h = h_total(space, make_params(50.0, 5.0, 0.0, 0.6, 1));
        CHECK(interior_norm(h - h.adjoint(), 0) == 0.0);
        Eigen::MatrixXcd dense = h.dense();
        dense.diagonal().setZero();
        CHECK(dense.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("total momentum is diagonal exactly at alpha = 0") {
        const auto p = p_total(space, make_params(50.0, 5.0, 2.0, 0.0, 1));
        Eigen::MatrixXcd dense = p.dense();
        dense.diagonal().setZero();
        CHECK(dense.cwiseAbs().maxCoeff() == 0.0);
        const auto rotated = p_total(space, make_params(50.0, 5.0, 2.0, 0.3, 1));
        Eigen::MatrixXcd rd = rotated.dense();
        rd.diagonal().setZero();
        CHECK(rd.cwiseAbs().maxCoeff() > 0.1);
    }
    SUBCASE("hermiticity is exact") {
        const auto h = h_total(space, make_params(50.0, 5.0, 2.0, 0.7, 1));
        CHECK(hermiticity_defect(h) == 0.0);
    }
}

TEST_CASE("excitation number and combined translation") {
    const TruncatedSpace space(1, 0.0, 2);
    const auto n = excitation_number(space);
    CHECK((n.dense() - Eigen::MatrixXcd::Identity(space.dim(), space.dim())).cwiseAbs().maxCoeff() ==
          0.0);

    const auto t = combined_translation(space);
    const int i = space.index({AtomLevel::lower, 0, 1});
    CHECK(std::abs(t.dense()(i, i) - 1.0) < 1e-14);  // (-1) * e^{i pi}
    // unitary
    const auto product = (t * t.adjoint()).dense();
    CHECK((product - Eigen::MatrixXcd::Identity(space.dim(), space.dim())).cwiseAbs().maxCoeff() <
          1e-14);
}

TEST_CASE("the four observables commute on the interior") {
    for (int N : {1, 2}) {
        for (double alpha : {0.0, 0.3, kPi / 4.0}) {
            for (double zeta : {0.0, 1.0, 5.0}) {
                const TruncatedSpace space(N, 0.3, 8);
                const auto params = make_params(100.0, 10.0, zeta, alpha, N);
                const auto H = h_total(space, params);
                const auto P = p_total(space, params);
                const auto Nop = excitation_number(space);
                const auto T = combined_translation(space);
                const std::vector<jcfs::hilbert::SparseOperator> set{H, P, Nop, T};
                for (size_t a = 0; a < set.size(); ++a)
                    for (size_t b = a + 1; b < set.size(); ++b)
                        CHECK(interior_norm(commutator(set[a], set[b]), 2) < 1e-12);
            }
        }
    }
}

TEST_CASE("free spectrum fixes the unit conventions") {
    const int n_max = 3;
    const TruncatedSpace space(1, 0.3, n_max);
    const auto params = make_params(100.0, 10.0, 0.0, 0.0, 1);
    const auto spectrum = sorted_spectrum(h_total(space, params));
    std::vector<double> expected;
    for (int n = -n_max; n <= n_max; ++n) {
        const double kinetic = (0.3 + n) * (0.3 + n);
        expected.push_back(kinetic + 100.0);  // lower, m = 0: N photons
        expected.push_back(kinetic + 100.0);  // lower, m = 1
        expected.push_back(kinetic + 110.0);  // upper: (N-1) Omega + (Omega + Delta)
    }
    std::sort(expected.begin(), expected.end());
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(spectrum[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("joint spectra do not depend on the basis angle") {
    // the mode rotation is implemented by a photon-space unitary, so the
    // spectrum of H (and of H restricted to any momentum sector) is invariant
    const TruncatedSpace space(1, 0.3, 6);
    const auto base = sorted_spectrum(h_total(space, make_params(100.0, 10.0, 5.0, 0.0, 1)));
    for (double alpha : {0.3, kPi / 4.0}) {
        const auto rotated =
            sorted_spectrum(h_total(space, make_params(100.0, 10.0, 5.0, alpha, 1)));
        double defect = 0.0;
        for (size_t i = 0; i < base.size(); ++i)
            defect = std::max(defect, std::abs(base[i] - rotated[i]));
        CHECK(defect < 1e-10);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(make_params(1.0, 0.0, -1.0, 0.0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(validate(make_params(1.0, 0.0, 1.0, 0.0, -2)), std::invalid_argument);
    const TruncatedSpace space(1, 0.0, 2);
    CHECK_THROWS_AS(h_field(space, make_params(1.0, 0.0, 1.0, 0.0, 2)), std::invalid_argument);
}
