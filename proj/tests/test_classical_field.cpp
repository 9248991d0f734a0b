#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jcfs/classical_field.hpp"

using namespace jcfs::classical;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

ModeAmplitudes random_amplitudes(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {{u(rng), u(rng)}, {u(rng), u(rng)}};
}

// spectral derivative of the E samples, used as an independent route to B
Eigen::VectorXcd derivative_on_grid(const Eigen::VectorXcd& samples) {
    const int S = int(samples.size());
    const Complex i(0.0, 1.0);
    Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(S);
    for (int k = 0; k < S; ++k) {
        const int wave = k < (S + 1) / 2 ? k : k - S;
        for (int j = 0; j < S; ++j)
            coeff[k] += samples[j] * std::exp(-i * (2.0 * kPi * wave * j / S));
        coeff[k] *= Complex(0.0, double(wave)) / double(S);
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(S);
    for (int k = 0; k < S; ++k) {
        const int wave = k < (S + 1) / 2 ? k : k - S;
        for (int j = 0; j < S; ++j)
            out[j] += coeff[k] * std::exp(i * (2.0 * kPi * wave * j / S));
    }
    return out;
}

}  // namespace

TEST_CASE("basis angle reduces modulo a quarter turn") {
    CHECK(BasisAngle(0.0).value() == 0.0);
    CHECK(BasisAngle(kPi / 2.0).value() == doctest::Approx(0.0));
    CHECK(BasisAngle(kPi / 4.0 + kPi / 2.0).value() == doctest::Approx(kPi / 4.0));
    CHECK(BasisAngle(-0.1).value() == doctest::Approx(kPi / 2.0 - 0.1));
    CHECK_THROWS_AS(BasisAngle(std::nan("")), std::invalid_argument);
}

TEST_CASE("mode pair is the expected rotation") {
    const auto id = mode_pair(BasisAngle(0.0));
    CHECK(std::abs(id(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(id(0, 1)) < 1e-15);

    const auto standing = mode_pair(BasisAngle::standing());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(standing(0, 0) - inv_sqrt2) < 1e-15);
    CHECK(std::abs(standing(0, 1) - inv_sqrt2) < 1e-15);
    CHECK(std::abs(standing(1, 0) + inv_sqrt2) < 1e-15);

    const auto r = mode_pair(BasisAngle(0.3));
    const Eigen::Matrix2cd product = r * r.transpose();
    CHECK((product - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("assemble_fields matches the plane-wave forms") {
    SUBCASE("single traveling mode") {
        const auto profile = assemble_fields({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.0));
        for (int j = 0; j < profile.z.size(); ++j) {
            const Complex e = std::exp(Complex(0.0, profile.z[j]));
            CHECK(std::abs(profile.E[j] - e) < 1e-14);
            CHECK(std::abs(profile.B[j] + e) < 1e-14);
        }
    }
    SUBCASE("zero amplitudes give a zero field") {
        const auto profile = assemble_fields({{0.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.3));
        CHECK(profile.E.cwiseAbs().maxCoeff() == 0.0);
        CHECK(profile.B.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("standing-wave node structure of B, cross-checked spectrally") {
        const auto profile = assemble_fields({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle::standing(), 128);
        // B has a node where E is extremal
        CHECK(std::abs(profile.B[0]) < 1e-14);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < profile.z.size(); ++j) {
            const Complex plus = std::exp(Complex(0.0, profile.z[j]));
            const Complex expected = -(plus - std::conj(plus)) * inv_sqrt2;
            CHECK(std::abs(profile.B[j] - expected) < 1e-13);
        }
        // B = i dE/dz with omega = c = 1
        const Eigen::VectorXcd dE = derivative_on_grid(profile.E);
        for (int j = 0; j < profile.z.size(); ++j)
            CHECK(std::abs(profile.B[j] - Complex(0.0, 1.0) * dE[j]) < 1e-11);
    }
    SUBCASE("too few samples rejected") {
        CHECK_THROWS_AS(assemble_fields({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.0), 32),
                        std::invalid_argument);
    }
}

TEST_CASE("closed-form energy") {
    CHECK(energy_closed({{1.0, 0.0}, {0.0, 0.0}}) == 1.0);
    CHECK(energy_closed({{0.0, 0.0}, {0.0, 0.0}}) == 0.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(energy_closed({{inv_sqrt2, 0.0}, {0.0, inv_sqrt2}}) == doctest::Approx(1.0));
}

TEST_CASE("closed-form momentum") {
    CHECK(momentum_closed({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.0)) == doctest::Approx(1.0));
    CHECK(std::abs(momentum_closed({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle::standing())) < 1e-15);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(momentum_closed({{inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}}, BasisAngle::standing()) ==
          doctest::Approx(-1.0));
}

TEST_CASE("integrated energy and momentum match the closed forms") {
    SUBCASE("pinned cases") {
        const auto traveling = assemble_fields({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.0));
        CHECK(energy_integrated(traveling) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(momentum_integrated(traveling) == doctest::Approx(1.0).epsilon(1e-12));

        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const auto standing =
            assemble_fields({{inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}}, BasisAngle::standing());
        CHECK(momentum_integrated(standing) == doctest::Approx(-1.0).epsilon(1e-12));

        const auto zero = assemble_fields({{0.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.7));
        CHECK(energy_integrated(zero) == 0.0);
        CHECK(momentum_integrated(zero) == 0.0);
    }
    SUBCASE("random amplitudes and angles") {
        std::mt19937 rng(20250811);
        std::uniform_real_distribution<double> angle(0.0, kPi / 2.0);
        for (int trial = 0; trial < 50; ++trial) {
            const ModeAmplitudes f = random_amplitudes(rng);
            const BasisAngle alpha(angle(rng));
            const auto profile = assemble_fields(f, alpha);
            const double scale = std::max(1.0, energy_closed(f));
            CHECK(std::abs(energy_integrated(profile) - energy_closed(f)) < 1e-10 * scale);
            CHECK(std::abs(momentum_integrated(profile) - momentum_closed(f, alpha)) <
                  1e-10 * scale);
        }
    }
}

TEST_CASE("non-uniform or wrong-span sample sets are rejected") {
    auto profile = assemble_fields({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.0), 64);
    SUBCASE("perturbed grid point") {
        profile.z[10] += 1e-3;
        CHECK_THROWS_AS(energy_integrated(profile), std::invalid_argument);
    }
    SUBCASE("half-period span") {
        profile.z *= 0.5;
        CHECK_THROWS_AS(momentum_integrated(profile), std::invalid_argument);
    }
}

TEST_CASE("basis change re-expresses the same field") {
    SUBCASE("pinned rotation") {
        const auto g = basis_change({{1.0, 0.0}, {0.0, 0.0}}, BasisAngle(0.0), BasisAngle::standing());
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(g.f1 - Complex(inv_sqrt2, 0.0)) < 1e-15);
        CHECK(std::abs(g.f2 - Complex(-inv_sqrt2, 0.0)) < 1e-15);
    }
    SUBCASE("identity and round trip") {
        std::mt19937 rng(7);
        const ModeAmplitudes f = random_amplitudes(rng);
        const auto same = basis_change(f, BasisAngle(0.4), BasisAngle(0.4));
        CHECK(std::abs(same.f1 - f.f1) < 1e-15);
        CHECK(std::abs(same.f2 - f.f2) < 1e-15);
        const auto there = basis_change(f, BasisAngle(0.0), BasisAngle::standing());
        const auto back = basis_change(there, BasisAngle::standing(), BasisAngle(0.0));
        CHECK(std::abs(back.f1 - f.f1) < 1e-14);
        CHECK(std::abs(back.f2 - f.f2) < 1e-14);
    }
    SUBCASE("pointwise field equality and invariants") {
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> angle(0.0, kPi / 2.0);
        for (int trial = 0; trial < 20; ++trial) {
            const ModeAmplitudes f = random_amplitudes(rng);
            const BasisAngle from(angle(rng)), to(angle(rng));
            const ModeAmplitudes g = basis_change(f, from, to);
            const auto pf = assemble_fields(f, from, 128);
            const auto pg = assemble_fields(g, to, 128);
            CHECK((pf.E - pg.E).cwiseAbs().maxCoeff() < 1e-13);
            CHECK((pf.B - pg.B).cwiseAbs().maxCoeff() < 1e-13);
            CHECK(energy_closed(g) == doctest::Approx(energy_closed(f)).epsilon(1e-12));
            // the physical momentum is basis independent ...
            CHECK(momentum_integrated(pg) == doctest::Approx(momentum_integrated(pf)).epsilon(1e-10));
            // ... and the closed form transforms with the angle accordingly
            CHECK(momentum_closed(g, to) == doctest::Approx(momentum_closed(f, from)).epsilon(1e-10));
        }
    }
}

TEST_CASE("cross term enters the momentum only through sin 2a") {
    // two amplitude pairs with identical moduli but different relative phase
    const ModeAmplitudes in_phase{{0.6, 0.0}, {0.8, 0.0}};
    const ModeAmplitudes quadrature{{0.6, 0.0}, {0.0, 0.8}};
    const double at_zero_a = momentum_closed(in_phase, BasisAngle(0.0));
    const double at_zero_b = momentum_closed(quadrature, BasisAngle(0.0));
    CHECK(at_zero_a == doctest::Approx(at_zero_b).epsilon(1e-15));  // diagonal only
    const double rotated_a = momentum_closed(in_phase, BasisAngle(0.3));
    const double rotated_b = momentum_closed(quadrature, BasisAngle(0.3));
    CHECK(std::abs(rotated_a - rotated_b) > 0.1);
}
