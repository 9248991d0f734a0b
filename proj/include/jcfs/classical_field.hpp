// classical_field.hpp — alpha-rotated mode pair of a monochromatic 1D field,
// closed-form energy/momentum and their spatial-integration counterparts.
//
// Conventions: c = 1, k = 1 (z measured in 1/k), fields stored as complex
// spatial amplitudes of the e^{-i omega t} envelope.  Energy is reported in
// units of 2 eps0, momentum in units of 2 eps0 / c, both per unit length.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace jcfs::classical {

using Complex = std::complex<double>;

// Rotation angle of the quantization basis, canonicalized to [0, pi/2).
// The basis pair has period pi/2 up to a signed relabeling of the modes, so
// angles are stored reduced; callers pairing amplitudes with an angle refer
// to the reduced representative.
class BasisAngle {
public:
    BasisAngle() = default;
    explicit BasisAngle(double radians);

    double value() const { return alpha_; }
    double cos1() const;   // cos(alpha)
    double sin1() const;   // sin(alpha)
    double cos2() const;   // cos(2 alpha)
    double sin2() const;   // sin(2 alpha)

    static BasisAngle traveling() { return BasisAngle(0.0); }
    static BasisAngle standing();  // pi/4

    bool operator==(const BasisAngle&) const = default;

private:
    double alpha_ = 0.0;
};

struct ModeAmplitudes {
    Complex f1{0.0, 0.0};
    Complex f2{0.0, 0.0};
};

// Complex E and B samples over one spatial period [0, 2 pi).
struct FieldProfile {
    Eigen::VectorXd z;
    Eigen::VectorXcd E;
    Eigen::VectorXcd B;
};

// Mode pair as rows of coefficients over {e^{ikz}, e^{-ikz}}:
// R(alpha) = [[cos a, sin a], [-sin a, cos a]], real orthogonal.
Eigen::Matrix2cd mode_pair(const BasisAngle& alpha);

// Plane-wave coefficients (g+, g-) of f1 chi1 + f2 chi2, i.e. R(alpha)^T f.
Eigen::Vector2cd plane_wave_coefficients(const ModeAmplitudes& f, const BasisAngle& alpha);

FieldProfile assemble_fields(const ModeAmplitudes& f, const BasisAngle& alpha,
                             int n_samples = 256);

double energy_closed(const ModeAmplitudes& f);
double momentum_closed(const ModeAmplitudes& f, const BasisAngle& alpha);

// Period averages of the energy density (|E|^2 + |B|^2)/2 and of the
// Poynting momentum density -Re(E B*); reject profiles that are not a
// uniform single-period sampling.
double energy_integrated(const FieldProfile& profile);
double momentum_integrated(const FieldProfile& profile);

// Re-express the same physical field in another basis angle.
ModeAmplitudes basis_change(const ModeAmplitudes& f, const BasisAngle& from,
                            const BasisAngle& to);

}  // namespace jcfs::classical
