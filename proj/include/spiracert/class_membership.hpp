#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "spiracert/certificate.hpp"
#include "spiracert/errors.hpp"
#include "spiracert/function_model.hpp"

namespace spiracert {

inline constexpr double kCertificateTol = 1e-10;
/// Sampled checks demand a strictly positive margin by at least this slack.
inline constexpr double kSampledSlack = 1e-12;
inline constexpr double kDenominatorFloor = 1e-12;

/// Aperture alpha (radians, |alpha| < pi/2) and order beta in [0, 1).
/// Nontrivial membership additionally needs cos(alpha) > beta; certificates
/// for the degenerate boundary evaluate normally with rhs near zero.
struct SpiralParams {
    double alpha;
    double beta;

    SpiralParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(std::abs(alpha) < std::numbers::pi / 2.0))
            throw InvalidSpiralParams("require |alpha| < pi/2");
        if (!(0.0 <= beta && beta < 1.0)) throw InvalidSpiralParams("require 0 <= beta < 1");
    }
};

/// Sample points: every listed radius crossed with `angles` uniform angles.
struct DiskGrid {
    std::vector<double> radii;
    int angles = 256;

    /// 48 radii 0.02..0.96 in steps of 0.02, plus the refinement radii
    /// 1 - 10^-k for k = 1..6 where boundary violations concentrate.
    static DiskGrid standard() {
        DiskGrid g;
        g.radii.reserve(54);
        for (int i = 1; i <= 48; ++i) g.radii.push_back(0.02 * i);
        double step = 0.1;
        for (int k = 1; k <= 6; ++k) {
            g.radii.push_back(1.0 - step);
            step *= 0.1;
        }
        g.angles = 256;
        return g;
    }

    static DiskGrid uniform(double r_max, int n_radii, int n_angles) {
        if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("require 0 < r_max < 1");
        if (n_radii < 1 || n_angles < 1) throw std::invalid_argument("grid must be nonempty");
        DiskGrid g;
        g.radii.reserve(static_cast<size_t>(n_radii));
        for (int i = 1; i <= n_radii; ++i) g.radii.push_back(r_max * i / n_radii);
        g.angles = n_angles;
        return g;
    }

    /// The radial refinement probe alone: radii 1 - 10^-k, angle 0.
    static DiskGrid refinement_ray() {
        DiskGrid g;
        double step = 0.1;
        for (int k = 1; k <= 6; ++k) {
            g.radii.push_back(1.0 - step);
            step *= 0.1;
        }
        g.angles = 1;
        return g;
    }

    nlohmann::json describe() const {
        return {{"radii", radii.size()},
                {"angles", angles},
                {"r_max", radii.empty() ? 0.0 : radii.back()}};
    }
};

/// Which modulus term the disk sampler uses. `Standard` is the ratio-to-f
/// form matching the coefficient criteria; `PrintedVariant` divides by f'
/// instead, kept selectable for comparison.
enum class GeometricForm { Standard, PrintedVariant };

namespace detail {

struct DiskMinimum {
    double min_value = 0.0;
    double at_radius = 0.0;
    double at_theta = 0.0;
    long points = 0;
};

/// Pointwise margin of the defining inequality at z:
///   Re(e^{-i alpha} w) - |w - 1| - beta,  w = z f'(z) / f(z).
template <typename Scalar>
double spiral_margin_at(const BasicCoeffFunction<Scalar>& f, const SpiralParams& s,
                        std::complex<double> z, GeometricForm form) {
    const std::complex<double> fz = f.eval(z);
    const std::complex<double> fpz = f.eval_prime(z);
    if (std::abs(fz) < kDenominatorFloor)
        throw ZeroDenominator("f(z) vanishes near z = (" + std::to_string(z.real()) + ", " +
                              std::to_string(z.imag()) + ")");
    const std::complex<double> w = z * fpz / fz;
    double modulus_term;
    if (form == GeometricForm::Standard) {
        modulus_term = std::abs(w - 1.0);
    } else {
        if (std::abs(fpz) < kDenominatorFloor)
            throw ZeroDenominator("f'(z) vanishes near z = (" + std::to_string(z.real()) + ", " +
                                  std::to_string(z.imag()) + ")");
        modulus_term = std::abs(z * fpz / fpz - 1.0);
    }
    const std::complex<double> rot = std::polar(1.0, -s.alpha);
    return (rot * w).real() - modulus_term - s.beta;
}

/// Minimum of the pointwise margin over the grid. Scanned in a fixed order;
/// the result is a plain min-reduction, independent of evaluation order.
template <typename Scalar>
DiskMinimum spiral_margin_minimum(const BasicCoeffFunction<Scalar>& f, const SpiralParams& s,
                                  const DiskGrid& grid, GeometricForm form) {
    DiskMinimum out;
    bool first = true;
    for (double r : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / grid.angles;
            const std::complex<double> z = std::polar(r, theta);
            const double m = spiral_margin_at(f, s, z, form);
            ++out.points;
            if (first || m < out.min_value) {
                out.min_value = m;
                out.at_radius = r;
                out.at_theta = theta;
                first = false;
            }
        }
    }
    if (first) throw std::invalid_argument("empty disk grid");
    return out;
}

}  // namespace detail

/// Coefficient test sum (2n - cos alpha - beta)|a_n| <= cos alpha - beta.
/// Necessary and sufficient for T-class functions, sufficient otherwise;
/// claim_strength records the asymmetry.
template <typename Scalar>
Certificate check_sp_sufficient(const BasicCoeffFunction<Scalar>& f, const SpiralParams& s) {
    const double ca = std::cos(s.alpha);
    double lhs = 0.0;
    for (int n = 2; n <= f.order(); ++n) lhs += (2.0 * n - ca - s.beta) * f.magnitude(n);
    const double rhs = ca - s.beta;
    nlohmann::json meta{{"params", {{"alpha", s.alpha}, {"beta", s.beta}, {"cos_alpha", ca}}},
                        {"N", f.order()},
                        {"sign_class", to_string(f.sign_class())}};
    const auto claim = f.sign_class() == SignClass::T ? ClaimStrength::NecessaryAndSufficient
                                                      : ClaimStrength::Sufficient;
    return make_certificate(ConditionId::LEMMA1_T1, lhs, rhs, Method::DirectSum, kCertificateTol,
                            std::move(meta), claim);
}

/// Coefficient test sum n(2n - cos alpha - beta)|a_n| <= cos alpha - beta.
/// Evaluated through check_sp_sufficient on z f'(z): identical summands, so
/// the two bridges agree to the last bit.
template <typename Scalar>
Certificate check_ucsp_sufficient(const BasicCoeffFunction<Scalar>& f, const SpiralParams& s) {
    Certificate cert = check_sp_sufficient(zfprime(f), s);
    cert.condition_id = ConditionId::LEMMA1_B1;
    return cert;
}

/// Samples the defining inequality over the grid. A violation refutes
/// membership; absence of violations only suggests it (meta.one_sided).
template <typename Scalar>
Certificate geometric_check(const BasicCoeffFunction<Scalar>& f, const SpiralParams& s,
                            const DiskGrid& grid, GeometricForm form = GeometricForm::Standard) {
    const auto min = detail::spiral_margin_minimum(f, s, grid, form);
    nlohmann::json meta{{"params",
                         {{"alpha", s.alpha}, {"beta", s.beta}, {"cos_alpha", std::cos(s.alpha)}}},
                        {"N", f.order()},
                        {"grid", grid.describe()},
                        {"min_point", {{"r", min.at_radius}, {"theta", min.at_theta}}},
                        {"form", form == GeometricForm::Standard ? "standard" : "printed_variant"},
                        {"one_sided", true}};
    return make_certificate(ConditionId::GEOMETRIC, -min.min_value, 0.0, Method::Sampled,
                            -kSampledSlack, std::move(meta));
}

/// Samples |(f'(z) - 1) / ((A-B)tau - B[f'(z) - 1])| < 1 over the grid.
/// One-sided in the same sense as geometric_check.
template <typename Scalar>
Certificate check_rtau_membership(const BasicCoeffFunction<Scalar>& f, const RtauParams& r,
                                  const DiskGrid& grid) {
    double max_ratio = 0.0;
    double at_radius = 0.0, at_theta = 0.0;
    for (double radius : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / grid.angles;
            const std::complex<double> z = std::polar(radius, theta);
            const std::complex<double> num = f.eval_prime(z) - 1.0;
            const std::complex<double> den = (r.A - r.B) * r.tau - r.B * num;
            if (std::abs(den) < kDenominatorFloor)
                throw ZeroDenominator("distortion denominator vanishes near z = (" +
                                      std::to_string(z.real()) + ", " +
                                      std::to_string(z.imag()) + ")");
            const double ratio = std::abs(num / den);
            if (ratio > max_ratio) {
                max_ratio = ratio;
                at_radius = radius;
                at_theta = theta;
            }
        }
    }
    nlohmann::json meta{
        {"params", {{"A", r.A}, {"B", r.B}, {"tau", {r.tau.real(), r.tau.imag()}}}},
        {"N", f.order()},
        {"grid", grid.describe()},
        {"max_point", {{"r", at_radius}, {"theta", at_theta}}},
        {"one_sided", true}};
    return make_certificate(ConditionId::RTAU_DEF, max_ratio, 1.0, Method::Sampled,
                            -kSampledSlack, std::move(meta));
}

}  // namespace spiracert
