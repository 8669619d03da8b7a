#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spiracert/bessel.hpp"
#include "spiracert/errors.hpp"

namespace spiracert {

/// Sign convention of the stored coefficients. General functions store the
/// signed a_n of f(z) = z + sum a_n z^n. T-restricted functions store the
/// magnitudes |a_n| of f(z) = z - sum |a_n| z^n; evaluation flips the sign.
enum class SignClass { General, T };

inline std::string to_string(SignClass sc) { return sc == SignClass::T ? "T" : "GENERAL"; }

namespace detail {

template <typename Scalar>
constexpr bool is_complex_v = false;
template <typename R>
constexpr bool is_complex_v<std::complex<R>> = true;

template <typename Scalar>
void check_t_storage(const std::vector<Scalar>& coeffs) {
    for (size_t i = 0; i < coeffs.size(); ++i) {
        bool ok;
        if constexpr (is_complex_v<Scalar>) {
            ok = coeffs[i].imag() == 0.0 && coeffs[i].real() >= 0.0;
        } else {
            ok = coeffs[i] >= Scalar(0);
        }
        if (!ok)
            throw SignViolation("T-class coefficient a_" + std::to_string(i + 2) +
                                " must be stored as a nonnegative magnitude");
    }
}

}  // namespace detail

/// A normalized analytic function truncated to its first N coefficients
/// (a_1 = 1 implicit, stored entries are a_2..a_N). Immutable after
/// construction; freely shareable.
template <typename Scalar>
class BasicCoeffFunction {
  public:
    using scalar_type = Scalar;

    BasicCoeffFunction(SignClass sign_class, std::vector<Scalar> coeffs)
        : sign_class_(sign_class), coeffs_(std::move(coeffs)) {
        for (const Scalar& a : coeffs_) {
            if (!std::isfinite(std::abs(a)))
                throw std::invalid_argument("coefficients must be finite");
        }
        if (sign_class_ == SignClass::T) detail::check_t_storage(coeffs_);
    }

    /// The identity function z, truncated at order N.
    static BasicCoeffFunction identity(int order = 1) {
        if (order < 1) throw std::invalid_argument("order must be >= 1");
        return BasicCoeffFunction(SignClass::General,
                                  std::vector<Scalar>(static_cast<size_t>(order - 1), Scalar(0)));
    }

    SignClass sign_class() const { return sign_class_; }
    int order() const { return static_cast<int>(coeffs_.size()) + 1; }  // N
    const std::vector<Scalar>& stored() const { return coeffs_; }

    /// Stored value for index n in [2, N].
    Scalar stored_at(int n) const { return coeffs_.at(static_cast<size_t>(n - 2)); }

    /// |a_n| for n in [2, N].
    double magnitude(int n) const { return std::abs(stored_at(n)); }

    /// Signed coefficient of z^n as it appears in the series.
    Scalar coefficient(int n) const {
        return sign_class_ == SignClass::T ? -stored_at(n) : stored_at(n);
    }

    std::complex<double> eval(std::complex<double> z) const {
        const double sign = sign_class_ == SignClass::T ? -1.0 : 1.0;
        std::complex<double> acc = 0.0;
        std::complex<double> zp = z;
        for (const Scalar& a : coeffs_) {
            zp *= z;
            acc += std::complex<double>(a) * zp;
        }
        return z + sign * acc;
    }

    std::complex<double> eval_prime(std::complex<double> z) const {
        const double sign = sign_class_ == SignClass::T ? -1.0 : 1.0;
        std::complex<double> acc = 0.0;
        std::complex<double> zp = z;  // z^(n-1) for n = 2
        int n = 2;
        for (const Scalar& a : coeffs_) {
            acc += static_cast<double>(n) * std::complex<double>(a) * zp;
            zp *= z;
            ++n;
        }
        return 1.0 + sign * acc;
    }

    friend bool operator==(const BasicCoeffFunction& a, const BasicCoeffFunction& b) {
        return a.sign_class_ == b.sign_class_ && a.coeffs_ == b.coeffs_;
    }

  private:
    SignClass sign_class_;
    std::vector<Scalar> coeffs_;
};

using CoeffFunction = BasicCoeffFunction<double>;
using ComplexCoeffFunction = BasicCoeffFunction<std::complex<double>>;

namespace detail {

/// Coefficients of z*u(z) for n = 2..N via the running recurrence. Matches
/// u_coefficient(params, n) bitwise for every n.
inline std::vector<double> z_up_coefficients(const BesselParams& params, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<size_t>(order - 1));
    const double d = -params.c / 4.0;
    double coef = d / params.kappa;
    for (int n = 2; n <= order; ++n) {
        coeffs.push_back(coef);
        coef *= d / ((params.kappa + n - 1) * n);
    }
    return coeffs;
}

}  // namespace detail

/// z*u(z) as a general-class coefficient function of order N.
inline CoeffFunction make_z_up(const BesselParams& params, int order) {
    return CoeffFunction(SignClass::General, detail::z_up_coefficients(params, order));
}

/// z(2 - u(z)), the T-restricted companion: same magnitudes, negated tail.
/// Throws SignViolation when a coefficient is negative (c > 0 misuse).
inline CoeffFunction make_z_two_minus_up(const BesselParams& params, int order) {
    return CoeffFunction(SignClass::T, detail::z_up_coefficients(params, order));
}

/// Convolution operator: scales a_n of f by the z*u(z) coefficient.
/// Sign class is preserved.
template <typename Scalar>
BasicCoeffFunction<Scalar> hadamard_convolve(const BesselParams& params,
                                             const BasicCoeffFunction<Scalar>& f) {
    std::vector<double> weights = detail::z_up_coefficients(params, f.order());
    std::vector<Scalar> out(f.stored());
    for (size_t i = 0; i < out.size(); ++i) out[i] = Scalar(weights[i]) * out[i];
    return BasicCoeffFunction<Scalar>(f.sign_class(), std::move(out));
}

/// Primitive of 2 - u(t) from 0 to z: T-class with magnitudes equal to the
/// z*u coefficients divided by n (same floating-point inputs, one division).
inline CoeffFunction integral_G_coeffs(const BesselParams& params, int order) {
    std::vector<double> coeffs = detail::z_up_coefficients(params, order);
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] /= static_cast<double>(i + 2);
    return CoeffFunction(SignClass::T, std::move(coeffs));
}

/// z f'(z): coefficient n scaled by n, exact integer factor.
template <typename Scalar>
BasicCoeffFunction<Scalar> zfprime(const BasicCoeffFunction<Scalar>& f) {
    std::vector<Scalar> out(f.stored());
    for (size_t i = 0; i < out.size(); ++i) out[i] = Scalar(static_cast<double>(i + 2)) * out[i];
    return BasicCoeffFunction<Scalar>(f.sign_class(), std::move(out));
}

/// Parameters (A, B, tau) of the bounded f'-distortion class.
struct RtauParams {
    double A;
    double B;
    std::complex<double> tau;

    RtauParams(double A_, double B_, std::complex<double> tau_) : A(A_), B(B_), tau(tau_) {
        if (!(-1.0 <= B && B < A && A <= 1.0))
            throw InvalidRtauParams("require -1 <= B < A <= 1");
        if (!(std::abs(tau) > 0.0)) throw InvalidRtauParams("require tau != 0");
    }

    double factor() const { return (A - B) * std::abs(tau); }
};

/// Sharp coefficient bound |a_n| <= (A-B)|tau|/n for the distortion class.
inline double rtau_coeff_bound(int n, const RtauParams& r) {
    if (n < 2) throw std::invalid_argument("rtau_coeff_bound: n must be >= 2");
    return r.factor() / static_cast<double>(n);
}

/// The extremal function attaining the bound at index n: the primitive of
/// 1 + (A-B) tau t^(n-1) / (1 + B t^(n-1)), expanded to order N. Nonzero
/// coefficients sit at indices (m+1)(n-1)+1 with value
/// (A-B) tau (-B)^m / ((m+1)(n-1)+1).
inline ComplexCoeffFunction rtau_extremal_coeffs(int n, const RtauParams& r, int order) {
    if (n < 2) throw std::invalid_argument("rtau_extremal_coeffs: n must be >= 2");
    if (!(std::abs(r.B) < 1.0))
        throw InvalidRtauParams("rtau_extremal_coeffs: require |B| < 1");
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<std::complex<double>> coeffs(static_cast<size_t>(order - 1), 0.0);
    std::complex<double> num = (r.A - r.B) * r.tau;  // (A-B) tau (-B)^m
    for (int m = 0;; ++m) {
        const long idx = static_cast<long>(m + 1) * (n - 1) + 1;
        if (idx > order) break;
        coeffs[static_cast<size_t>(idx - 2)] = num / static_cast<double>(idx);
        num *= -r.B;
    }
    return ComplexCoeffFunction(SignClass::General, std::move(coeffs));
}

// --- JSON interchange --------------------------------------------------

inline void to_json(nlohmann::json& j, const CoeffFunction& f) {
    j = nlohmann::json{{"sign_class", to_string(f.sign_class())}, {"coeffs", f.stored()}};
}

inline CoeffFunction parse_coeff_function(const nlohmann::json& j) {
    const std::string sc = j.at("sign_class").get<std::string>();
    if (sc != "T" && sc != "GENERAL")
        throw std::invalid_argument("sign_class must be \"GENERAL\" or \"T\"");
    return CoeffFunction(sc == "T" ? SignClass::T : SignClass::General,
                         j.at("coeffs").get<std::vector<double>>());
}

/// Complex coefficients serialize as [re, im] pairs.
inline void to_json(nlohmann::json& j, const ComplexCoeffFunction& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : f.stored()) arr.push_back({a.real(), a.imag()});
    j = nlohmann::json{{"sign_class", to_string(f.sign_class())}, {"coeffs", std::move(arr)}};
}

}  // namespace spiracert
