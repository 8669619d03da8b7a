#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "spiracert/errors.hpp"

namespace spiracert {

/// kappa must avoid the poles 0, -1, -2, ... of the coefficient recurrence.
inline bool kappa_admissible(double kappa) {
    return !(kappa <= 0.0 && kappa == std::floor(kappa));
}

/// Parameters (c, kappa) of the normalized Bessel-type series
/// u(z) = sum_{n>=0} (-c/4)^n / ((kappa)_n n!) z^n.
/// The certifier regime additionally requires c < 0 and kappa > 0.
struct BesselParams {
    double c;
    double kappa;
    std::optional<double> b;  // set when kappa was derived from (b, p)
    std::optional<double> p;

    BesselParams(double c_, double kappa_) : c(c_), kappa(kappa_) {
        if (!kappa_admissible(kappa)) throw NonAdmissibleKappa(kappa);
    }

    /// kappa = p + (b+1)/2.
    static BesselParams from_order(double c, double b, double p) {
        BesselParams out(c, p + (b + 1.0) / 2.0);
        out.b = b;
        out.p = p;
        return out;
    }

    bool theorem_regime() const { return c < 0.0 && kappa > 0.0; }

    /// Parameters with kappa shifted up by `m` (the derivative recursions
    /// move evaluation to kappa+1 and kappa+2).
    BesselParams shifted(int m) const {
        BesselParams out(c, kappa + m);
        if (b && p) {
            out.b = b;
            out.p = *p + m;
        }
        return out;
    }
};

inline void require_theorem_regime(const BesselParams& params) {
    if (!params.theorem_regime()) throw RegimeViolation(params.c, params.kappa);
}

/// A truncated series evaluation together with the number of terms summed and
/// a rigorous bound on the absolute value of the discarded tail.
template <typename Value>
struct BasicSeriesValue {
    Value value{};
    int terms_used = 0;
    double tail_bound = 0.0;
};

using SeriesValue = BasicSeriesValue<double>;
using ComplexSeriesValue = BasicSeriesValue<std::complex<double>>;

/// Rising factorial (a)_n as a running product; defined for every real a.
inline double pochhammer(double a, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: n must be nonnegative");
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= a + k;
    return prod;
}

namespace detail {

inline constexpr int kMaxSeriesTerms = 10000;
inline constexpr double kDefaultSeriesEps = 1e-14;

/// Sums sum_{n>=0} (d z)^n / ((kappa)_n n!). The ratio of consecutive terms
/// is d z / ((kappa+n)(n+1)); once kappa+n > 0 its magnitude r decreases, so
/// the discarded tail after term t_n is at most |t_n| r/(1-r). Stops when the
/// current term and that geometric bound both drop below eps/2.
template <typename Value>
BasicSeriesValue<Value> u_series(double kappa, double d, Value z, double eps) {
    if (!kappa_admissible(kappa)) throw NonAdmissibleKappa(kappa);
    if (!(eps > 0.0)) throw std::invalid_argument("u_series: eps must be positive");
    const double scale = std::abs(d) * std::abs(z);
    if (scale == 0.0) return {Value(1), 1, 0.0};  // series terminates at n = 0

    Value term(1);
    Value sum(0);
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        sum += term;
        const double denom = (kappa + n) * (n + 1);
        if (kappa + n > 0.0) {
            const double r = scale / denom;
            const double mag = std::abs(term);
            if (r < 1.0) {
                const double tail = mag * r / (1.0 - r);
                if (mag <= 0.5 * eps && tail <= 0.5 * eps) return {sum, n + 1, tail};
            }
        }
        term *= (d * z) / denom;
    }
    throw SeriesNotConverged("u_series: no convergence within term cap");
}

}  // namespace detail

/// u(1) by truncated series; tail_bound <= eps.
inline SeriesValue u_at_one(const BesselParams& params, double eps = detail::kDefaultSeriesEps) {
    return detail::u_series(params.kappa, -params.c / 4.0, 1.0, eps);
}

/// u(z) for |z| <= 1 by the same series and tail logic.
inline ComplexSeriesValue u_at(const BesselParams& params, std::complex<double> z,
                               double eps = detail::kDefaultSeriesEps) {
    if (std::abs(z) > 1.0 + 1e-15)
        throw std::invalid_argument("u_at: evaluation restricted to the closed unit disk");
    return detail::u_series(params.kappa, -params.c / 4.0, z, eps);
}

/// u'(1) via the shift recursion u'(z) = ((-c/4)/kappa) u[kappa+1](z).
inline SeriesValue u_prime_at_one(const BesselParams& params,
                                  double eps = detail::kDefaultSeriesEps) {
    const double pre = (-params.c / 4.0) / params.kappa;
    SeriesValue inner = detail::u_series(params.kappa + 1.0, -params.c / 4.0, 1.0, eps);
    return {pre * inner.value + 0.0, inner.terms_used, std::abs(pre) * inner.tail_bound};
}

/// u''(1) via u''(z) = ((-c/4)^2 / (kappa(kappa+1))) u[kappa+2](z).
inline SeriesValue u_second_at_one(const BesselParams& params,
                                   double eps = detail::kDefaultSeriesEps) {
    const double d = -params.c / 4.0;
    const double pre = d * d / (params.kappa * (params.kappa + 1.0));
    SeriesValue inner = detail::u_series(params.kappa + 2.0, d, 1.0, eps);
    return {pre * inner.value + 0.0, inner.terms_used, std::abs(pre) * inner.tail_bound};
}

/// Coefficient of z^n (n >= 2) in z*u(z): (-c/4)^(n-1) / ((kappa)_{n-1} (n-1)!).
/// Computed by the running recurrence; exact same arithmetic as the series
/// builders in the function model, so shared coefficients compare bitwise.
inline double u_coefficient(const BesselParams& params, int n) {
    if (n < 2) throw std::invalid_argument("u_coefficient: n must be >= 2");
    const double d = -params.c / 4.0;
    double coef = d / params.kappa;
    for (int m = 2; m < n; ++m) coef *= d / ((params.kappa + m - 1) * m);
    return coef;
}

}  // namespace spiracert
