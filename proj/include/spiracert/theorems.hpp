#pragma once

#include <cmath>
#include <utility>

#include "spiracert/bessel.hpp"
#include "spiracert/certificate.hpp"
#include "spiracert/class_membership.hpp"
#include "spiracert/function_model.hpp"

namespace spiracert {

namespace detail {

inline nlohmann::json theorem_meta(const BesselParams& p, const SpiralParams& s, double ca,
                                   double eps) {
    return {{"params",
             {{"c", p.c}, {"kappa", p.kappa}, {"alpha", s.alpha}, {"beta", s.beta},
              {"cos_alpha", ca}}},
            {"eps", eps}};
}

inline const char* kOneSidedNote =
    "stated as an equivalence, but the available derivation passes through an upper bound "
    "and only establishes sufficiency; treat a passing verdict as sufficient evidence only";

}  // namespace detail

/// Condition: 2u'(1) + (2 - cos a - b)(u(1) - 1) <= cos a - b.
/// Sufficient for z*u to be uniformly spirallike; equivalent for the
/// T-restricted companion z(2-u).
inline Certificate thm1_condition(const BesselParams& p, const SpiralParams& s,
                                  double eps = detail::kDefaultSeriesEps) {
    require_theorem_regime(p);
    const double ca = std::cos(s.alpha);
    const SeriesValue u = u_at_one(p, eps);
    const SeriesValue up = u_prime_at_one(p, eps);
    const double lhs = 2.0 * up.value + (2.0 - ca - s.beta) * (u.value - 1.0);
    nlohmann::json meta = detail::theorem_meta(p, s, ca, eps);
    meta["series"] = {{"terms", u.terms_used},
                      {"tail_bound", 2.0 * up.tail_bound +
                                         std::abs(2.0 - ca - s.beta) * u.tail_bound}};
    meta["notes"] =
        "equivalence applies to the T-restricted companion; for the general-class function "
        "the condition is sufficient only";
    return make_certificate(ConditionId::T1_HH, lhs, ca - s.beta, Method::ClosedForm,
                            kCertificateTol, std::move(meta),
                            ClaimStrength::NecessaryAndSufficient);
}

/// Exponential-bound variant:
/// e^(-c/4k) [ -c/2k + (2 - cos a - b)(1 - e^(c/4k)) ] <= cos a - b.
/// Dominates the T1 left side, so it certifies a subset of that region.
inline Certificate thm2_condition(const BesselParams& p, const SpiralParams& s,
                                  double eps = detail::kDefaultSeriesEps) {
    require_theorem_regime(p);
    const double ca = std::cos(s.alpha);
    const double ex = std::exp(-p.c / (4.0 * p.kappa));
    const double exm = std::exp(p.c / (4.0 * p.kappa));
    const double lhs = ex * (-p.c / (2.0 * p.kappa) + (2.0 - ca - s.beta) * (1.0 - exm));
    nlohmann::json meta = detail::theorem_meta(p, s, ca, eps);
    meta["notes"] = detail::kOneSidedNote;
    return make_certificate(ConditionId::T2_Q, lhs, ca - s.beta, Method::ClosedForm,
                            kCertificateTol, std::move(meta),
                            ClaimStrength::PaperClaimsIffSeeNotes);
}

/// Condition: 2u''(1) + (6 - cos a - b)u'(1) + (2 - cos a - b)(u(1) - 1)
/// <= cos a - b. Sufficient for z*u to be uniformly convex spirallike;
/// equivalent for z(2-u).
inline Certificate thm3_condition(const BesselParams& p, const SpiralParams& s,
                                  double eps = detail::kDefaultSeriesEps) {
    require_theorem_regime(p);
    const double ca = std::cos(s.alpha);
    const SeriesValue u = u_at_one(p, eps);
    const SeriesValue up = u_prime_at_one(p, eps);
    const SeriesValue us = u_second_at_one(p, eps);
    const double lhs = 2.0 * us.value + (6.0 - ca - s.beta) * up.value +
                       (2.0 - ca - s.beta) * (u.value - 1.0);
    nlohmann::json meta = detail::theorem_meta(p, s, ca, eps);
    meta["series"] = {{"terms", u.terms_used},
                      {"tail_bound", 2.0 * us.tail_bound +
                                         std::abs(6.0 - ca - s.beta) * up.tail_bound +
                                         std::abs(2.0 - ca - s.beta) * u.tail_bound}};
    meta["notes"] =
        "equivalence applies to the T-restricted companion; for the general-class function "
        "the condition is sufficient only";
    return make_certificate(ConditionId::T3_GH, lhs, ca - s.beta, Method::ClosedForm,
                            kCertificateTol, std::move(meta),
                            ClaimStrength::NecessaryAndSufficient);
}

/// Exponential-bound variant of T3_GH:
/// e^(-c/4k) [ c^2/8k + (6 - cos a - b)(-c/4k) + (2 - cos a - b)(1 - e^(c/4k)) ]
/// <= cos a - b.
inline Certificate thm4_condition(const BesselParams& p, const SpiralParams& s,
                                  double eps = detail::kDefaultSeriesEps) {
    require_theorem_regime(p);
    const double ca = std::cos(s.alpha);
    const double ex = std::exp(-p.c / (4.0 * p.kappa));
    const double exm = std::exp(p.c / (4.0 * p.kappa));
    const double lhs = ex * (p.c * p.c / (8.0 * p.kappa) +
                             (6.0 - ca - s.beta) * (-p.c / (4.0 * p.kappa)) +
                             (2.0 - ca - s.beta) * (1.0 - exm));
    nlohmann::json meta = detail::theorem_meta(p, s, ca, eps);
    meta["notes"] = detail::kOneSidedNote;
    return make_certificate(ConditionId::T4_66, lhs, ca - s.beta, Method::ClosedForm,
                            kCertificateTol, std::move(meta),
                            ClaimStrength::PaperClaimsIffSeeNotes);
}

/// Convolution-operator condition: (A-B)|tau| times the T1_HH left side.
/// The sufficiency route runs through the sharp coefficient bound
/// (A-B)|tau|/n, whose n cancels the n-weight of the convex-spiral test.
inline Certificate thm5_condition(const BesselParams& p, const SpiralParams& s,
                                  const RtauParams& r,
                                  double eps = detail::kDefaultSeriesEps) {
    Certificate base = thm1_condition(p, s, eps);
    const double factor = r.factor();
    nlohmann::json meta = std::move(base.meta);
    meta["params"]["A"] = r.A;
    meta["params"]["B"] = r.B;
    meta["params"]["tau"] = {r.tau.real(), r.tau.imag()};
    meta["scalar_factor"] = factor;
    meta["notes"] = detail::kOneSidedNote;
    return make_certificate(ConditionId::T5_D3, factor * base.lhs, base.rhs, Method::ClosedForm,
                            kCertificateTol, std::move(meta),
                            ClaimStrength::PaperClaimsIffSeeNotes);
}

/// Exponential analogue of thm5: (A-B)|tau| times the T2_Q left side.
inline Certificate thm7_condition(const BesselParams& p, const SpiralParams& s,
                                  const RtauParams& r,
                                  double eps = detail::kDefaultSeriesEps) {
    Certificate base = thm2_condition(p, s, eps);
    const double factor = r.factor();
    nlohmann::json meta = std::move(base.meta);
    meta["params"]["A"] = r.A;
    meta["params"]["B"] = r.B;
    meta["params"]["tau"] = {r.tau.real(), r.tau.imag()};
    meta["scalar_factor"] = factor;
    meta["notes"] = detail::kOneSidedNote;
    return make_certificate(ConditionId::T7_D3EXP, factor * base.lhs, base.rhs,
                            Method::ClosedForm, kCertificateTol, std::move(meta),
                            ClaimStrength::PaperClaimsIffSeeNotes);
}

/// Conditions for the integral primitive G: the n-weight of the convex-spiral
/// test cancels against the /n in G's coefficients, so G's membership reduces
/// to the T1_HH value (exactly) and to the T4_66 bound (one-sided).
inline std::pair<Certificate, Certificate> thmG_conditions(
    const BesselParams& p, const SpiralParams& s, double eps = detail::kDefaultSeriesEps) {
    Certificate hh = thm1_condition(p, s, eps);
    hh.condition_id = ConditionId::T6_G_HH;
    hh.meta["role"] = "integral_primitive";
    hh.meta["notes"] = "equivalent for the T-class integral primitive";
    Certificate e66 = thm4_condition(p, s, eps);
    e66.condition_id = ConditionId::T8_G_66;
    e66.meta["role"] = "integral_primitive";
    return {std::move(hh), std::move(e66)};
}

/// Dispatch for the closed-form certifiers. Distortion-class conditions need
/// RtauParams; the sampled condition ids are not certifiable here.
inline Certificate evaluate_condition(ConditionId id, const BesselParams& p,
                                      const SpiralParams& s,
                                      const std::optional<RtauParams>& r = std::nullopt,
                                      double eps = detail::kDefaultSeriesEps) {
    switch (id) {
        case ConditionId::T1_HH: return thm1_condition(p, s, eps);
        case ConditionId::T2_Q: return thm2_condition(p, s, eps);
        case ConditionId::T3_GH: return thm3_condition(p, s, eps);
        case ConditionId::T4_66: return thm4_condition(p, s, eps);
        case ConditionId::T6_G_HH: return thmG_conditions(p, s, eps).first;
        case ConditionId::T8_G_66: return thmG_conditions(p, s, eps).second;
        case ConditionId::T5_D3:
            if (!r) throw InvalidRtauParams("condition T5_D3 requires A, B, tau");
            return thm5_condition(p, s, *r, eps);
        case ConditionId::T7_D3EXP:
            if (!r) throw InvalidRtauParams("condition T7_D3EXP requires A, B, tau");
            return thm7_condition(p, s, *r, eps);
        default:
            throw std::invalid_argument("condition " + to_string(id) +
                                        " has no closed-form certifier");
    }
}

}  // namespace spiracert
