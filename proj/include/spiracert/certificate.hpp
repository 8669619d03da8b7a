#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace spiracert {

/// Which inequality a certificate reports on.
enum class ConditionId {
    T1_HH,      // 2u'(1) + (2-cos a-b)(u(1)-1) <= cos a - b
    T2_Q,       // exponential bound form of T1_HH
    T3_GH,      // 2u''(1) + (6-cos a-b)u'(1) + (2-cos a-b)(u(1)-1) <= cos a - b
    T4_66,      // exponential bound form of T3_GH
    T5_D3,      // (A-B)|tau| * T1_HH left side
    T7_D3EXP,   // (A-B)|tau| * T2_Q left side
    T6_G_HH,    // T1_HH relabeled for the integral primitive G
    T8_G_66,    // T4_66 relabeled for the integral primitive G
    LEMMA1_T1,  // coefficient sum, spiral class
    LEMMA1_B1,  // coefficient sum, convex spiral class
    GEOMETRIC,  // sampled disk inequality
    RTAU_DEF,   // sampled f'-distortion inequality
};

enum class Method { ClosedForm, DirectSum, Sampled };

/// How much a passing verdict proves. PaperClaimsIffSeeNotes marks conditions
/// whose published statement asserts equivalence while the available
/// derivation only establishes sufficiency; meta.notes carries the caveat.
enum class ClaimStrength { Sufficient, NecessaryAndSufficient, PaperClaimsIffSeeNotes };

inline std::string to_string(ConditionId id) {
    switch (id) {
        case ConditionId::T1_HH: return "T1_HH";
        case ConditionId::T2_Q: return "T2_Q";
        case ConditionId::T3_GH: return "T3_GH";
        case ConditionId::T4_66: return "T4_66";
        case ConditionId::T5_D3: return "T5_D3";
        case ConditionId::T7_D3EXP: return "T7_D3EXP";
        case ConditionId::T6_G_HH: return "T6_G_HH";
        case ConditionId::T8_G_66: return "T8_G_66";
        case ConditionId::LEMMA1_T1: return "LEMMA1_T1";
        case ConditionId::LEMMA1_B1: return "LEMMA1_B1";
        case ConditionId::GEOMETRIC: return "GEOMETRIC";
        case ConditionId::RTAU_DEF: return "RTAU_DEF";
    }
    return "UNKNOWN";
}

inline ConditionId condition_id_from_string(const std::string& s) {
    for (ConditionId id :
         {ConditionId::T1_HH, ConditionId::T2_Q, ConditionId::T3_GH, ConditionId::T4_66,
          ConditionId::T5_D3, ConditionId::T7_D3EXP, ConditionId::T6_G_HH, ConditionId::T8_G_66,
          ConditionId::LEMMA1_T1, ConditionId::LEMMA1_B1, ConditionId::GEOMETRIC,
          ConditionId::RTAU_DEF}) {
        if (to_string(id) == s) return id;
    }
    throw std::invalid_argument("unknown condition id: " + s);
}

inline std::string to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "CLOSED_FORM";
        case Method::DirectSum: return "DIRECT_SUM";
        case Method::Sampled: return "SAMPLED";
    }
    return "UNKNOWN";
}

inline std::string to_string(ClaimStrength c) {
    switch (c) {
        case ClaimStrength::Sufficient: return "SUFFICIENT";
        case ClaimStrength::NecessaryAndSufficient: return "NECESSARY_AND_SUFFICIENT";
        case ClaimStrength::PaperClaimsIffSeeNotes: return "PAPER_CLAIMS_IFF_SEE_NOTES";
    }
    return "UNKNOWN";
}

/// One evaluated inequality: lhs <= rhs up to the recorded tolerance.
/// Invariant: holds == (margin >= -tol); margin == rhs - lhs.
/// Sampled certificates store a negative tol so that `holds` demands a
/// strictly positive sampled margin.
struct Certificate {
    ConditionId condition_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool holds = false;
    Method method = Method::ClosedForm;
    std::optional<ClaimStrength> claim_strength;
    double tol = 1e-10;
    nlohmann::json meta = nlohmann::json::object();
};

inline Certificate make_certificate(ConditionId id, double lhs, double rhs, Method method,
                                    double tol, nlohmann::json meta,
                                    std::optional<ClaimStrength> claim = std::nullopt) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs))
        throw std::invalid_argument("certificate sides must be finite (condition " +
                                    to_string(id) + ")");
    Certificate cert;
    cert.condition_id = id;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.margin = rhs - lhs;
    cert.tol = tol;
    cert.holds = cert.margin >= -tol;
    cert.method = method;
    cert.claim_strength = claim;
    cert.meta = std::move(meta);
    cert.meta["tol"] = tol;
    return cert;
}

inline void to_json(nlohmann::json& j, const Certificate& cert) {
    j = nlohmann::json{{"condition_id", to_string(cert.condition_id)},
                       {"lhs", cert.lhs},
                       {"rhs", cert.rhs},
                       {"margin", cert.margin},
                       {"holds", cert.holds},
                       {"method", to_string(cert.method)},
                       {"meta", cert.meta}};
    if (cert.claim_strength) j["claim_strength"] = to_string(*cert.claim_strength);
}

}  // namespace spiracert
