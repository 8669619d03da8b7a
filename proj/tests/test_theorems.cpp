#include <cmath>

#include "doctest.h"
#include "spiracert/oracle.hpp"
#include "spiracert/theorems.hpp"

using namespace spiracert;

TEST_CASE("thm1_condition: regime guards, limit, frozen values") {
    const SpiralParams s(0.0, 0.0);
    CHECK_THROWS_AS(thm1_condition(BesselParams(1.0, 1.0), s), RegimeViolation);
    CHECK_THROWS_AS(thm1_condition(BesselParams(0.0, 1.0), s), RegimeViolation);
    CHECK_THROWS_AS(thm1_condition(BesselParams(-1.0, -0.5), s), RegimeViolation);
    CHECK_THROWS_AS(thm1_condition(BesselParams(-1.0, 0.0), s), NonAdmissibleKappa);

    const Certificate limit = thm1_condition(BesselParams(-1e-12, 1.0), s);
    CHECK(std::abs(limit.lhs) < 1e-11);
    CHECK(limit.holds);

    // Frozen via the direct-summation oracle.
    const Certificate mid = thm1_condition(BesselParams(-1.0, 1.0), s);
    CHECK(mid.lhs == doctest::Approx(0.8312249817444934).epsilon(1e-13));
    CHECK(mid.rhs == 1.0);
    CHECK(mid.holds);
    CHECK(mid.method == Method::ClosedForm);
    CHECK(mid.claim_strength == ClaimStrength::NecessaryAndSufficient);

    const Certificate big = thm1_condition(BesselParams(-4.0, 1.0), s);
    CHECK(big.lhs == doctest::Approx(4.4608590116107254).epsilon(1e-13));
    CHECK_FALSE(big.holds);
}

TEST_CASE("thm1_condition matches the direct sum on random tuples") {
    for (int i = 0; i < 200; ++i) {
        const ParamTuple t = sample_tuple(101, static_cast<std::uint64_t>(i));
        const BesselParams p(t.c, t.kappa);
        const SpiralParams s(t.alpha, t.beta);
        const double closed = thm1_condition(p, s).lhs;
        const double direct = direct_sum_sp(p, s);
        CHECK(std::abs(closed - direct) <= 1e-10 * (1.0 + std::abs(closed)));
    }
}

TEST_CASE("thm2_condition: literal formula, domination, implication") {
    const SpiralParams s(0.0, 0.0);
    const Certificate q = thm2_condition(BesselParams(-1.0, 1.0), s);
    CHECK(q.lhs == doctest::Approx(0.9260381250316122).epsilon(1e-14));
    CHECK(q.holds);
    CHECK(q.claim_strength == ClaimStrength::PaperClaimsIffSeeNotes);

    // Independent re-typing of the displayed expression.
    const double ex = std::exp(0.25), exm = std::exp(-0.25);
    CHECK(q.lhs == doctest::Approx(ex * (0.5 + (2.0 - 1.0) * (1.0 - exm))).epsilon(1e-15));

    for (int i = 0; i < 300; ++i) {
        const ParamTuple t = sample_tuple(103, static_cast<std::uint64_t>(i));
        const BesselParams p(t.c, t.kappa);
        const SpiralParams sp(t.alpha, t.beta);
        const Certificate c1 = thm1_condition(p, sp);
        const Certificate c2 = thm2_condition(p, sp);
        CHECK(c2.lhs - c1.lhs >= -1e-12);
        if (c2.holds) CHECK(c1.holds);
    }
}

TEST_CASE("thm3_condition: frozen value and decomposition identity") {
    const SpiralParams s(0.0, 0.0);
    const Certificate gh = thm3_condition(BesselParams(-1.0, 1.0), s);
    CHECK(gh.lhs == doctest::Approx(1.7468374726167400).epsilon(1e-13));
    CHECK_FALSE(gh.holds);  // 1.747 > 1

    const Certificate limit = thm3_condition(BesselParams(-1e-12, 1.0), s);
    CHECK(limit.holds);

    for (int i = 0; i < 200; ++i) {
        const ParamTuple t = sample_tuple(107, static_cast<std::uint64_t>(i));
        const BesselParams p(t.c, t.kappa);
        const SpiralParams sp(t.alpha, t.beta);
        const Certificate c3 = thm3_condition(p, sp);
        const double direct = direct_sum_ucsp(p, sp);
        CHECK(std::abs(c3.lhs - direct) <= 1e-10 * (1.0 + std::abs(c3.lhs)));
        // The convex-spiral sum carries an extra factor n >= 2 on every term.
        CHECK(c3.lhs >= thm1_condition(p, sp).lhs - 1e-12);
    }
}

TEST_CASE("thm4_condition: frozen value, extended-precision recheck, domination") {
    const SpiralParams s(0.0, 0.0);
    const Certificate e66 = thm4_condition(BesselParams(-1.0, 1.0), s);
    CHECK(e66.lhs == doctest::Approx(2.0495603646333860).epsilon(1e-14));

    {
        // Extended-precision re-evaluation of the displayed expression.
        const Certificate c = thm4_condition(BesselParams(-0.5, 2.0), s);
        const long double cc = -0.5L, k = 2.0L, ca = 1.0L, b = 0.0L;
        const long double lx = std::exp((long double)(-cc / (4.0L * k)));
        const long double lxm = std::exp((long double)(cc / (4.0L * k)));
        const long double expect =
            lx * (cc * cc / (8.0L * k) + (6.0L - ca - b) * (-cc / (4.0L * k)) +
                  (2.0L - ca - b) * (1.0L - lxm));
        CHECK(std::abs(c.lhs - static_cast<double>(expect)) <=
              1e-12 * std::abs(static_cast<double>(expect)));
    }

    for (int i = 0; i < 300; ++i) {
        const ParamTuple t = sample_tuple(109, static_cast<std::uint64_t>(i));
        const BesselParams p(t.c, t.kappa);
        const SpiralParams sp(t.alpha, t.beta);
        const Certificate c3 = thm3_condition(p, sp);
        const Certificate c4 = thm4_condition(p, sp);
        CHECK(c4.lhs - c3.lhs >= -1e-12);
        if (c4.holds) CHECK(c3.holds);
    }
}

TEST_CASE("thm5/thm7: exact scalar bridges") {
    const SpiralParams s(0.0, 0.0);
    const BesselParams p(-1.0, 1.0);
    const Certificate base1 = thm1_condition(p, s);
    const Certificate base2 = thm2_condition(p, s);

    // (A-B)|tau| = 1 reproduces the base left side exactly.
    for (const RtauParams& unit : {RtauParams(1.0, 0.0, 1.0), RtauParams(1.0, -1.0, 0.5)}) {
        CHECK(thm5_condition(p, s, unit).lhs == base1.lhs);
        CHECK(thm7_condition(p, s, unit).lhs == base2.lhs);
    }

    const RtauParams doubled(1.0, 0.0, 2.0);
    const Certificate c5 = thm5_condition(p, s, doubled);
    CHECK(c5.lhs == 2.0 * base1.lhs);
    CHECK_FALSE(c5.holds);  // 1.66 > 1
    CHECK(c5.claim_strength == ClaimStrength::PaperClaimsIffSeeNotes);

    for (int i = 0; i < 200; ++i) {
        const ParamTuple t = sample_tuple(113, static_cast<std::uint64_t>(i));
        SplitMix64 rng = stream_for(113, static_cast<std::uint64_t>(i), 0xA5A5A5A5ULL);
        const RtauParams r = sample_rtau(rng);
        const BesselParams pp(t.c, t.kappa);
        const SpiralParams sp(t.alpha, t.beta);
        const Certificate a5 = thm5_condition(pp, sp, r);
        const Certificate a7 = thm7_condition(pp, sp, r);
        const double f = r.factor();
        CHECK(std::abs(a5.lhs - f * thm1_condition(pp, sp).lhs) <=
              1e-15 * std::max(std::abs(a5.lhs), 1e-300));
        CHECK(std::abs(a7.lhs - f * thm2_condition(pp, sp).lhs) <=
              1e-15 * std::max(std::abs(a7.lhs), 1e-300));
        if (a7.holds) CHECK(a5.holds);
    }
}

TEST_CASE("thmG_conditions: relabeled values and coefficient cross-check") {
    const SpiralParams s(0.2, 0.1);
    const BesselParams p(-2.0, 1.5);
    const auto [hh, e66] = thmG_conditions(p, s);
    CHECK(hh.condition_id == ConditionId::T6_G_HH);
    CHECK(e66.condition_id == ConditionId::T8_G_66);
    CHECK(hh.lhs == thm1_condition(p, s).lhs);
    CHECK(e66.lhs == thm4_condition(p, s).lhs);
    CHECK(hh.claim_strength == ClaimStrength::NecessaryAndSufficient);
    CHECK(e66.claim_strength == ClaimStrength::PaperClaimsIffSeeNotes);

    int used = 0;
    for (int i = 0; used < 10 && i < 200; ++i) {
        const ParamTuple t = sample_tuple(127, static_cast<std::uint64_t>(i));
        const BesselParams pp(t.c, t.kappa);
        const SpiralParams sp(t.alpha, t.beta);
        const Certificate cond = thmG_conditions(pp, sp).first;
        if (std::abs(cond.margin) < 1e-6) continue;  // knife edge
        ++used;
        const Certificate direct = check_ucsp_sufficient(integral_G_coeffs(pp, 64), sp);
        CHECK(direct.holds == cond.holds);
    }
    CHECK(used == 10);
}

TEST_CASE("degenerate boundary cos(alpha) = beta evaluates cleanly") {
    const double alpha = 1.0;
    const SpiralParams s(alpha, std::cos(alpha));  // rhs exactly zero
    const Certificate tiny = thm1_condition(BesselParams(-1e-12, 1.0), s);
    CHECK(std::isfinite(tiny.lhs));
    CHECK(tiny.rhs == 0.0);
    CHECK(tiny.holds);  // lhs within tolerance of zero

    const Certificate fat = thm1_condition(BesselParams(-1.0, 1.0), s);
    CHECK_FALSE(fat.holds);

    const SpiralParams nearly(0.0, 0.999999);
    const Certificate near_cert = thm2_condition(BesselParams(-1e-8, 1.0), nearly);
    CHECK(std::isfinite(near_cert.lhs));
    CHECK(near_cert.holds);
}

TEST_CASE("thm1 left side grows with |c|") {
    SplitMix64 rng(131);
    for (int i = 0; i < 50; ++i) {
        const double kappa = rng.uniform(0.1, 10.0);
        const double alpha = rng.uniform(-1.4, 1.4);
        const double beta = rng.uniform(0.0, std::cos(alpha) * 0.99);
        const SpiralParams s(alpha, beta);
        const double c_small = rng.uniform(-4.0, -0.01);
        const double c_big = c_small * rng.uniform(1.01, 2.0);
        CHECK(thm1_condition(BesselParams(c_big, kappa), s).lhs >
              thm1_condition(BesselParams(c_small, kappa), s).lhs);
    }
}

TEST_CASE("evaluate_condition dispatch") {
    const BesselParams p(-1.0, 1.0);
    const SpiralParams s(0.0, 0.0);
    CHECK(evaluate_condition(ConditionId::T1_HH, p, s).lhs == thm1_condition(p, s).lhs);
    CHECK(evaluate_condition(ConditionId::T8_G_66, p, s).condition_id == ConditionId::T8_G_66);
    CHECK_THROWS_AS(evaluate_condition(ConditionId::T5_D3, p, s), InvalidRtauParams);
    CHECK_THROWS_AS(evaluate_condition(ConditionId::GEOMETRIC, p, s), std::invalid_argument);
    const RtauParams r(1.0, 0.0, 1.0);
    CHECK(evaluate_condition(ConditionId::T5_D3, p, s, r).lhs == thm1_condition(p, s).lhs);
}
