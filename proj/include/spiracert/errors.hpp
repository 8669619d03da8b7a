#pragma once

#include <stdexcept>
#include <string>

namespace spiracert {

/// kappa hit a non-positive integer, where the coefficient series is undefined.
struct NonAdmissibleKappa : std::domain_error {
    explicit NonAdmissibleKappa(double kappa)
        : std::domain_error("kappa = " + std::to_string(kappa) +
                            " is a non-positive integer; series undefined") {}
};

/// Operation requires c < 0 and kappa > 0.
struct RegimeViolation : std::domain_error {
    RegimeViolation(double c, double kappa)
        : std::domain_error("parameters (c = " + std::to_string(c) +
                            ", kappa = " + std::to_string(kappa) +
                            ") outside the regime c < 0, kappa > 0") {}
};

struct InvalidSpiralParams : std::invalid_argument {
    explicit InvalidSpiralParams(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidRtauParams : std::invalid_argument {
    explicit InvalidRtauParams(const std::string& what) : std::invalid_argument(what) {}
};

/// A coefficient that must be stored as a nonnegative magnitude came out negative.
struct SignViolation : std::domain_error {
    explicit SignViolation(const std::string& what) : std::domain_error(what) {}
};

/// A sampled evaluation point put a denominator below the safe threshold.
struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

/// Term cap reached before the tail bound dropped below the target.
struct SeriesNotConverged : std::runtime_error {
    explicit SeriesNotConverged(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spiracert
