// spiracert: evaluate Bessel-type series, certify spirallike-class
// conditions, scan parameter regions, and run the oracle cross-checks.
//
// Exit codes: 0 success, 1 a requested condition or oracle check failed,
// 2 usage or parameter-regime error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spiracert/spiracert.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct EvalOptions {
    double c = 0.0;
    double kappa = 1.0;
    double eps = 1e-14;
    bool allow_degenerate = false;
};

struct CertifyOptions {
    double c = 0.0;
    double kappa = 1.0;
    std::optional<double> alpha;
    std::optional<double> alpha_deg;
    double beta = 0.0;
    double eps = 1e-14;
    std::vector<std::string> conds;
    std::optional<double> A;
    std::optional<double> B;
    double tau_re = 1.0;
    double tau_im = 0.0;
    bool tau_set = false;
};

struct ScanOptions {
    spiracert::ScanSpec spec;
    std::optional<double> alpha;
    std::optional<double> alpha_deg;
    std::vector<std::string> conds;
    std::string format = "csv";
    std::optional<double> A;
    std::optional<double> B;
    double tau_re = 1.0;
    double tau_im = 0.0;
    bool tau_set = false;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    long tuples = 10000;
    double eps = 1e-14;
    std::string golden;
};

double resolve_alpha(const std::optional<double>& rad, const std::optional<double>& deg) {
    if (rad && deg) throw std::invalid_argument("give either --alpha or --alpha-deg, not both");
    if (deg) return *deg * std::numbers::pi / 180.0;
    return rad.value_or(0.0);
}

std::vector<spiracert::ConditionId> parse_conditions(const std::vector<std::string>& args,
                                                     bool have_rtau) {
    using spiracert::ConditionId;
    std::vector<ConditionId> ids;
    for (const std::string& arg : args) {
        size_t start = 0;
        while (start <= arg.size()) {
            const size_t comma = arg.find(',', start);
            const std::string token =
                arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!token.empty()) {
                if (token == "ALL") {
                    for (ConditionId id : {ConditionId::T1_HH, ConditionId::T2_Q,
                                           ConditionId::T3_GH, ConditionId::T4_66,
                                           ConditionId::T6_G_HH, ConditionId::T8_G_66})
                        ids.push_back(id);
                    if (have_rtau) {
                        ids.push_back(ConditionId::T5_D3);
                        ids.push_back(ConditionId::T7_D3EXP);
                    }
                } else {
                    ids.push_back(spiracert::condition_id_from_string(token));
                }
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (ids.empty()) throw std::invalid_argument("no conditions requested (--cond)");
    return ids;
}

std::optional<spiracert::RtauParams> build_rtau(const std::optional<double>& A,
                                                const std::optional<double>& B, double tau_re,
                                                double tau_im, bool tau_set) {
    if (!A && !B && !tau_set) return std::nullopt;
    if (!A || !B) throw std::invalid_argument("--A and --B must be given together");
    return spiracert::RtauParams(*A, *B, {tau_re, tau_im});
}

int run_eval(const EvalOptions& opt) {
    spiracert::BesselParams params(opt.c, opt.kappa);
    if (!params.theorem_regime()) {
        if (!opt.allow_degenerate) {
            std::cerr << "error: (c = " << opt.c << ", kappa = " << opt.kappa
                      << ") is outside the regime c < 0, kappa > 0; pass --allow-degenerate "
                         "to evaluate anyway\n";
            return kExitUsage;
        }
        std::cerr << "warning: parameters outside the regime c < 0, kappa > 0\n";
    }
    const auto u = spiracert::u_at_one(params, opt.eps);
    const auto up = spiracert::u_prime_at_one(params, opt.eps);
    const auto us = spiracert::u_second_at_one(params, opt.eps);
    auto line = [](const char* label, const spiracert::SeriesValue& v) {
        std::printf("%-7s= %s  [terms %d, tail <= %.3g]\n", label,
                    spiracert::format_double(v.value).c_str(), v.terms_used, v.tail_bound);
    };
    line("u(1)", u);
    line("u'(1)", up);
    line("u''(1)", us);
    return kExitOk;
}

int run_certify(const CertifyOptions& opt) {
    const spiracert::BesselParams params(opt.c, opt.kappa);
    const spiracert::SpiralParams s(resolve_alpha(opt.alpha, opt.alpha_deg), opt.beta);
    const auto rtau = build_rtau(opt.A, opt.B, opt.tau_re, opt.tau_im, opt.tau_set);
    const auto ids = parse_conditions(opt.conds, rtau.has_value());
    bool all_hold = true;
    for (spiracert::ConditionId id : ids) {
        const spiracert::Certificate cert =
            spiracert::evaluate_condition(id, params, s, rtau, opt.eps);
        all_hold = all_hold && cert.holds;
        std::cout << nlohmann::json(cert).dump() << "\n";
    }
    return all_hold ? kExitOk : kExitCheckFailed;
}

int run_scan(ScanOptions& opt) {
    opt.spec.alpha = resolve_alpha(opt.alpha, opt.alpha_deg);
    opt.spec.rtau = build_rtau(opt.A, opt.B, opt.tau_re, opt.tau_im, opt.tau_set);
    opt.spec.conditions = parse_conditions(opt.conds, opt.spec.rtau.has_value());
    if (opt.format == "csv") {
        opt.spec.format = spiracert::ScanSpec::Format::Csv;
    } else if (opt.format == "json") {
        opt.spec.format = spiracert::ScanSpec::Format::Json;
    } else {
        throw std::invalid_argument("--format must be csv or json");
    }
    const std::string out = spiracert::run_scan(opt.spec);
    std::fwrite(out.data(), 1, out.size(), stdout);
    return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
    bool all_pass = true;
    auto emit = [&](const std::vector<spiracert::OracleReport>& reports) {
        for (const auto& rep : reports) {
            all_pass = all_pass && rep.verdict;
            std::cout << nlohmann::json(rep).dump() << "\n";
        }
    };

    if (!opt.golden.empty()) {
        if (std::filesystem::exists(opt.golden)) {
            emit(spiracert::diff_golden(spiracert::read_golden_file(opt.golden)));
        } else {
            spiracert::write_golden_file(opt.golden, spiracert::canonical_golden_records());
            std::cerr << "golden file written: " << opt.golden << "\n";
        }
    }

    spiracert::SuiteConfig cfg;
    cfg.seed = opt.seed;
    cfg.tuples = opt.tuples;
    cfg.eps = opt.eps;
    emit(spiracert::run_suite(cfg));
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificates for Bessel-type series in uniformly spirallike classes"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate u(1), u'(1), u''(1)");
    eval_cmd->add_option("--c", eval_opt.c, "series parameter c")->required();
    eval_cmd->add_option("--kappa", eval_opt.kappa, "series parameter kappa")->required();
    eval_cmd->add_option("--eps", eval_opt.eps, "series tail target");
    eval_cmd->add_flag("--allow-degenerate", eval_opt.allow_degenerate,
                       "evaluate outside the regime c < 0, kappa > 0 (warns)");

    CertifyOptions cert_opt;
    CLI::App* cert_cmd = app.add_subcommand("certify", "emit condition certificates as JSON lines");
    cert_cmd->add_option("--c", cert_opt.c)->required();
    cert_cmd->add_option("--kappa", cert_opt.kappa)->required();
    cert_cmd->add_option("--alpha", cert_opt.alpha, "aperture in radians");
    cert_cmd->add_option("--alpha-deg", cert_opt.alpha_deg, "aperture in degrees");
    cert_cmd->add_option("--beta", cert_opt.beta, "order in [0,1)");
    cert_cmd->add_option("--eps", cert_opt.eps);
    cert_cmd->add_option("--cond", cert_opt.conds, "condition ids (repeatable, comma lists, ALL)")
        ->required();
    cert_cmd->add_option("--A", cert_opt.A, "distortion-class A");
    cert_cmd->add_option("--B", cert_opt.B, "distortion-class B");
    cert_cmd->add_option("--tau", cert_opt.tau_re, "distortion-class tau (real part)")
        ->each([&](const std::string&) { cert_opt.tau_set = true; });
    cert_cmd->add_option("--tau-im", cert_opt.tau_im, "tau imaginary part")
        ->each([&](const std::string&) { cert_opt.tau_set = true; });

    ScanOptions scan_opt;
    CLI::App* scan_cmd = app.add_subcommand("scan", "map conditions over a (c, kappa) region");
    scan_cmd->add_option("--c-lo", scan_opt.spec.c_lo)->required();
    scan_cmd->add_option("--c-hi", scan_opt.spec.c_hi)->required();
    scan_cmd->add_option("--kappa-lo", scan_opt.spec.kappa_lo)->required();
    scan_cmd->add_option("--kappa-hi", scan_opt.spec.kappa_hi)->required();
    scan_cmd->add_option("--steps", scan_opt.spec.steps, "grid steps per axis (>= 2)")->required();
    scan_cmd->add_option("--alpha", scan_opt.alpha, "aperture in radians");
    scan_cmd->add_option("--alpha-deg", scan_opt.alpha_deg, "aperture in degrees");
    scan_cmd->add_option("--beta", scan_opt.spec.beta);
    scan_cmd->add_option("--cond", scan_opt.conds, "condition ids")->required();
    scan_cmd->add_option("--format", scan_opt.format, "csv or json");
    scan_cmd->add_option("--A", scan_opt.A);
    scan_cmd->add_option("--B", scan_opt.B);
    scan_cmd->add_option("--tau", scan_opt.tau_re)
        ->each([&](const std::string&) { scan_opt.tau_set = true; });
    scan_cmd->add_option("--tau-im", scan_opt.tau_im)
        ->each([&](const std::string&) { scan_opt.tau_set = true; });

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle cross-check suite");
    verify_cmd->add_option("--seed", verify_opt.seed);
    verify_cmd->add_option("--tuples", verify_opt.tuples, "randomized tuples (default 10000)");
    verify_cmd->add_option("--eps", verify_opt.eps);
    verify_cmd->add_option("--golden", verify_opt.golden,
                           "golden-values file: written when absent, diffed when present");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval_cmd) return run_eval(eval_opt);
        if (*cert_cmd) return run_certify(cert_opt);
        if (*scan_cmd) return run_scan(scan_opt);
        if (*verify_cmd) return run_verify(verify_opt);
    } catch (const spiracert::NonAdmissibleKappa& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const spiracert::RegimeViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
