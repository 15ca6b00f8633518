#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zetakit/arith.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/format.hpp"
#include "zetakit/identities.hpp"
#include "zetakit/report.hpp"
#include "zetakit/verify.hpp"
#include "zetakit/zero_cache.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit::cli {

namespace {

using arith::Natural;
using report::Json;

enum class Format { plain, json, csv };

struct RunConfig {
    double tolerance = zeta::kDefaultTolerance;
    std::uint64_t max_terms = 2000;
    Format format = Format::plain;
    std::string cache_path;
    unsigned jobs = 0;
};

constexpr const char* kDefaultCache = "zetakit_zeros.csv";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingPrerequisite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) { return shortest_decimal(x); }

std::string complex_text(Complex z) {
    std::string out = num(z.real());
    out += z.imag() < 0 || std::signbit(z.imag()) ? " - " : " + ";
    out += num(std::abs(z.imag()));
    out += "j";
    return out;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
    std::vector<T> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        T value{};
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw UsageError(std::string("malformed ") + what + " list: '" + text + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
    return out;
}

// ------------------------------------------------------------------ eval

int cmd_eval(double re, double im, const RunConfig& cfg, std::ostream& out) {
    const Complex s(re, im);
    const zeta::EvalResult r = zeta::zeta(s, cfg.tolerance);
    switch (cfg.format) {
        case Format::json: {
            Json j{{"command", "eval"}, {"s", report::to_json(s)}};
            j["result"] = report::to_json(r);
            emit_json(out, j);
            break;
        }
        case Format::csv:
            out << "s_re,s_im,regime,value_re,value_im,terms_used,est_error\n"
                << num(re) << ',' << num(im) << ',' << zeta::to_string(r.regime) << ','
                << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << r.terms_used << ','
                << num(r.est_error) << '\n';
            break;
        case Format::plain:
            out << "s = " << complex_text(s) << '\n'
                << "regime = " << zeta::to_string(r.regime) << '\n'
                << "value = " << complex_text(r.value) << '\n'
                << "est_error = " << num(r.est_error) << '\n'
                << "terms_used = " << r.terms_used << '\n';
            break;
    }
    return kSuccess;
}

// ------------------------------------------------------------------ zeros

void print_zeros(const std::vector<zeta::ZeroRecord>& records, const RunConfig& cfg,
                 std::size_t added, std::ostream& out) {
    switch (cfg.format) {
        case Format::json: {
            Json list = Json::array();
            for (const auto& r : records) list.push_back(report::to_json(r));
            emit_json(out, Json{{"command", "zeros"},
                                {"cache", cfg.cache_path},
                                {"added", added},
                                {"zeros", list}});
            break;
        }
        case Format::csv: out << zeta::format_zero_csv(records); break;
        case Format::plain:
            for (const auto& r : records) {
                out << "zero " << r.index << ": t = " << decimal_min_digits(r.t, 12)
                    << ", residual = " << num(r.residual) << '\n';
            }
            out << records.size() << " zero(s) in range, " << added << " new\n";
            break;
    }
}

int cmd_zeros(double t_min, double t_max, double step, const RunConfig& cfg, std::ostream& out) {
    const auto existing = zeta::read_zero_cache(cfg.cache_path);
    const auto found = zeta::find_zeros(t_min, t_max, step, cfg.tolerance, cfg.jobs);
    const auto merged = zeta::merge_zero_records(existing, found);
    zeta::write_zero_cache(cfg.cache_path, merged);

    std::vector<zeta::ZeroRecord> in_range;
    for (const auto& r : merged) {
        if (r.t >= t_min && r.t <= t_max) in_range.push_back(r);
    }
    print_zeros(in_range, cfg, merged.size() - existing.size(), out);
    return kSuccess;
}

// ------------------------------------------------------------------ beta

int cmd_beta(std::uint64_t n_max, const RunConfig& cfg, std::ostream& out) {
    if (n_max < 1 || n_max > 10'000'000) {
        throw DomainError("beta: n_max must be in [1, 10^7]");
    }
    const arith::SmallestFactorSieve sieve(n_max);
    std::uint64_t disagreements = 0;
    Json rows = Json::array();
    if (cfg.format == Format::csv) out << "n,beta_divisor_sum,beta_closed_form,classification\n";
    if (cfg.format == Format::plain) out << "n beta_divisor_sum beta_closed_form classification\n";
    for (Natural n = 1; n <= n_max; ++n) {
        const int direct = arith::beta_divisor_sum(sieve.factorize(n));
        const arith::BetaValue closed = arith::beta_closed_form(n);
        if (direct != closed.value) ++disagreements;
        const auto cls = arith::to_string(closed.classification);
        switch (cfg.format) {
            case Format::json:
                rows.push_back({{"n", n},
                                {"beta_divisor_sum", direct},
                                {"beta_closed_form", closed.value},
                                {"classification", std::string(cls)}});
                break;
            case Format::csv:
                out << n << ',' << direct << ',' << closed.value << ',' << cls << '\n';
                break;
            case Format::plain:
                out << n << ' ' << direct << ' ' << closed.value << ' ' << cls << '\n';
                break;
        }
    }
    if (cfg.format == Format::json) {
        emit_json(out, Json{{"command", "beta"},
                            {"n_max", n_max},
                            {"disagreements", disagreements},
                            {"rows", rows}});
    }
    return disagreements == 0 ? kSuccess : kVerificationFailure;
}

// ------------------------------------------------------------------ verify

int cmd_verify(verify::Suite suite, const RunConfig& cfg, std::ostream& out) {
    const auto checks = verify::run_suite(suite, {cfg.jobs});
    const bool all_passed =
        std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    switch (cfg.format) {
        case Format::json: {
            Json list = Json::array();
            for (const auto& c : checks) {
                list.push_back({{"suite", c.suite},
                                {"name", c.name},
                                {"passed", c.passed},
                                {"measured", c.measured},
                                {"threshold", c.threshold},
                                {"detail", c.detail}});
            }
            emit_json(out, Json{{"command", "verify"},
                                {"suite", std::string(verify::to_string(suite))},
                                {"passed", all_passed},
                                {"checks", list}});
            break;
        }
        case Format::csv:
            out << "suite,name,passed,measured,threshold\n";
            for (const auto& c : checks) {
                out << c.suite << ',' << c.name << ',' << (c.passed ? "true" : "false") << ','
                    << num(c.measured) << ',' << num(c.threshold) << '\n';
            }
            break;
        case Format::plain:
            for (const auto& c : checks) {
                out << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name
                    << "  measured=" << num(c.measured) << " threshold=" << num(c.threshold)
                    << "  " << c.detail << '\n';
            }
            out << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
            break;
    }
    return all_passed ? kSuccess : kVerificationFailure;
}

// ------------------------------------------------------------------ probe

double resolve_probe_t(const std::string& target, const RunConfig& cfg) {
    if (target.rfind("zero:", 0) == 0) {
        const std::string digits = target.substr(5);
        std::uint64_t k = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || k == 0) {
            throw UsageError("probe: malformed zero reference '" + target + "'");
        }
        const auto cache = zeta::read_zero_cache(cfg.cache_path);
        if (k > cache.size()) {
            throw MissingPrerequisite("probe: zero cache " + cfg.cache_path + " has " +
                                      std::to_string(cache.size()) + " zero(s), need zero " +
                                      std::to_string(k) + "; run `zetakit zeros` first");
        }
        return cache[k - 1].t;
    }
    double t = 0.0;
    const auto [ptr, ec] = std::from_chars(target.data(), target.data() + target.size(), t);
    if (target.empty() || ec != std::errc() || ptr != target.data() + target.size()) {
        throw UsageError("probe: t must be a real number or zero:k, got '" + target + "'");
    }
    return t;
}

int cmd_probe(double sigma, const std::string& target, const std::string& phi_list,
              const std::string& m_list, const RunConfig& cfg, std::ostream& out) {
    const double t = resolve_probe_t(target, cfg);
    const auto phis = phi_list.empty() ? identities::default_phi_samples()
                                       : parse_list<double>(phi_list, "phi");
    const auto ms =
        m_list.empty() ? identities::default_m_samples() : parse_list<Natural>(m_list, "m");
    const auto report = identities::probe_zero(sigma, t, cfg.max_terms, phis, ms, cfg.tolerance);
    const Json j = report::to_json(report);
    const Json flat = j.flatten();
    switch (cfg.format) {
        case Format::json: emit_json(out, j); break;
        case Format::csv:
            out << "field,value\n";
            for (const auto& [key, value] : flat.items()) {
                out << key << ',' << value.dump() << '\n';
            }
            break;
        case Format::plain:
            for (const auto& [key, value] : flat.items()) {
                out << key << " = " << value.dump() << '\n';
            }
            break;
    }
    return kSuccess;
}

// ------------------------------------------------------------------ swap

int cmd_swap(double sigma, double t, const std::string& list, const RunConfig& cfg,
             std::ostream& out) {
    const auto truncations = parse_list<Natural>(list, "truncation");
    for (std::size_t i = 0; i < truncations.size(); ++i) {
        if (truncations[i] < 1 || (i > 0 && truncations[i] <= truncations[i - 1])) {
            throw UsageError("swap: truncations must be positive and strictly increasing");
        }
    }
    const auto reports = identities::swap_discrepancy(t, sigma, truncations, cfg.jobs);
    bool passed = true;
    if (sigma > 1.0) {
        passed = reports.back().gap < 1e-3 && reports.back().gap <= reports.front().gap;
    }
    switch (cfg.format) {
        case Format::json: {
            Json rows = Json::array();
            for (const auto& r : reports) rows.push_back(report::to_json(r));
            emit_json(out, Json{{"command", "swap"},
                                {"asserted", sigma > 1.0},
                                {"passed", passed},
                                {"reports", rows}});
            break;
        }
        case Format::csv:
            out << "sigma,t,truncation,lhs,rhs,gap,matched_rhs,matched_gap\n";
            for (const auto& r : reports) {
                out << num(r.sigma) << ',' << num(r.t) << ',' << r.truncation << ','
                    << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.gap) << ','
                    << num(r.matched_rhs) << ',' << num(r.matched_gap) << '\n';
            }
            break;
        case Format::plain:
            for (const auto& r : reports) {
                out << "T=" << r.truncation << " lhs=" << num(r.lhs) << " rhs=" << num(r.rhs)
                    << " gap=" << num(r.gap) << " matched_gap=" << num(r.matched_gap) << '\n';
            }
            if (sigma > 1.0) {
                out << (passed ? "gap decays below 1e-3" : "gap did NOT decay below 1e-3")
                    << '\n';
            } else {
                out << "sigma <= 1: conditional regime, gaps reported without assertion\n";
            }
            break;
    }
    return passed ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_cache) {
    CLI::App app{"zetakit: zeta evaluation, zero scanning and series-identity probes"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "plain";
    std::string cache_flag;
    app.add_option("--tol", cfg.tolerance, "evaluation tolerance (default 1e-8)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-terms", cfg.max_terms, "accelerated term count (default 2000)")
        ->check(CLI::Range(std::uint64_t{16}, std::numeric_limits<std::uint64_t>::max()));
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--cache", cache_flag, "zero cache path (overrides ZETAKIT_CACHE)");
    app.add_option("--jobs", cfg.jobs, "worker threads, 0 = auto");

    double re = 0.0, im = 0.0;
    auto* eval = app.add_subcommand("eval", "evaluate zeta(s)");
    eval->add_option("s_re", re)->required();
    eval->add_option("s_im", im)->required();

    double t_min = 0.0, t_max = 0.0, step = 0.1;
    auto* zeros = app.add_subcommand("zeros", "locate critical-line zeros and update the cache");
    zeros->add_option("t_min", t_min)->required();
    zeros->add_option("t_max", t_max)->required();
    zeros->add_option("--step", step, "scan step (default 0.1)");

    std::uint64_t n_max = 0;
    auto* beta = app.add_subcommand("beta", "tabulate beta(n) by both routes");
    beta->add_option("n_max", n_max)->required();

    std::string suite_name;
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("suite", suite_name)
        ->required()
        ->check(CLI::IsMember({"arith", "zeta", "identities", "all"}));

    double sigma = 0.0;
    std::string target, phi_list, m_list;
    auto* probe = app.add_subcommand("probe", "evaluate every series identity at (sigma, t)");
    probe->add_option("sigma", sigma)->required();
    probe->add_option("t", target, "real t or zero:k from the cache")->required();
    probe->add_option("--phi", phi_list, "comma-separated phase samples");
    probe->add_option("--m", m_list, "comma-separated m samples");

    double swap_sigma = 0.0, swap_t = 0.0;
    std::string truncation_list;
    auto* swap = app.add_subcommand("swap", "row sums vs divisor-diagonal sums of mrzf");
    swap->add_option("sigma", swap_sigma)->required();
    swap->add_option("t", swap_t)->required();
    swap->add_option("truncations", truncation_list, "comma-separated, increasing")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;
    cfg.cache_path = !cache_flag.empty() ? cache_flag
                     : !env_cache.empty() ? env_cache
                                          : std::string(kDefaultCache);

    try {
        if (*eval) return cmd_eval(re, im, cfg, out);
        if (*zeros) return cmd_zeros(t_min, t_max, step, cfg, out);
        if (*beta) return cmd_beta(n_max, cfg, out);
        if (*verify_cmd) return cmd_verify(*verify::parse_suite(suite_name), cfg, out);
        if (*probe) return cmd_probe(sigma, target, phi_list, m_list, cfg, out);
        if (*swap) return cmd_swap(swap_sigma, swap_t, truncation_list, cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const MissingPrerequisite& e) {
        err << "error: " << e.what() << '\n';
        return kMissingPrerequisite;
    } catch (const UndefinedPointError& e) {
        err << "error: " << e.what() << '\n';
        return kUndefinedPoint;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << '\n';
        return kUndefinedPoint;
    } catch (const ConditioningError& e) {
        err << "error: " << e.what() << '\n';
        return kConditioning;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        // DomainError, OverflowError, RegimeError, RangeError
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

}  // namespace zetakit::cli
