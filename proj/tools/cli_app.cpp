#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "barnes/asymptotic.hpp"
#include "barnes/bernoulli.hpp"
#include "barnes/errors.hpp"
#include "barnes/hyperasymptotics.hpp"
#include "barnes/remainder.hpp"

namespace barnes::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct Null {};
using Value = std::variant<Null, double, long long, std::string>;
using Row = std::vector<std::pair<std::string, Value>>;

std::string number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Writer {
public:
    Writer(std::ostream& out, bool json) : out_(out), json_(json) {}

    void write(const Row& row) {
        if (json_) {
            out_ << '{';
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out_ << ',';
                out_ << '"' << row[i].first << "\":" << json_value(row[i].second);
            }
            out_ << "}\n";
            return;
        }
        if (!header_done_) {
            for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << row[i].first;
            out_ << '\n';
            header_done_ = true;
        }
        for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << csv_value(row[i].second);
        out_ << '\n';
    }

private:
    static std::string json_value(const Value& v) {
        if (std::holds_alternative<Null>(v)) return "null";
        if (auto d = std::get_if<double>(&v)) return std::isfinite(*d) ? number(*d) : "null";
        if (auto i = std::get_if<long long>(&v)) return std::to_string(*i);
        std::string s = "\"";
        for (char c : std::get<std::string>(v)) {
            if (c == '"' || c == '\\') s += '\\';
            s += c;
        }
        return s + '"';
    }
    static std::string csv_value(const Value& v) {
        if (std::holds_alternative<Null>(v)) return "nan";
        if (auto d = std::get_if<double>(&v)) return number(*d);
        if (auto i = std::get_if<long long>(&v)) return std::to_string(*i);
        return std::get<std::string>(v);
    }

    std::ostream& out_;
    bool json_;
    bool header_done_ = false;
};

Value opt_int(const std::optional<int>& v) {
    if (v) return static_cast<long long>(*v);
    return Null{};
}

// Point given either as (re, im) or as (abs, arg); arg may come in units of pi.
struct PointArgs {
    std::optional<double> re, im, abs, arg, arg_pi;

    void add_to(CLI::App* app, const std::string& prefix) {
        app->add_option("--" + prefix + "-re", re, "real part");
        app->add_option("--" + prefix + "-im", im, "imaginary part (default 0)");
        app->add_option("--" + prefix + "-abs", abs, "modulus");
        app->add_option("--" + prefix + "-arg", arg, "argument in radians");
        app->add_option("--" + prefix + "-arg-pi", arg_pi, "argument in multiples of pi");
    }

    // modulus and argument as given (argument kept for branch-aware callers)
    std::pair<double, double> polar(const std::string& prefix) const {
        const bool rect = re.has_value() || im.has_value();
        const bool pol = abs.has_value() || arg.has_value() || arg_pi.has_value();
        if (rect == pol) {
            throw CLI::ValidationError("give either --" + prefix + "-re/--" + prefix + "-im or --" + prefix +
                                       "-abs with --" + prefix + "-arg or --" + prefix + "-arg-pi");
        }
        if (rect) {
            const std::complex<double> w(re.value_or(0.0), im.value_or(0.0));
            return {std::abs(w), std::arg(w)};
        }
        if (!abs) throw CLI::ValidationError("--" + prefix + "-abs is required with an argument");
        if (arg && arg_pi) throw CLI::ValidationError("--" + prefix + "-arg and --" + prefix + "-arg-pi exclude each other");
        return {*abs, arg ? *arg : (arg_pi ? *arg_pi * kPi : 0.0)};
    }

    Complex value(const std::string& prefix) const {
        if (re || im) {
            polar(prefix);  // validation
            return {re.value_or(0.0), im.value_or(0.0)};
        }
        const auto [r, a] = polar(prefix);
        return std::polar(r, a);
    }
};

struct EvalArgs {
    PointArgs z;
    std::string method = "asym";
    std::optional<int> n;
    std::optional<int> k_max;
};

int cmd_eval(const EvalArgs& a, Writer& w) {
    const Complex z = a.z.value("z");
    Row row{{"z_re", z.real()}, {"z_im", z.imag()}, {"method", a.method}, {"n", opt_int(a.n)},
            {"k_max", opt_int(a.k_max)}};
    Complex value;
    double bound = kNan, est = kNan;
    std::string source = "none";
    long long n_used = 0;
    long long weak = 0;
    if (a.method == "asym") {
        if (a.k_max) throw CLI::ValidationError("--k-max only applies to --method hyper");
        const ExpansionResult r = certified_eval(z, a.n);
        value = r.value;
        bound = r.bound;
        source = std::string(to_string(r.bound_source));
        n_used = r.n_trunc;
        weak = r.weak;
    } else if (a.method == "oracle") {
        if (a.n || a.k_max) throw CLI::ValidationError("--n/--k-max do not apply to --method oracle");
        const OracleValue r = log_barnes_oracle(z);
        value = r.value;
        est = r.est_error;
        n_used = r.n_eff;
    } else {
        const int k_max = a.k_max.value_or(5);
        const TruncationScheme scheme = a.n ? TruncationScheme::uniform(*a.n, k_max) : TruncationScheme::optimal(k_max);
        const ImprovedExpansion r = exp_improved_log_barnes(z, scheme);
        value = r.value;
        est = r.terminant_error + r.k_tail_estimate;
        n_used = scheme.n_for(1, std::abs(z));
    }
    row.emplace_back("value_re", value.real());
    row.emplace_back("value_im", value.imag());
    row.emplace_back("bound", bound);
    row.emplace_back("bound_source", source);
    row.emplace_back("est_error", est);
    row.emplace_back("n_used", n_used);
    row.emplace_back("weak", weak);
    w.write(row);
    return kOk;
}

struct BoundsArgs {
    std::vector<double> z_abs;
    std::vector<double> theta;
    std::vector<double> theta_pi;
    int n_min = 1;
    int n_max = 6;
};

int cmd_bounds(const BoundsArgs& a, Writer& w) {
    if (a.n_min < 1 || a.n_max < a.n_min || a.n_max > kMaxTruncation) {
        throw CLI::ValidationError("need 1 <= --n-min <= --n-max <= " + std::to_string(kMaxTruncation));
    }
    std::vector<double> thetas = a.theta;
    for (double t : a.theta_pi) thetas.push_back(t * kPi);
    if (thetas.empty()) thetas.push_back(0.0);
    int violations = 0;
    for (double r : a.z_abs) {
        if (!(r > 0.0)) throw DomainError("bounds: |z| must be positive");
        for (double theta : thetas) {
            if (!(std::fabs(theta) < kPi)) throw DomainError("bounds: need |theta| < pi");
            const Complex z = std::polar(r, theta);
            for (int n = a.n_min; n <= a.n_max; ++n) {
                const double first = first_omitted_term(r, n);
                QuadraturePolicy policy;
                policy.tail_tolerance = std::min(1e-13, 1e-8 * first);
                const OracleValue oracle = remainder_wide(z, n, policy);
                const double actual = std::abs(oracle.value);

                double sector = kNan, secant = kNan, rotated = kNan, axis = kNan, phi = kNan;
                double best = std::numeric_limits<double>::infinity(), min_ratio = best;
                std::string best_source = "none";
                for (const BoundReport& b : applicable_bounds(z, n)) {
                    switch (b.theorem) {
                        case BoundSource::Sector: sector = b.bound; break;
                        case BoundSource::SecantHalfAngle: secant = b.bound; break;
                        case BoundSource::RotatedPath: rotated = b.bound; phi = b.phi_star.value_or(kNan); break;
                        case BoundSource::PositiveAxisSign: axis = b.bound; break;
                    }
                    if (b.bound < best) {
                        best = b.bound;
                        best_source = std::string(to_string(b.theorem));
                    }
                    min_ratio = std::min(min_ratio, b.bound / actual);
                    if (actual - oracle.est_error > b.bound) ++violations;
                }
                w.write({{"z_abs", r},
                         {"theta", theta},
                         {"n", static_cast<long long>(n)},
                         {"remainder_abs", actual},
                         {"oracle_error", oracle.est_error},
                         {"bound_sector", sector},
                         {"bound_secant_half_angle", secant},
                         {"bound_rotated_path", rotated},
                         {"bound_positive_axis", axis},
                         {"phi_star", phi},
                         {"best_bound", best},
                         {"best_source", best_source},
                         {"ratio", best / actual},
                         {"min_ratio", min_ratio}});
            }
        }
    }
    return violations ? kAccuracy : kOk;
}

struct StokesArgs {
    double z_abs = 0.0;
    int k = 1;
    double theta_min = 0.0, theta_max = 0.0;
    int steps = 0;
};

int cmd_stokes(const StokesArgs& a, Writer& w) {
    if (a.theta_min > a.theta_max) throw CLI::ValidationError("--theta-min exceeds --theta-max");
    if (a.steps < 1) throw CLI::ValidationError("--theta-steps must be >= 1");
    if (a.steps == 1 && a.theta_min != a.theta_max) {
        throw CLI::ValidationError("--theta-steps 1 needs --theta-min equal to --theta-max");
    }
    std::vector<double> thetas;
    for (int i = 0; i < a.steps; ++i) {
        thetas.push_back(a.steps == 1 ? a.theta_min
                                      : a.theta_min + (a.theta_max - a.theta_min) * i / (a.steps - 1));
    }
    for (const StokesSample& s : stokes_profile(a.z_abs, a.k, thetas)) {
        w.write({{"z_abs", a.z_abs},
                 {"k", static_cast<long long>(s.k)},
                 {"theta", s.theta},
                 {"n_k", static_cast<long long>(s.n_k)},
                 {"multiplier_re", s.multiplier.real()},
                 {"multiplier_im", s.multiplier.imag()},
                 {"normalized_re", s.normalized.real()},
                 {"normalized_im", s.normalized.imag()},
                 {"erf_prediction", s.erf_prediction}});
    }
    return kOk;
}

struct TerminantArgs {
    int p = 1;
    PointArgs w;
    std::string method = "auto";
};

int cmd_terminant(const TerminantArgs& a, Writer& w) {
    TerminantEval r;
    double modulus = 0.0, arg = 0.0;
    if (a.w.re || a.w.im) {
        const Complex x = a.w.value("w");
        modulus = std::abs(x);
        arg = std::arg(x);
        // complex input follows the (-pi/2, 3pi/2) window
        if (a.method == "auto") r = terminant(a.p, x);
        else if (a.method == "recurrence") r = terminant_recurrence(a.p, {modulus, arg < -kPi / 2 ? arg + 2 * kPi : arg});
        else if (a.method == "quadrature") r = terminant_direct(a.p, x);
        else r = terminant_erf_approx(a.p, x);
        if (a.method != "quadrature" && arg <= -kPi / 2) arg += 2 * kPi;
    } else {
        std::tie(modulus, arg) = a.w.polar("w");
        const PolarPoint pt{modulus, arg};
        if (a.method == "auto") r = terminant(a.p, pt);
        else if (a.method == "recurrence") r = terminant_recurrence(a.p, pt);
        else if (a.method == "quadrature") {
            if (!(std::fabs(arg) < kPi)) throw DomainError("terminant: quadrature needs |arg w| < pi");
            r = terminant_direct(a.p, std::polar(modulus, arg));
        } else r = terminant_erf_approx(a.p, pt);
    }
    w.write({{"p", static_cast<long long>(a.p)},
             {"w_abs", modulus},
             {"w_arg", arg},
             {"method", a.method},
             {"method_used", std::string(to_string(r.method))},
             {"value_re", r.value.real()},
             {"value_im", r.value.imag()},
             {"est_error", r.est_error}});
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"log Barnes G: asymptotic expansion, certified bounds, quadrature oracle, terminant expansion"};
    app.require_subcommand(1);
    std::string format = "csv";
    app.add_option("--format", format, "csv or json (JSON lines)")
        ->check(CLI::IsMember({"csv", "json"}));

    EvalArgs eval;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate log G(z+1)");
    eval.z.add_to(eval_cmd, "z");
    eval_cmd->add_option("--method", eval.method, "asym, oracle or hyper")->check(CLI::IsMember({"asym", "oracle", "hyper"}));
    eval_cmd->add_option("--n", eval.n, "truncation index (asym) or uniform N_k (hyper)");
    eval_cmd->add_option("--k-max", eval.k_max, "terminant terms (hyper, default 5)");
    eval_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    BoundsArgs bounds;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "remainder vs certified bounds on a grid");
    bounds_cmd->add_option("--z-abs", bounds.z_abs, "one or more moduli")->required();
    bounds_cmd->add_option("--theta", bounds.theta, "arguments in radians");
    bounds_cmd->add_option("--theta-pi", bounds.theta_pi, "arguments in multiples of pi");
    bounds_cmd->add_option("--n-min", bounds.n_min, "smallest N (default 1)");
    bounds_cmd->add_option("--n-max", bounds.n_max, "largest N (default 6)");
    bounds_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    StokesArgs stokes;
    CLI::App* stokes_cmd = app.add_subcommand("stokes", "Stokes multiplier profile");
    stokes_cmd->add_option("--z-abs", stokes.z_abs)->required();
    stokes_cmd->add_option("--k", stokes.k, "exponential index (default 1)");
    stokes_cmd->add_option("--theta-min", stokes.theta_min)->required();
    stokes_cmd->add_option("--theta-max", stokes.theta_max)->required();
    stokes_cmd->add_option("--theta-steps", stokes.steps)->required();
    stokes_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    TerminantArgs term;
    CLI::App* term_cmd = app.add_subcommand("terminant", "terminant function diagnostics");
    term_cmd->add_option("--p", term.p)->required();
    term.w.add_to(term_cmd, "w");
    term_cmd->add_option("--method", term.method, "auto, recurrence, quadrature or erf")
        ->check(CLI::IsMember({"auto", "recurrence", "quadrature", "erf"}));
    term_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    Writer writer(out, format == "json");
    try {
        if (*eval_cmd) return cmd_eval(eval, writer);
        if (*bounds_cmd) return cmd_bounds(bounds, writer);
        if (*stokes_cmd) return cmd_stokes(stokes, writer);
        return cmd_terminant(term, writer);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsage;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return kUsage;
    } catch (const AccuracyError& e) {
        err << "accuracy failure: " << e.what() << " (partial error " << number(e.partial_error()) << ")\n";
        return kAccuracy;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kAccuracy;
    }
}

}  // namespace barnes::cli
