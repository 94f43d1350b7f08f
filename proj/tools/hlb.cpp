// hlb: exponent calculus, constant bounds, and randomized verification for
// multilinear Hardy-Littlewood / Bohnenblust-Hille type inequalities.
//
// Exit codes: 0 success, 2 usage or range error, 3 verified hard violation.

#include "hlb/harness.hpp"
#include "hlb/interpolation.hpp"
#include "hlb/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace hlb;

PExponent parse_p(const std::string& text) {
    if (text == "inf" || text == "infinity") return PExponent::infinity();
    return PExponent(Rational::parse(text));
}

MultipleExponent parse_q(const std::string& text) {
    std::vector<Rational> q;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) q.push_back(Rational::parse(item));
    if (q.empty()) throw std::invalid_argument("--q: empty exponent list");
    return MultipleExponent{std::move(q)};
}

std::string decimal(const Rational& r) { return format_double(r.to_double()); }

// Writes through to --out when given, stdout otherwise.
int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& body) {
    if (out_path.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    body(out);
    return 0;
}

void print_bound(std::ostream& os, const BoundReport& r) {
    os << "formula = " << formula_name(r.formula) << "\n";
    os << "m = " << r.m.value() << ", p = " << r.p.str() << ", field = " << field_name(r.field)
       << "\n";
    os << "value = " << format_double(r.value) << "\n";
    os << "factors:\n";
    for (const Factor& f : r.factors)
        os << "  " << format_double(f.base) << " ^ " << format_double(f.exponent) << "\n";
}

struct ExponentArgs {
    int m = 0;
    std::string p;
};

int run_exponent(const ExponentArgs& a) {
    const Degree m(a.m);
    const PExponent p = parse_p(a.p);
    const ExponentProfile prof = lambda_profile(m, p);

    std::cout << "m = " << m.value() << ", p = " << p.str() << "\n";
    std::cout << "s = " << prof.s.str() << " = " << decimal(prof.s) << "\n";
    for (std::size_t j = 0; j < prof.lambda.size(); ++j)
        std::cout << "lambda_" << j << " = " << prof.lambda[j].str() << " = "
                  << decimal(prof.lambda[j]) << "\n";

    const Rational lhs = (Rational(m.value()) - 1) / prof.s + prof.lambda[0].reciprocal();
    std::cout << "identity (m-1)/s + 1/lambda_0 = (m+1)/2: "
              << (lhs == Rational(m.value() + 1, 2) ? "ok" : "VIOLATED") << "\n";
    if (p.is_infinity())
        std::cout << "conjugate chain: n/a at p = inf\n";
    else
        std::cout << "conjugate chain (p/lambda_j)* = lambda_{j+1}/lambda_j: "
                  << (conjugate_chain_check(prof) ? "ok" : "VIOLATED") << "\n";
    return 0;
}

struct InterpolateArgs {
    int m = 0;
    std::string p;
};

int run_interpolate(const InterpolateArgs& a) {
    const Degree m(a.m);
    const PExponent p = parse_p(a.p);

    const ExponentFamily family = canonical_family(m);
    const WeightVector theta = profile_weights(m, p);
    const MultipleExponent q = interpolate(family, theta);
    const ExponentProfile prof = lambda_profile(m, p);

    std::cout << "m = " << m.value() << ", p = " << p.str() << "\n";
    std::cout << "family:\n";
    for (int i = 0; i < family.count(); ++i)
        std::cout << "  E_" << (i + 1) << " = " << family.members[static_cast<std::size_t>(i)].str()
                  << "\n";
    std::cout << "weights:\n";
    for (std::size_t k = 0; k < theta.theta.size(); ++k)
        std::cout << "  theta_" << (k + 1) << " = " << theta.theta[k].str() << "\n";
    std::cout << "interpolated q = " << q.str() << "\n";

    MultipleExponent expected{std::vector<Rational>(static_cast<std::size_t>(m.value()), prof.s)};
    expected.q[0] = prof.lambda[0];
    std::cout << "matches (lambda_0, s, ..., s): " << (q == expected ? "ok" : "VIOLATED") << "\n";

    const WeightVector solved = solve_weights(q, family);
    std::cout << "solve_weights round trip: " << (solved.theta == theta.theta ? "ok" : "VIOLATED")
              << "\n";
    return 0;
}

struct BoundArgs {
    int m = 0;
    std::string p;
    std::string field = "real";
    std::string formula = "auto";
    std::string q;
};

int run_bound(const BoundArgs& a) {
    const Degree m(a.m);
    const PExponent p = parse_p(a.p);
    const ScalarField field = parse_field(a.field);

    BoundReport report = [&] {
        if (!a.q.empty()) {
            const MultipleExponent q = parse_q(a.q);
            if (a.formula == "thm765") return bound_thm765(m, p, q, field);
            if (a.formula != "auto")
                throw std::invalid_argument("--q applies only with --formula auto or thm765");
            if (q.max() < max_q_threshold(m)) return bound_thm999(m, p, q, field);
            return bound_thm765(m, p, q, field);
        }
        if (a.formula == "auto") return best_bound(m, p, field);
        if (a.formula == "yhb") return bound_yhb(m, p, field);
        if (a.formula == "yu9") return bound_yu9(m, p, field);
        if (a.formula == "yu10") return bound_yu10(m, field);
        if (a.formula == "thm765")
            throw std::invalid_argument("--formula thm765 requires --q");
        throw std::invalid_argument("unknown formula '" + a.formula +
                                    "' (expected auto|yhb|yu9|yu10|thm765)");
    }();

    print_bound(std::cout, report);
    if (report.formula == FormulaTag::Yhb && !p.is_infinity() && p.value() == p_range_upper(m))
        std::cout << "note: at p = 2m^3-4m^2+2m this coincides with yu10\n";
    return 0;
}

struct VerifyArgs {
    int m = 0;
    int n = 0;
    std::string p;
    std::string field = "real";
    int trials = 100;
    int restarts = 20;
    std::uint64_t seed = 1;
    std::string dist = "rademacher";
    std::string exponents = "uniform";
    std::string q;
    bool exact = false;
    std::string out;
    std::string format = "csv";
    std::string witness_out;
};

int run_verify(const VerifyArgs& a) {
    ExperimentConfig cfg{Degree(a.m), a.n,        parse_p(a.p), parse_field(a.field),
                         a.trials,    a.restarts, a.seed,       parse_distribution(a.dist)};
    cfg.force_exact = a.exact;
    if (!a.q.empty()) {
        cfg.exponent_choice = ExponentChoice::Custom;
        cfg.custom_q = parse_q(a.q);
    } else if (a.exponents == "uniform") {
        cfg.exponent_choice = ExponentChoice::CriticalUniform;
    } else if (a.exponents == "profile") {
        cfg.exponent_choice = ExponentChoice::Profile;
    } else {
        throw std::invalid_argument("--exponents must be uniform or profile");
    }

    const ExperimentResult result = run_ratio_experiment(cfg);

    const int rc = with_output(a.out, [&](std::ostream& os) {
        if (a.format == "json") write_experiment_json(os, cfg, result);
        else write_experiment_csv(os, cfg, result);
    });
    if (rc != 0) return rc;

    if (result.summary.hard_violations > 0) {
        const int t = *result.first_violation_trial;
        std::string path = a.witness_out.empty()
                               ? "hlb_violation_trial_" + std::to_string(t) + ".tensor"
                               : a.witness_out;
        save_tensor_file(path, trial_tensor(cfg, t));
        std::cerr << "hard violation in trial " << t << "; witness tensor written to " << path
                  << "\n";
        return 3;
    }
    return 0;
}

struct FigureArgs {
    int m_min = 3;
    int m_max = 8;
    int points = 25;
    std::string out;
    std::string format = "csv";
};

int run_figure(const FigureArgs& a) {
    const auto rows = figure_grid(a.m_min, a.m_max, a.points);
    const FigureSpec spec{a.m_min, a.m_max, a.points};
    return with_output(a.out, [&](std::ostream& os) {
        if (a.format == "json") write_figure_json(os, spec, rows);
        else write_figure_csv(os, spec, rows);
    });
}

struct CompareArgs {
    int m_min = 2;
    int m_max = 8;
    int points = 25;
    std::string field = "real";
    std::string out;
    std::string format = "csv";
};

int run_compare(const CompareArgs& a) {
    const ScalarField field = parse_field(a.field);
    const auto rows = comparison_table(a.m_min, a.m_max, a.points, field);
    const ComparisonSpec spec{a.m_min, a.m_max, a.points, field};
    return with_output(a.out, [&](std::ostream& os) {
        if (a.format == "json") write_comparison_json(os, spec, rows);
        else write_comparison_csv(os, spec, rows);
    });
}

struct ProbeArgs {
    int m = 2;
    std::string p = "inf";
    int n_min = 1;
    int n_max = 8;
    int trials = 50;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
};

int run_probe(const ProbeArgs& a) {
    const Degree m(a.m);
    const PExponent p = parse_p(a.p);
    const auto rows = optimality_probe(m, p, a.n_min, a.n_max, a.trials, a.seed);
    const ProbeSpec spec{a.m, p, a.n_min, a.n_max, a.trials, a.seed};
    return with_output(a.out, [&](std::ostream& os) {
        if (a.format == "json") write_probe_json(os, spec, rows);
        else write_probe_csv(os, spec, rows);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calculator and empirical verifier for the constants and exponents of "
                 "multilinear Hardy-Littlewood type inequalities"};
    app.set_version_flag("--version", std::string("hlb ") + hlb::kVersion);
    app.require_subcommand(1);

    ExponentArgs ea;
    auto* exponent = app.add_subcommand("exponent", "Critical exponent s and the lambda chain");
    exponent->add_option("--m", ea.m, "multilinearity degree (>= 2)")->required();
    exponent->add_option("--p", ea.p, "summability exponent: rational, decimal, or 'inf'")->required();

    InterpolateArgs ia;
    auto* interpolate_cmd =
        app.add_subcommand("interpolate", "Canonical family, weights, and the interpolated vector");
    interpolate_cmd->add_option("--m", ia.m, "degree (>= 3)")->required();
    interpolate_cmd->add_option("--p", ia.p, "p in [2m, 2m^3-4m^2+2m]")->required();

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "Constant upper bound with factor decomposition");
    bound->add_option("--m", ba.m, "degree (>= 2)")->required();
    bound->add_option("--p", ba.p, "summability exponent or 'inf'")->required();
    bound->add_option("--field", ba.field, "real|complex (default real)");
    bound->add_option("--formula", ba.formula, "auto|yhb|yu9|yu10|thm765 (default auto)");
    bound->add_option("--q", ba.q, "comma-separated exponent vector for the mixed-norm bounds");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Randomized ratio check of the inequality");
    verify->add_option("--m", va.m, "degree (>= 2)")->required();
    verify->add_option("--n", va.n, "dimension per argument")->required();
    verify->add_option("--p", va.p, "summability exponent or 'inf'")->required();
    verify->add_option("--field", va.field, "real|complex (default real)");
    verify->add_option("--trials", va.trials, "number of random forms (default 100)");
    verify->add_option("--restarts", va.restarts, "alternating-ascent restarts (default 20)");
    verify->add_option("--seed", va.seed, "rng seed (default 1)");
    verify->add_option("--dist", va.dist, "rademacher|gaussian (default rademacher)");
    verify->add_option("--exponents", va.exponents, "uniform|profile (default uniform)");
    verify->add_option("--q", va.q, "custom exponent vector (routes to the mixed-norm bounds)");
    verify->add_flag("--exact", va.exact, "insist on the exact vertex oracle (p=inf, real)");
    verify->add_option("--out", va.out, "write the report here instead of stdout");
    verify->add_option("--format", va.format, "csv|json (default csv)");
    verify->add_option("--witness-out", va.witness_out, "where to write a violating tensor");

    FigureArgs fa;
    auto* figure = app.add_subcommand("figure", "Grid of the sqrt(2) exponent over (m, p)");
    figure->add_option("--m-min", fa.m_min, "smallest degree (>= 3)");
    figure->add_option("--m-max", fa.m_max, "largest degree");
    figure->add_option("--points", fa.points, "p samples per degree (default 25)");
    figure->add_option("--out", fa.out, "output file (default stdout)");
    figure->add_option("--format", fa.format, "csv|json (default csv)");

    CompareArgs ca;
    auto* compare = app.add_subcommand("compare", "Bound comparison table across (m, p)");
    compare->add_option("--m-min", ca.m_min, "smallest degree (>= 2)");
    compare->add_option("--m-max", ca.m_max, "largest degree");
    compare->add_option("--points", ca.points, "p samples per degree (default 25)");
    compare->add_option("--field", ca.field, "real|complex (default real)");
    compare->add_option("--out", ca.out, "output file (default stdout)");
    compare->add_option("--format", ca.format, "csv|json (default csv)");

    ProbeArgs pa;
    auto* probe = app.add_subcommand("probe", "Exponent-optimality growth probe over n");
    probe->add_option("--m", pa.m, "degree (default 2)");
    probe->add_option("--p", pa.p, "summability exponent (default inf)");
    probe->add_option("--n-min", pa.n_min, "smallest dimension (default 1)");
    probe->add_option("--n-max", pa.n_max, "largest dimension (default 8)");
    probe->add_option("--trials", pa.trials, "trials per dimension (default 50)");
    probe->add_option("--seed", pa.seed, "rng seed (default 1)");
    probe->add_option("--out", pa.out, "output file (default stdout)");
    probe->add_option("--format", pa.format, "csv|json (default csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*exponent) return run_exponent(ea);
        if (*interpolate_cmd) return run_interpolate(ia);
        if (*bound) return run_bound(ba);
        if (*verify) return run_verify(va);
        if (*figure) return run_figure(fa);
        if (*compare) return run_compare(ca);
        if (*probe) return run_probe(pa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
