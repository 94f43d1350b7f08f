// Acceptance suite: end-to-end checks of the exponent calculus, the bound
// formulas, and the empirical verifier, with hard runtime caps. Run with no
// arguments for all criteria or with --criterion K for a single one.

#include "hlb/harness.hpp"
#include "hlb/interpolation.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hlb;

namespace {

struct Context {
    bool ok = true;
    int failures = 0;
    std::vector<std::string> notes;

    void fail(const std::string& msg) {
        ok = false;
        ++failures;
        if (notes.size() < 12) notes.push_back(msg);
        else if (notes.size() == 12) notes.push_back("... further failures suppressed");
    }
    void check(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
    void note(const std::string& msg) {
        if (notes.size() < 12) notes.push_back(msg);
    }
};

std::string fmt(double v) { return format_double(v); }

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// ---------------------------------------------------------------- criterion 1

void criterion_exact_identities(Context& c) {
    for (int mv = 3; mv <= 8; ++mv) {
        const Degree m(mv);
        const Rational mm(mv);
        const ExponentFamily family = canonical_family(m);
        for (const Rational& p : p_grid(m, 50, true)) {
            const PExponent pe(p);
            const ExponentProfile prof = lambda_profile(m, pe);

            c.check(prof.s == (2 * mm * p) / (mm * p + p - 2 * mm),
                    "s formula violated at m=" + std::to_string(mv) + " p=" + p.str());
            c.check(prof.s >= (2 * mm) / (mm + 1) && prof.s <= Rational(2),
                    "s outside [2m/(m+1), 2] at m=" + std::to_string(mv) + " p=" + p.str());
            c.check(prof.lambda[0] == (2 * prof.s) / (mm * prof.s + prof.s - 2 * mm + 2),
                    "lambda_0 formula violated at m=" + std::to_string(mv) + " p=" + p.str());
            c.check(prof.lambda[0] < prof.s && prof.s <= Rational(2),
                    "lambda_0 < s <= 2 violated at m=" + std::to_string(mv) + " p=" + p.str());
            c.check((mm - 1) / prof.s + prof.lambda[0].reciprocal() == (mm + 1) / Rational(2),
                    "Holder identity violated at m=" + std::to_string(mv) + " p=" + p.str());
            c.check(prof.lambda.back() == prof.s,
                    "lambda_m != s at m=" + std::to_string(mv) + " p=" + p.str());
            for (int j = 1; j <= mv; ++j)
                c.check(prof.lambda[static_cast<std::size_t>(j)] ==
                            (prof.lambda[0] * p) / (p - prof.lambda[0] * Rational(j)),
                        "lambda_j formula violated at m=" + std::to_string(mv) + " p=" + p.str());

            c.check(conjugate_chain_check(prof),
                    "conjugate chain violated at m=" + std::to_string(mv) + " p=" + p.str());

            const WeightVector theta = profile_weights(m, pe);
            const MultipleExponent q = interpolate(family, theta);
            MultipleExponent expected{
                std::vector<Rational>(static_cast<std::size_t>(mv), prof.s)};
            expected.q[0] = prof.lambda[0];
            c.check(q == expected, "interpolation does not return (lambda_0, s, ..., s) at m=" +
                                       std::to_string(mv) + " p=" + p.str());

            c.check(Rational(mv - 1) * theta.theta.back() == sqrt2_exponent(m, pe),
                    "(m-1)theta_m != sqrt2 exponent at m=" + std::to_string(mv) + " p=" + p.str());
        }
    }
}

// ---------------------------------------------------------------- criterion 2

void criterion_continuity_and_caps(Context& c) {
    for (int mv = 3; mv <= 8; ++mv) {
        const Degree m(mv);
        const PExponent edge(p_range_upper(m));
        for (ScalarField f : {ScalarField::Real, ScalarField::Complex}) {
            const double yhb = bound_yhb(m, edge, f).value;
            const double yu10 = bound_yu10(m, f).value;
            c.check(std::abs(yhb - yu10) / yu10 <= 1e-12,
                    std::string("right-endpoint mismatch at m=") + std::to_string(mv) + " " +
                        field_name(f) + ": yhb=" + fmt(yhb) + " yu10=" + fmt(yu10));
        }

        const double real_value = bound_yu10(m, ScalarField::Real).value;
        const double real_cap = 1.3 * std::pow(mv, 0.36482);
        c.check(real_value < real_cap, "real cap violated at m=" + std::to_string(mv) + ": " +
                                           fmt(real_value) + " !< " + fmt(real_cap));

        const double complex_value = bound_yu10(m, ScalarField::Complex).value;
        const double complex_cap = std::pow(mv, 0.21139);
        c.check(complex_value < complex_cap,
                "complex cap violated at m=" + std::to_string(mv) + ": " + fmt(complex_value) +
                    " !< " + fmt(complex_cap) + " (exponent (1-gamma)/2 = " +
                    fmt(constants::complex_bh_exponent()) + " exceeds 0.21139)");
    }
}

// ---------------------------------------------------------------- criterion 3

void criterion_endpoint(Context& c) {
    for (int mv = 3; mv <= 8; ++mv) {
        const Degree m(mv);
        const PExponent p2m(2 * mv);
        const double real_got = bound_yhb(m, p2m, ScalarField::Real).value;
        const double real_want = std::pow(constants::sqrt2, mv - 1);
        c.check(rel_close(real_got, real_want, 1e-12),
                "real endpoint at m=" + std::to_string(mv) + ": " + fmt(real_got) + " vs " +
                    fmt(real_want));

        const double cx_got = bound_yhb(m, p2m, ScalarField::Complex).value;
        const double cx_want = std::pow(constants::two_over_sqrt_pi, mv - 1);
        c.check(rel_close(cx_got, cx_want, 1e-12),
                "complex endpoint at m=" + std::to_string(mv) + ": " + fmt(cx_got) + " vs " +
                    fmt(cx_want));
    }
}

// ---------------------------------------------------------------- criterion 4

void criterion_improvement(Context& c) {
    for (int mv = 3; mv <= 8; ++mv) {
        const Degree m(mv);
        for (ScalarField f : {ScalarField::Real, ScalarField::Complex}) {
            for (const Rational& p : p_grid(m, 25, false)) {
                const double yhb = bound_yhb(m, PExponent(p), f).value;
                const double yu9 = bound_yu9(m, PExponent(p), f).value;
                c.check(yhb < yu9, std::string("no strict improvement at m=") +
                                       std::to_string(mv) + " p=" + p.str() + " " + field_name(f) +
                                       ": " + fmt(yhb) + " !< " + fmt(yu9));
            }
            const double at2m_a = bound_yhb(m, PExponent(2 * mv), f).value;
            const double at2m_b = bound_yu9(m, PExponent(2 * mv), f).value;
            c.check(rel_close(at2m_a, at2m_b, 1e-12),
                    std::string("p = 2m values differ at m=") + std::to_string(mv) + " " +
                        field_name(f));
        }
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion_theorem_continuity(Context& c) {
    for (int mv = 3; mv <= 6; ++mv) {
        const Degree m(mv);
        const Rational mm(mv);
        const Rational tau = max_q_threshold(m);
        const Rational half_sum = (mm + 1) / Rational(2);

        // Admissible vector at p = inf with max entry exactly at the threshold.
        const Rational filler = (mm - 1) / (half_sum - tau.reciprocal());
        std::vector<Rational> qv(static_cast<std::size_t>(mv), filler);
        qv[0] = tau;
        const MultipleExponent q_at{qv};
        c.check(check_admissible(q_at, m, PExponent::infinity()),
                "threshold vector not admissible at m=" + std::to_string(mv));
        c.check(q_at.max() == tau, "max entry not at threshold, m=" + std::to_string(mv));

        // theta_2 is exactly 1 there.
        const Rational theta2 =
            ((mm + 1) * (Rational(2) - tau) * (mm - 1) * (mm - 1)) / ((mm * mm - mm - 2) * tau);
        c.check(theta2 == Rational(1), "theta_2 != 1 at the threshold, m=" + std::to_string(mv));

        // A nearby admissible vector just below the threshold for the other route.
        const Rational below = tau - Rational(1, 1000);
        const Rational filler2 = (mm - 1) / (half_sum - below.reciprocal());
        std::vector<Rational> qv2(static_cast<std::size_t>(mv), filler2);
        qv2[0] = below;
        const MultipleExponent q_below{qv2};
        c.check(check_admissible(q_below, m, PExponent::infinity()) && q_below.max() == below,
                "below-threshold vector invalid at m=" + std::to_string(mv));

        for (ScalarField f : {ScalarField::Real, ScalarField::Complex}) {
            const double v765 = bound_thm765(m, PExponent::infinity(), q_at, f).value;
            const double v999 = bound_thm999(m, PExponent::infinity(), q_below, f).value;
            c.check(rel_close(v765, v999, 1e-12),
                    std::string("bound mismatch across the threshold at m=") +
                        std::to_string(mv) + " " + field_name(f) + ": " + fmt(v765) + " vs " +
                        fmt(v999));
        }
    }
}

// ---------------------------------------------------------------- criterion 6

void criterion_hard_inequality(Context& c) {
    const auto run = [&](int mv, int n, const MultipleExponent& want_q) {
        ExperimentConfig cfg{Degree(mv), n, PExponent::infinity(), ScalarField::Real,
                             500,        1, 1,                     Distribution::Rademacher};
        const ExperimentResult r = run_ratio_experiment(cfg);
        c.check(r.q == want_q, "unexpected exponent vector at m=" + std::to_string(mv));
        c.check(r.summary.errors == 0,
                "trial errors at m=" + std::to_string(mv) + " n=" + std::to_string(n));
        c.check(r.summary.vertex_trials == 500,
                "not all trials exact at m=" + std::to_string(mv) + " n=" + std::to_string(n));
        c.check(r.summary.hard_violations == 0,
                "hard violation at m=" + std::to_string(mv) + " n=" + std::to_string(n) +
                    " (max ratio " + fmt(r.summary.max_ratio) + " vs bound " +
                    fmt(r.bound.value) + ")");
        for (const TrialRecord& rec : r.records)
            c.check(rec.mixed_norm <= rec.bound * rec.norm_value + 1e-9,
                    "inequality fails in trial " + std::to_string(rec.trial) + " at m=" +
                        std::to_string(mv) + " n=" + std::to_string(n));
    };

    const MultipleExponent q2 = MultipleExponent::uniform(Degree(2), Rational(4, 3));
    for (int n = 2; n <= 8; ++n) run(2, n, q2);
    const MultipleExponent q3 = MultipleExponent::uniform(Degree(3), Rational(3, 2));
    for (int n = 2; n <= 4; ++n) run(3, n, q3);
}

// ---------------------------------------------------------------- criterion 7

void criterion_oracle_equivalence(Context& c) {
    // Alternating ascent against a Jacobi eigensolver at (m, p) = (2, 2).
    for (int t = 0; t < 100; ++t) {
        const CoefficientTensor T = random_form(Degree(2), 6, Distribution::Gaussian,
                                                ScalarField::Real, 40000u + static_cast<unsigned>(t));
        const double sigma = test::jacobi_sigma_max(T);
        const double est =
            alternating_norm(T, PExponent(2), 20, 41000u + static_cast<unsigned>(t)).value;
        c.check(std::abs(est - sigma) <= 1e-8 * std::max(1.0, sigma),
                "singular-value mismatch in trial " + std::to_string(t) + ": " + fmt(est) +
                    " vs " + fmt(sigma));
    }

    // Alternating ascent against the exact vertex norm at p = inf.
    int matches = 0;
    for (int t = 0; t < 200; ++t) {
        const CoefficientTensor T = random_form(Degree(2), 6, Distribution::Rademacher,
                                                ScalarField::Real, 50000u + static_cast<unsigned>(t));
        const double exact = vertex_norm_linf(T).value;
        const double est = alternating_norm(T, PExponent::infinity(), 50,
                                            51000u + static_cast<unsigned>(t))
                               .value;
        c.check(est <= exact + 1e-10, "heuristic exceeded the exact norm in trial " +
                                          std::to_string(t) + ": " + fmt(est) + " > " + fmt(exact));
        if (std::abs(est - exact) <= 1e-10 * std::max(1.0, exact)) ++matches;
    }
    c.check(matches >= 190, "vertex match rate " + std::to_string(matches) + "/200 below 95%");
    c.note("vertex match rate: " + std::to_string(matches) + "/200");
}

// ---------------------------------------------------------------- criterion 8

void criterion_property_suite(Context& c) {
    // Homogeneity of both sides.
    const CoefficientTensor T = random_form(Degree(3), 3, Distribution::Gaussian,
                                            ScalarField::Real, 8080);
    const MultipleExponent q{{Rational(3, 2), Rational(8, 5), Rational(2)}};
    const double base_mixed = mixed_norm(T, q);
    const double base_norm = alternating_norm(T, PExponent(6), 5, 17).value;
    for (double scale : {2.0, -3.0, 1.0 / 7.0}) {
        CoefficientTensor S = T;
        for (auto& e : S.entries()) e *= scale;
        c.check(rel_close(mixed_norm(S, q), std::abs(scale) * base_mixed, 1e-10),
                "mixed-norm homogeneity failed at c=" + fmt(scale));
        c.check(rel_close(alternating_norm(S, PExponent(6), 5, 17).value,
                          std::abs(scale) * base_norm, 1e-10),
                "norm homogeneity failed at c=" + fmt(scale));
    }

    // Single atom: both sides equal |c|, ratio exactly one.
    CoefficientTensor atom(Degree(2), 4, ScalarField::Real);
    {
        const int idx[2] = {2, 1};
        atom.at(idx) = Complex(-2.5, 0.0);
    }
    const double atom_mixed = mixed_norm(atom, MultipleExponent::uniform(Degree(2), Rational(4, 3)));
    const double atom_norm = vertex_norm_linf(atom).value;
    c.check(rel_close(atom_mixed, 2.5, 1e-12), "single-atom mixed norm is " + fmt(atom_mixed));
    c.check(rel_close(atom_norm, 2.5, 1e-12), "single-atom exact norm is " + fmt(atom_norm));
    c.check(rel_close(atom_mixed / atom_norm, 1.0, 1e-12), "single-atom ratio is not 1");

    // Uniform exponents collapse to the flat norm.
    for (int rep = 0; rep < 5; ++rep) {
        const CoefficientTensor R = random_form(Degree(3), 4, Distribution::Gaussian,
                                                ScalarField::Complex, 900u + static_cast<unsigned>(rep));
        const double r = 1.0 + 0.3 * (rep + 1);
        double flat = 0.0;
        for (const Complex& e : R.entries()) flat += std::pow(std::abs(e), r);
        flat = std::pow(flat, 1.0 / r);
        c.check(rel_close(mixed_norm(R, std::vector<double>{r, r, r}), flat, 1e-12),
                "uniform collapse failed at r=" + fmt(r));
    }

    // Monotone ascent within every start.
    for (int rep = 0; rep < 10; ++rep) {
        const CoefficientTensor R = random_form(Degree(2), 5, Distribution::Rademacher,
                                                ScalarField::Real, 1700u + static_cast<unsigned>(rep));
        for (const PExponent& p : {PExponent(4), PExponent::infinity()}) {
            const NormEstimate est = alternating_norm(R, p, 4, 60u + static_cast<unsigned>(rep));
            for (const auto& hist : est.ascent)
                for (std::size_t k = 1; k < hist.size(); ++k)
                    c.check(hist[k] >= hist[k - 1] * (1.0 - 1e-12),
                            "ascent decreased within a sweep");
        }
    }

    // Determinism under parallelism.
    ExperimentConfig cfg{Degree(2), 4, PExponent::infinity(), ScalarField::Real,
                         32,        1, 4242,                  Distribution::Rademacher};
    const auto render = [&] {
        const ExperimentResult r = run_ratio_experiment(cfg);
        std::ostringstream out;
        write_experiment_csv(out, cfg, r);
        return out.str();
    };
    setenv("HLB_THREADS", "1", 1);
    const std::string serial = render();
    setenv("HLB_THREADS", "3", 1);
    const std::string parallel = render();
    unsetenv("HLB_THREADS");
    c.check(serial == parallel, "experiment output depends on the thread count");
}

// ---------------------------------------------------------------- criterion 9

void criterion_figure(Context& c) {
    const int points = 25;
    const auto rows = figure_grid(3, 8, points);
    c.check(rows.size() == static_cast<std::size_t>(6 * points), "unexpected grid size");

    std::size_t i = 0;
    for (int mv = 3; mv <= 8; ++mv) {
        c.check(rows[i].exponent == Rational(mv - 1),
                "left boundary is not m-1 at m=" + std::to_string(mv));
        c.check(rows[i + points - 1].exponent == Rational(0),
                "right boundary is not 0 at m=" + std::to_string(mv));
        for (int k = 1; k < points; ++k)
            c.check(rows[i + static_cast<std::size_t>(k)].exponent <
                        rows[i + static_cast<std::size_t>(k) - 1].exponent,
                    "exponent not decreasing in p at m=" + std::to_string(mv));
        i += points;
    }

    std::ostringstream out;
    write_figure_csv(out, FigureSpec{3, 8, points}, rows);
    const std::string csv = out.str();
    c.check(csv.find("3,6,2\n") != std::string::npos, "left boundary row missing from the CSV");
    c.check(csv.find("3,24,0\n") != std::string::npos, "right boundary row missing from the CSV");
    c.check(csv.find("8,16,7\n") != std::string::npos, "m=8 boundary row missing from the CSV");
}

// --------------------------------------------------------------------- driver

struct Criterion {
    int id;
    const char* name;
    double time_cap_seconds;
    std::function<void(Context&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "exact identity suite (profiles, chains, interpolation)", 5.0,
         criterion_exact_identities},
        {2, "continuity at p = 2m^3-4m^2+2m plus displayed caps", 1.0,
         criterion_continuity_and_caps},
        {3, "endpoint constants at p = 2m", 1.0, criterion_endpoint},
        {4, "strict improvement over the product bound", 1.0, criterion_improvement},
        {5, "mixed-exponent bound continuity at the threshold", 1.0,
         criterion_theorem_continuity},
        {6, "hard empirical inequality with exact vertex norms", 120.0,
         criterion_hard_inequality},
        {7, "norm estimator against independent oracles", 60.0, criterion_oracle_equivalence},
        {8, "property suite (homogeneity, collapse, ascent, determinism)", 30.0,
         criterion_property_suite},
        {9, "sqrt(2)-exponent grid boundaries and monotonicity", 1.0, criterion_figure},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::cerr << "usage: hlb_acceptance [--criterion K]\n";
            return 2;
        }
    }

    bool all_pass = true;
    for (const Criterion& cr : criteria()) {
        if (only != 0 && cr.id != only) continue;

        Context ctx;
        const auto start = std::chrono::steady_clock::now();
        cr.run(ctx);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= cr.time_cap_seconds)
            ctx.fail("runtime " + format_double(elapsed) + " s exceeds the " +
                     format_double(cr.time_cap_seconds) + " s cap");

        std::cout << "[" << cr.id << "/9] " << cr.name << " ... "
                  << (ctx.ok ? "PASS" : "FAIL") << " (" << format_double(elapsed) << " s";
        if (!ctx.ok) std::cout << ", " << ctx.failures << " failed check(s)";
        std::cout << ")\n";
        for (const std::string& n : ctx.notes) std::cout << "      " << n << "\n";
        all_pass = all_pass && ctx.ok;
    }
    return all_pass ? 0 : 1;
}
