#pragma once

#include "hlb/bounds.hpp"
#include "hlb/tensor.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hlb {

enum class ExponentChoice { CriticalUniform, Profile, Custom };

const char* exponent_choice_name(ExponentChoice c);

struct ExperimentConfig {
    ExperimentConfig(Degree m_, int n_, PExponent p_, ScalarField field_, int trials_,
                     int restarts_, std::uint64_t seed_,
                     Distribution distribution_ = Distribution::Rademacher)
        : m(m_), n(n_), p(std::move(p_)), field(field_), trials(trials_), restarts(restarts_),
          seed(seed_), distribution(distribution_) {}

    Degree m;
    int n;
    PExponent p;
    ScalarField field;
    int trials;
    int restarts;
    std::uint64_t seed;
    Distribution distribution;
    ExponentChoice exponent_choice = ExponentChoice::CriticalUniform;
    std::optional<MultipleExponent> custom_q;
    bool force_exact = false;  // insist on the vertex oracle
};

struct TrialRecord {
    int trial = 0;
    bool ok = true;            // false when this trial raised an error
    std::string error;
    double mixed_norm = 0.0;
    double norm_value = 0.0;
    NormMethod method = NormMethod::Alternating;
    bool converged = false;
    double ratio = 0.0;        // mixed_norm / norm_value
    double bound = 0.0;
    double margin = 0.0;       // bound - ratio, never clipped
    bool hard_violation = false;
};

struct ExperimentSummary {
    int trials = 0;
    int errors = 0;
    int vertex_trials = 0;
    int hard_violations = 0;
    double max_ratio = 0.0;
    double margin_min = 0.0;
    double margin_q25 = 0.0;
    double margin_median = 0.0;
    double margin_q75 = 0.0;
    double margin_max = 0.0;
};

struct ExperimentResult {
    MultipleExponent q;   // the exponent vector actually evaluated
    BoundReport bound;
    std::vector<TrialRecord> records;
    ExperimentSummary summary;
    std::optional<int> first_violation_trial;
};

/// Batch ratio check of the inequality: per trial, a random form, its
/// nested mixed norm, a norm estimate, and the margin against the bound.
/// Hard violations are only flagged on vertex-exact trials; alternating
/// norms are lower bounds and their margins are reported, never asserted.
/// Deterministic for a fixed config, independent of the thread count.
ExperimentResult run_ratio_experiment(const ExperimentConfig& cfg);

/// The tensor used by trial `index` of a config (for witness dumps).
CoefficientTensor trial_tensor(const ExperimentConfig& cfg, int index);

struct ContinuityRow {
    Rational p;
    double yhb = 0.0;
    double yu9 = 0.0;
    double yu10 = 0.0;
    bool flagged = false;
};

/// Samples the interpolated bound across [2m, 2m^3-4m^2+2m] and flags any
/// point where it exceeds the product bound beyond 1e-12, or where the
/// right-endpoint value strays from the baseline beyond 1e-12 relative.
std::vector<ContinuityRow> continuity_scan(Degree m, int gridpoints,
                                           ScalarField field = ScalarField::Real);

struct FigureRow {
    int m = 0;
    Rational p;
    Rational exponent;
};

/// Grid of the sqrt(2) exponent over m in [m_min, m_max] and the valid
/// p-range per m; boundary values are exactly m-1 and 0.
std::vector<FigureRow> figure_grid(int m_min, int m_max, int points_per_m);

struct ProbeRow {
    int n = 0;
    double r = 0.0;
    double mean_ratio = 0.0;
    int trials = 0;
};

/// Growth probe for the critical exponent: mean mixed-norm/norm ratios at
/// r = s and r = 0.9 s across a range of n for real Rademacher forms,
/// reported as trend data. Uses exact vertex norms when p = infinity and
/// the shape fits the enumeration budget; otherwise falls back to
/// alternating-ascent lower bounds (soft mode).
std::vector<ProbeRow> optimality_probe(Degree m, const PExponent& p, int n_min, int n_max,
                                       int trials, std::uint64_t seed);

struct ComparisonRow {
    int m = 0;
    Rational p;
    double yu9 = 0.0;
    std::optional<double> yhb;  // empty when the formula does not apply
    double best = 0.0;
    FormulaTag winner = FormulaTag::Yu9;
};

std::vector<ComparisonRow> comparison_table(int m_min, int m_max, int p_points, ScalarField field);

/// Log-spaced rational sample of [2m, 2m^3-4m^2+2m]: endpoints exact when
/// included, interior points rounded to denominator 1000, deduplicated.
std::vector<Rational> p_grid(Degree m, int points, bool include_endpoints);

/// Thread cap: HLB_THREADS when set, else the hardware concurrency.
/// Results never depend on it.
unsigned thread_budget();

/// 15 significant digits, '.' decimal separator.
std::string format_double(double v);

struct FigureSpec {
    int m_min = 3;
    int m_max = 8;
    int points = 25;
};

struct ProbeSpec {
    int m = 2;
    PExponent p = PExponent::infinity();
    int n_min = 1;
    int n_max = 8;
    int trials = 50;
    std::uint64_t seed = 1;
};

struct ComparisonSpec {
    int m_min = 2;
    int m_max = 8;
    int points = 25;
    ScalarField field = ScalarField::Real;
};

void write_experiment_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& r);
void write_experiment_json(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& r);
void write_continuity_csv(std::ostream& out, Degree m, ScalarField field,
                          const std::vector<ContinuityRow>& rows);
void write_figure_csv(std::ostream& out, const FigureSpec& spec, const std::vector<FigureRow>& rows);
void write_figure_json(std::ostream& out, const FigureSpec& spec, const std::vector<FigureRow>& rows);
void write_probe_csv(std::ostream& out, const ProbeSpec& spec, const std::vector<ProbeRow>& rows);
void write_probe_json(std::ostream& out, const ProbeSpec& spec, const std::vector<ProbeRow>& rows);
void write_comparison_csv(std::ostream& out, const ComparisonSpec& spec,
                          const std::vector<ComparisonRow>& rows);
void write_comparison_json(std::ostream& out, const ComparisonSpec& spec,
                           const std::vector<ComparisonRow>& rows);

}  // namespace hlb
