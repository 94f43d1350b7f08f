#include "hlb/harness.hpp"

#include "hlb/interpolation.hpp"
#include "hlb/rng.hpp"
#include "hlb/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace hlb {

namespace {

using ordered_json = nlohmann::ordered_json;

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned threads = thread_budget();
    if (count < 2) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(count == 0 ? 1 : count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<Rational> log_grid(const Rational& lo, const Rational& hi, int points,
                               bool include_endpoints) {
    if (points < 1) throw std::invalid_argument("grid: points must be >= 1");
    if (hi < lo) throw std::invalid_argument("grid: empty range");

    std::vector<Rational> out;
    if (hi == lo) {
        out.push_back(lo);
        return out;
    }
    if (include_endpoints && points < 2)
        throw std::invalid_argument("grid: need at least 2 points to include both endpoints");

    const double llo = std::log(lo.to_double());
    const double lhi = std::log(hi.to_double());
    const int inner = include_endpoints ? points - 2 : points;

    if (include_endpoints) out.push_back(lo);
    for (int k = 0; k < inner; ++k) {
        const double t = static_cast<double>(k + 1) / static_cast<double>(inner + 1);
        const double v = std::exp(llo + t * (lhi - llo));
        Rational r(std::llround(v * 1000.0), 1000);
        if (r <= lo || r >= hi) continue;  // endpoints are handled exactly
        out.push_back(std::move(r));
    }
    if (include_endpoints) out.push_back(hi);

    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (static_cast<int>(out.size()) != points)
        throw std::logic_error("grid: rounding collapsed sample points; widen the range or reduce points");
    return out;
}

MultipleExponent experiment_exponents(const ExperimentConfig& cfg) {
    switch (cfg.exponent_choice) {
        case ExponentChoice::CriticalUniform:
            return MultipleExponent::uniform(cfg.m, critical_exponent(cfg.m, cfg.p));
        case ExponentChoice::Profile: {
            const ExponentProfile prof = lambda_profile(cfg.m, cfg.p);
            std::vector<Rational> q(static_cast<std::size_t>(cfg.m.value()), prof.s);
            q[0] = prof.lambda[0];
            return MultipleExponent{std::move(q)};
        }
        case ExponentChoice::Custom:
            if (!cfg.custom_q) throw std::invalid_argument("experiment: custom exponents missing");
            if (cfg.custom_q->size() != cfg.m.value())
                throw std::invalid_argument("experiment: custom exponent count must equal m");
            return *cfg.custom_q;
    }
    throw std::logic_error("experiment: bad exponent choice");
}

BoundReport experiment_bound(const ExperimentConfig& cfg, const MultipleExponent& q) {
    if (cfg.exponent_choice == ExponentChoice::Custom) {
        if (q.max() < max_q_threshold(cfg.m)) return bound_thm999(cfg.m, cfg.p, q, cfg.field);
        return bound_thm765(cfg.m, cfg.p, q, cfg.field);
    }
    return best_bound(cfg.m, cfg.p, cfg.field);
}

double quantile(const std::vector<double>& sorted, double f) {
    if (sorted.empty()) return 0.0;
    const double pos = f * static_cast<double>(sorted.size() - 1);
    const std::size_t i = static_cast<std::size_t>(pos);
    if (i + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

std::string config_echo(const ExperimentConfig& cfg, const MultipleExponent& q) {
    std::string s = "m=" + std::to_string(cfg.m.value()) + " n=" + std::to_string(cfg.n) +
                    " p=" + cfg.p.str() + " field=" + field_name(cfg.field) +
                    " dist=" + distribution_name(cfg.distribution) +
                    " trials=" + std::to_string(cfg.trials) +
                    " restarts=" + std::to_string(cfg.restarts) +
                    " seed=" + std::to_string(cfg.seed) +
                    " exponents=" + exponent_choice_name(cfg.exponent_choice) + " q=" + q.str() +
                    " exact=" + (cfg.force_exact ? "1" : "0");
    return s;
}

}  // namespace

const char* exponent_choice_name(ExponentChoice c) {
    switch (c) {
        case ExponentChoice::CriticalUniform: return "uniform";
        case ExponentChoice::Profile: return "profile";
        case ExponentChoice::Custom: return "custom";
    }
    return "?";
}

unsigned thread_budget() {
    if (const char* env = std::getenv("HLB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

CoefficientTensor trial_tensor(const ExperimentConfig& cfg, int index) {
    return random_form(cfg.m, cfg.n, cfg.distribution, cfg.field,
                       mix_seed(cfg.seed, 2ull * static_cast<std::uint64_t>(index)));
}

ExperimentResult run_ratio_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (cfg.restarts < 1) throw std::invalid_argument("experiment: restarts must be >= 1");

    const MultipleExponent q = experiment_exponents(cfg);
    const BoundReport bound = experiment_bound(cfg, q);

    const bool use_vertex = cfg.p.is_infinity() && cfg.field == ScalarField::Real &&
                            vertex_norm_applicable(cfg.m, cfg.n, cfg.field);
    if (cfg.force_exact && !use_vertex)
        throw std::domain_error(
            "experiment: --exact requires p = inf, a real field, and n(m-1) <= 24");

    ExperimentResult result{q, bound, {}, {}, std::nullopt};
    result.records.resize(static_cast<std::size_t>(cfg.trials));

    std::vector<double> qd;
    qd.reserve(q.q.size());
    for (const Rational& r : q.q) qd.push_back(r.to_double());

    parallel_for(static_cast<std::size_t>(cfg.trials), [&](std::size_t t) {
        TrialRecord& rec = result.records[t];
        rec.trial = static_cast<int>(t);
        try {
            const CoefficientTensor T = trial_tensor(cfg, static_cast<int>(t));
            rec.mixed_norm = mixed_norm(T, qd);
            const NormEstimate est =
                use_vertex ? vertex_norm_linf(T)
                           : alternating_norm(T, cfg.p, cfg.restarts,
                                              mix_seed(cfg.seed, 2ull * t + 1ull));
            rec.norm_value = est.value;
            rec.method = est.method;
            rec.converged = est.converged;
            rec.ratio = rec.mixed_norm / rec.norm_value;
            rec.bound = bound.value;
            rec.margin = rec.bound - rec.ratio;
            rec.hard_violation = est.method == NormMethod::VertexExact &&
                                 rec.mixed_norm > rec.bound * rec.norm_value + 1e-9;
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.error = e.what();
        }
    });

    ExperimentSummary& s = result.summary;
    s.trials = cfg.trials;
    std::vector<double> margins;
    margins.reserve(result.records.size());
    for (const TrialRecord& rec : result.records) {
        if (!rec.ok) {
            ++s.errors;
            continue;
        }
        if (rec.method == NormMethod::VertexExact) ++s.vertex_trials;
        if (rec.hard_violation) {
            ++s.hard_violations;
            if (!result.first_violation_trial) result.first_violation_trial = rec.trial;
        }
        if (std::isfinite(rec.ratio)) s.max_ratio = std::max(s.max_ratio, rec.ratio);
        if (std::isfinite(rec.margin)) margins.push_back(rec.margin);
    }
    std::sort(margins.begin(), margins.end());
    if (!margins.empty()) {
        s.margin_min = margins.front();
        s.margin_q25 = quantile(margins, 0.25);
        s.margin_median = quantile(margins, 0.5);
        s.margin_q75 = quantile(margins, 0.75);
        s.margin_max = margins.back();
    }
    return result;
}

std::vector<ContinuityRow> continuity_scan(Degree m, int gridpoints, ScalarField field) {
    if (m.value() < 3) throw std::domain_error("continuity_scan: requires m >= 3");

    const std::vector<Rational> grid = p_grid(m, gridpoints, true);
    const double yu10 = bound_yu10(m, field).value;

    std::vector<ContinuityRow> rows;
    rows.reserve(grid.size());
    for (const Rational& p : grid) {
        ContinuityRow row{p, 0.0, 0.0, yu10, false};
        row.yhb = bound_yhb(m, PExponent(p), field).value;
        row.yu9 = bound_yu9(m, PExponent(p), field).value;
        if (row.yhb > row.yu9 + 1e-12) row.flagged = true;
        if (p == p_range_upper(m) && std::abs(row.yhb - yu10) > 1e-12 * yu10) row.flagged = true;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FigureRow> figure_grid(int m_min, int m_max, int points_per_m) {
    if (m_min < 3) throw std::domain_error("figure_grid: requires m >= 3");
    if (m_max < m_min) throw std::invalid_argument("figure_grid: m_max < m_min");

    std::vector<FigureRow> rows;
    for (int mv = m_min; mv <= m_max; ++mv) {
        const Degree m(mv);
        for (const Rational& p : p_grid(m, points_per_m, true))
            rows.push_back(FigureRow{mv, p, sqrt2_exponent(m, PExponent(p))});
    }
    return rows;
}

std::vector<ProbeRow> optimality_probe(Degree m, const PExponent& p, int n_min, int n_max,
                                       int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("probe: trials must be >= 1");
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("probe: bad n range");

    const Rational s = critical_exponent(m, p);
    const std::vector<Rational> r_values{s, s * Rational(9, 10)};

    std::vector<ProbeRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<double> ratio_sums(r_values.size(), 0.0);
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t tseed =
                mix_seed(seed, (static_cast<std::uint64_t>(n) << 24) + static_cast<std::uint64_t>(t));
            const CoefficientTensor T = random_form(m, n, Distribution::Rademacher,
                                                    ScalarField::Real, tseed);
            double norm = 0.0;
            if (p.is_infinity() && vertex_norm_applicable(T)) {
                norm = vertex_norm_linf(T).value;
            } else {
                // soft mode: heuristic lower bound on the norm
                norm = alternating_norm(T, p, 20, mix_seed(tseed, 1)).value;
            }
            for (std::size_t k = 0; k < r_values.size(); ++k) {
                const double mixed =
                    mixed_norm(T, MultipleExponent::uniform(m, r_values[k]));
                ratio_sums[k] += mixed / norm;
            }
        }
        for (std::size_t k = 0; k < r_values.size(); ++k)
            rows.push_back(ProbeRow{n, r_values[k].to_double(),
                                    ratio_sums[k] / static_cast<double>(trials), trials});
    }
    return rows;
}

std::vector<ComparisonRow> comparison_table(int m_min, int m_max, int p_points, ScalarField field) {
    if (m_min < 2) throw std::domain_error("comparison_table: requires m >= 2");
    if (m_max < m_min) throw std::invalid_argument("comparison_table: m_max < m_min");

    std::vector<ComparisonRow> rows;
    for (int mv = m_min; mv <= m_max; ++mv) {
        const Degree m(mv);
        const Rational lo(2 * mv);
        const Rational hi = std::max(Rational(2) * p_range_upper(m), Rational(16 * mv));
        for (const Rational& p : log_grid(lo, hi, p_points, true)) {
            const PExponent pe(p);
            ComparisonRow row;
            row.m = mv;
            row.p = p;
            row.yu9 = bound_yu9(m, pe, field).value;
            if (mv >= 3 && p <= p_range_upper(m)) row.yhb = bound_yhb(m, pe, field).value;
            const BoundReport best = best_bound(m, pe, field);
            row.best = best.value;
            row.winner = best.formula;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<Rational> p_grid(Degree m, int points, bool include_endpoints) {
    return log_grid(Rational(2 * m.value()), p_range_upper(m), points, include_endpoints);
}

void write_experiment_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& r) {
    out << "# hlb " << kVersion << " verify\n";
    out << "# " << config_echo(cfg, r.q) << "\n";
    out << "# bound " << formula_name(r.bound.formula) << " = " << format_double(r.bound.value)
        << "\n";
    out << "trial,mixed_norm,norm,method,converged,ratio,bound,margin,hard_violation\n";
    for (const TrialRecord& rec : r.records) {
        if (!rec.ok) {
            out << "# trial " << rec.trial << " error: " << rec.error << "\n";
            continue;
        }
        out << rec.trial << ',' << format_double(rec.mixed_norm) << ','
            << format_double(rec.norm_value) << ',' << norm_method_name(rec.method) << ','
            << (rec.converged ? 1 : 0) << ',' << format_double(rec.ratio) << ','
            << format_double(rec.bound) << ',' << format_double(rec.margin) << ','
            << (rec.hard_violation ? 1 : 0) << "\n";
    }
    const ExperimentSummary& s = r.summary;
    out << "# summary trials=" << s.trials << " errors=" << s.errors
        << " vertex_trials=" << s.vertex_trials << " hard_violations=" << s.hard_violations
        << " max_ratio=" << format_double(s.max_ratio)
        << " margin_min=" << format_double(s.margin_min)
        << " margin_q25=" << format_double(s.margin_q25)
        << " margin_median=" << format_double(s.margin_median)
        << " margin_q75=" << format_double(s.margin_q75)
        << " margin_max=" << format_double(s.margin_max) << "\n";
}

namespace {

ordered_json meta_json(const char* command) {
    ordered_json meta;
    meta["version"] = kVersion;
    meta["command"] = command;
    return meta;
}

}  // namespace

void write_experiment_json(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& r) {
    ordered_json j;
    j["meta"] = meta_json("verify");
    ordered_json c;
    c["m"] = cfg.m.value();
    c["n"] = cfg.n;
    c["p"] = cfg.p.str();
    c["field"] = field_name(cfg.field);
    c["distribution"] = distribution_name(cfg.distribution);
    c["trials"] = cfg.trials;
    c["restarts"] = cfg.restarts;
    c["seed"] = cfg.seed;
    c["exponents"] = exponent_choice_name(cfg.exponent_choice);
    c["q"] = r.q.str();
    c["exact"] = cfg.force_exact;
    j["config"] = std::move(c);
    ordered_json b;
    b["formula"] = formula_name(r.bound.formula);
    b["value"] = r.bound.value;
    j["bound"] = std::move(b);
    j["rows"] = ordered_json::array();
    for (const TrialRecord& rec : r.records) {
        ordered_json row;
        row["trial"] = rec.trial;
        if (!rec.ok) {
            row["error"] = rec.error;
        } else {
            row["mixed_norm"] = rec.mixed_norm;
            row["norm"] = rec.norm_value;
            row["method"] = norm_method_name(rec.method);
            row["converged"] = rec.converged;
            row["ratio"] = rec.ratio;
            row["bound"] = rec.bound;
            row["margin"] = rec.margin;
            row["hard_violation"] = rec.hard_violation;
        }
        j["rows"].push_back(std::move(row));
    }
    ordered_json s;
    s["trials"] = r.summary.trials;
    s["errors"] = r.summary.errors;
    s["vertex_trials"] = r.summary.vertex_trials;
    s["hard_violations"] = r.summary.hard_violations;
    s["max_ratio"] = r.summary.max_ratio;
    s["margin_min"] = r.summary.margin_min;
    s["margin_q25"] = r.summary.margin_q25;
    s["margin_median"] = r.summary.margin_median;
    s["margin_q75"] = r.summary.margin_q75;
    s["margin_max"] = r.summary.margin_max;
    j["summary"] = std::move(s);
    out << j.dump(2) << "\n";
}

void write_continuity_csv(std::ostream& out, Degree m, ScalarField field,
                          const std::vector<ContinuityRow>& rows) {
    out << "# hlb " << kVersion << " continuity\n";
    out << "# m=" << m.value() << " field=" << field_name(field) << "\n";
    out << "p,yhb,yu9,yu10,flagged\n";
    for (const ContinuityRow& row : rows)
        out << row.p.str() << ',' << format_double(row.yhb) << ',' << format_double(row.yu9) << ','
            << format_double(row.yu10) << ',' << (row.flagged ? 1 : 0) << "\n";
}

void write_figure_csv(std::ostream& out, const FigureSpec& spec, const std::vector<FigureRow>& rows) {
    out << "# hlb " << kVersion << " figure\n";
    out << "# m_min=" << spec.m_min << " m_max=" << spec.m_max << " points=" << spec.points << "\n";
    out << "m,p,sqrt2_exponent\n";
    for (const FigureRow& row : rows)
        out << row.m << ',' << format_double(row.p.to_double()) << ','
            << format_double(row.exponent.to_double()) << "\n";
}

void write_figure_json(std::ostream& out, const FigureSpec& spec, const std::vector<FigureRow>& rows) {
    ordered_json j;
    j["meta"] = meta_json("figure");
    ordered_json c;
    c["m_min"] = spec.m_min;
    c["m_max"] = spec.m_max;
    c["points"] = spec.points;
    j["config"] = std::move(c);
    j["rows"] = ordered_json::array();
    for (const FigureRow& row : rows) {
        ordered_json r;
        r["m"] = row.m;
        r["p"] = row.p.to_double();
        r["p_exact"] = row.p.str();
        r["sqrt2_exponent"] = row.exponent.to_double();
        r["sqrt2_exponent_exact"] = row.exponent.str();
        j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
}

void write_probe_csv(std::ostream& out, const ProbeSpec& spec, const std::vector<ProbeRow>& rows) {
    out << "# hlb " << kVersion << " probe\n";
    out << "# m=" << spec.m << " p=" << spec.p.str() << " n_min=" << spec.n_min
        << " n_max=" << spec.n_max << " trials=" << spec.trials << " seed=" << spec.seed << "\n";
    out << "n,r,mean_ratio,trials\n";
    for (const ProbeRow& row : rows)
        out << row.n << ',' << format_double(row.r) << ',' << format_double(row.mean_ratio) << ','
            << row.trials << "\n";
}

void write_probe_json(std::ostream& out, const ProbeSpec& spec, const std::vector<ProbeRow>& rows) {
    ordered_json j;
    j["meta"] = meta_json("probe");
    ordered_json c;
    c["m"] = spec.m;
    c["p"] = spec.p.str();
    c["n_min"] = spec.n_min;
    c["n_max"] = spec.n_max;
    c["trials"] = spec.trials;
    c["seed"] = spec.seed;
    j["config"] = std::move(c);
    j["rows"] = ordered_json::array();
    for (const ProbeRow& row : rows) {
        ordered_json r;
        r["n"] = row.n;
        r["r"] = row.r;
        r["mean_ratio"] = row.mean_ratio;
        r["trials"] = row.trials;
        j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
}

void write_comparison_csv(std::ostream& out, const ComparisonSpec& spec,
                          const std::vector<ComparisonRow>& rows) {
    out << "# hlb " << kVersion << " compare\n";
    out << "# m_min=" << spec.m_min << " m_max=" << spec.m_max << " points=" << spec.points
        << " field=" << field_name(spec.field) << "\n";
    out << "m,p,yu9,yhb,best,winner\n";
    for (const ComparisonRow& row : rows) {
        out << row.m << ',' << format_double(row.p.to_double()) << ',' << format_double(row.yu9)
            << ',';
        if (row.yhb) out << format_double(*row.yhb);
        else out << "na";
        out << ',' << format_double(row.best) << ',' << formula_name(row.winner) << "\n";
    }
}

void write_comparison_json(std::ostream& out, const ComparisonSpec& spec,
                           const std::vector<ComparisonRow>& rows) {
    ordered_json j;
    j["meta"] = meta_json("compare");
    ordered_json c;
    c["m_min"] = spec.m_min;
    c["m_max"] = spec.m_max;
    c["points"] = spec.points;
    c["field"] = field_name(spec.field);
    j["config"] = std::move(c);
    j["rows"] = ordered_json::array();
    for (const ComparisonRow& row : rows) {
        ordered_json r;
        r["m"] = row.m;
        r["p"] = row.p.to_double();
        r["p_exact"] = row.p.str();
        r["yu9"] = row.yu9;
        if (row.yhb) r["yhb"] = *row.yhb;
        else r["yhb"] = nullptr;
        r["best"] = row.best;
        r["winner"] = formula_name(row.winner);
        j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
}

}  // namespace hlb
