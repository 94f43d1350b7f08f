#include "hlb/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace hlb {

const char* field_name(ScalarField f) { return f == ScalarField::Real ? "real" : "complex"; }

ScalarField parse_field(const std::string& s) {
    if (s == "real" || s == "r") return ScalarField::Real;
    if (s == "complex" || s == "c") return ScalarField::Complex;
    throw std::invalid_argument("unknown scalar field '" + s + "' (expected real|complex)");
}

const char* formula_name(FormulaTag t) {
    switch (t) {
        case FormulaTag::BhBaseline: return "bh_baseline";
        case FormulaTag::Endpoint2m: return "endpoint_2m";
        case FormulaTag::Yu9: return "yu9";
        case FormulaTag::Yu10: return "yu10";
        case FormulaTag::Yhb: return "yhb";
        case FormulaTag::Thm999: return "thm999";
        case FormulaTag::Thm765: return "thm765";
    }
    return "?";
}

namespace constants {

double real_bh_exponent() {
    static const double v = 0.5 * (2.0 - std::log(2.0) - euler_gamma);
    return v;
}

double complex_bh_exponent() {
    static const double v = 0.5 * (1.0 - euler_gamma);
    return v;
}

}  // namespace constants

namespace {

double endpoint_base(ScalarField f) {
    return f == ScalarField::Real ? constants::sqrt2 : constants::two_over_sqrt_pi;
}

double bh_exponent(ScalarField f) {
    return f == ScalarField::Real ? constants::real_bh_exponent() : constants::complex_bh_exponent();
}

double bh_leading(ScalarField f) { return f == ScalarField::Real ? 1.3 : 1.0; }

double baseline_value(Degree m, ScalarField f) {
    return bh_leading(f) * std::pow(m.value(), bh_exponent(f));
}

// The five-digit exponents as displayed alongside the baseline; these are
// what the product bound below is stated with.
double displayed_cap_value(Degree m, ScalarField f) {
    return f == ScalarField::Real ? 1.3 * std::pow(m.value(), 0.36482)
                                  : std::pow(m.value(), 0.21139);
}

double from_factors(const std::vector<Factor>& factors) {
    double v = 1.0;
    for (const Factor& f : factors) v *= std::pow(f.base, f.exponent);
    return v;
}

BoundReport make_report(Degree m, PExponent p, ScalarField field, FormulaTag tag,
                        std::vector<Factor> factors) {
    BoundReport r{m, std::move(p), field, 0.0, tag, std::move(factors)};
    r.value = from_factors(r.factors);
    return r;
}

void require_p_in_theorem_range(Degree m, const PExponent& p, const char* who) {
    if (p.is_infinity())
        throw std::domain_error(std::string(who) + ": requires finite p");
    const Rational& pp = p.value();
    if (pp < Rational(2 * m.value()) || pp > p_range_upper(m))
        throw std::domain_error(std::string(who) + ": p outside [2m, 2m^3-4m^2+2m] (got " + pp.str() + ")");
}

}  // namespace

Rational p_range_upper(Degree m) {
    const Rational mm(m.value());
    return 2 * mm * mm * mm - 4 * mm * mm + 2 * mm;
}

Rational max_q_threshold(Degree m) {
    const Rational mm(m.value());
    return (2 * mm * mm - 4 * mm + 2) / (mm * mm - mm - 1);
}

Rational sqrt2_exponent(Degree m, const PExponent& p) {
    const long long mv = m.value();
    if (mv < 3) throw std::domain_error("sqrt2_exponent: requires m >= 3");
    require_p_in_theorem_range(m, p, "sqrt2_exponent");
    const Rational mm(mv);
    const Rational& pp = p.value();
    const Rational num = pp - 2 * mm - mm * pp + 6 * mm * mm - 6 * mm * mm * mm + 2 * mm * mm * mm * mm;
    return num / (mm * pp * (mm - 2));
}

BoundReport bound_bh_baseline(Degree m, ScalarField field) {
    std::vector<Factor> factors;
    if (field == ScalarField::Real) factors.push_back({1.3, 1.0});
    factors.push_back({static_cast<double>(m.value()), bh_exponent(field)});
    return make_report(m, PExponent::infinity(), field, FormulaTag::BhBaseline, std::move(factors));
}

BoundReport bound_endpoint_2m(Degree m, ScalarField field) {
    return make_report(m, PExponent(Rational(2 * m.value())), field, FormulaTag::Endpoint2m,
                       {{endpoint_base(field), static_cast<double>(m.value() - 1)}});
}

BoundReport bound_yu9(Degree m, const PExponent& p, ScalarField field) {
    if (p.is_infinity()) throw std::domain_error("bound_yu9: requires finite p");
    const Rational mm(m.value());
    const Rational& pp = p.value();
    if (pp < 2 * mm)
        throw std::domain_error("bound_yu9: requires p >= 2m (got " + pp.str() + ")");

    const Rational endpoint_exp = (2 * mm * (mm - 1)) / pp;
    const Rational cap_exp = (pp - 2 * mm) / pp;
    return make_report(m, p, field, FormulaTag::Yu9,
                       {{endpoint_base(field), endpoint_exp.to_double()},
                        {displayed_cap_value(m, field), cap_exp.to_double()}});
}

BoundReport bound_yu10(Degree m, ScalarField field) {
    BoundReport r = bound_bh_baseline(m, field);
    r.formula = FormulaTag::Yu10;
    return r;
}

BoundReport bound_yhb(Degree m, const PExponent& p, ScalarField field) {
    if (m.value() < 3)
        throw std::domain_error("bound_yhb: requires m >= 3 (use bound_yu10 for m = 2)");
    require_p_in_theorem_range(m, p, "bound_yhb");

    const Rational mm(m.value());
    const Rational& pp = p.value();
    const Rational theta1 = (2 * mm - pp + mm * pp - 2 * mm * mm) / (mm * mm * pp - 2 * mm * pp);
    const Rational baseline_exp = (mm - 1) * theta1;
    const Rational sqrt2_exp = sqrt2_exponent(m, p);
    return make_report(m, p, field, FormulaTag::Yhb,
                       {{baseline_value(m, field), baseline_exp.to_double()},
                        {endpoint_base(field), sqrt2_exp.to_double()}});
}

BoundReport bound_thm999(Degree m, const PExponent& p, const MultipleExponent& q, ScalarField field) {
    if (!p.is_infinity() && p.value() <= Rational(2 * m.value()))
        throw std::domain_error("bound_thm999: requires p > 2m");
    if (!check_admissible(q, m, p))
        throw std::domain_error("bound_thm999: exponent vector is not admissible for (m, p)");
    if (!(q.max() < max_q_threshold(m)))
        throw std::domain_error("bound_thm999: requires max q_i < (2m^2-4m+2)/(m^2-m-1); use bound_thm765");

    BoundReport r = bound_bh_baseline(m, field);
    r.formula = FormulaTag::Thm999;
    r.p = p;
    return r;
}

BoundReport bound_thm765(Degree m, const PExponent& p, const MultipleExponent& q, ScalarField field) {
    if (!p.is_infinity() && p.value() < Rational(2 * m.value()))
        throw std::domain_error("bound_thm765: requires p >= 2m");
    if (!check_admissible(q, m, p))
        throw std::domain_error("bound_thm765: exponent vector is not admissible for (m, p)");

    const Rational mm(m.value());
    Rational theta2(0);
    if (m.value() == 2) {
        if (!(q.max() == Rational(2)))
            throw std::domain_error("bound_thm765: requires max q_i >= 2 when m = 2");
        // (theta_1, theta_2) = (1, 0).
    } else {
        const Rational& qmax = q.max();
        if (qmax < max_q_threshold(m))
            throw std::domain_error("bound_thm765: requires max q_i >= (2m^2-4m+2)/(m^2-m-1); use bound_thm999");
        theta2 = ((mm + 1) * (Rational(2) - qmax) * (mm - 1) * (mm - 1)) /
                 ((mm * mm - mm - 2) * qmax);
    }
    const Rational theta1 = Rational(1) - theta2;

    return make_report(m, p, field, FormulaTag::Thm765,
                       {{endpoint_base(field), ((mm - 1) * theta1).to_double()},
                        {baseline_value(m, field), theta2.to_double()}});
}

BoundReport best_bound(Degree m, const PExponent& p, ScalarField field) {
    if (p.is_infinity()) return bound_bh_baseline(m, field);

    const Rational& pp = p.value();
    if (pp < Rational(2 * m.value()))
        throw std::domain_error("best_bound: requires p >= 2m (got " + pp.str() + ")");

    // Candidates in tie-break priority order.
    std::vector<BoundReport> candidates;
    if (m.value() >= 3 && pp <= p_range_upper(m))
        candidates.push_back(bound_yhb(m, p, field));
    if (m.value() == 2 || pp > p_range_upper(m))
        candidates.push_back(bound_yu10(m, field));
    candidates.push_back(bound_yu9(m, p, field));

    const BoundReport* best = &candidates.front();
    for (const BoundReport& c : candidates)
        if (c.value < best->value) best = &c;
    return *best;
}

}  // namespace hlb
