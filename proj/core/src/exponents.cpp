#include "hlb/exponents.hpp"

#include <limits>
#include <stdexcept>

namespace hlb {

Degree::Degree(int m) : m_(m) {
    if (m < 2) throw std::domain_error("Degree: m must be at least 2");
}

const Rational& PExponent::value() const {
    if (infinite_) throw std::logic_error("PExponent: infinity has no rational value");
    return finite_;
}

double PExponent::to_double() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    return finite_.to_double();
}

std::string PExponent::str() const { return infinite_ ? "inf" : finite_.str(); }

bool operator==(const PExponent& a, const PExponent& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.finite_ == b.finite_;
}

const Rational& MultipleExponent::max() const {
    if (q.empty()) throw std::logic_error("MultipleExponent: empty");
    const Rational* best = &q[0];
    for (const Rational& v : q)
        if (v > *best) best = &v;
    return *best;
}

MultipleExponent MultipleExponent::uniform(Degree m, Rational value) {
    return MultipleExponent{std::vector<Rational>(static_cast<std::size_t>(m.value()), std::move(value))};
}

std::string MultipleExponent::str() const {
    std::string out = "(";
    for (int i = 0; i < size(); ++i) {
        if (i) out += ", ";
        out += q[static_cast<std::size_t>(i)].str();
    }
    return out + ")";
}

Rational holder_conjugate(const Rational& r) {
    if (r <= Rational(1)) throw std::domain_error("holder_conjugate: requires r > 1");
    return r / (r - Rational(1));
}

Rational critical_exponent(Degree m, const PExponent& p) {
    const Rational mm(m.value());
    if (p.is_infinity()) return (2 * mm) / (mm + 1);
    const Rational& pp = p.value();
    if (pp < 2 * mm)
        throw std::domain_error("critical_exponent: requires p >= 2m (got p = " + pp.str() + ", m = " +
                                mm.str() + ")");
    return (2 * mm * pp) / (mm * pp + pp - 2 * mm);
}

ExponentProfile lambda_profile(Degree m, const PExponent& p) {
    const Rational mm(m.value());
    const Rational s = critical_exponent(m, p);

    if (s < (2 * mm) / (mm + 1) || s > Rational(2))
        throw std::logic_error("lambda_profile: s outside [2m/(m+1), 2]");

    const Rational lambda0 = (2 * s) / (mm * s + s - 2 * mm + 2);

    std::vector<Rational> lambda;
    lambda.reserve(static_cast<std::size_t>(m.value()) + 1);
    lambda.push_back(lambda0);

    if (p.is_infinity()) {
        // lambda_j -> lambda_0 = s as p grows; the whole chain degenerates.
        if (!(lambda0 == s)) throw std::logic_error("lambda_profile: lambda_0 != s at p = infinity");
        for (int j = 1; j <= m.value(); ++j) lambda.push_back(s);
    } else {
        const Rational& pp = p.value();
        if (!(lambda0 < s)) throw std::logic_error("lambda_profile: lambda_0 >= s at finite p");
        for (int j = 1; j <= m.value(); ++j) {
            const Rational den = pp - lambda0 * Rational(j);
            if (den.sign() <= 0) throw std::logic_error("lambda_profile: nonpositive denominator in lambda chain");
            lambda.push_back((lambda0 * pp) / den);
        }
        if (!(lambda.back() == s)) throw std::logic_error("lambda_profile: lambda_m != s");
    }

    // (m-1)/s + 1/lambda_0 == (m+1)/2 exactly.
    if (!((mm - 1) / s + lambda0.reciprocal() == (mm + 1) / Rational(2)))
        throw std::logic_error("lambda_profile: Holder identity violated");

    return ExponentProfile{m, p, s, std::move(lambda)};
}

bool conjugate_chain_check(const ExponentProfile& profile) {
    if (profile.p.is_infinity())
        throw std::domain_error("conjugate_chain_check: requires finite p");
    const Rational& pp = profile.p.value();
    for (int j = 0; j < profile.m.value(); ++j) {
        const Rational& lj = profile.lambda[static_cast<std::size_t>(j)];
        const Rational& lnext = profile.lambda[static_cast<std::size_t>(j) + 1];
        if (!(holder_conjugate(pp / lj) == lnext / lj)) return false;
    }
    return true;
}

Rational admissible_sum(Degree m, const PExponent& p) {
    const Rational mm(m.value());
    if (p.is_infinity()) return (mm + 1) / Rational(2);
    const Rational& pp = p.value();
    return (mm * pp + pp - 2 * mm) / (2 * pp);
}

Rational admissible_floor(Degree m, const PExponent& p) {
    if (p.is_infinity()) return Rational(1);
    const Rational mm(m.value());
    const Rational& pp = p.value();
    if (pp <= mm) throw std::domain_error("admissible_floor: requires p > m");
    return pp / (pp - mm);
}

bool check_admissible(const MultipleExponent& q, Degree m, const PExponent& p) {
    if (q.size() != m.value()) return false;
    if (!p.is_infinity() && p.value() <= Rational(m.value())) return false;

    const Rational lo = admissible_floor(m, p);
    Rational sum(0);
    for (const Rational& qi : q.q) {
        if (qi < lo || qi > Rational(2)) return false;
        sum += qi.reciprocal();
    }
    return sum == admissible_sum(m, p);
}

}  // namespace hlb
