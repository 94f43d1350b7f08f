#pragma once

#include "hlb/rational.hpp"

#include <string>
#include <vector>

namespace hlb {

/// Multilinearity degree, m >= 2.
class Degree {
public:
    explicit Degree(int m);
    int value() const { return m_; }

    friend bool operator==(Degree a, Degree b) { return a.m_ == b.m_; }

private:
    int m_;
};

/// Summability exponent p: an exact rational, or the distinguished value
/// infinity. Infinity is a structural case of its own, never a large number.
class PExponent {
public:
    PExponent(Rational p) : finite_(std::move(p)), infinite_(false) {}
    PExponent(long long p) : finite_(p), infinite_(false) {}
    static PExponent infinity() { return PExponent(tag_infinity{}); }

    bool is_infinity() const { return infinite_; }
    const Rational& value() const;
    double to_double() const;
    std::string str() const;

    friend bool operator==(const PExponent& a, const PExponent& b);

private:
    struct tag_infinity {};
    explicit PExponent(tag_infinity) : finite_(0), infinite_(true) {}
    Rational finite_;
    bool infinite_;
};

/// The exponents s and lambda_0..lambda_m attached to a pair (m, p):
///   s        = 2mp/(mp+p-2m)            (2m/(m+1) at p = infinity)
///   lambda_0 = 2s/(ms+s-2m+2)
///   lambda_j = lambda_0*p/(p-lambda_0*j),  with lambda_m = s exactly.
struct ExponentProfile {
    Degree m;
    PExponent p;
    Rational s;
    std::vector<Rational> lambda;  // indices 0..m
};

/// A nested-norm exponent vector (q_1,...,q_m).
struct MultipleExponent {
    std::vector<Rational> q;

    int size() const { return static_cast<int>(q.size()); }
    const Rational& max() const;

    static MultipleExponent uniform(Degree m, Rational value);
    std::string str() const;

    friend bool operator==(const MultipleExponent& a, const MultipleExponent& b) { return a.q == b.q; }
};

/// Holder conjugate r/(r-1); requires r > 1.
Rational holder_conjugate(const Rational& r);

/// Smallest summability exponent 2mp/(mp+p-2m); 2m/(m+1) at p = infinity.
/// Rejects finite p < 2m.
Rational critical_exponent(Degree m, const PExponent& p);

/// Full exponent profile for (m, p); all identities are checked exactly
/// during construction and a failure throws std::logic_error.
ExponentProfile lambda_profile(Degree m, const PExponent& p);

/// True iff (p/lambda_j)* == lambda_{j+1}/lambda_j exactly for all
/// j = 0..m-1. Requires finite p. A false return signals an arithmetic bug.
bool conjugate_chain_check(const ExponentProfile& profile);

/// Sum of reciprocals prescribed for admissible exponent vectors:
/// (mp+p-2m)/(2p), which is (m+1)/2 at p = infinity.
Rational admissible_sum(Degree m, const PExponent& p);

/// Lower endpoint p/(p-m) of the admissible box; 1 at p = infinity.
Rational admissible_floor(Degree m, const PExponent& p);

/// True iff sum(1/q_i) == (mp+p-2m)/(2p) exactly and every q_i lies in
/// [p/(p-m), 2].
bool check_admissible(const MultipleExponent& q, Degree m, const PExponent& p);

}  // namespace hlb
