#pragma once

#include "hlb/exponents.hpp"

#include <string>
#include <vector>

namespace hlb {

enum class ScalarField { Real, Complex };

const char* field_name(ScalarField f);
ScalarField parse_field(const std::string& s);

/// Identifies which published estimate produced a bound.
enum class FormulaTag { BhBaseline, Endpoint2m, Yu9, Yu10, Yhb, Thm999, Thm765 };

const char* formula_name(FormulaTag t);

struct Factor {
    double base;
    double exponent;
};

/// A constant upper bound together with its factor decomposition. The
/// product of base^exponent over factors reproduces value to within 1e-12
/// relative error, and value >= 1 always.
struct BoundReport {
    Degree m;
    PExponent p;
    ScalarField field;
    double value;
    FormulaTag formula;
    std::vector<Factor> factors;
};

namespace constants {

inline constexpr double euler_gamma = 0.5772156649015329;
inline constexpr double sqrt2 = 1.4142135623730951;
inline constexpr double two_over_sqrt_pi = 1.1283791670955126;

/// (2 - log 2 - gamma)/2 = 0.36481857726926091...
double real_bh_exponent();
/// (1 - gamma)/2 = 0.21139216754923357...
double complex_bh_exponent();

}  // namespace constants

/// Upper end 2m^3 - 4m^2 + 2m of the interpolated bound's p-range.
Rational p_range_upper(Degree m);

/// Threshold (2m^2-4m+2)/(m^2-m-1) on max q_i separating the two
/// mixed-exponent bound regimes.
Rational max_q_threshold(Degree m);

/// Exponent of sqrt(2) in the interpolated bound:
/// (p-2m-mp+6m^2-6m^3+2m^4)/(mp(m-2)), exact. Requires m >= 3 and
/// 2m <= p <= 2m^3-4m^2+2m.
Rational sqrt2_exponent(Degree m, const PExponent& p);

/// Sublinear baseline: 1.3*m^((2-log2-gamma)/2) real, m^((1-gamma)/2) complex.
BoundReport bound_bh_baseline(Degree m, ScalarField field);

/// Constant at the left endpoint p = 2m: (sqrt 2)^(m-1) real,
/// (2/sqrt(pi))^(m-1) complex.
BoundReport bound_endpoint_2m(Degree m, ScalarField field);

/// Product bound interpolating the endpoint constant and the displayed
/// baseline caps across [2m, infinity): requires finite p >= 2m.
BoundReport bound_yu9(Degree m, const PExponent& p, ScalarField field);

/// The p-independent baseline bound, valid for p > 2m^3-4m^2+2m.
BoundReport bound_yu10(Degree m, ScalarField field);

/// The interpolated bound for 2m <= p <= 2m^3-4m^2+2m, m >= 3; continuous
/// with bound_yu10 at the right endpoint and equal to the endpoint constant
/// at p = 2m.
BoundReport bound_yhb(Degree m, const PExponent& p, ScalarField field);

/// Mixed-exponent bound when max q_i < (2m^2-4m+2)/(m^2-m-1): the baseline,
/// independent of p and q. Requires p > 2m and an admissible q.
BoundReport bound_thm999(Degree m, const PExponent& p, const MultipleExponent& q, ScalarField field);

/// Mixed-exponent bound when max q_i >= (2m^2-4m+2)/(m^2-m-1):
/// endpoint^((m-1)theta_1) * baseline^(theta_2) with
/// theta_2 = (m+1)(2-max q)(m-1)^2 / ((m^2-m-2) max q) for m >= 3 and
/// (theta_1, theta_2) = (1, 0) for m = 2. Requires an admissible q.
BoundReport bound_thm765(Degree m, const PExponent& p, const MultipleExponent& q, ScalarField field);

/// Minimum over the applicable formulas for (m, p); ties break toward
/// Yhb, then Yu10, then Yu9.
BoundReport best_bound(Degree m, const PExponent& p, ScalarField field);

}  // namespace hlb
