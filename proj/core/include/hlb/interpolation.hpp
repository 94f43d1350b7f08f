#pragma once

#include "hlb/exponents.hpp"

#include <stdexcept>
#include <vector>

namespace hlb {

/// A family of exponent vectors of common length, used as interpolation
/// endpoints.
struct ExponentFamily {
    std::vector<MultipleExponent> members;

    int count() const { return static_cast<int>(members.size()); }
    int length() const;
};

/// Interpolation weights theta_1..theta_k. Validity means every entry is
/// nonnegative and the entries sum to one exactly; solve_weights may return
/// vectors outside that set, which callers check via valid().
struct WeightVector {
    std::vector<Rational> theta;

    bool sums_to_one() const;
    bool in_unit_interval() const;
    bool valid() const { return sums_to_one() && in_unit_interval(); }
};

class SingularFamilyError : public std::runtime_error {
public:
    SingularFamilyError() : std::runtime_error("solve_weights: no unique solution (singular family)") {}
};

class TargetNotInSpanError : public std::runtime_error {
public:
    TargetNotInSpanError() : std::runtime_error("solve_weights: target not in span of family") {}
};

/// The m canonical endpoints for degree m >= 3: for i = 1..m-1, E_i has
/// every entry (2m-2)/m except a single 2 in position m-i+1, and
/// E_m = (1, 2, ..., 2).
ExponentFamily canonical_family(Degree m);

/// Coordinatewise convex combination of reciprocals:
/// 1/q_j = sum_k theta_k / E_{k,j}. Weights must be valid.
MultipleExponent interpolate(const ExponentFamily& family, const WeightVector& weights);

/// theta_1 = ... = theta_{m-1} = (2m-p+mp-2m^2)/(m^2 p-2mp) and
/// theta_m = 1-(m-1)theta_1. Requires m >= 3 and 2m <= p <= 2m^3-4m^2+2m;
/// outside that range the weights would leave [0,1].
WeightVector profile_weights(Degree m, const PExponent& p);

/// Inverts the interpolation rule: finds theta with
/// interpolate(family, theta) == target, by exact Gaussian elimination on
/// the reciprocal system. The result may lie outside [0,1]^k.
WeightVector solve_weights(const MultipleExponent& target, const ExponentFamily& family);

}  // namespace hlb
