#include "hlb/interpolation.hpp"

#include "hlb/bounds.hpp"

#include <stdexcept>
#include <utility>

namespace hlb {

int ExponentFamily::length() const {
    if (members.empty()) throw std::logic_error("ExponentFamily: empty");
    return members.front().size();
}

bool WeightVector::sums_to_one() const {
    Rational sum(0);
    for (const Rational& t : theta) sum += t;
    return sum == Rational(1);
}

bool WeightVector::in_unit_interval() const {
    for (const Rational& t : theta)
        if (t.is_negative() || t > Rational(1)) return false;
    return true;
}

ExponentFamily canonical_family(Degree m) {
    const int mv = m.value();
    if (mv < 3) throw std::domain_error("canonical_family: requires m >= 3");

    const Rational filler(2 * mv - 2, mv);
    ExponentFamily family;
    family.members.reserve(static_cast<std::size_t>(mv));
    for (int i = 1; i <= mv - 1; ++i) {
        std::vector<Rational> q(static_cast<std::size_t>(mv), filler);
        q[static_cast<std::size_t>(mv - i)] = Rational(2);  // position m-i+1, 1-based
        family.members.push_back(MultipleExponent{std::move(q)});
    }
    std::vector<Rational> last(static_cast<std::size_t>(mv), Rational(2));
    last[0] = Rational(1);
    family.members.push_back(MultipleExponent{std::move(last)});
    return family;
}

MultipleExponent interpolate(const ExponentFamily& family, const WeightVector& weights) {
    if (family.members.empty()) throw std::invalid_argument("interpolate: empty family");
    const int len = family.length();
    for (const MultipleExponent& e : family.members)
        if (e.size() != len) throw std::invalid_argument("interpolate: family members differ in length");
    if (static_cast<int>(weights.theta.size()) != family.count())
        throw std::invalid_argument("interpolate: weight count does not match family size");
    if (!weights.valid())
        throw std::invalid_argument("interpolate: weights must be nonnegative and sum to one");

    std::vector<Rational> q;
    q.reserve(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) {
        Rational inv(0);
        for (int k = 0; k < family.count(); ++k)
            inv += weights.theta[static_cast<std::size_t>(k)] /
                   family.members[static_cast<std::size_t>(k)].q[static_cast<std::size_t>(j)];
        q.push_back(inv.reciprocal());
    }
    return MultipleExponent{std::move(q)};
}

WeightVector profile_weights(Degree m, const PExponent& p) {
    const int mv = m.value();
    if (mv < 3) throw std::domain_error("profile_weights: requires m >= 3");
    if (p.is_infinity())
        throw std::domain_error("profile_weights: requires finite p in [2m, 2m^3-4m^2+2m]");
    const Rational& pp = p.value();
    const Rational mm(mv);
    if (pp < 2 * mm || pp > p_range_upper(m))
        throw std::domain_error("profile_weights: p outside [2m, 2m^3-4m^2+2m] (got " + pp.str() + ")");

    const Rational theta1 = (2 * mm - pp + mm * pp - 2 * mm * mm) / (mm * mm * pp - 2 * mm * pp);
    const Rational theta_m = Rational(1) - (mm - 1) * theta1;

    std::vector<Rational> theta(static_cast<std::size_t>(mv), theta1);
    theta.back() = theta_m;
    WeightVector w{std::move(theta)};
    if (!w.valid()) throw std::logic_error("profile_weights: weights left [0,1]");
    return w;
}

WeightVector solve_weights(const MultipleExponent& target, const ExponentFamily& family) {
    if (family.members.empty()) throw std::invalid_argument("solve_weights: empty family");
    const int rows = family.length();
    const int cols = family.count();
    if (target.size() != rows)
        throw std::invalid_argument("solve_weights: target length does not match family");

    // Augmented system in the reciprocals: A[j][k] = 1/E_{k,j}, b[j] = 1/t_j.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows));
    for (int j = 0; j < rows; ++j) {
        auto& row = a[static_cast<std::size_t>(j)];
        row.reserve(static_cast<std::size_t>(cols) + 1);
        for (int k = 0; k < cols; ++k)
            row.push_back(family.members[static_cast<std::size_t>(k)].q[static_cast<std::size_t>(j)].reciprocal());
        row.push_back(target.q[static_cast<std::size_t>(j)].reciprocal());
    }

    // Exact elimination. Pivot choice is deterministic: the nonzero entry of
    // smallest combined numerator/denominator bit length wins, which keeps
    // intermediate values small.
    std::vector<int> pivot_row(static_cast<std::size_t>(cols), -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int best = -1;
        std::size_t best_bits = 0;
        for (int r = rank; r < rows; ++r) {
            const Rational& cand = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (cand.is_zero()) continue;
            const std::size_t bits = cand.bit_size();
            if (best < 0 || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best < 0) continue;  // free column
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(best)]);

        const Rational piv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int c = col; c <= cols; ++c)
            a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int c = col; c <= cols; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        }
        pivot_row[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }

    // Inconsistent row (0 ... 0 | nonzero) means the target is outside the span.
    for (int r = rank; r < rows; ++r)
        if (!a[static_cast<std::size_t>(r)].back().is_zero()) throw TargetNotInSpanError();

    // A free column means multiple solutions.
    for (int col = 0; col < cols; ++col)
        if (pivot_row[static_cast<std::size_t>(col)] < 0) throw SingularFamilyError();

    std::vector<Rational> theta(static_cast<std::size_t>(cols));
    for (int col = 0; col < cols; ++col)
        theta[static_cast<std::size_t>(col)] =
            a[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(col)])].back();
    return WeightVector{std::move(theta)};
}

}  // namespace hlb
