#include "hlb/tensor.hpp"

#include "hlb/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hlb {

namespace {

constexpr std::size_t kEntryBudget = 10'000'000;  // desk scale
constexpr int kVertexBitBudget = 24;
constexpr int kMaxSweeps = 500;

std::size_t checked_size(int m, int n) {
    if (n < 1) throw std::domain_error("CoefficientTensor: n must be positive");
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > kEntryBudget / static_cast<std::size_t>(n))
            throw std::domain_error("CoefficientTensor: n^m exceeds the entry budget");
        total *= static_cast<std::size_t>(n);
    }
    return total;
}

void check_point(const CoefficientTensor& T, const PointTuple& x) {
    if (static_cast<int>(x.x.size()) != T.degree())
        throw std::invalid_argument("point tuple has wrong number of arguments");
    for (const auto& xi : x.x)
        if (static_cast<int>(xi.size()) != T.dim())
            throw std::invalid_argument("point tuple argument has wrong length");
}

// out[i] = sum_j in[i*n + j] * x[j]  (contracts the fastest axis)
void contract_last(std::vector<Complex>& buf, std::size_t& len, int n,
                   const std::vector<Complex>& x) {
    const std::size_t out_len = len / static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < out_len; ++i) {
        Complex acc(0.0, 0.0);
        const std::size_t base = i * static_cast<std::size_t>(n);
        for (int j = 0; j < n; ++j) acc += buf[base + static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        buf[i] = acc;
    }
    len = out_len;
}

// out[r] = sum_j in[j*out_len + r] * x[j]  (contracts the slowest axis)
void contract_first(std::vector<Complex>& buf, std::size_t& len, int n,
                    const std::vector<Complex>& x) {
    const std::size_t out_len = len / static_cast<std::size_t>(n);
    for (std::size_t r = 0; r < out_len; ++r) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            acc += buf[static_cast<std::size_t>(j) * out_len + r] * x[static_cast<std::size_t>(j)];
        buf[r] = acc;
    }
    len = out_len;
}

// Scaled so that large exponents cannot overflow: factors out the largest
// modulus before raising to p.
double lp_norm(std::span<const Complex> v, const PExponent& p) {
    double peak = 0.0;
    for (const Complex& c : v) peak = std::max(peak, std::abs(c));
    if (p.is_infinity() || peak == 0.0) return peak;
    const double pd = p.to_double();
    double sum = 0.0;
    for (const Complex& c : v) sum += std::pow(std::abs(c) / peak, pd);
    return peak * std::pow(sum, 1.0 / pd);
}

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }  // sign(0) := 1

}  // namespace

const char* distribution_name(Distribution d) {
    return d == Distribution::Rademacher ? "rademacher" : "gaussian";
}

Distribution parse_distribution(const std::string& s) {
    if (s == "rademacher") return Distribution::Rademacher;
    if (s == "gaussian") return Distribution::Gaussian;
    throw std::invalid_argument("unknown distribution '" + s + "' (expected rademacher|gaussian)");
}

const char* norm_method_name(NormMethod m) {
    return m == NormMethod::Alternating ? "alternating" : "vertex_exact";
}

CoefficientTensor::CoefficientTensor(Degree m, int n, ScalarField field)
    : m_(m.value()), n_(n), field_(field), entries_(checked_size(m.value(), n), Complex(0.0, 0.0)) {}

Complex& CoefficientTensor::at(std::span<const int> index) {
    return const_cast<Complex&>(std::as_const(*this).at(index));
}

const Complex& CoefficientTensor::at(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != m_)
        throw std::invalid_argument("CoefficientTensor::at: wrong index rank");
    std::size_t flat = 0;
    for (int i = 0; i < m_; ++i) {
        const int j = index[static_cast<std::size_t>(i)];
        if (j < 0 || j >= n_) throw std::out_of_range("CoefficientTensor::at: index out of range");
        flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    return entries_[flat];
}

Complex evaluate(const CoefficientTensor& T, const PointTuple& x) {
    check_point(T, x);
    std::vector<Complex> buf = T.entries();
    std::size_t len = buf.size();
    for (int slot = T.degree() - 1; slot >= 0; --slot)
        contract_last(buf, len, T.dim(), x.x[static_cast<std::size_t>(slot)]);
    return buf[0];
}

std::vector<Complex> slot_functional(const CoefficientTensor& T, const PointTuple& x, int slot) {
    check_point(T, x);
    if (slot < 0 || slot >= T.degree()) throw std::invalid_argument("slot_functional: bad slot");

    std::vector<Complex> buf = T.entries();
    std::size_t len = buf.size();
    for (int k = T.degree() - 1; k > slot; --k)
        contract_last(buf, len, T.dim(), x.x[static_cast<std::size_t>(k)]);
    for (int k = 0; k < slot; ++k)
        contract_first(buf, len, T.dim(), x.x[static_cast<std::size_t>(k)]);
    buf.resize(len);
    return buf;
}

double mixed_norm(const CoefficientTensor& T, const MultipleExponent& q) {
    std::vector<double> qd;
    qd.reserve(q.q.size());
    for (const Rational& r : q.q) qd.push_back(r.to_double());
    return mixed_norm(T, qd);
}

double mixed_norm(const CoefficientTensor& T, const std::vector<double>& q) {
    if (static_cast<int>(q.size()) != T.degree())
        throw std::invalid_argument("mixed_norm: exponent count must equal tensor degree");
    for (double qi : q)
        if (!(qi >= 1.0)) throw std::domain_error("mixed_norm: exponents must be >= 1");

    const int n = T.dim();
    std::vector<double> mags(T.size());
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(T.entries()[i]);

    // Reduce one axis at a time, innermost first.
    std::size_t len = mags.size();
    for (int axis = T.degree() - 1; axis >= 1; --axis) {
        const double e = q[static_cast<std::size_t>(axis)];
        const std::size_t out_len = len / static_cast<std::size_t>(n);
        for (std::size_t i = 0; i < out_len; ++i) {
            double sum = 0.0;
            const std::size_t base = i * static_cast<std::size_t>(n);
            for (int j = 0; j < n; ++j) sum += std::pow(mags[base + static_cast<std::size_t>(j)], e);
            mags[i] = std::pow(sum, 1.0 / e);
        }
        len = out_len;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < len; ++i) sum += std::pow(mags[i], q[0]);
    return std::pow(sum, 1.0 / q[0]);
}

std::vector<double> dual_argmax(std::span<const double> a, const PExponent& p) {
    std::vector<Complex> ac(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) ac[i] = Complex(a[i], 0.0);
    const std::vector<Complex> xc = dual_argmax(std::span<const Complex>(ac), p);
    std::vector<double> x(xc.size());
    for (std::size_t i = 0; i < xc.size(); ++i) x[i] = xc[i].real();
    return x;
}

std::vector<Complex> dual_argmax(std::span<const Complex> a, const PExponent& p) {
    bool nonzero = false;
    for (const Complex& c : a)
        if (c != Complex(0.0, 0.0)) { nonzero = true; break; }
    if (!nonzero) throw std::invalid_argument("dual_argmax: zero vector");

    std::vector<Complex> x(a.size());
    if (p.is_infinity()) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            const double mag = std::abs(a[j]);
            // phase alignment; ties at zero resolve to +1
            x[j] = (mag == 0.0) ? Complex(1.0, 0.0) : std::conj(a[j]) / mag;
        }
        return x;
    }

    const double pd = p.to_double();
    if (!(pd > 1.0)) throw std::domain_error("dual_argmax: requires p > 1 or p = inf");
    const double pstar = pd / (pd - 1.0);

    double peak = 0.0;
    for (const Complex& c : a) peak = std::max(peak, std::abs(c));
    double nsum = 0.0;
    for (const Complex& c : a) nsum += std::pow(std::abs(c) / peak, pstar);
    const double norm = peak * std::pow(nsum, 1.0 / pstar);

    for (std::size_t j = 0; j < a.size(); ++j) {
        const double mag = std::abs(a[j]);
        const double t = std::pow(mag / norm, pstar - 1.0);
        x[j] = (mag == 0.0) ? Complex(0.0, 0.0) : std::conj(a[j]) / mag * t;
    }
    return x;
}

namespace {

// The value attained by dual_argmax: ||a||_{p*} (l_1 at p = inf).
double dual_value(std::span<const Complex> a, const PExponent& p) {
    if (p.is_infinity()) {
        double sum = 0.0;
        for (const Complex& c : a) sum += std::abs(c);
        return sum;
    }
    const double pd = p.to_double();
    const double pstar = pd / (pd - 1.0);
    double peak = 0.0;
    for (const Complex& c : a) peak = std::max(peak, std::abs(c));
    if (peak == 0.0) return 0.0;
    double sum = 0.0;
    for (const Complex& c : a) sum += std::pow(std::abs(c) / peak, pstar);
    return peak * std::pow(sum, 1.0 / pstar);
}

PointTuple random_start(const CoefficientTensor& T, const PExponent& p, SplitMix64& rng) {
    PointTuple x;
    x.x.resize(static_cast<std::size_t>(T.degree()));
    for (auto& xi : x.x) {
        xi.resize(static_cast<std::size_t>(T.dim()));
        for (auto& c : xi) {
            const double re = rng.gaussian();
            const double im = (T.field() == ScalarField::Complex) ? rng.gaussian() : 0.0;
            c = Complex(re, im);
        }
        const double norm = lp_norm(xi, p);
        if (norm == 0.0) {
            xi.assign(xi.size(), Complex(0.0, 0.0));
            xi[0] = Complex(1.0, 0.0);
        } else {
            for (auto& c : xi) c /= norm;
        }
    }
    return x;
}

}  // namespace

NormEstimate alternating_norm(const CoefficientTensor& T, const PExponent& p, int restarts,
                              std::uint64_t seed, double tol) {
    if (restarts < 1) throw std::domain_error("alternating_norm: restarts must be >= 1");

    NormEstimate best;
    best.method = NormMethod::Alternating;
    best.restarts = restarts;
    best.ascent.reserve(static_cast<std::size_t>(restarts));

    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
        PointTuple x = random_start(T, p, rng);

        std::vector<double> history;
        double value = 0.0;
        bool converged = false;
        bool degenerate = false;

        for (int sweep = 0; sweep < kMaxSweeps && !converged && !degenerate; ++sweep) {
            double sweep_value = 0.0;
            for (int slot = 0; slot < T.degree(); ++slot) {
                const std::vector<Complex> a = slot_functional(T, x, slot);
                bool all_zero = true;
                for (const Complex& c : a)
                    if (c != Complex(0.0, 0.0)) { all_zero = false; break; }
                if (all_zero) {
                    // The form vanishes on this slice (e.g. the zero tensor).
                    sweep_value = std::abs(evaluate(T, x));
                    degenerate = true;
                    break;
                }
                x.x[static_cast<std::size_t>(slot)] = dual_argmax(std::span<const Complex>(a), p);
                sweep_value = dual_value(std::span<const Complex>(a), p);
            }
            history.push_back(sweep_value);
            const double gain = sweep_value - value;
            if (degenerate || gain <= tol * std::max(1.0, std::abs(sweep_value))) converged = true;
            value = sweep_value;
        }

        if (best.ascent.empty() || value > best.value) {
            best.value = value;
            best.witness = x;
            best.converged = converged;
        }
        best.ascent.push_back(std::move(history));
    }

    // Pin the reported value to the witness so the two always agree.
    best.value = std::abs(evaluate(T, best.witness));
    return best;
}

bool vertex_norm_applicable(Degree m, int n, ScalarField field) {
    return field == ScalarField::Real &&
           static_cast<long long>(n) * (m.value() - 1) <= kVertexBitBudget;
}

bool vertex_norm_applicable(const CoefficientTensor& T) {
    return vertex_norm_applicable(Degree(T.degree()), T.dim(), T.field());
}

NormEstimate vertex_norm_linf(const CoefficientTensor& T) {
    if (T.field() != ScalarField::Real)
        throw std::domain_error("vertex_norm_linf: requires a real tensor");
    const int n = T.dim();
    const int m = T.degree();
    const long long bits = static_cast<long long>(n) * (m - 1);
    if (bits > kVertexBitBudget)
        throw std::domain_error("vertex_norm_linf: n(m-1) exceeds the enumeration budget of " +
                                std::to_string(kVertexBitBudget) + " bits");

    PointTuple x;
    x.x.assign(static_cast<std::size_t>(m),
               std::vector<Complex>(static_cast<std::size_t>(n), Complex(1.0, 0.0)));

    NormEstimate best;
    best.method = NormMethod::VertexExact;
    best.converged = true;
    best.value = -1.0;

    const std::uint64_t total = 1ull << bits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int slot = 0; slot < m - 1; ++slot)
            for (int j = 0; j < n; ++j) {
                const int bit = slot * n + j;
                x.x[static_cast<std::size_t>(slot)][static_cast<std::size_t>(j)] =
                    Complex(((mask >> bit) & 1ull) ? -1.0 : 1.0, 0.0);
            }

        const std::vector<Complex> a = slot_functional(T, x, m - 1);
        double value = 0.0;
        for (const Complex& c : a) value += std::abs(c.real());

        if (value > best.value) {
            for (int j = 0; j < n; ++j)
                x.x[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)] =
                    Complex(sign_of(a[static_cast<std::size_t>(j)].real()), 0.0);
            best.value = value;
            best.witness = x;
        }
    }

    best.value = std::abs(evaluate(T, best.witness).real());
    return best;
}

CoefficientTensor random_form(Degree m, int n, Distribution dist, ScalarField field,
                              std::uint64_t seed) {
    CoefficientTensor T(m, n, field);
    T.set_provenance(dist, seed);
    SplitMix64 rng(seed);
    const double inv_sqrt2 = 0.7071067811865476;
    for (Complex& c : T.entries()) {
        if (field == ScalarField::Real) {
            c = Complex(dist == Distribution::Rademacher ? static_cast<double>(rng.sign())
                                                         : rng.gaussian(),
                        0.0);
        } else {
            double re, im;
            if (dist == Distribution::Rademacher) {
                re = static_cast<double>(rng.sign());
                im = static_cast<double>(rng.sign());
            } else {
                re = rng.gaussian();
                im = rng.gaussian();
            }
            c = Complex(re * inv_sqrt2, im * inv_sqrt2);
        }
    }
    return T;
}

}  // namespace hlb
