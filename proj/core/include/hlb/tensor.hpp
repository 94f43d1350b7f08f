#pragma once

#include "hlb/bounds.hpp"
#include "hlb/exponents.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hlb {

using Complex = std::complex<double>;

enum class Distribution { Rademacher, Gaussian };

const char* distribution_name(Distribution d);
Distribution parse_distribution(const std::string& s);

/// Dense m-way coefficient array over {1..n}^m, stored row-major with the
/// first index slowest. Real-field tensors keep every imaginary part
/// exactly zero. Capped at 10^7 entries.
class CoefficientTensor {
public:
    CoefficientTensor(Degree m, int n, ScalarField field);

    int degree() const { return m_; }
    int dim() const { return n_; }
    ScalarField field() const { return field_; }
    std::size_t size() const { return entries_.size(); }

    Complex& at(std::span<const int> index);
    const Complex& at(std::span<const int> index) const;

    std::vector<Complex>& entries() { return entries_; }
    const std::vector<Complex>& entries() const { return entries_; }

    /// Provenance recorded in the file header.
    Distribution distribution() const { return distribution_; }
    std::uint64_t seed() const { return seed_; }
    void set_provenance(Distribution d, std::uint64_t seed) { distribution_ = d; seed_ = seed; }

private:
    int m_;
    int n_;
    ScalarField field_;
    Distribution distribution_ = Distribution::Rademacher;
    std::uint64_t seed_ = 0;
    std::vector<Complex> entries_;
};

/// One argument tuple (x_1,...,x_m), each a vector of length n.
struct PointTuple {
    std::vector<std::vector<Complex>> x;
};

enum class NormMethod { Alternating, VertexExact };

const char* norm_method_name(NormMethod m);

/// Estimated (or exact) operator norm with the witness that attains it.
/// Alternating estimates are always lower bounds on the true norm.
struct NormEstimate {
    double value = 0.0;
    PointTuple witness;
    int restarts = 0;
    bool converged = false;
    NormMethod method = NormMethod::Alternating;
    /// Per-start sweep values (alternating only); each is nondecreasing.
    std::vector<std::vector<double>> ascent;
};

/// T(x_1,...,x_m) by successive contraction of the last argument;
/// about 2 n^m multiply-adds in total.
Complex evaluate(const CoefficientTensor& T, const PointTuple& x);

/// Coefficients of the linear functional T(x_1,..,e_j at slot,..,x_m).
std::vector<Complex> slot_functional(const CoefficientTensor& T, const PointTuple& x, int slot);

/// Nested mixed norm: innermost index j_m with exponent q_m, outermost j_1
/// with q_1. Uniform q collapses to the flat l_q norm of all entries.
/// Requires every q_i >= 1.
double mixed_norm(const CoefficientTensor& T, const MultipleExponent& q);
double mixed_norm(const CoefficientTensor& T, const std::vector<double>& q);

/// Exact maximizer of |<a, x>| over the l_p unit ball. Real case:
/// x_j = sign(a_j)|a_j|^{p*-1}/||a||_{p*}^{p*-1}; the attained value is
/// ||a||_{p*}. sign(0) := 1. Complex case aligns phases first.
std::vector<double> dual_argmax(std::span<const double> a, const PExponent& p);
std::vector<Complex> dual_argmax(std::span<const Complex> a, const PExponent& p);

/// Multi-start alternating ascent estimate of the operator norm on the
/// l_p ball. Each start runs until the relative gain drops below tol or
/// 500 sweeps. The result is a lower bound on the true norm; converged is
/// false when any start hit the sweep cap.
NormEstimate alternating_norm(const CoefficientTensor& T, const PExponent& p, int restarts,
                              std::uint64_t seed, double tol = 1e-10);

/// Exact operator norm on the real l_inf ball via sign-vertex enumeration
/// of the first m-1 arguments (the last collapses to an l_1 norm).
/// Requires a real tensor and n(m-1) <= 24.
NormEstimate vertex_norm_linf(const CoefficientTensor& T);

/// Whether vertex_norm_linf accepts this shape/field.
bool vertex_norm_applicable(Degree m, int n, ScalarField field);
bool vertex_norm_applicable(const CoefficientTensor& T);

/// i.i.d. random tensor; deterministic for a fixed seed. Complex
/// Rademacher entries are (s1 + i s2)/sqrt(2) with independent signs;
/// complex Gaussian entries are (g1 + i g2)/sqrt(2). Unit variance either way.
CoefficientTensor random_form(Degree m, int n, Distribution dist, ScalarField field,
                              std::uint64_t seed);

/// Text format: header "m n field distribution seed", then n^m entries in
/// row-major order (first index slowest), one per line; complex entries as
/// "a+bi". Round-trips doubles exactly.
void save_tensor(std::ostream& out, const CoefficientTensor& T);
CoefficientTensor load_tensor(std::istream& in);
void save_tensor_file(const std::string& path, const CoefficientTensor& T);
CoefficientTensor load_tensor_file(const std::string& path);

}  // namespace hlb
