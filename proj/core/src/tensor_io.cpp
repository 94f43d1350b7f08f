#include "hlb/tensor.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hlb {

namespace {

std::string exact_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string entry_text(Complex c, ScalarField field) {
    if (field == ScalarField::Real) return exact_decimal(c.real());
    std::string s = exact_decimal(c.real());
    if (!std::signbit(c.imag())) s += "+";
    s += exact_decimal(c.imag());
    s += "i";
    return s;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::runtime_error("tensor file: bad scalar '" + s + "'");
    return v;
}

Complex parse_entry(const std::string& token, ScalarField field) {
    if (field == ScalarField::Real) return Complex(parse_double(token), 0.0);
    if (token.empty() || token.back() != 'i')
        throw std::runtime_error("tensor file: complex entry must end in 'i': '" + token + "'");
    const std::string body = token.substr(0, token.size() - 1);
    // Split at the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw std::runtime_error("tensor file: cannot split complex entry '" + token + "'");
    return Complex(parse_double(body.substr(0, split)), parse_double(body.substr(split)));
}

}  // namespace

void save_tensor(std::ostream& out, const CoefficientTensor& T) {
    out << T.degree() << ' ' << T.dim() << ' ' << field_name(T.field()) << ' '
        << distribution_name(T.distribution()) << ' ' << T.seed() << '\n';
    for (const Complex& c : T.entries()) out << entry_text(c, T.field()) << '\n';
}

CoefficientTensor load_tensor(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("tensor file: missing header");
    std::istringstream hs(header);
    int m = 0, n = 0;
    std::string field_s, dist_s;
    std::uint64_t seed = 0;
    if (!(hs >> m >> n >> field_s >> dist_s >> seed))
        throw std::runtime_error("tensor file: bad header '" + header + "'");

    const ScalarField field = parse_field(field_s);
    CoefficientTensor T(Degree(m), n, field);
    T.set_provenance(parse_distribution(dist_s), seed);

    std::string token;
    for (Complex& c : T.entries()) {
        if (!(in >> token)) throw std::runtime_error("tensor file: truncated entry list");
        c = parse_entry(token, field);
    }
    return T;
}

void save_tensor_file(const std::string& path, const CoefficientTensor& T) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    save_tensor(out, T);
}

CoefficientTensor load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return load_tensor(in);
}

}  // namespace hlb
