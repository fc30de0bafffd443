#include "iterfix/poly.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace iterfix {

namespace {

bool strip_candidate(const Complex& c) {
    return std::abs(c) <= kLeadingZeroThreshold;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view s) {
    if (s.empty()) throw ParseError("empty number");
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) throw ParseError("bad number: '" + buf + "'");
    return v;
}

// Position of the sign separating real and imaginary parts, or npos.
// Skips the leading sign and any sign directly after an exponent marker.
std::size_t split_sign(std::string_view s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != '+' && s[i] != '-') continue;
        char prev = s[i - 1];
        if (prev == 'e' || prev == 'E') continue;
        return i;
    }
    return std::string_view::npos;
}

} // namespace

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty complex literal");

    bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) return Complex{parse_double(s), 0.0};

    std::string_view body = s.substr(0, s.size() - 1);
    std::size_t pos = split_sign(body);
    if (pos == std::string_view::npos) {
        // pure imaginary: "i", "-i", "2.5i"
        std::string_view im = trim(body);
        if (im.empty() || im == "+") return Complex{0.0, 1.0};
        if (im == "-") return Complex{0.0, -1.0};
        return Complex{0.0, parse_double(im)};
    }

    double re = parse_double(trim(body.substr(0, pos)));
    std::string_view im_part = trim(body.substr(pos)); // keeps the sign
    double im;
    if (im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        im = parse_double(im_part);
    }
    return Complex{re, im};
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_complex(const Complex& z) {
    double re = z.real();
    double im = z.imag();
    if (im == 0.0 && !std::signbit(im)) return format_double(re);
    if (re == 0.0 && !std::signbit(re)) return format_double(im) + "i";
    std::string out = format_double(re);
    if (!std::signbit(im) && !std::isnan(im)) out += '+';
    out += format_double(im);
    out += 'i';
    return out;
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{0.0, 0.0});
    while (coeffs_.size() > 1 && strip_candidate(coeffs_.back())) coeffs_.pop_back();
    if (coeffs_.size() == 1 && strip_candidate(coeffs_[0])) coeffs_[0] = Complex{0.0, 0.0};
}

Polynomial Polynomial::monomial(int degree, Complex lead) {
    if (degree < 0) throw Error("monomial: negative degree");
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    c.back() = lead;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::parse(std::string_view text) {
    std::vector<Complex> c;
    std::size_t start = 0;
    std::string_view s = text;
    if (trim(s).empty()) throw ParseError("empty coefficient list");
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view tok = (comma == std::string_view::npos)
                                   ? s.substr(start)
                                   : s.substr(start, comma - start);
        c.push_back(parse_complex(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k != 0) out += ',';
        out += format_complex(coeffs_[k]);
    }
    return out;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        acc = acc * z + coeffs_[k];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial{};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& inner, int max_degree) const {
    if (degree() >= 1 && inner.degree() >= 1) {
        long long prod = static_cast<long long>(degree()) * inner.degree();
        if (prod > max_degree) {
            throw DegreeOverflow("compose: degree " + std::to_string(prod) +
                                 " exceeds cap " + std::to_string(max_degree));
        }
    }
    // Horner in polynomial arithmetic: acc = acc*inner + a_k.
    Polynomial acc{coeffs_.back()};
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        acc = acc * inner + Polynomial{coeffs_[k]};
    }
    return acc;
}

Polynomial Polynomial::iterate(int n, int max_degree) const {
    if (n < 1) throw Error("iterate: n must be >= 1");
    if (degree() < 1) throw Error("iterate: degree must be >= 1");
    Polynomial acc = *this;
    for (int k = 1; k < n; ++k) {
        acc = acc.compose(*this, max_degree);
    }
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Complex> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Complex> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] -= rhs.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial{};
    std::vector<Complex> c(coeffs_.size() + rhs.coeffs_.size() - 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(Complex scalar) const {
    std::vector<Complex> c = coeffs_;
    for (auto& x : c) x *= scalar;
    return Polynomial(std::move(c));
}

Polynomial affine_conjugate(const Polynomial& p, const AffineMap& L) {
    if (p.degree() < 1) throw Error("affine_conjugate: degree must be >= 1");
    if (L.scale == Complex{0.0, 0.0}) throw Error("affine_conjugate: singular map");
    Polynomial line({L.shift, L.scale}); // L as a degree-1 polynomial
    Polynomial inner = p.compose(line);
    // Apply L^{-1} to the output side: (q - shift) / scale.
    std::vector<Complex> c = inner.coeffs();
    c[0] -= L.shift;
    for (auto& x : c) x /= L.scale;
    return Polynomial(std::move(c));
}

OrbitResult orbit(const Polynomial& p, Complex z0, int steps) {
    if (steps < 0) throw Error("orbit: negative step count");
    OrbitResult out;
    out.points.reserve(static_cast<std::size_t>(steps) + 1);
    out.points.push_back(z0);
    Complex z = z0;
    for (int k = 0; k < steps; ++k) {
        z = p(z);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) out.finite = false;
        out.points.push_back(z);
    }
    return out;
}

} // namespace iterfix
