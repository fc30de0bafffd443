#ifndef ITERFIX_POLY_HPP
#define ITERFIX_POLY_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "iterfix/errors.hpp"

namespace iterfix {

using Complex = std::complex<double>;

/// Degree cap for compositions and iterates; guards the d^n blowup.
inline constexpr int kDefaultMaxDegree = 4096;

/// Trailing coefficients at or below this modulus are stripped on
/// construction, so the stored leading coefficient is always meaningful.
inline constexpr double kLeadingZeroThreshold = 1e-300;

/// Parse one complex number written as `a`, `a+bi`, `a-bi`, `bi` or `i`,
/// with ordinary float syntax (including exponents) for a and b.
Complex parse_complex(std::string_view text);

/// Shortest text form of x that parses back to the identical bits.
std::string format_double(double x);

/// Canonical text form of z; round-trips bit-exactly through parse_complex.
std::string format_complex(const Complex& z);

/// Dense univariate polynomial over complex doubles, constant term first.
///
/// The zero polynomial is stored as the single coefficient 0 and has
/// degree 0, like any other constant.
class Polynomial {
public:
    Polynomial() : coeffs_{Complex{0.0, 0.0}} {}

    explicit Polynomial(std::vector<Complex> coeffs);

    Polynomial(std::initializer_list<Complex> coeffs)
        : Polynomial(std::vector<Complex>(coeffs)) {}

    /// lead * z^degree
    static Polynomial monomial(int degree, Complex lead = Complex{1.0, 0.0});

    /// Parse the comma-separated constant-first coefficient list,
    /// e.g. "-1,0,1" is z^2 - 1.
    static Polynomial parse(std::string_view text);

    /// Comma-separated constant-first form; parse(str()) reproduces the
    /// coefficients bit for bit.
    std::string str() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k, zero beyond the degree.
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size()))
                   ? coeffs_[static_cast<std::size_t>(k)]
                   : Complex{0.0, 0.0};
    }

    Complex leading() const { return coeffs_.back(); }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0, 0.0}; }

    /// Horner evaluation.  Overflow propagates as a non-finite value.
    Complex operator()(Complex z) const;

    Polynomial derivative() const;

    /// Coefficients of this(inner(z)).  The degree multiplies when both
    /// degrees are >= 1; throws DegreeOverflow past max_degree.
    Polynomial compose(const Polynomial& inner, int max_degree = kDefaultMaxDegree) const;

    /// n-fold self-composition, n >= 1.
    Polynomial iterate(int n, int max_degree = kDefaultMaxDegree) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(Complex scalar) const;

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    std::vector<Complex> coeffs_; // never empty; no stored trailing ~zeros
};

/// z -> scale*z + shift with scale != 0.
struct AffineMap {
    Complex scale{1.0, 0.0};
    Complex shift{0.0, 0.0};

    Complex operator()(Complex z) const { return scale * z + shift; }
    AffineMap inverse() const { return {Complex{1.0, 0.0} / scale, -shift / scale}; }
};

/// L^{-1} o p o L; degree is preserved.
Polynomial affine_conjugate(const Polynomial& p, const AffineMap& L);

/// [z0, p(z0), ..., p^n(z0)] by repeated Horner passes.
struct OrbitResult {
    std::vector<Complex> points;
    bool finite = true; // false once any step overflows
};

OrbitResult orbit(const Polynomial& p, Complex z0, int steps);

} // namespace iterfix

#endif
