#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tbk {

/// Univariate polynomial over Z with arbitrary-precision coefficients.
///
/// Coefficients are stored in ascending degree and kept trimmed, so the zero
/// polynomial is the empty sequence and a non-empty polynomial always has a
/// nonzero leading coefficient. Values are immutable once built; every
/// arithmetic operation returns a fresh polynomial.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
    /// The indeterminate u.
    static IntPolynomial variable();

    /// Parses the comma-separated ascending coefficient format, e.g.
    /// "-1,1,2,1" for u^3 + 2u^2 + u - 1. The empty string is zero.
    static IntPolynomial parse(std::string_view text);

    /// Inverse of parse(); "0" for the zero polynomial.
    std::string to_text() const;
    /// Human-readable form in descending degree, e.g. "u^3 + 2*u^2 + u - 1".
    std::string to_string(std::string_view var = "u") const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of u^i; zero beyond the degree.
    mpz_class coeff(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    mpz_class leading() const;

    IntPolynomial derivative() const;
    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const;
    /// Multiplies by -1 when the leading coefficient is negative.
    IntPolynomial sign_normalized() const;
    bool is_monic_up_to_sign() const;

    /// Horner evaluation at an integer.
    mpz_class evaluate(const mpz_class& x) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p);

    friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
        return p.coeffs_ == q.coeffs_;
    }

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

/// Result of dividing n by d.
///
/// When `integral` is set, quotient and remainder are the exact rational
/// quotient and remainder and n = q*d + r with `scale` = 1. Otherwise the
/// rational division leaves non-integer coefficients and the fields hold the
/// pseudo-division instead: scale*n = q*d + r with scale = lc(d)^k.
struct DivRem {
    IntPolynomial quotient;
    IntPolynomial remainder;
    mpz_class scale = 1;
    bool integral = true;
};

/// Division with remainder; throws DivisionByZeroPoly for d = 0.
DivRem poly_divrem(const IntPolynomial& n, const IntPolynomial& d);

/// True when d divides n exactly in Z[u].
bool divides(const IntPolynomial& d, const IntPolynomial& n);

/// n / d, throwing PreconditionViolation unless the division is exact in Z[u].
IntPolynomial exact_quotient(const IntPolynomial& n, const IntPolynomial& d);

/// Remainder of p modulo a polynomial that is monic up to sign.
/// Throws NonMonicModulus otherwise.
IntPolynomial poly_mod(const IntPolynomial& p, const IntPolynomial& modulus);

/// Primitive gcd with positive leading coefficient. gcd(0, 0) is rejected
/// with PreconditionViolation.
IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q);

/// Horner evaluation in double precision.
std::complex<double> poly_eval(const IntPolynomial& p, std::complex<double> z);
/// Horner evaluation in extended precision.
std::complex<long double> poly_eval(const IntPolynomial& p, std::complex<long double> z);

/// Converts coefficients to long double (for the numeric layer).
std::vector<long double> to_long_double(const IntPolynomial& p);

/// Discriminant of p computed via the resultant of p and p'.
mpz_class discriminant(const IntPolynomial& p);

}  // namespace tbk
