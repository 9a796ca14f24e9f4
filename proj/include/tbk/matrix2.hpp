#pragma once

#include <complex>
#include <optional>
#include <string>

#include "tbk/free_word.hpp"
#include "tbk/int_polynomial.hpp"

namespace tbk {

/// 2x2 matrix over Z[u], or over Z[u]/(f) when a modulus is attached.
///
/// With a modulus every entry is kept as its remainder of degree < deg f and
/// products are reduced on the fly. The modulus is normalized to a positive
/// leading coefficient.
class PolyMatrix2 {
public:
    PolyMatrix2() : PolyMatrix2(identity()) {}
    PolyMatrix2(IntPolynomial a, IntPolynomial b, IntPolynomial c, IntPolynomial d,
                std::optional<IntPolynomial> modulus = std::nullopt);

    static PolyMatrix2 identity(std::optional<IntPolynomial> modulus = std::nullopt);
    /// A = [[1,1],[0,1]].
    static PolyMatrix2 meridian_a(std::optional<IntPolynomial> modulus = std::nullopt);
    /// B_u = [[1,0],[-u,1]].
    static PolyMatrix2 meridian_b(std::optional<IntPolynomial> modulus = std::nullopt);

    const IntPolynomial& a() const { return a_; }
    const IntPolynomial& b() const { return b_; }
    const IntPolynomial& c() const { return c_; }
    const IntPolynomial& d() const { return d_; }
    const std::optional<IntPolynomial>& modulus() const { return modulus_; }

    IntPolynomial determinant() const;
    IntPolynomial trace() const;
    /// Adjugate [[d,-b],[-c,a]]; the inverse for determinant-one matrices.
    PolyMatrix2 inverse() const;
    PolyMatrix2 identity_like() const { return identity(modulus_); }
    PolyMatrix2 operator-() const;
    PolyMatrix2 power(long n) const;

    friend PolyMatrix2 operator*(const PolyMatrix2& m, const PolyMatrix2& n);
    friend bool operator==(const PolyMatrix2& m, const PolyMatrix2& n);

    std::string to_string() const;

private:
    IntPolynomial a_, b_, c_, d_;
    std::optional<IntPolynomial> modulus_;
};

/// Equality up to a global sign (equality in PSL_2).
bool projectively_equal(const PolyMatrix2& m, const PolyMatrix2& n);

/// Reduces every entry mod f. f must be monic up to sign (NonMonicModulus
/// otherwise); the result carries f as its modulus.
PolyMatrix2 mod_reduce(const PolyMatrix2& m, const IntPolynomial& f);

/// 2x2 complex matrix of determinant one, double precision.
struct ComplexMatrix2 {
    using value_type = std::complex<double>;
    value_type a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static ComplexMatrix2 identity() { return {}; }
    /// A = [[1,1],[0,1]].
    static ComplexMatrix2 meridian_a() { return {1.0, 1.0, 0.0, 1.0}; }
    /// B_omega = [[1,0],[-omega,1]].
    static ComplexMatrix2 meridian_b(value_type omega) { return {1.0, 0.0, -omega, 1.0}; }

    value_type determinant() const { return a * d - b * c; }
    value_type trace() const { return a + d; }
    ComplexMatrix2 inverse() const { return {d, -b, -c, a}; }
    ComplexMatrix2 identity_like() const { return identity(); }
    /// Möbius action z -> (az+b)/(cz+d).
    value_type apply(value_type z) const { return (a * z + b) / (c * z + d); }
    double max_abs_entry() const;

    friend ComplexMatrix2 operator*(const ComplexMatrix2& m, const ComplexMatrix2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

/// Largest entrywise distance between m and n.
double max_entry_distance(const ComplexMatrix2& m, const ComplexMatrix2& n);

/// Tolerance on |det - 1| re-checked after every product in complex word images.
inline constexpr double kComplexDetTolerance = 1e-9;

/// Image of a word under x1 -> g1, x2 -> g2, multiplied left to right.
/// Inverses use the adjugate, which is exact for determinant one.
PolyMatrix2 word_image(const FreeWord& w, const PolyMatrix2& g1, const PolyMatrix2& g2);

/// Complex variant; throws NumericalDrift when |det - 1| exceeds
/// kComplexDetTolerance after any product.
ComplexMatrix2 word_image(const FreeWord& w, const ComplexMatrix2& g1, const ComplexMatrix2& g2);

}  // namespace tbk
