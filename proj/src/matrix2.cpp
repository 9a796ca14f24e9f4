#include "tbk/matrix2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

IntPolynomial reduce_entry(const IntPolynomial& p, const std::optional<IntPolynomial>& modulus) {
    return modulus ? poly_mod(p, *modulus) : p;
}

std::optional<IntPolynomial> normalize_modulus(std::optional<IntPolynomial> modulus) {
    if (!modulus) return modulus;
    if (!modulus->is_monic_up_to_sign())
        throw NonMonicModulus("modulus " + modulus->to_string() + " is not monic up to sign");
    return modulus->sign_normalized();
}

}  // namespace

PolyMatrix2::PolyMatrix2(IntPolynomial a, IntPolynomial b, IntPolynomial c, IntPolynomial d,
                         std::optional<IntPolynomial> modulus)
    : modulus_(normalize_modulus(std::move(modulus))) {
    a_ = reduce_entry(a, modulus_);
    b_ = reduce_entry(b, modulus_);
    c_ = reduce_entry(c, modulus_);
    d_ = reduce_entry(d, modulus_);
}

PolyMatrix2 PolyMatrix2::identity(std::optional<IntPolynomial> modulus) {
    return {IntPolynomial{1}, {}, {}, IntPolynomial{1}, std::move(modulus)};
}

PolyMatrix2 PolyMatrix2::meridian_a(std::optional<IntPolynomial> modulus) {
    return {IntPolynomial{1}, IntPolynomial{1}, {}, IntPolynomial{1}, std::move(modulus)};
}

PolyMatrix2 PolyMatrix2::meridian_b(std::optional<IntPolynomial> modulus) {
    return {IntPolynomial{1}, {}, IntPolynomial{0, -1}, IntPolynomial{1}, std::move(modulus)};
}

IntPolynomial PolyMatrix2::determinant() const {
    return reduce_entry(a_ * d_ - b_ * c_, modulus_);
}

IntPolynomial PolyMatrix2::trace() const { return a_ + d_; }

PolyMatrix2 PolyMatrix2::inverse() const { return {d_, -b_, -c_, a_, modulus_}; }

PolyMatrix2 PolyMatrix2::operator-() const { return {-a_, -b_, -c_, -d_, modulus_}; }

PolyMatrix2 PolyMatrix2::power(long n) const {
    PolyMatrix2 base = n < 0 ? inverse() : *this;
    PolyMatrix2 acc = identity_like();
    for (long k = n < 0 ? -n : n; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
    }
    return acc;
}

PolyMatrix2 operator*(const PolyMatrix2& m, const PolyMatrix2& n) {
    if (m.modulus_ != n.modulus_)
        throw PreconditionViolation("multiplying matrices over different residue rings");
    return {m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
            m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_, m.modulus_};
}

bool operator==(const PolyMatrix2& m, const PolyMatrix2& n) {
    return m.modulus_ == n.modulus_ && m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
}

std::string PolyMatrix2::to_string() const {
    std::ostringstream os;
    os << "[[" << a_.to_string() << ", " << b_.to_string() << "], [" << c_.to_string() << ", "
       << d_.to_string() << "]]";
    if (modulus_) os << " mod " << modulus_->to_string();
    return os.str();
}

bool projectively_equal(const PolyMatrix2& m, const PolyMatrix2& n) {
    return m == n || m == -n;
}

PolyMatrix2 mod_reduce(const PolyMatrix2& m, const IntPolynomial& f) {
    if (!f.is_monic_up_to_sign())
        throw NonMonicModulus("modulus " + f.to_string() + " is not monic up to sign");
    if (m.modulus() && *m.modulus() != f.sign_normalized())
        throw PreconditionViolation("matrix already reduced modulo a different polynomial");
    return {m.a(), m.b(), m.c(), m.d(), f};
}

double ComplexMatrix2::max_abs_entry() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

double max_entry_distance(const ComplexMatrix2& m, const ComplexMatrix2& n) {
    return std::max({std::abs(m.a - n.a), std::abs(m.b - n.b), std::abs(m.c - n.c), std::abs(m.d - n.d)});
}

PolyMatrix2 word_image(const FreeWord& w, const PolyMatrix2& g1, const PolyMatrix2& g2) {
    const PolyMatrix2 images[2][2] = {{g1, g1.inverse()}, {g2, g2.inverse()}};
    PolyMatrix2 acc = g1.identity_like();
    for (const Letter& l : w.letters()) acc = acc * images[l.gen - 1][l.sign > 0 ? 0 : 1];
    return acc;
}

ComplexMatrix2 word_image(const FreeWord& w, const ComplexMatrix2& g1, const ComplexMatrix2& g2) {
    const ComplexMatrix2 images[2][2] = {{g1, g1.inverse()}, {g2, g2.inverse()}};
    ComplexMatrix2 acc;
    for (const Letter& l : w.letters()) {
        acc = acc * images[l.gen - 1][l.sign > 0 ? 0 : 1];
        const double drift = std::abs(acc.determinant() - 1.0);
        if (!(drift <= kComplexDetTolerance))
            throw NumericalDrift("determinant drifted by " + std::to_string(drift) + " in word " + w.to_string());
    }
    return acc;
}

}  // namespace tbk
