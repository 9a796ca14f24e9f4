#include "tbk/int_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "tbk/errors.hpp"

namespace tbk {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::variable() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::vector<mpz_class> out;
    std::size_t pos = 0;
    auto is_blank = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); });
    };
    if (is_blank(text)) return {};
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        token.erase(std::remove_if(token.begin(), token.end(),
                                   [](unsigned char ch) { return std::isspace(ch); }),
                    token.end());
        if (token.empty()) throw ParseError("empty coefficient in polynomial text");
        std::size_t digits_from = (token[0] == '-' || token[0] == '+') ? 1 : 0;
        if (digits_from == token.size() ||
            !std::all_of(token.begin() + static_cast<long>(digits_from), token.end(),
                         [](unsigned char ch) { return std::isdigit(ch); }))
            throw ParseError("non-integer coefficient '" + token + "'");
        if (token[0] == '+') token.erase(0, 1);
        out.emplace_back(token, 10);
        pos = comma + 1;
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].get_str();
    }
    return s;
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::leading() const {
    return coeffs_.empty() ? mpz_class(0) : coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (coeffs_.empty()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::sign_normalized() const {
    return leading() < 0 ? -*this : *this;
}

bool IntPolynomial::is_monic_up_to_sign() const {
    return !coeffs_.empty() && abs(coeffs_.back()) == 1;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<mpz_class> v(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.coeffs_[i];
    for (std::size_t i = 0; i < q.size(); ++i) v[i] += q.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<mpz_class> v(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.coeffs_[i];
    for (std::size_t i = 0; i < q.size(); ++i) v[i] -= q.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<mpz_class> v(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(), q.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p) {
    if (s == 0) return {};
    std::vector<mpz_class> v(p.coeffs_);
    for (auto& c : v) c *= s;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DivRem poly_divrem(const IntPolynomial& n, const IntPolynomial& d) {
    if (d.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    if (n.degree() < d.degree()) return {IntPolynomial{}, n, 1, true};

    // Rational long division first; it is exact over Q.
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    const std::size_t qd = static_cast<std::size_t>(n.degree() - d.degree());
    std::vector<mpq_class> rem(n.coeffs().begin(), n.coeffs().end());
    std::vector<mpq_class> quo(qd + 1);
    const mpq_class lead(d.leading());
    for (std::size_t k = qd + 1; k-- > 0;) {
        mpq_class t = rem[k + dd] / lead;
        quo[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= t * mpq_class(d.coeffs()[j]);
    }

    auto integral = [](const std::vector<mpq_class>& v) {
        return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x.get_den() == 1; });
    };
    if (integral(quo) && integral(rem)) {
        std::vector<mpz_class> q(quo.size()), r(dd);
        for (std::size_t i = 0; i < quo.size(); ++i) q[i] = quo[i].get_num();
        for (std::size_t i = 0; i < dd; ++i) r[i] = rem[i].get_num();
        return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r)), 1, true};
    }

    // Pseudo-division: scale everything by lc(d)^(qd+1), which clears all
    // denominators introduced above.
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), d.leading().get_mpz_t(), static_cast<unsigned long>(qd + 1));
    std::vector<mpz_class> q(quo.size()), r(dd);
    for (std::size_t i = 0; i < quo.size(); ++i) {
        mpq_class s = quo[i] * mpq_class(scale);
        q[i] = s.get_num();
    }
    for (std::size_t i = 0; i < dd; ++i) {
        mpq_class s = rem[i] * mpq_class(scale);
        r[i] = s.get_num();
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r)), scale, false};
}

bool divides(const IntPolynomial& d, const IntPolynomial& n) {
    DivRem qr = poly_divrem(n, d);
    return qr.integral && qr.remainder.is_zero();
}

IntPolynomial exact_quotient(const IntPolynomial& n, const IntPolynomial& d) {
    DivRem qr = poly_divrem(n, d);
    if (!qr.integral || !qr.remainder.is_zero())
        throw PreconditionViolation(d.to_string() + " does not divide " + n.to_string() + " in Z[u]");
    return qr.quotient;
}

IntPolynomial poly_mod(const IntPolynomial& p, const IntPolynomial& modulus) {
    if (!modulus.is_monic_up_to_sign())
        throw NonMonicModulus("modulus " + modulus.to_string() + " is not monic up to sign");
    return poly_divrem(p, modulus).remainder;
}

IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw PreconditionViolation("gcd(0, 0) is undefined");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();

    // Primitive polynomial remainder sequence.
    IntPolynomial a = p.primitive_part();
    IntPolynomial b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        DivRem qr = poly_divrem(a, b);
        a = std::move(b);
        b = qr.remainder.is_zero() ? IntPolynomial{} : qr.remainder.primitive_part();
    }
    return a.primitive_part();
}

std::complex<double> poly_eval(const IntPolynomial& p, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k].get_d();
    return acc;
}

std::complex<long double> poly_eval(const IntPolynomial& p, std::complex<long double> z) {
    std::complex<long double> acc = 0.0L;
    const auto coeffs = to_long_double(p);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

std::vector<long double> to_long_double(const IntPolynomial& p) {
    std::vector<long double> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        // mpz_get_d truncates to double; go through the decimal string so
        // large coefficients keep their extended-precision bits.
        if (mpz_sizeinbase(c.get_mpz_t(), 2) <= 53)
            out.push_back(static_cast<long double>(c.get_d()));
        else
            out.push_back(std::stold(c.get_str()));
    }
    return out;
}

namespace {

// Fraction-free (Bareiss) determinant of a square integer matrix.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q) {
    const std::size_t m = static_cast<std::size_t>(p.degree());
    const std::size_t n = static_cast<std::size_t>(q.degree());
    const std::size_t size = m + n;
    std::vector<std::vector<mpz_class>> syl(size, std::vector<mpz_class>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) syl[r][r + j] = p.coeff(m - j);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) syl[n + r][r + j] = q.coeff(n - j);
    return bareiss_det(std::move(syl));
}

}  // namespace

mpz_class discriminant(const IntPolynomial& p) {
    if (p.degree() < 1) throw PreconditionViolation("discriminant needs degree >= 1");
    const long n = p.degree();
    if (n == 1) return 1;
    mpz_class res = resultant(p, p.derivative());
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

}  // namespace tbk
