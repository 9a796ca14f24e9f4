#include "tbk/prep.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>

#include "tbk/parallel.hpp"

namespace tbk {

namespace {

using cld = std::complex<long double>;

double lambda_residual(const IntPolynomial& lambda, std::complex<double> omega) {
    return static_cast<double>(std::abs(poly_eval(lambda, cld(omega.real(), omega.imag()))));
}

std::complex<double> longitude_from_word(const FreeWord& longitude, std::complex<double> omega) {
    const ComplexMatrix2 m = numeric_image(longitude, omega);
    if (std::abs(m.c) > kLongitudeShapeTolerance || std::abs(m.a + 1.0) > kLongitudeShapeTolerance ||
        std::abs(m.d + 1.0) > kLongitudeShapeTolerance)
        throw ShapeViolation("longitude image is not of the form [[-1, g], [0, -1]]");
    return m.b;
}

// Monic product of (u - root), rounded to an integer polynomial when every
// coefficient is within 1e-5 of an integer.
std::optional<IntPolynomial> integer_product(std::span<const std::complex<double>> roots) {
    std::vector<cld> poly{1.0L};
    for (const auto& r : roots) {
        const cld root(r.real(), r.imag());
        std::vector<cld> next(poly.size() + 1, 0.0L);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<mpz_class> coeffs;
    coeffs.reserve(poly.size());
    for (const cld& c : poly) {
        const long double nearest = std::round(c.real());
        if (std::fabs(c.imag()) > 1e-5L || std::fabs(c.real() - nearest) > 1e-5L) return std::nullopt;
        coeffs.emplace_back(static_cast<double>(nearest));
    }
    return IntPolynomial(std::move(coeffs));
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

PRepClass make_class(const IntPolynomial& factor, std::span<const RootTag> tags,
                     const std::vector<std::size_t>& members) {
    PRepClass cls;
    cls.factor = factor.sign_normalized();
    std::vector<std::size_t> ordered(members);
    std::sort(ordered.begin(), ordered.end(),
              [&](std::size_t x, std::size_t y) { return root_order(tags[x].root, tags[y].root); });
    for (std::size_t i : ordered) {
        cls.roots.push_back(tags[i].root);
        cls.longitude_entries.push_back(tags[i].g);
    }
    std::optional<SmallRational> common;
    bool all_rational = !ordered.empty();
    for (const auto& g : cls.longitude_entries) {
        auto q = near_rational(g);
        if (!q || (common && !(*common == *q))) {
            all_rational = false;
            break;
        }
        common = q;
    }
    if (all_rational) cls.g_rational = common;
    return cls;
}

std::vector<std::complex<double>> roots_of(std::span<const RootTag> tags, const std::vector<std::size_t>& idx) {
    std::vector<std::complex<double>> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(tags[i].root);
    return out;
}

}  // namespace

PolyMatrix2 symbolic_relator_image(const TwoBridgeForm& f) {
    return word_image(relator_word(f), PolyMatrix2::meridian_a(), PolyMatrix2::meridian_b());
}

PRepPolynomial prep_polynomial(const TwoBridgeForm& f) {
    const PolyMatrix2 w = symbolic_relator_image(f);
    if (w.a().is_zero())
        throw DegenerateForm("relator image has vanishing (1,1) entry for (" + std::to_string(f.alpha()) + ", " +
                             std::to_string(f.beta()) + ")");
    return {w.a().sign_normalized(), f};
}

ComplexMatrix2 numeric_image(const FreeWord& w, std::complex<double> omega) {
    return word_image(w, ComplexMatrix2::meridian_a(), ComplexMatrix2::meridian_b(omega));
}

std::complex<double> longitude_entry(const TwoBridgeForm& f, std::complex<double> omega) {
    const IntPolynomial lambda = prep_polynomial(f).lambda;
    const double residual = lambda_residual(lambda, omega);
    if (!(residual < kRepresentationResidual))
        throw NotARepresentation("|Lambda(omega)| = " + std::to_string(residual) + " is not below 1e-8");
    return longitude_from_word(longitude_word(f).word, omega);
}

IntPolynomial longitude_entry_exact(const TwoBridgeForm& f, const IntPolynomial& factor) {
    if (!factor.is_monic_up_to_sign())
        throw NonMonicModulus("modulus " + factor.to_string() + " is not monic up to sign");
    if (factor.degree() < 1 || !divides(factor, prep_polynomial(f).lambda))
        throw PreconditionViolation(factor.to_string() + " does not divide the p-rep polynomial");
    const PolyMatrix2 m = word_image(longitude_word(f).word, PolyMatrix2::meridian_a(factor),
                                     PolyMatrix2::meridian_b(factor));
    const IntPolynomial minus_one{-1};
    if (!m.c().is_zero() || m.a() != poly_mod(minus_one, factor) || m.d() != poly_mod(minus_one, factor))
        throw ShapeViolation("exact longitude image is not of the form [[-1, g], [0, -1]]: " + m.to_string());
    return m.b();
}

std::optional<SmallRational> near_rational(std::complex<double> z, long max_den, double tol) {
    if (std::fabs(z.imag()) > tol) return std::nullopt;
    for (long q = 1; q <= max_den; ++q) {
        const double p = std::round(z.real() * static_cast<double>(q));
        if (std::fabs(z.real() - p / static_cast<double>(q)) <= tol) {
            long num = static_cast<long>(p);
            long g = std::gcd(num, q);
            return SmallRational{num / g, q / g};
        }
    }
    return std::nullopt;
}

std::vector<PRepClass> detect_factors(const IntPolynomial& lambda_in, std::span<const RootTag> tags) {
    if (!lambda_in.is_monic_up_to_sign())
        throw PreconditionViolation("detect_factors needs a polynomial that is monic up to sign");
    if (tags.size() != static_cast<std::size_t>(lambda_in.degree()))
        throw PreconditionViolation("detect_factors needs exactly one tag per root");

    const IntPolynomial lambda = lambda_in.sign_normalized();
    const std::size_t n = tags.size();

    std::vector<std::size_t> partner(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = i;
        double best_dist = std::abs(tags[i].root - std::conj(tags[i].root));
        for (std::size_t j = 0; j < n; ++j) {
            const double dist = std::abs(tags[j].root - std::conj(tags[i].root));
            if (dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best_dist > 1e-6 * (1.0 + std::abs(tags[i].root)))
            throw PreconditionViolation("root set is not closed under conjugation");
        partner[i] = best;
    }

    // Stage 1: group by matching tags, closed under conjugation.
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        uf.unite(i, partner[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(tags[i].g - tags[j].g) < 1e-6) uf.unite(i, j);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

    std::vector<PRepClass> classes;
    IntPolynomial remaining = lambda;
    std::vector<std::size_t> leftover;
    for (const auto& [root, members] : groups) {
        if (members.size() == n) {
            leftover.insert(leftover.end(), members.begin(), members.end());
            continue;
        }
        const auto product = integer_product(roots_of(tags, members));
        if (product && divides(*product, remaining)) {
            remaining = exact_quotient(remaining, *product);
            classes.push_back(make_class(*product, tags, members));
        } else {
            leftover.insert(leftover.end(), members.begin(), members.end());
        }
    }
    std::sort(leftover.begin(), leftover.end());

    // Stage 2: exhaustive search over conjugation-closed subsets of what is left.
    constexpr std::size_t kMaxSubsetSearch = 16;
    if (!leftover.empty() && leftover.size() <= kMaxSubsetSearch) {
        std::vector<std::vector<std::size_t>> units;
        std::vector<bool> seen(n, false);
        for (std::size_t i : leftover) {
            if (seen[i]) continue;
            seen[i] = seen[partner[i]] = true;
            units.push_back(partner[i] == i ? std::vector<std::size_t>{i} : std::vector<std::size_t>{i, partner[i]});
        }
        bool split = true;
        while (split && units.size() > 1) {
            split = false;
            const std::size_t m = units.size();
            std::vector<std::uint32_t> masks;
            for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) masks.push_back(mask);
            auto mask_degree = [&](std::uint32_t mask) {
                std::size_t d = 0;
                for (std::size_t k = 0; k < m; ++k)
                    if (mask & (1u << k)) d += units[k].size();
                return d;
            };
            std::stable_sort(masks.begin(), masks.end(),
                             [&](std::uint32_t x, std::uint32_t y) { return mask_degree(x) < mask_degree(y); });
            for (std::uint32_t mask : masks) {
                std::vector<std::size_t> members;
                for (std::size_t k = 0; k < m; ++k)
                    if (mask & (1u << k)) members.insert(members.end(), units[k].begin(), units[k].end());
                const auto product = integer_product(roots_of(tags, members));
                if (!product || !divides(*product, remaining)) continue;
                remaining = exact_quotient(remaining, *product);
                classes.push_back(make_class(*product, tags, members));
                std::vector<std::vector<std::size_t>> rest;
                for (std::size_t k = 0; k < m; ++k)
                    if (!(mask & (1u << k))) rest.push_back(units[k]);
                units = std::move(rest);
                split = true;
                break;
            }
        }
        leftover.clear();
        for (const auto& u : units) leftover.insert(leftover.end(), u.begin(), u.end());
    }

    if (!leftover.empty()) {
        const auto product = integer_product(roots_of(tags, leftover));
        if (!product || *product != remaining)
            throw FactorReconstructionFailed("remaining roots do not multiply out to the exact cofactor " +
                                                 remaining.to_string(),
                                             classes);
        classes.push_back(make_class(remaining, tags, leftover));
        remaining = IntPolynomial{1};
    }

    IntPolynomial check{1};
    for (const auto& c : classes) check = check * c.factor;
    if (check != lambda || remaining != IntPolynomial{1})
        throw FactorReconstructionFailed("factors do not reconstruct " + lambda.to_string(), classes);

    std::sort(classes.begin(), classes.end(), [](const PRepClass& x, const PRepClass& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        return std::lexicographical_compare(x.factor.coeffs().begin(), x.factor.coeffs().end(),
                                            y.factor.coeffs().begin(), y.factor.coeffs().end());
    });
    return classes;
}

std::vector<PRepClass> detect_factors(const PRepPolynomial& p) {
    const RootSet rs = find_roots(p.lambda);
    const FreeWord longitude = longitude_word(p.form).word;
    const std::vector<std::complex<double>> gs =
        parallel_map(rs.roots.size(), [&](std::size_t i) { return longitude_from_word(longitude, rs.roots[i]); });
    std::vector<RootTag> tags;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) tags.push_back({rs.roots[i], gs[i]});
    std::vector<PRepClass> classes = detect_factors(p.lambda, tags);
    for (auto& c : classes) c.g_residue = longitude_entry_exact(p.form, c.factor);
    return classes;
}

PRepReport prep_report(const TwoBridgeForm& f) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    auto t0 = clock::now();
    PRepPolynomial p = prep_polynomial(f);
    const double t_poly = ms_since(t0);

    t0 = clock::now();
    RootSet rs = find_roots(p.lambda);
    const double t_roots = ms_since(t0);

    t0 = clock::now();
    const FreeWord longitude = longitude_word(f).word;
    std::vector<std::complex<double>> gs =
        parallel_map(rs.roots.size(), [&](std::size_t i) { return longitude_from_word(longitude, rs.roots[i]); });
    const double t_long = ms_since(t0);

    t0 = clock::now();
    std::vector<RootTag> tags;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) tags.push_back({rs.roots[i], gs[i]});
    std::vector<PRepClass> classes = detect_factors(p.lambda, tags);
    for (auto& c : classes) c.g_residue = longitude_entry_exact(f, c.factor);
    const double t_factors = ms_since(t0);

    std::vector<std::vector<std::size_t>> indices;
    for (const auto& c : classes) {
        std::vector<std::size_t> idx;
        for (const auto& r : c.roots) {
            auto it = std::find(rs.roots.begin(), rs.roots.end(), r);
            idx.push_back(static_cast<std::size_t>(it - rs.roots.begin()));
        }
        indices.push_back(std::move(idx));
    }

    return PRepReport{f,
                      p.lambda,
                      std::move(rs),
                      std::move(gs),
                      std::move(classes),
                      std::move(indices),
                      {{"prep_polynomial", t_poly},
                       {"find_roots", t_roots},
                       {"longitude_entries", t_long},
                       {"detect_factors", t_factors}}};
}

}  // namespace tbk
