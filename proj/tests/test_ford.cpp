#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <regex>

#include "tbk/errors.hpp"
#include "tbk/ford.hpp"
#include "tbk/prep.hpp"
#include "tbk/relations.hpp"
#include "tbk/svg.hpp"

using namespace tbk;

namespace {

using cd = std::complex<double>;

const double kPi = std::numbers::pi;
const cd kOmegaFig8(-0.5, std::sqrt(3.0) / 2.0);

cd root_of_8_11() { return find_roots(knot_8_11_factor()).roots.front(); }

bool names(const IsometricSphere& s, const FreeWord& w) {
    if (s.label == w) return true;
    return std::find(s.aliases.begin(), s.aliases.end(), w) != s.aliases.end();
}

// The sphere of theta(word) after lattice reduction, found geometrically, and
// checked to carry the correspondingly translated word as a name.
bool pattern_contains(const std::vector<IsometricSphere>& spheres, const TwoBridgeForm& f, cd omega,
                      const FreeWord& word) {
    const CuspLattice lattice = cusp_lattice(longitude_entry(f, omega));
    const IsometricSphere raw = isometric_sphere(numeric_image(word, omega), word);
    const auto red = lattice.reduce(raw.center);
    const FreeWord gamma = longitude_word(f).word;
    const FreeWord expected = free_reduce(word * FreeWord::x1().power(red.m) * gamma.power(-red.n));
    for (const auto& s : spheres)
        if (std::abs(s.center - red.point) < 1e-9 && std::abs(s.radius - raw.radius) < 1e-9) return names(s, expected);
    return false;
}

double visible_measure(const FordPattern& p, std::size_t i) {
    double total = 0.0;
    for (const auto& a : p.visible_arcs[i]) total += a.measure();
    return total;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("isometric_sphere examples") {
    const auto s = isometric_sphere(ComplexMatrix2::meridian_b({-1.23278, 0.79255}), FreeWord::x2());
    CHECK(std::abs(s.center - cd(-0.57390, -0.36899)) < 1e-4);
    CHECK(s.radius == doctest::Approx(0.68233).epsilon(1e-5));
    const auto j = isometric_sphere({0.0, -1.0, 1.0, 0.0}, FreeWord());
    CHECK(std::abs(j.center) < 1e-15);
    CHECK(j.radius == 1.0);
    CHECK_THROWS_AS(isometric_sphere(ComplexMatrix2::meridian_a(), FreeWord::x1()), NoIsometricSphere);
}

TEST_CASE("cusp_lattice examples") {
    const auto fig8 = cusp_lattice({0.0, 2.0 * std::sqrt(3.0)});
    CHECK_FALSE(fig8.degenerate);
    CHECK(fig8.t1 == cd(1.0));
    CHECK(std::abs(fig8.t2) == doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK(cusp_lattice(-6.0).degenerate);
    CHECK(cusp_lattice(0.0).degenerate);

    const auto red = fig8.reduce({2.3, -1.0});
    CHECK(red.point.real() >= 0.0);
    CHECK(red.point.real() < 1.0);
    CHECK(red.point.imag() >= 0.0);
    CHECK(red.point.imag() < 2.0 * std::sqrt(3.0));
    CHECK(std::abs(red.point + double(red.m) * fig8.t1 + double(red.n) * fig8.t2 - cd(2.3, -1.0)) < 1e-12);

    const auto strip = cusp_lattice(-6.0).reduce({-3.25, 7.0});
    CHECK(std::abs(strip.point - cd(0.75, 7.0)) < 1e-12);
    CHECK(strip.n == 0);
}

TEST_CASE("enumerate_spheres on the 8_11 cubic class") {
    const auto f = validate_form(27, 17);
    const cd omega = root_of_8_11();
    const auto fix = build_relation_fixture();
    const auto spheres = enumerate_spheres(f, omega, 8);
    REQUIRE_FALSE(spheres.empty());
    CHECK(pattern_contains(spheres, f, omega, fix.u_word));
    CHECK(pattern_contains(spheres, f, omega, fix.v1_word));
    for (std::size_t i = 1; i < spheres.size(); ++i) CHECK(spheres[i - 1].radius >= spheres[i].radius);
}

TEST_CASE("the u and v1 words are segments of the (27,17) relator") {
    const FreeWord w = relator_word(validate_form(27, 17));
    const auto fix = build_relation_fixture();
    CHECK(w.cyclic_subword(2, 3) == fix.u_word);
    CHECK(w.cyclic_subword(2, 6) == fix.v1_word);
}

TEST_CASE("depth one sees only x2 and its inverse") {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{5, 3}, {7, 3}, {27, 17}}) {
        const auto f = validate_form(a, b);
        const cd omega = find_roots(prep_polynomial(f).lambda).roots.front();
        const auto spheres = enumerate_spheres(f, omega, 1);
        REQUIRE(spheres.size() == 2);
        const auto lattice = cusp_lattice(longitude_entry(f, omega));
        const auto bw = ComplexMatrix2::meridian_b(omega);
        for (const auto& m : {bw, bw.inverse()}) {
            const auto s = isometric_sphere(m, FreeWord::x2());
            const cd c = lattice.reduce(s.center).point;
            CHECK(std::any_of(spheres.begin(), spheres.end(), [&](const IsometricSphere& t) {
                return std::abs(t.center - c) < 1e-9 && std::abs(t.radius - s.radius) < 1e-9;
            }));
        }
    }
}

TEST_CASE("figure-eight spheres have radius at most one") {
    const auto spheres = enumerate_spheres(validate_form(5, 3), kOmegaFig8, 4);
    REQUIRE_FALSE(spheres.empty());
    CHECK(spheres.front().radius == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& s : spheres) CHECK(s.radius <= 1.0 + 1e-12);
}

TEST_CASE("sphere labels reproduce their circles and map onto the inverse circle") {
    const std::vector<std::pair<TwoBridgeForm, cd>> cases{
        {validate_form(27, 17), root_of_8_11()},
        {validate_form(5, 3), kOmegaFig8},
        {validate_form(7, 3), find_roots(prep_polynomial(validate_form(7, 3)).lambda).roots.front()},
    };
    for (const auto& [f, omega] : cases) {
        const auto spheres = enumerate_spheres(f, omega, 8);
        for (std::size_t i = 0; i < spheres.size(); ++i) {
            const auto& s = spheres[i];
            for (const auto& w : [&] {
                     auto all = s.aliases;
                     all.push_back(s.label);
                     return all;
                 }()) {
                const auto M = numeric_image(w, omega);
                const auto again = isometric_sphere(M, w);
                CHECK(std::abs(again.center - s.center) < 1e-9);
                CHECK(std::abs(again.radius - s.radius) < 1e-9);
                const auto inv = isometric_sphere(M.inverse(), w.inverse());
                for (int k = 0; k < 16; ++k) {
                    const double t = 2.0 * kPi * k / 16.0;
                    const cd z = s.center + s.radius * cd(std::cos(t), std::sin(t));
                    CHECK(std::abs(std::abs(M.apply(z) - inv.center) - inv.radius) < 1e-6);
                }
            }
            for (std::size_t j = 0; j < i; ++j)
                CHECK((std::abs(spheres[j].center - s.center) > 1e-9 || std::abs(spheres[j].radius - s.radius) > 1e-9));
        }
    }
}

TEST_CASE("ford_pattern basics") {
    SUBCASE("single sphere is fully visible") {
        const std::vector<IsometricSphere> one{{cd(0.5, 0.0), 0.3, FreeWord::x2(), {}}};
        const auto p = ford_pattern(one, cusp_lattice({0.0, 5.0}));
        REQUIRE(p.visible_arcs[0].size() == 1);
        CHECK(p.visible_arcs[0][0].measure() == doctest::Approx(2.0 * kPi));
    }
    SUBCASE("two overlapping equal circles lose symmetric arcs") {
        const std::vector<IsometricSphere> two{{cd(0.3, 0.0), 0.25, FreeWord::x2(), {}},
                                               {cd(0.6, 0.0), 0.25, FreeWord::x2().inverse(), {}}};
        const auto p = ford_pattern(two, cusp_lattice({0.0, 5.0}));
        const double m0 = visible_measure(p, 0), m1 = visible_measure(p, 1);
        // each circle loses the arc of half-angle acos(d / 2r)
        const double expected = 2.0 * kPi - 2.0 * std::acos(0.3 / 0.5);
        CHECK(std::abs(m0 - m1) < 1e-3);
        CHECK(std::abs(m0 - expected) < 2.0 * 2.0 * kPi / kDefaultArcSamples);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(ford_pattern({}, cusp_lattice(-6.0)), EmptyPattern);
        const std::vector<IsometricSphere> one{{cd(0.5, 0.0), 0.3, FreeWord::x2(), {}}};
        CHECK_THROWS_AS(ford_pattern(one, cusp_lattice(-6.0), 100), PreconditionViolation);
    }
}

TEST_CASE("ford_pattern on the 8_11 cubic class") {
    const auto f = validate_form(27, 17);
    const cd omega = root_of_8_11();
    const auto lattice = cusp_lattice(longitude_entry(f, omega));
    CHECK(lattice.degenerate);
    const auto spheres = enumerate_spheres(f, omega, 8);
    const auto p = ford_pattern(spheres, lattice);
    const double rmax = p.spheres.front().radius;
    for (std::size_t i = 0; i < p.spheres.size(); ++i) {
        if (p.spheres[i].radius > rmax - 1e-9) CHECK(visible_measure(p, i) > 0.0);
        for (std::size_t k = 1; k < p.visible_arcs[i].size(); ++k)
            CHECK(p.visible_arcs[i][k - 1].end < p.visible_arcs[i][k].start);
    }
    CHECK(p.coverage > 0.0);
    CHECK(p.coverage <= 1.0);
}

TEST_CASE("ford_pattern is invariant under lattice translation") {
    const std::vector<std::pair<TwoBridgeForm, cd>> cases{{validate_form(5, 3), kOmegaFig8},
                                                          {validate_form(27, 17), root_of_8_11()}};
    for (const auto& [f, omega] : cases) {
        const auto lattice = cusp_lattice(longitude_entry(f, omega));
        const auto spheres = enumerate_spheres(f, omega, 6);
        const auto base = ford_pattern(spheres, lattice);
        for (cd t : {lattice.t1, lattice.t2, -lattice.t1 + 2.0 * lattice.t2}) {
            auto moved = spheres;
            for (auto& s : moved) s.center += t;
            const auto p = ford_pattern(moved, lattice);
            REQUIRE(p.spheres.size() == base.spheres.size());
            CHECK(p.coverage == doctest::Approx(base.coverage).epsilon(1e-12));
            for (std::size_t i = 0; i < p.spheres.size(); ++i) {
                CHECK(std::abs(p.spheres[i].center - base.spheres[i].center) < 1e-9);
                REQUIRE(p.visible_arcs[i].size() == base.visible_arcs[i].size());
                for (std::size_t k = 0; k < p.visible_arcs[i].size(); ++k) {
                    CHECK(p.visible_arcs[i][k].start == doctest::Approx(base.visible_arcs[i][k].start));
                    CHECK(p.visible_arcs[i][k].end == doctest::Approx(base.visible_arcs[i][k].end));
                }
            }
        }
    }
}

TEST_CASE("shimizu_scan") {
    const auto A = ComplexMatrix2::meridian_a();
    const auto half = shimizu_scan(A, ComplexMatrix2::meridian_b(0.5), 8);
    REQUIRE(half.has_value());
    CHECK(half->word.length() == 1);
    CHECK(half->c_abs == doctest::Approx(0.5));

    CHECK_FALSE(shimizu_scan(A, ComplexMatrix2::meridian_b(1.0), 8).has_value());
    CHECK_FALSE(shimizu_scan(A, ComplexMatrix2::meridian_b(kOmegaFig8), 8).has_value());
    CHECK_FALSE(shimizu_scan(A, ComplexMatrix2::meridian_b({0.0, 1.0}), 8).has_value());
    CHECK_FALSE(shimizu_scan(A, ComplexMatrix2::meridian_b({1.0, 1.0}), 6).has_value());
    CHECK_FALSE(shimizu_scan(A, ComplexMatrix2::meridian_b(-2.0), 8).has_value());

    CHECK_THROWS_AS(shimizu_scan(ComplexMatrix2::meridian_b(1.0), A, 4), PreconditionViolation);
    CHECK_THROWS_AS(shimizu_scan(A, ComplexMatrix2::meridian_b(1.0), 17), PreconditionViolation);
}

TEST_CASE("shimizu_scan finds non-discrete roots of 8_11") {
    // Most p-reps of (27,17) outside the cubic class are not discrete.
    const auto roots = find_roots(prep_polynomial(validate_form(27, 17)).lambda).roots;
    const auto w = shimizu_scan(ComplexMatrix2::meridian_a(), ComplexMatrix2::meridian_b(roots[3]), 8);
    REQUIRE(w.has_value());
    CHECK(w->c_abs > 0.0);
    CHECK(w->c_abs < 1.0);
    CHECK(std::abs(numeric_image(w->word, roots[3]).c) == doctest::Approx(w->c_abs));
    CHECK_FALSE(shimizu_scan(ComplexMatrix2::meridian_a(), ComplexMatrix2::meridian_b(roots[0]), 8).has_value());
}

TEST_CASE("relation fixture for the 8_11 cubic") {
    const auto fix = build_relation_fixture();
    CHECK(fix.u_word.to_string() == "AbA");
    CHECK(fix.v1_word.to_string() == "AbABaB");
    CHECK(fix.W1.determinant() == IntPolynomial{1});
    CHECK(fix.U.determinant() == IntPolynomial{1});
    CHECK(fix.Astar.determinant() == IntPolynomial{1});
    CHECK(fix.V1 == fix.W1 * fix.U.inverse());
    CHECK(fix.W1 * fix.A == fix.B * fix.W1);
    // A^-1 B A^-1 by hand
    CHECK(fix.U == PolyMatrix2(IntPolynomial{1, 1}, IntPolynomial{-2, -1}, IntPolynomial{0, -1}, IntPolynomial{1, 1},
                               knot_8_11_factor()));
    CHECK(fix.W1 == PolyMatrix2(IntPolynomial{}, IntPolynomial{-1, -1}, IntPolynomial{0, 1, 1}, IntPolynomial{},
                                knot_8_11_factor()));
    CHECK_THROWS_AS(build_relation_fixture(IntPolynomial{-1, 1, 2, 2}), NonMonicModulus);

    const auto checks = verify_relations(fix);
    CHECK(checks.size() == 12);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.holds);
    }
}

TEST_CASE("w1 relates to the relator of the 8_11 group") {
    const auto fix = build_relation_fixture();
    const FreeWord w1x1 = free_reduce(fix.w1_word * FreeWord::x1());
    CHECK(w1x1.length() == 26);
    CHECK(w1x1 == relator_word(validate_form(27, 19)).exponents_negated());
    const PolyMatrix2 theta_w = mod_reduce(symbolic_relator_image(validate_form(27, 17)), fix.factor);
    CHECK(fix.W1 * fix.A == theta_w);
}

TEST_CASE("mutating a sign of the factor breaks the relations") {
    const auto base = knot_8_11_factor();
    for (std::size_t i = 0; i < base.coeffs().size(); ++i) {
        auto coeffs = base.coeffs();
        coeffs[i] = -coeffs[i];
        const auto checks = verify_relations(build_relation_fixture(IntPolynomial(coeffs)));
        const bool all = std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
        CAPTURE(i);
        CHECK_FALSE(all);
    }
}

TEST_CASE("render_svg") {
    const auto lattice = cusp_lattice({0.0, 2.0});
    SUBCASE("no spheres draws the cell only") {
        const std::string svg = render_svg(FordPattern{}, lattice);
        CHECK(count(svg, "<polygon") == 1);
        CHECK(count(svg, "<circle") == 0);
        CHECK(count(svg, "<path") == 0);
        CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    }
    SUBCASE("single unit circle") {
        FordPattern one;
        one.spheres = {{cd(0.0, 0.0), 1.0, FreeWord::x2(), {}}};
        one.visible_arcs = {{{0.0, 2.0 * kPi}}};
        const std::string svg = render_svg(one, lattice);
        CHECK(count(svg, "<circle class=\"visible\"") == 1);
        CHECK(count(svg, "<circle") == 1);
        CHECK(count(svg, "<path") == 0);
        CHECK(svg.find("r=\"100.0000\"") != std::string::npos);
    }
    SUBCASE("8_11 pattern") {
        const auto f = validate_form(27, 17);
        const cd omega = root_of_8_11();
        const auto lat = cusp_lattice(longitude_entry(f, omega));
        const auto spheres = enumerate_spheres(f, omega, 8);
        const auto p = ford_pattern(spheres, lat);
        const std::string svg = render_svg(p, lat);
        CHECK(count(svg, "<circle") >= 5);
        CHECK(count(svg, "<text") == p.spheres.size());
        CHECK(svg == render_svg(ford_pattern(spheres, lat), lat));
        const std::regex title("<title>([^<]*)</title>");
        std::vector<std::string> titles;
        for (auto it = std::sregex_iterator(svg.begin(), svg.end(), title); it != std::sregex_iterator(); ++it)
            titles.push_back((*it)[1]);
        CHECK(titles.size() == p.spheres.size());
        CHECK(svg.find("-0.0000") == std::string::npos);
    }
}
