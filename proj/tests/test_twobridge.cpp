#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "tbk/errors.hpp"
#include "tbk/twobridge.hpp"

using namespace tbk;

TEST_CASE("validate_form") {
    CHECK(validate_form(5, 3).alpha() == 5);
    CHECK(validate_form(27, -17) == validate_form(27, 17));
    CHECK(validate_form(27, -17).beta() == 17);
    CHECK_THROWS_AS(validate_form(4, 3), InvalidForm);
    CHECK_THROWS_AS(validate_form(9, 3), InvalidForm);
    CHECK_THROWS_AS(validate_form(7, 4), InvalidForm);
    CHECK_THROWS_AS(validate_form(7, 7), InvalidForm);
    CHECK_THROWS_AS(validate_form(7, -9), InvalidForm);
    CHECK_THROWS_AS(validate_form(1, 1), InvalidForm);
    CHECK_THROWS_AS(validate_form(5, 0), InvalidForm);
}

TEST_CASE("all_forms enumerates exactly the valid pairs") {
    const auto forms = all_forms(33);
    std::size_t expected = 0;
    for (long a = 3; a <= 33; a += 2)
        for (long b = 1; b < a; b += 2)
            if (std::gcd(a, b) == 1) ++expected;
    CHECK(forms.size() == expected);
    CHECK(forms.front() == validate_form(3, 1));
    CHECK(forms.back() == validate_form(33, 31));
}

TEST_CASE("exponent_sequence examples") {
    CHECK(exponent_sequence(validate_form(5, 3)) == std::vector<int>{1, -1, -1, 1});
    CHECK(exponent_sequence(validate_form(3, 1)) == std::vector<int>{1, 1});
    CHECK(exponent_sequence(validate_form(7, 3)) == std::vector<int>{1, 1, -1, -1, 1, 1});
}

TEST_CASE("exponent sequences are palindromic and match the floor rule") {
    for (const auto& f : all_forms(99)) {
        const auto eps = exponent_sequence(f);
        REQUIRE(eps.size() == static_cast<std::size_t>(f.alpha() - 1));
        CHECK(eps == oracle::exponents(f.alpha(), f.beta()));
        for (std::size_t j = 0; j < eps.size(); ++j) CHECK(eps[j] == eps[eps.size() - 1 - j]);
    }
}

TEST_CASE("relator_word examples") {
    CHECK(relator_word(validate_form(5, 3)).to_string() == "aBAb");
    CHECK(relator_word(validate_form(3, 1)).to_string() == "ab");
    CHECK(relator_word(validate_form(27, 17)).to_string() == "aBAbABaBAbaBabAbaBAbABaBAb");
}

TEST_CASE("relator words alternate and end in x2") {
    for (const auto& f : all_forms(99)) {
        const FreeWord w = relator_word(f);
        REQUIRE(w.length() == static_cast<std::size_t>(f.alpha() - 1));
        for (std::size_t i = 0; i < w.length(); ++i) CHECK(w.letters()[i].gen == (i % 2 == 0 ? 1 : 2));
        CHECK(w.letters().back().gen == 2);
    }
}

TEST_CASE("longitude_word examples") {
    const auto fig8 = longitude_word(validate_form(5, 3));
    CHECK(fig8.ew == 0);
    CHECK(fig8.sigma == 0);
    CHECK(fig8.word.length() == 8);
    CHECK(fig8.word.to_string() == "bABaaBAb");

    const auto trefoil = longitude_word(validate_form(3, 1));
    CHECK(trefoil.ew == 2);
    CHECK(trefoil.sigma == -2);
    CHECK(trefoil.word.to_string() == "baabAAAA");

    const auto k52 = longitude_word(validate_form(7, 3));
    CHECK(k52.ew == 2);
    CHECK(k52.sigma == -2);
}

TEST_CASE("longitude words are null-homologous") {
    for (const auto& f : all_forms(99)) {
        const auto lw = longitude_word(f);
        CHECK(lw.word.exponent_sum() == 0);
        CHECK(lw.sigma == -lw.ew);
        CHECK(lw.ew == relator_word(f).exponent_sum());
    }
}
