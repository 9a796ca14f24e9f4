#include "tbk/twobridge.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "tbk/errors.hpp"

namespace tbk {

TwoBridgeForm validate_form(long alpha, long beta) {
    const std::string tag = "(" + std::to_string(alpha) + ", " + std::to_string(beta) + ")";
    if (alpha <= 1 || alpha % 2 == 0) throw InvalidForm(tag + ": alpha must be an odd integer > 1");
    if (beta % 2 == 0) throw InvalidForm(tag + ": beta must be odd");
    if (beta <= -alpha || beta >= alpha) throw InvalidForm(tag + ": need -alpha < beta < alpha");
    if (std::gcd(alpha, beta) != 1) throw InvalidForm(tag + ": alpha and beta must be coprime");
    return TwoBridgeForm(alpha, std::labs(beta));
}

std::vector<TwoBridgeForm> all_forms(long max_alpha) {
    std::vector<TwoBridgeForm> out;
    for (long a = 3; a <= max_alpha; a += 2)
        for (long b = 1; b < a; b += 2)
            if (std::gcd(a, b) == 1) out.push_back(validate_form(a, b));
    return out;
}

std::vector<int> exponent_sequence(const TwoBridgeForm& f) {
    std::vector<int> eps;
    eps.reserve(static_cast<std::size_t>(f.alpha() - 1));
    for (long i = 1; i < f.alpha(); ++i) eps.push_back(((i * f.beta()) / f.alpha()) % 2 == 0 ? 1 : -1);
    return eps;
}

FreeWord relator_word(const TwoBridgeForm& f) {
    const std::vector<int> eps = exponent_sequence(f);
    std::vector<Letter> letters;
    letters.reserve(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i)
        letters.push_back({static_cast<std::uint8_t>(i % 2 == 0 ? 1 : 2), static_cast<std::int8_t>(eps[i])});
    return FreeWord(std::move(letters));
}

LongitudeWord longitude_word(const TwoBridgeForm& f) {
    const FreeWord w = relator_word(f);
    LongitudeWord out;
    out.ew = w.exponent_sum();
    out.sigma = -out.ew;
    out.word = w.reversed() * w * FreeWord::x1().power(2 * out.sigma);
    return out;
}

}  // namespace tbk
