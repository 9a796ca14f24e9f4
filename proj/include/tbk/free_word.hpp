#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tbk {

/// One letter x_g^s of a word on the two meridian generators.
struct Letter {
    std::uint8_t gen = 1;  // 1 or 2
    std::int8_t sign = 1;  // +1 or -1

    Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in x1, x2 and their inverses. Not implicitly reduced.
///
/// Text form uses one character per letter: a = x1, b = x2, A = x1^-1,
/// B = x2^-1; the empty word prints as "1".
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static FreeWord x1() { return FreeWord({{1, 1}}); }
    static FreeWord x2() { return FreeWord({{2, 1}}); }
    /// Parses the a/b/A/B text form ("1" or "" is the empty word).
    static FreeWord parse(std::string_view text);

    std::string to_string() const;

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    FreeWord inverse() const;
    /// Letter reversal without inverting letters.
    FreeWord reversed() const;
    /// Same letters with every exponent negated.
    FreeWord exponents_negated() const;
    /// w^n for any integer n (n < 0 uses the inverse).
    FreeWord power(long n) const;
    /// Contiguous subword of `length` letters starting at `start`, wrapping.
    FreeWord cyclic_subword(std::size_t start, std::size_t length) const;

    /// Sum of all exponents.
    long exponent_sum() const;
    /// Sum of exponents on one generator.
    long exponent_sum(int gen) const;

    friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Cancels adjacent x x^-1 pairs until none remain.
FreeWord free_reduce(const FreeWord& w);

}  // namespace tbk
