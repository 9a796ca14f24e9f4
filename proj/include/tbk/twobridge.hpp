#pragma once

#include <vector>

#include "tbk/free_word.hpp"

namespace tbk {

/// Normal form (alpha, beta) of a two-bridge knot, with 0 < beta < alpha,
/// both odd and coprime. Construct through validate_form().
class TwoBridgeForm {
public:
    long alpha() const noexcept { return alpha_; }
    long beta() const noexcept { return beta_; }

    friend TwoBridgeForm validate_form(long alpha, long beta);
    friend bool operator==(const TwoBridgeForm&, const TwoBridgeForm&) = default;

private:
    TwoBridgeForm(long alpha, long beta) : alpha_(alpha), beta_(beta) {}

    long alpha_;
    long beta_;
};

/// Checks alpha > 1 odd, beta odd, gcd = 1, -alpha < beta < alpha and returns
/// the form with beta replaced by |beta|. Throws InvalidForm.
TwoBridgeForm validate_form(long alpha, long beta);

/// All valid forms with alpha <= max_alpha, in increasing (alpha, beta).
std::vector<TwoBridgeForm> all_forms(long max_alpha);

/// eps_i = (-1)^floor(i*beta/alpha) for i = 1..alpha-1.
std::vector<int> exponent_sequence(const TwoBridgeForm& f);

/// w = x1^eps_1 x2^eps_2 x1^eps_3 ... x2^eps_{alpha-1}, so that the group is
/// <x1, x2 | w x1 = x2 w>.
FreeWord relator_word(const TwoBridgeForm& f);

/// The longitude gamma_1 = rev(w) * w * x1^(2*sigma) commuting with x1.
struct LongitudeWord {
    FreeWord word;
    long sigma = 0;  ///< -e(w), making the total exponent sum zero
    long ew = 0;     ///< exponent sum of w
};

LongitudeWord longitude_word(const TwoBridgeForm& f);

}  // namespace tbk
