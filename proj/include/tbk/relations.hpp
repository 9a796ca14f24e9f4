#pragma once

#include <string>
#include <vector>

#include "tbk/free_word.hpp"
#include "tbk/int_polynomial.hpp"
#include "tbk/matrix2.hpp"

namespace tbk {

/// The cubic factor u^3 + 2u^2 + u - 1 of the 8_11 p-rep polynomial.
IntPolynomial knot_8_11_factor();

/// Side-pairing words of the tentative Ford domain of the (27,17) cubic
/// class, all evaluated in SL_2(Z[u]) mod the factor.
///
///   u  = x1^-1 x2 x1^-1
///   v1 = u x2^-1 x1 x2^-1
///   w1 = v1 x1^-1 v1^-2 x2^-1 v1 x1^-1
struct RelationFixture {
    IntPolynomial factor;
    FreeWord u_word, v1_word, w1_word;
    PolyMatrix2 A, B, U, V1, V2, W1, Astar;
};

RelationFixture build_relation_fixture(const IntPolynomial& factor = knot_8_11_factor());

struct RelationCheck {
    std::string name;
    bool holds = false;
};

/// Checks, projectively mod the factor:
/// W1^2 = V1^3 = V2^3 = (A^-1 V1)^2 = (A^-1 V2)^2 = E, V1 = W1 U^-1,
/// V2 = U^-1 W1, U = A^-1 W1 A W1 A^-1, the two A_*-conjugacies into
/// SL_2(Z), theta(v1) = V1, and w1 x1 = x2 w1.
std::vector<RelationCheck> verify_relations(const RelationFixture& fix);

}  // namespace tbk
