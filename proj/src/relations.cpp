#include "tbk/relations.hpp"

namespace tbk {

IntPolynomial knot_8_11_factor() { return IntPolynomial{-1, 1, 2, 1}; }

RelationFixture build_relation_fixture(const IntPolynomial& factor) {
    RelationFixture fix;
    fix.factor = factor;
    fix.A = PolyMatrix2::meridian_a(factor);
    fix.B = PolyMatrix2::meridian_b(factor);

    fix.u_word = FreeWord::parse("AbA");
    fix.v1_word = fix.u_word * FreeWord::parse("BaB");
    fix.w1_word = fix.v1_word * FreeWord::parse("A") * fix.v1_word.power(-2) * FreeWord::parse("B") * fix.v1_word *
                  FreeWord::parse("A");

    fix.U = word_image(fix.u_word, fix.A, fix.B);
    fix.W1 = word_image(fix.w1_word, fix.A, fix.B);
    fix.V1 = fix.W1 * fix.U.inverse();
    fix.V2 = fix.U.inverse() * fix.W1;
    fix.Astar = PolyMatrix2(IntPolynomial{1}, IntPolynomial{0, 1, 1}, {}, IntPolynomial{1}, factor);
    return fix;
}

std::vector<RelationCheck> verify_relations(const RelationFixture& fix) {
    const auto& f = fix.factor;
    const PolyMatrix2 E = PolyMatrix2::identity(f);
    const PolyMatrix2 Ai = fix.A.inverse();
    const PolyMatrix2 rot3(IntPolynomial{0}, IntPolynomial{-1}, IntPolynomial{1}, IntPolynomial{1}, f);
    const PolyMatrix2 rot3b(IntPolynomial{1}, IntPolynomial{-1}, IntPolynomial{1}, IntPolynomial{0}, f);

    return {
        {"W1^2 = E", projectively_equal(fix.W1.power(2), E)},
        {"V1^3 = E", projectively_equal(fix.V1.power(3), E)},
        {"V2^3 = E", projectively_equal(fix.V2.power(3), E)},
        {"(A^-1 V1)^2 = E", projectively_equal((Ai * fix.V1).power(2), E)},
        {"(A^-1 V2)^2 = E", projectively_equal((Ai * fix.V2).power(2), E)},
        {"V1 = W1 U^-1", projectively_equal(fix.V1, fix.W1 * fix.U.inverse())},
        {"V2 = U^-1 W1", projectively_equal(fix.V2, fix.U.inverse() * fix.W1)},
        {"U = A^-1 W1 A W1 A^-1", projectively_equal(fix.U, Ai * fix.W1 * fix.A * fix.W1 * Ai)},
        {"V1 = A*^-1 [[0,-1],[1,1]] A*", projectively_equal(fix.V1, fix.Astar.inverse() * rot3 * fix.Astar)},
        {"V2 = A* [[1,-1],[1,0]] A*^-1", projectively_equal(fix.V2, fix.Astar * rot3b * fix.Astar.inverse())},
        {"theta(v1) = V1", projectively_equal(word_image(fix.v1_word, fix.A, fix.B), fix.V1)},
        {"w1 x1 = x2 w1", fix.W1 * fix.A == fix.B * fix.W1},
    };
}

}  // namespace tbk
