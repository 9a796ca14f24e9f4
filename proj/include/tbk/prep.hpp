#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tbk/errors.hpp"
#include "tbk/int_polynomial.hpp"
#include "tbk/matrix2.hpp"
#include "tbk/roots.hpp"
#include "tbk/twobridge.hpp"

namespace tbk {

/// The p-rep polynomial of a two-bridge form: sign-normalized (1,1) entry of
/// the relator image under x1 -> A, x2 -> B_u.
struct PRepPolynomial {
    IntPolynomial lambda;
    TwoBridgeForm form;
};

/// Image of the relator word w over Z[u] under x1 -> A, x2 -> B_u.
PolyMatrix2 symbolic_relator_image(const TwoBridgeForm& f);

/// Throws DegenerateForm if the (1,1) entry vanishes identically.
PRepPolynomial prep_polynomial(const TwoBridgeForm& f);

/// Numeric image of a word under theta(omega).
ComplexMatrix2 numeric_image(const FreeWord& w, std::complex<double> omega);

/// Tolerances for the numeric longitude check.
inline constexpr double kRepresentationResidual = 1e-8;
inline constexpr double kLongitudeShapeTolerance = 1e-6;

/// Upper-right entry g of the longitude image [[-1, g], [0, -1]] at a root
/// omega of Lambda. Throws NotARepresentation when |Lambda(omega)| >= 1e-8 and
/// ShapeViolation when the image is not of that shape.
std::complex<double> longitude_entry(const TwoBridgeForm& f, std::complex<double> omega);

/// Same, computed exactly in Z[u] mod factor; returns g as a residue
/// polynomial. A constant residue means g is rational on the whole class.
IntPolynomial longitude_entry_exact(const TwoBridgeForm& f, const IntPolynomial& factor);

/// A rational p/q with small denominator.
struct SmallRational {
    long num = 0;
    long den = 1;
    friend bool operator==(const SmallRational&, const SmallRational&) = default;
};

/// Nearest p/q with q <= max_den within tol of z (which must be near-real).
std::optional<SmallRational> near_rational(std::complex<double> z, long max_den = 16, double tol = 1e-6);

/// One algebraic equivalence class of p-reps.
struct PRepClass {
    IntPolynomial factor;  ///< positive leading coefficient, divides Lambda
    std::vector<std::complex<double>> roots;
    std::vector<std::complex<double>> longitude_entries;  ///< g(root), same order
    std::optional<SmallRational> g_rational;  ///< set when every g is the same small rational
    std::optional<IntPolynomial> g_residue;   ///< g as a residue mod factor, when the form is known
};

/// A root with its tag (normally its longitude entry).
struct RootTag {
    std::complex<double> root;
    std::complex<double> g;
};

class FactorReconstructionFailed : public Error {
public:
    FactorReconstructionFailed(const std::string& what, std::vector<PRepClass> partial)
        : Error("FactorReconstructionFailed", what), partial_(std::move(partial)) {}
    const std::vector<PRepClass>& partial() const noexcept { return partial_; }

private:
    std::vector<PRepClass> partial_;
};

/// Splits lambda into integer factors using only the tagged roots: roots
/// whose tags agree (within 1e-6, closed under conjugation) are multiplied
/// out first; whatever remains goes through an exhaustive search over
/// conjugation-closed subsets (up to 16 roots). Every candidate is certified
/// by exact division. The factors multiply back to lambda exactly.
/// lambda must be monic up to sign and carry one tag per root.
std::vector<PRepClass> detect_factors(const IntPolynomial& lambda, std::span<const RootTag> tags);

/// Full pipeline: roots, longitude entries, then the split above. Each class
/// also gets its exact longitude residue.
std::vector<PRepClass> detect_factors(const PRepPolynomial& p);

/// Everything known about the p-reps of one form, in deterministic order.
struct PRepReport {
    TwoBridgeForm form;
    IntPolynomial lambda;
    RootSet roots;                           ///< sorted by real, then imaginary part
    std::vector<std::complex<double>> g;     ///< longitude entry per root
    std::vector<PRepClass> classes;          ///< sorted by degree, then coefficients
    std::vector<std::vector<std::size_t>> class_root_indices;  ///< indices into roots
    std::map<std::string, double> timings_ms;
};

PRepReport prep_report(const TwoBridgeForm& f);

}  // namespace tbk
