#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "tbk/free_word.hpp"
#include "tbk/matrix2.hpp"
#include "tbk/twobridge.hpp"

namespace tbk {

/// Isometric circle |cz + d| = 1 of an element with c != 0.
struct IsometricSphere {
    std::complex<double> center;  ///< -d/c
    double radius = 0.0;          ///< 1/|c|
    FreeWord label;               ///< word of the element
    std::vector<FreeWord> aliases;  ///< other words landing on the same circle
};

/// Throws NoIsometricSphere when |c| <= 1e-12.
IsometricSphere isometric_sphere(const ComplexMatrix2& m, FreeWord label);

/// Translation lattice z -> z + 1, z -> z + g of the cusp at infinity. With
/// real g the lattice is degenerate and only z -> z + 1 is used.
struct CuspLattice {
    std::complex<double> t1{1.0, 0.0};
    std::complex<double> t2{0.0, 0.0};
    bool degenerate = true;

    /// Result of moving a point into the fundamental cell.
    struct Reduction {
        std::complex<double> point;
        long m = 0;  ///< point = z - m*t1 - n*t2
        long n = 0;
    };

    /// Fundamental cell is {s + t*t2 : 0 <= s, t < 1}, or the strip
    /// 0 <= Re z < 1 when degenerate.
    Reduction reduce(std::complex<double> z) const;

    /// Lattice vectors v with |delta - v| < reach.
    std::vector<std::complex<double>> vectors_near(std::complex<double> delta, double reach) const;
};

CuspLattice cusp_lattice(std::complex<double> g);

/// Isometric circles of theta(omega) on cyclic subwords of w (and their
/// inverses) up to `depth` letters, translated into the fundamental cell of
/// the cusp lattice (1, g(omega)). Translations append x1^k and gamma_1^n to
/// the label. Deduplicated within 1e-9, sorted by descending radius.
std::vector<IsometricSphere> enumerate_spheres(const TwoBridgeForm& f, std::complex<double> omega, int depth);

/// An angular interval [start, end] in radians, 0 <= start < 2*pi, end > start
/// (end may pass 2*pi when the arc wraps).
struct ArcInterval {
    double start = 0.0;
    double end = 0.0;
    double measure() const { return end - start; }
};

struct FordPattern {
    std::vector<IsometricSphere> spheres;                 ///< centers reduced into the cell
    std::vector<std::vector<ArcInterval>> visible_arcs;  ///< per sphere
    /// Fraction of a sample grid over the cell (or the strip band spanned by
    /// the circles, when degenerate) lying under at least one circle.
    double coverage = 0.0;
    int samples = 0;
};

inline constexpr int kDefaultArcSamples = 2048;

/// Visible arcs by angular sampling against all other lattice-translated open
/// disks. Throws EmptyPattern for no spheres, PreconditionViolation for
/// samples < 256.
FordPattern ford_pattern(std::span<const IsometricSphere> spheres, const CuspLattice& lattice,
                         int samples = kDefaultArcSamples);

/// An element violating the discreteness bound 0 < |c| < 1.
struct ShimizuWitness {
    FreeWord word;
    double c_abs = 0.0;
};

/// Breadth-first search through freely reduced words in g1, g2 (letter order
/// a, b, A, B) for an element with 1e-9 < |c| < 1 - 1e-9. g1 must be
/// [[1,1],[0,1]] and max_len <= 16. Matrices seen before (within 1e-9) are not
/// expanded again.
std::optional<ShimizuWitness> shimizu_scan(const ComplexMatrix2& g1, const ComplexMatrix2& g2, int max_len);

}  // namespace tbk
