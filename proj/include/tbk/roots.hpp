#pragma once

#include <complex>
#include <vector>

#include "tbk/int_polynomial.hpp"

namespace tbk {

/// All complex roots of a squarefree integer polynomial.
struct RootSet {
    std::vector<std::complex<double>> roots;  ///< sorted by real, then imaginary part
    std::vector<double> residuals;            ///< |p(root)|, same order
};

struct RootFinderOptions {
    int max_iterations = 500;
    int polish_steps = 8;
    /// Two roots closer than this signal a repeated root or a failed run.
    double cluster_tolerance = 1e-8;
};

/// Aberth-Ehrlich simultaneous iteration from a perturbed circle, then Newton
/// polishing against the exact integer coefficients in extended precision.
/// Non-real roots come out in exact conjugate pairs.
///
/// Throws PreconditionViolation for degree < 1 or a non-squarefree input,
/// NoConvergence if the iteration cap is hit or the result fails its checks.
RootSet find_roots(const IntPolynomial& p, const RootFinderOptions& options = {});

/// Residual bound a root set must satisfy: 1e-8 * (1 + |z|)^degree.
double residual_bound(std::complex<double> z, long degree);

/// Orders complex numbers by real part, then imaginary part.
bool root_order(std::complex<double> x, std::complex<double> y);

}  // namespace tbk
