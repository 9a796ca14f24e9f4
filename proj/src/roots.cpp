#include "tbk/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

using cld = std::complex<long double>;

struct ValueAndSlope {
    cld value;
    cld slope;
};

ValueAndSlope horner2(const std::vector<long double>& c, cld z) {
    cld p = 0.0L, dp = 0.0L;
    for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

// Rounding-error scale of evaluating p at z by Horner's rule.
long double horner_noise(const std::vector<long double>& c, cld z) {
    const long double az = std::abs(z);
    long double acc = 0.0L;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * az + std::fabs(c[k]);
    return 4.0L * static_cast<long double>(c.size()) * std::numeric_limits<long double>::epsilon() * acc;
}

// Initial radius: max |c_k / c_n|^(1/(n-k)), an upper-bound-flavoured scale
// for the root moduli (Fujiwara's bound up to a factor 2).
long double initial_radius(const std::vector<long double>& c) {
    const std::size_t n = c.size() - 1;
    long double r = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
        if (c[k] == 0.0L) continue;
        r = std::max(r, std::pow(std::fabs(c[k] / c[n]), 1.0L / static_cast<long double>(n - k)));
    }
    return r > 0.0L ? r : 1.0L;
}

cld newton_polish(const std::vector<long double>& c, cld z, int steps) {
    for (int s = 0; s < steps; ++s) {
        const auto [p, dp] = horner2(c, z);
        if (p == 0.0L || dp == 0.0L) break;
        const cld step = p / dp;
        z -= step;
        if (std::abs(step) <= 1e-19L * (1.0L + std::abs(z))) break;
    }
    return z;
}

}  // namespace

bool root_order(std::complex<double> x, std::complex<double> y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}

double residual_bound(std::complex<double> z, long degree) {
    return 1e-8 * std::pow(1.0 + std::abs(z), static_cast<double>(degree));
}

RootSet find_roots(const IntPolynomial& p, const RootFinderOptions& options) {
    if (p.degree() < 1) throw PreconditionViolation("find_roots needs degree >= 1");
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw PreconditionViolation("find_roots needs a squarefree polynomial; got " + p.to_string());

    const std::vector<long double> c = to_long_double(p);
    const std::size_t n = static_cast<std::size_t>(p.degree());

    std::vector<cld> z(n);
    if (n == 1) {
        z[0] = -c[0] / c[1];
    } else {
        const long double r = initial_radius(c);
        const long double pi = std::numbers::pi_v<long double>;
        for (std::size_t k = 0; k < n; ++k) {
            // Offset angle and slight radial spread break the symmetry that
            // stalls simultaneous iteration on conjugate-symmetric inputs.
            const long double theta = 2.0L * pi * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
            const long double rk = r * (1.0L + 0.01L * static_cast<long double>(k) / static_cast<long double>(n));
            z[k] = std::polar(rk, theta);
        }

        // A root is frozen once its step is negligible or |p(z)| is down in
        // the rounding noise of Horner's rule; clustered roots never get the
        // former.
        std::vector<bool> done(n, false);
        bool converged = false;
        for (int it = 0; it < options.max_iterations && !converged; ++it) {
            converged = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (done[k]) continue;
                const auto [pv, dpv] = horner2(c, z[k]);
                if (std::abs(pv) <= horner_noise(c, z[k])) {
                    done[k] = true;
                    continue;
                }
                const cld ratio = pv / dpv;
                cld sum = 0.0L;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) sum += 1.0L / (z[k] - z[j]);
                const cld step = ratio / (1.0L - ratio * sum);
                z[k] -= step;
                if (std::abs(step) <= 1e-15L * (1.0L + std::abs(z[k])))
                    done[k] = true;
                else
                    converged = false;
            }
        }
        if (!converged)
            throw NoConvergence("root iteration hit the cap of " + std::to_string(options.max_iterations) +
                                " iterations for " + p.to_string());
    }

    for (auto& root : z) root = newton_polish(c, root, options.polish_steps);

    // Conjugate pairing: snap near-real roots onto the axis, then match each
    // upper-half-plane root with its mirror.
    std::vector<std::complex<double>> out;
    std::vector<cld> upper, lower;
    for (const cld& root : z) {
        if (std::fabs(root.imag()) <= 1e-9L * (1.0L + std::abs(root))) {
            cld real_root = newton_polish(c, cld(root.real(), 0.0L), options.polish_steps);
            out.emplace_back(static_cast<double>(real_root.real()), 0.0);
        } else if (root.imag() > 0) {
            upper.push_back(root);
        } else {
            lower.push_back(root);
        }
    }
    if (upper.size() != lower.size())
        throw NoConvergence("unpaired non-real roots for " + p.to_string());
    std::vector<bool> used(lower.size(), false);
    for (const cld& up : upper) {
        std::size_t best = lower.size();
        long double best_dist = 0.0L;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            long double dist = std::abs(up - std::conj(lower[j]));
            if (best == lower.size() || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best_dist > 1e-6L * (1.0L + std::abs(up)))
            throw NoConvergence("conjugate pairing failed for " + p.to_string());
        used[best] = true;
        const cld mid = (up + std::conj(lower[best])) / 2.0L;
        out.emplace_back(static_cast<double>(mid.real()), static_cast<double>(mid.imag()));
        out.emplace_back(static_cast<double>(mid.real()), -static_cast<double>(mid.imag()));
    }

    std::sort(out.begin(), out.end(), root_order);
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (std::abs(out[i] - out[j]) < options.cluster_tolerance)
                throw NoConvergence("root cluster detected for " + p.to_string());

    RootSet rs;
    rs.roots = out;
    rs.residuals.reserve(out.size());
    for (const auto& root : out) {
        const double res = static_cast<double>(std::abs(horner2(c, cld(root.real(), root.imag())).value));
        if (!(res < residual_bound(root, p.degree())))
            throw NoConvergence("root residual " + std::to_string(res) + " too large for " + p.to_string());
        rs.residuals.push_back(res);
    }
    return rs;
}

}  // namespace tbk
