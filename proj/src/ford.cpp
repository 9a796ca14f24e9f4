#include "tbk/ford.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "tbk/errors.hpp"
#include "tbk/parallel.hpp"
#include "tbk/prep.hpp"

namespace tbk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// floor() that treats values within 1e-9 below an integer as that integer,
// so points on the far edge of the cell wrap to the near edge.
long snapped_floor(double x) {
    double f = std::floor(x);
    if (x - f > 1.0 - 1e-9) f += 1.0;
    return static_cast<long>(f);
}

auto label_key(const FreeWord& w, long shift) {
    return std::make_tuple(shift, w.length(), w.to_string());
}

}  // namespace

IsometricSphere isometric_sphere(const ComplexMatrix2& m, FreeWord label) {
    if (std::abs(m.c) <= 1e-12)
        throw NoIsometricSphere("element " + label.to_string() + " fixes infinity (c = 0)");
    return {-m.d / m.c, 1.0 / std::abs(m.c), std::move(label), {}};
}

CuspLattice::Reduction CuspLattice::reduce(std::complex<double> z) const {
    if (degenerate) {
        const long m = snapped_floor(z.real() / t1.real());
        return {z - static_cast<double>(m) * t1, m, 0};
    }
    const double t = z.imag() / t2.imag();
    const double s = z.real() - t * t2.real();
    const long m = snapped_floor(s);
    const long n = snapped_floor(t);
    return {z - static_cast<double>(m) * t1 - static_cast<double>(n) * t2, m, n};
}

std::vector<std::complex<double>> CuspLattice::vectors_near(std::complex<double> delta, double reach) const {
    std::vector<std::complex<double>> out;
    auto scan_row = [&](std::complex<double> base) {
        // v = base + m; need |Re(delta - base) - m| < reach at least.
        const double x = (delta - base).real();
        for (long m = static_cast<long>(std::floor(x - reach)); m <= static_cast<long>(std::ceil(x + reach)); ++m) {
            const std::complex<double> v = base + static_cast<double>(m) * t1;
            if (std::abs(delta - v) < reach) out.push_back(v);
        }
    };
    if (degenerate) {
        if (std::fabs(delta.imag()) < reach) scan_row(0.0);
        return out;
    }
    const double t = delta.imag() / t2.imag();
    const double span = reach / std::fabs(t2.imag());
    for (long n = static_cast<long>(std::floor(t - span)); n <= static_cast<long>(std::ceil(t + span)); ++n)
        scan_row(static_cast<double>(n) * t2);
    return out;
}

CuspLattice cusp_lattice(std::complex<double> g) {
    CuspLattice lat;
    lat.t2 = g;
    lat.degenerate = std::fabs(g.imag()) <= 1e-9;
    return lat;
}

std::vector<IsometricSphere> enumerate_spheres(const TwoBridgeForm& f, std::complex<double> omega, int depth) {
    if (depth < 1) throw PreconditionViolation("enumerate_spheres needs depth >= 1");
    const std::complex<double> g = longitude_entry(f, omega);
    const CuspLattice lattice = cusp_lattice(g);
    const FreeWord w = relator_word(f);
    const FreeWord gamma = longitude_word(f).word;
    const std::size_t max_len = std::min<std::size_t>(static_cast<std::size_t>(depth), w.length());

    std::vector<FreeWord> seeds;
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (std::size_t start = 0; start < w.length(); ++start) {
            FreeWord sub = w.cyclic_subword(start, len);
            seeds.push_back(sub.inverse());
            seeds.push_back(std::move(sub));
        }
    }

    struct Candidate {
        IsometricSphere sphere;
        long shift;
    };
    const std::vector<std::optional<Candidate>> found = parallel_map(seeds.size(), [&](std::size_t i) {
        const ComplexMatrix2 m = numeric_image(seeds[i], omega);
        if (std::abs(m.c) <= 1e-12) return std::optional<Candidate>{};
        const IsometricSphere raw = isometric_sphere(m, seeds[i]);
        const CuspLattice::Reduction red = lattice.reduce(raw.center);
        // Right-multiplying by x1^k moves the center by -k, by gamma_1^n by +n*g.
        FreeWord label = free_reduce(seeds[i] * FreeWord::x1().power(red.m) * gamma.power(-red.n));
        return std::optional<Candidate>{Candidate{{red.point, raw.radius, std::move(label), {}},
                                                  std::labs(red.m) + std::labs(red.n)}};
    });

    std::vector<Candidate> unique;
    for (const auto& cand : found) {
        if (!cand) continue;
        auto same = std::find_if(unique.begin(), unique.end(), [&](const Candidate& u) {
            return std::abs(u.sphere.center - cand->sphere.center) <= 1e-9 &&
                   std::fabs(u.sphere.radius - cand->sphere.radius) <= 1e-9;
        });
        if (same == unique.end()) {
            unique.push_back(*cand);
            continue;
        }
        if (label_key(cand->sphere.label, cand->shift) < label_key(same->sphere.label, same->shift)) {
            same->sphere.aliases.push_back(same->sphere.label);
            same->sphere.label = cand->sphere.label;
            same->shift = cand->shift;
        } else {
            same->sphere.aliases.push_back(cand->sphere.label);
        }
    }

    std::vector<IsometricSphere> out;
    out.reserve(unique.size());
    for (auto& u : unique) {
        auto& al = u.sphere.aliases;
        std::sort(al.begin(), al.end(), [](const FreeWord& x, const FreeWord& y) {
            return std::make_tuple(x.length(), x.to_string()) < std::make_tuple(y.length(), y.to_string());
        });
        al.erase(std::unique(al.begin(), al.end()), al.end());
        al.erase(std::remove(al.begin(), al.end(), u.sphere.label), al.end());
        out.push_back(std::move(u.sphere));
    }
    std::sort(out.begin(), out.end(), [](const IsometricSphere& x, const IsometricSphere& y) {
        if (x.radius != y.radius) return x.radius > y.radius;
        if (x.center.real() != y.center.real()) return x.center.real() < y.center.real();
        return x.center.imag() < y.center.imag();
    });
    return out;
}

FordPattern ford_pattern(std::span<const IsometricSphere> input, const CuspLattice& lattice, int samples) {
    if (input.empty()) throw EmptyPattern("no isometric spheres to arrange");
    if (samples < 256) throw PreconditionViolation("ford_pattern needs at least 256 samples per circle");

    FordPattern pat;
    pat.samples = samples;
    pat.spheres.assign(input.begin(), input.end());
    for (auto& s : pat.spheres) s.center = lattice.reduce(s.center).point;
    const auto& sph = pat.spheres;
    const std::size_t n = sph.size();

    // Lattice copies of every other disk that can reach circle i.
    struct Blocker {
        std::complex<double> center;
        double radius;
    };
    const auto blockers_for = [&](std::size_t i) {
        std::vector<Blocker> out;
        for (std::size_t j = 0; j < n; ++j) {
            const double reach = sph[i].radius + sph[j].radius;
            for (const auto& v : lattice.vectors_near(sph[i].center - sph[j].center, reach)) {
                if (j == i && std::abs(v) < 1e-12) continue;
                out.push_back({sph[j].center + v, sph[j].radius});
            }
        }
        return out;
    };

    pat.visible_arcs = parallel_map(n, [&](std::size_t i) {
        const std::vector<Blocker> blockers = blockers_for(i);
        const double step = kTwoPi / samples;
        std::vector<char> visible(static_cast<std::size_t>(samples));
        for (int k = 0; k < samples; ++k) {
            const double theta = (k + 0.5) * step;
            const std::complex<double> p = sph[i].center + std::polar(sph[i].radius, theta);
            bool hidden = false;
            for (const auto& b : blockers) {
                if (std::abs(p - b.center) < b.radius - 1e-12) {
                    hidden = true;
                    break;
                }
            }
            visible[static_cast<std::size_t>(k)] = !hidden;
        }

        std::vector<ArcInterval> arcs;
        const auto first_hidden = std::find(visible.begin(), visible.end(), 0);
        if (first_hidden == visible.end()) {
            arcs.push_back({0.0, kTwoPi});
            return arcs;
        }
        // Walk once around starting just after a hidden sample so no run wraps
        // past the starting index.
        const int origin = static_cast<int>(first_hidden - visible.begin());
        int run_start = -1;
        for (int off = 1; off <= samples; ++off) {
            const int k = (origin + off) % samples;
            const bool vis = visible[static_cast<std::size_t>(k)];
            if (vis && run_start < 0) run_start = origin + off;
            if (!vis && run_start >= 0) {
                const int run_end = origin + off;  // exclusive
                double start = run_start * step;
                double end = run_end * step;
                const double wraps = std::floor(start / kTwoPi);
                start -= wraps * kTwoPi;
                end -= wraps * kTwoPi;
                arcs.push_back({start, end});
                run_start = -1;
            }
        }
        std::sort(arcs.begin(), arcs.end(), [](const ArcInterval& x, const ArcInterval& y) { return x.start < y.start; });
        return arcs;
    });

    // Coverage on a grid over the cell.
    const int grid = std::max(16, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples)))));
    double ymin = 0.0, ymax = 1.0;
    if (lattice.degenerate) {
        ymin = sph.front().center.imag() - sph.front().radius;
        ymax = sph.front().center.imag() + sph.front().radius;
        for (const auto& s : sph) {
            ymin = std::min(ymin, s.center.imag() - s.radius);
            ymax = std::max(ymax, s.center.imag() + s.radius);
        }
    }
    long covered = 0;
    for (int a = 0; a < grid; ++a) {
        for (int b = 0; b < grid; ++b) {
            const double s = (a + 0.5) / grid;
            const double t = (b + 0.5) / grid;
            const std::complex<double> p = lattice.degenerate
                                               ? std::complex<double>(s, ymin + t * (ymax - ymin))
                                               : s * lattice.t1 + t * lattice.t2;
            const bool under = std::any_of(sph.begin(), sph.end(), [&](const IsometricSphere& sp) {
                return !lattice.vectors_near(p - sp.center, sp.radius).empty();
            });
            covered += under ? 1 : 0;
        }
    }
    pat.coverage = static_cast<double>(covered) / (static_cast<double>(grid) * grid);
    return pat;
}

std::optional<ShimizuWitness> shimizu_scan(const ComplexMatrix2& g1, const ComplexMatrix2& g2, int max_len) {
    if (max_entry_distance(g1, ComplexMatrix2::meridian_a()) > 1e-12)
        throw PreconditionViolation("shimizu_scan needs g1 = [[1,1],[0,1]]");
    if (max_len < 0 || max_len > 16) throw PreconditionViolation("shimizu_scan needs 0 <= max_len <= 16");

    const std::array<Letter, 4> letters{{{1, 1}, {2, 1}, {1, -1}, {2, -1}}};
    const std::array<ComplexMatrix2, 4> gens{g1, g2, g1.inverse(), g2.inverse()};

    using Key = std::array<double, 8>;
    auto key_of = [](const ComplexMatrix2& m) {
        auto q = [](double x) { return std::round(x * 1e9) / 1e9; };
        return Key{q(m.a.real()), q(m.a.imag()), q(m.b.real()), q(m.b.imag()),
                   q(m.c.real()), q(m.c.imag()), q(m.d.real()), q(m.d.imag())};
    };

    struct Node {
        ComplexMatrix2 m;
        std::vector<Letter> word;
    };
    std::map<Key, bool> seen;
    seen[key_of(ComplexMatrix2::identity())] = true;
    std::vector<Node> frontier{{ComplexMatrix2::identity(), {}}};

    for (int len = 1; len <= max_len; ++len) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (std::size_t g = 0; g < 4; ++g) {
                if (!node.word.empty() && node.word.back() == letters[g].inverse()) continue;
                const ComplexMatrix2 m = node.m * gens[g];
                if (!(std::abs(m.determinant() - 1.0) <= kComplexDetTolerance)) continue;
                if (!seen.emplace(key_of(m), true).second) continue;
                std::vector<Letter> word = node.word;
                word.push_back(letters[g]);
                const double c = std::abs(m.c);
                if (c > 1e-9 && c < 1.0 - 1e-9) return ShimizuWitness{FreeWord(std::move(word)), c};
                next.push_back({m, std::move(word)});
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace tbk
