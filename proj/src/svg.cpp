#include "tbk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace tbk {

namespace {

constexpr double kScale = 100.0;

std::string num(double x) {
    if (std::fabs(x) < 5e-5) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

struct View {
    double xmin, xmax, ymin, ymax;
    double px(double x) const { return (x - xmin) * kScale; }
    double py(double y) const { return (ymax - y) * kScale; }
};

}  // namespace

std::string render_svg(const FordPattern& pattern, const CuspLattice& lattice) {
    std::vector<std::complex<double>> cell;
    if (lattice.degenerate) {
        double ylo = -0.5, yhi = 0.5;
        if (!pattern.spheres.empty()) {
            ylo = yhi = pattern.spheres.front().center.imag();
            for (const auto& s : pattern.spheres) {
                ylo = std::min(ylo, s.center.imag() - s.radius);
                yhi = std::max(yhi, s.center.imag() + s.radius);
            }
        }
        cell = {{0.0, ylo}, {1.0, ylo}, {1.0, yhi}, {0.0, yhi}};
    } else {
        cell = {0.0, lattice.t1, lattice.t1 + lattice.t2, lattice.t2};
    }

    double xmin = cell[0].real(), xmax = xmin, ymin = cell[0].imag(), ymax = ymin;
    for (const auto& z : cell) {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, z.imag());
        ymax = std::max(ymax, z.imag());
    }
    const double mx = 0.1 * (xmax - xmin), my = 0.1 * (ymax - ymin);
    const View v{xmin - mx, xmax + mx, ymin - my, ymax + my};
    const double width = (v.xmax - v.xmin) * kScale;
    const double height = (v.ymax - v.ymin) * kScale;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    os << "<polygon class=\"cell\" fill=\"none\" stroke=\"#808080\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) os << ' ';
        os << num(v.px(cell[i].real())) << ',' << num(v.py(cell[i].imag()));
    }
    os << "\"/>\n";

    for (std::size_t i = 0; i < pattern.spheres.size(); ++i) {
        const IsometricSphere& s = pattern.spheres[i];
        const std::vector<ArcInterval> arcs =
            i < pattern.visible_arcs.size() ? pattern.visible_arcs[i] : std::vector<ArcInterval>{};
        const bool full = arcs.size() == 1 && arcs[0].measure() >= 2.0 * std::numbers::pi - 1e-12;
        const double cx = v.px(s.center.real()), cy = v.py(s.center.imag()), r = s.radius * kScale;

        os << "<g class=\"sphere\">\n<title>" << s.label.to_string();
        for (const auto& alias : s.aliases) os << ' ' << alias.to_string();
        os << "</title>\n";
        if (full) {
            os << "<circle class=\"visible\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
               << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        } else {
            os << "<circle class=\"hidden\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
               << "\" fill=\"none\" stroke=\"#a0a0a0\" stroke-width=\"0.5\" stroke-dasharray=\"3 3\"/>\n";
            for (const auto& arc : arcs) {
                const double x0 = v.px(s.center.real() + s.radius * std::cos(arc.start));
                const double y0 = v.py(s.center.imag() + s.radius * std::sin(arc.start));
                const double x1 = v.px(s.center.real() + s.radius * std::cos(arc.end));
                const double y1 = v.py(s.center.imag() + s.radius * std::sin(arc.end));
                const int large = arc.measure() > std::numbers::pi ? 1 : 0;
                // y is flipped, so counterclockwise in the plane is sweep-flag 0.
                os << "<path class=\"visible\" d=\"M " << num(x0) << ' ' << num(y0) << " A " << num(r) << ' '
                   << num(r) << " 0 " << large << " 0 " << num(x1) << ' ' << num(y1)
                   << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            }
        }
        os << "<text x=\"" << num(cx) << "\" y=\"" << num(cy)
           << "\" font-size=\"8\" text-anchor=\"middle\" font-family=\"monospace\">" << s.label.to_string()
           << "</text>\n</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tbk
