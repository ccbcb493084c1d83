// SVG rendering of wall diagrams: chamber cells filled by slope-difference
// sign, the wall conic drawn as polylines from exact root enclosures.
#pragma once

#include "tiltstab/stability.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace tiltstab {

namespace detail {

inline double svg_midpoint(const RatInterval& iv) { return to_double((iv.lo + iv.hi) / 2); }

/// Real roots in beta of c2 b^2 + c3 b + (c4 + c1 a^2) = 0, as midpoints of
/// exact enclosures; sign decisions (discriminant, degeneracy) stay rational.
inline std::vector<double> conic_beta_roots(const WallConic& w, const Rational& alpha) {
    const Rational constant = w.c4 + w.c1 * alpha * alpha;
    std::vector<double> roots;
    if (w.c2 == 0) {
        if (w.c3 != 0) roots.push_back(to_double(Rational(-constant / w.c3)));
        return roots;
    }
    const Rational disc = w.c3 * w.c3 - 4 * w.c2 * constant;
    if (disc < 0) return roots;
    const RatInterval s = sqrt_enclosure(disc, Rational(1, 1000000000));
    const double sd = svg_midpoint(s);
    const double c2 = to_double(w.c2), c3 = to_double(w.c3);
    roots.push_back((-c3 - sd) / (2 * c2));
    roots.push_back((-c3 + sd) / (2 * c2));
    return roots;
}

}  // namespace detail

/// Renders the diagram: one rect per grid cell (two chamber fills, a neutral
/// fill for exact wall contact), plus the conic sampled at 4x the alpha grid.
inline std::string wall_diagram_svg(const WallDiagram& d) {
    const int W = 800, H = 800, M = 40;
    const double alo = to_double(d.grid.alpha_lo), ahi = to_double(d.grid.alpha_hi);
    const double blo = to_double(d.grid.beta_lo), bhi = to_double(d.grid.beta_hi);
    const double bspan = bhi > blo ? bhi - blo : 1.0;
    auto px = [&](double alpha) { return M + (alpha - alo) / (ahi - alo) * (W - 2 * M); };
    auto py = [&](double beta) { return H - M - (beta - blo) / bspan * (H - 2 * M); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    const double cw = (W - 2.0 * M) / d.alpha_nodes.size();
    const double ch = (H - 2.0 * M) / d.beta_nodes.size();
    for (std::size_t i = 0; i < d.alpha_nodes.size(); ++i)
        for (std::size_t j = 0; j < d.beta_nodes.size(); ++j) {
            const int s = d.sign_at(i, j);
            const char* fill = s > 0 ? "#9ecae1" : (s < 0 ? "#fdae6b" : "#cccccc");
            const double x = px(to_double(d.alpha_nodes[i])) - cw / 2;
            const double y = py(to_double(d.beta_nodes[j])) - ch / 2;
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\"" << ch
                << "\" fill=\"" << fill << "\"/>\n";
        }

    if (d.conic.degenerate) {
        out << "<text x=\"" << W / 2 << "\" y=\"" << M / 2 + 8
            << "\" text-anchor=\"middle\" font-family=\"monospace\">degenerate wall: identically zero "
               "conic</text>\n";
    } else {
        // Two branches sampled on a finer alpha grid.
        const std::size_t samples = d.alpha_nodes.size() * 4;
        std::vector<std::string> branches(2);
        for (std::size_t i = 0; i <= samples; ++i) {
            const Rational alpha = d.grid.alpha_lo + (d.grid.alpha_hi - d.grid.alpha_lo) *
                                                         Rational(Int(i + 1), Int(samples + 1));
            const auto roots = detail::conic_beta_roots(d.conic, alpha);
            for (std::size_t b = 0; b < roots.size() && b < 2; ++b) {
                const double beta = roots[b];
                if (beta < blo || beta > bhi) continue;
                std::ostringstream pt;
                pt << px(to_double(alpha)) << "," << py(beta) << " ";
                branches[b] += pt.str();
            }
        }
        for (const auto& pts : branches)
            if (!pts.empty())
                out << "<polyline points=\"" << pts
                    << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
    }

    out << "<text x=\"" << W - M << "\" y=\"" << H - 10
        << "\" text-anchor=\"end\" font-family=\"monospace\">alpha</text>\n";
    out << "<text x=\"10\" y=\"" << M << "\" font-family=\"monospace\">beta</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace tiltstab
