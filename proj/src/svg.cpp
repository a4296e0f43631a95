#include "strutt/svg.hpp"

#include <cstdio>

namespace strutt::svg {

namespace {

using Label = stability::StabilityClass::Label;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

} // namespace

std::string render_diagram(const stability::DiagramGrid& grid,
                           const std::vector<stability::BoundaryCurve>& overlays) {
    const int na = grid.resolution.n_alpha;
    const int nb = grid.resolution.n_beta;
    const auto& win = grid.window;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(6 * na) + "\" height=\"" + std::to_string(6 * nb) +
           "\" viewBox=\"0 0 " + std::to_string(na) + " " + std::to_string(nb) + "\">\n";
    out += "<rect width=\"" + std::to_string(na) + "\" height=\"" + std::to_string(nb) +
           "\" fill=\"#ffffff\"/>\n";

    // Cells, merged into horizontal runs of equal class; stable cells are
    // covered by the white background.  Row ib sits at y = nb - 1 - ib so
    // that beta increases upward.
    for (int ib = 0; ib < nb; ++ib) {
        const int y = nb - 1 - ib;
        for (int ia = 0; ia < na;) {
            const Label label = grid.cell(ia, ib).label;
            int run = 1;
            while (ia + run < na && grid.cell(ia + run, ib).label == label) ++run;
            if (label != Label::Stable) {
                const char* fill = label == Label::Unstable ? "#c8c8c8" : "#000000";
                out += "<rect x=\"" + std::to_string(ia) + "\" y=\"" + std::to_string(y) +
                       "\" width=\"" + std::to_string(run) +
                       "\" height=\"1\" fill=\"" + fill + "\"/>\n";
            }
            ia += run;
        }
    }

    const double sx = na / (win.alpha_max - win.alpha_min);
    const double sy = nb / (win.beta_max - win.beta_min);
    for (const auto& curve : overlays) {
        if (curve.points.size() < 2) continue;
        out += "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"0.15\" points=\"";
        bool first = true;
        for (const auto& p : curve.points) {
            if (!first) out += ' ';
            first = false;
            out += num((p.alpha - win.alpha_min) * sx) + ',' +
                   num((win.beta_max - p.beta) * sy);
        }
        out += "\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace strutt::svg
