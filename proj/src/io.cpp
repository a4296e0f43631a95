#include "strutt/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace strutt::io {

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    return buf;
}

char class_code(stability::StabilityClass::Label label) {
    switch (label) {
    case stability::StabilityClass::Label::Stable:   return 'S';
    case stability::StabilityClass::Label::Unstable: return 'U';
    case stability::StabilityClass::Label::Boundary: return 'B';
    }
    return '?';
}

void write_diagram_csv(std::ostream& out, const stability::DiagramGrid& grid) {
    out << "alpha,beta,trace,class\n";
    for (int jb = 0; jb < grid.resolution.n_beta; ++jb) {
        const std::string beta = format_number(grid.beta_center(jb));
        for (int ia = 0; ia < grid.resolution.n_alpha; ++ia) {
            const auto& c = grid.cell(ia, jb);
            out << format_number(grid.alpha_center(ia)) << ',' << beta << ','
                << format_number(c.trace) << ',' << class_code(c.label) << '\n';
        }
    }
}

void write_boundary_csv(std::ostream& out, const std::vector<stability::BoundaryCurve>& curves) {
    out << "curve_id,kind,alpha,beta\n";
    for (std::size_t id = 0; id < curves.size(); ++id) {
        auto points = curves[id].points;
        std::sort(points.begin(), points.end(), [](const auto& p, const auto& q) {
            return std::tie(p.alpha, p.beta) < std::tie(q.alpha, q.beta);
        });
        const char* kind =
            curves[id].kind == stability::BoundaryKind::TracePlus2 ? "plus2" : "minus2";
        for (const auto& p : points)
            out << id << ',' << kind << ',' << format_number(p.alpha) << ','
                << format_number(p.beta) << '\n';
    }
}

void write_trajectory_csv(std::ostream& out, const numeric::Trajectory& traj) {
    out << "t,theta,omega\n";
    for (const auto& s : traj.samples)
        out << format_number(s.t) << ',' << format_number(s.y.theta) << ','
            << format_number(s.y.omega) << '\n';
}

std::vector<DiagramRow> read_diagram_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "alpha,beta,trace,class")
        throw std::runtime_error("diagram CSV: missing or unexpected header");

    std::vector<DiagramRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        DiagramRow row{};
        char c1, c2, c3;
        if (!(ss >> row.alpha >> c1 >> row.beta >> c2 >> row.trace >> c3 >> row.cls) ||
            c1 != ',' || c2 != ',' || c3 != ',' ||
            (row.cls != 'S' && row.cls != 'U' && row.cls != 'B'))
            throw std::runtime_error("diagram CSV: malformed row at line " +
                                     std::to_string(lineno));
        rows.push_back(row);
    }
    return rows;
}

} // namespace strutt::io
