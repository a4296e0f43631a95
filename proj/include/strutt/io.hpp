#pragma once

// CSV serialization: stability diagrams, boundary curves, trajectories.
// All numbers are written with 12 significant digits, '.' decimal separator,
// LF line endings, one header row.

#include "strutt/numeric.hpp"
#include "strutt/stability.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace strutt::io {

/// 12-significant-digit decimal rendering (trailing zeros kept, so output
/// width is stable and files diff cleanly).
std::string format_number(double v);

/// S / U / B column code of a classification label.
char class_code(stability::StabilityClass::Label label);

void write_diagram_csv(std::ostream& out, const stability::DiagramGrid& grid);
void write_boundary_csv(std::ostream& out, const std::vector<stability::BoundaryCurve>& curves);
void write_trajectory_csv(std::ostream& out, const numeric::Trajectory& traj);

struct DiagramRow {
    double alpha;
    double beta;
    double trace;
    char cls;
};

/// Parse a diagram CSV produced by write_diagram_csv.  Throws
/// std::runtime_error on malformed input.
std::vector<DiagramRow> read_diagram_csv(std::istream& in);

} // namespace strutt::io
