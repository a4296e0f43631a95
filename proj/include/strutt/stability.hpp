#pragma once

// Stability classification of (alpha, beta) points, boundary-curve
// extraction (closed-form for the triangular wave, marching squares for the
// rectangular approximation), and rasterized stability diagrams.

#include "strutt/numeric.hpp"
#include "strutt/waveforms.hpp"

#include <vector>

namespace strutt::stability {

struct StabilityClass {
    enum class Label { Stable, Unstable, Boundary };
    Label label = Label::Boundary;
    double trace = 0.0;
};

/// |trace| < 2 - tol is stable, |trace| > 2 + tol unstable, else boundary.
StabilityClass classify(double trace, double tol);

/// Default classification tolerance: closed-form traces are exact to
/// rounding, numeric (cosine) traces carry integrator error.
double default_tol(const waveforms::Waveform& w);

enum class BoundaryKind { TracePlus2, TraceMinus2 };

struct BoundaryCurve {
    BoundaryKind kind = BoundaryKind::TracePlus2;
    std::vector<waveforms::StabilityParams> points; // ordered along the curve
    bool closed_form = false;
};

/// Exact boundary curves of the triangular wave inside
/// alpha in [alpha_min, alpha_max], |beta| <= beta_max:
///  - Tr = +2: vertical lines alpha = k^2 (two-point segments) and the pair
///    beta = +-2 sqrt(|alpha|) for alpha < 0;
///  - Tr = -2: beta = +-2 sqrt(alpha) |cot(pi sqrt(alpha))| between its
///    poles for alpha > 0, continued as +-2 sqrt(|alpha|) coth(pi sqrt(|alpha|))
///    for alpha < 0 (both are beta = 2|C/S| of the half-period trig pair).
std::vector<BoundaryCurve> boundary_triangular(BoundaryKind kind, double alpha_min,
                                               double alpha_max, int samples,
                                               double beta_max = 4.0);

struct StabilityGap {
    double beta_lower; // 2 sqrt(|alpha|)
    double beta_upper; // 2 sqrt(|alpha|) coth(pi sqrt(|alpha|))
};

/// Stabilization window of the inverted pendulum (alpha < 0, triangular
/// wave): |beta| strictly inside (beta_lower, beta_upper) is stable.
StabilityGap stability_gap_negative(double alpha);

struct Window {
    double alpha_min, alpha_max;
    double beta_min, beta_max;
};

struct Resolution {
    int n_alpha = 0;
    int n_beta = 0;
};

/// Contours of Tr = +-2 for the rectangular approximation, by marching
/// squares over a node lattice of `res` points with linear interpolation and
/// per-edge bisection (at most 20 halvings) toward |Tr -+ 2| <= refine_tol.
std::vector<BoundaryCurve> boundary_rectangular(int n, BoundaryKind kind, const Window& window,
                                                const Resolution& res, double refine_tol);

struct IdentityTerms {
    double A; // factored form, nonnegative for all alpha > 0 and n >= 1
    double B; // product form of the subharmonic-absence argument
};

/// The two bracketed terms of the Tr = -2 identity for the rectangular
/// wave.  A is evaluated in its factored form 2[1 - cos(4 sqrt(a)/n)] *
/// [1 - cos(2 pi sqrt(a) - 4 sqrt(a)/n)]; B as the product
/// -8 sin(4 sqrt(a)/n) cos(2 pi sqrt(a)) sin(pi sqrt(a) - 2 sqrt(a)/n).
IdentityTerms identity_terms_A_B(double alpha, int n);

struct DiagramGrid {
    Window window{};
    Resolution resolution{};
    // Row-major over cell centers: index = i_beta * n_alpha + i_alpha, with
    // beta rows ascending and cell centers at min + (i + 1/2) * step.
    std::vector<StabilityClass> cells;

    double alpha_center(int i_alpha) const;
    double beta_center(int i_beta) const;
    const StabilityClass& cell(int i_alpha, int i_beta) const;
    /// Cell containing the point (clamped to the window).
    const StabilityClass& cell_at(double alpha, double beta) const;
};

/// Rasterize the Ince-Strutt diagram: per-cell trace via the closed forms
/// (impulsive waveforms) or the numeric Floquet monodromy (cosine), then
/// classify with tol.
DiagramGrid diagram(const waveforms::Waveform& w, const Window& window, const Resolution& res,
                    double tol, const numeric::IntegratorConfig& cfg = {});

} // namespace strutt::stability
