#pragma once

// Pivot-motion models for the parametrically driven pendulum: the triangular
// wave, the finite-slope approximation of the rectangular wave, and the
// cosine wave.  A waveform yields either an impulse train (the distributional
// acceleration of a piecewise-linear pivot motion) or a smooth coefficient;
// both are carried by CoefficientModel so downstream code is generic.

#include <functional>
#include <stdexcept>
#include <vector>

namespace strutt::waveforms {

inline constexpr double period = 6.283185307179586476925286766559; // 2 pi

enum class Kind { Triangular, RectangularApprox, Cosine };

struct Waveform {
    Kind kind = Kind::Triangular;
    int n = 0; // slope parameter, RectangularApprox only

    static Waveform triangular() { return {Kind::Triangular, 0}; }
    static Waveform cosine() { return {Kind::Cosine, 0}; }
    static Waveform rectangular_approx(int n);
};

enum class Orientation { Pendent, Inverted };

struct PhysicalParams {
    double A;     // pivot amplitude
    double l;     // pendulum length
    double g;     // gravitational acceleration
    double Omega; // pivot angular frequency
    Orientation orientation = Orientation::Pendent;
};

/// Dimensionless coordinates of the Ince-Strutt plane.  alpha > 0 is the
/// hanging pendulum, alpha < 0 the inverted one; beta measures the drive
/// amplitude and its exact definition depends on the waveform.
struct StabilityParams {
    double alpha;
    double beta;
};

struct ImpulseEvent {
    double time;   // within [t_start, t_start + 2 pi)
    double weight; // Gamma, coefficient of the Dirac term
};

/// One period of the coefficient q(t) in theta'' + (alpha + q(t)) theta = 0,
/// as either an impulse train or a smooth function (exactly one is present).
/// `breakpoints` lists additional times (same canonical period) where a
/// piecewise-defined smooth coefficient changes branch, so integrators can
/// align steps to them.
struct CoefficientModel {
    double t_start = 0.0;
    std::vector<ImpulseEvent> impulses;
    std::function<double(double)> smooth;
    std::vector<double> breakpoints;

    bool impulsive() const { return !impulses.empty(); }
};

/// Pivot elevation xi(t) for amplitude A, using the 2 pi-periodic extension.
double pivot_position(const Waveform& w, double A, double t);

/// Impulse train / smooth coefficient of the linearized equation at the
/// given dimensionless parameters.
CoefficientModel coefficient_model(const Waveform& w, const StabilityParams& p);

/// Map physical pendulum data to the dimensionless plane:
/// alpha = (g/l)/Omega^2 (negated for the inverted orientation), and
/// beta = 4A/(pi l), A/l, -A/l for triangular / rectangular / cosine.
StabilityParams params_from_physical(const PhysicalParams& ph, const Waveform& w);

} // namespace strutt::waveforms
