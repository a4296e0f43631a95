#include "strutt/waveforms.hpp"

#include <cmath>

namespace strutt::waveforms {

namespace {

// Reduce t into [lo, lo + 2 pi).
double canonicalize(double t, double lo) {
    double s = std::fmod(t - lo, period);
    if (s < 0.0) s += period;
    return lo + s;
}

} // namespace

Waveform Waveform::rectangular_approx(int n) {
    if (n < 1)
        throw std::invalid_argument("rectangular_approx: n must be >= 1");
    const double half_pulse = 1.0 / n;
    if (!(half_pulse < period / 4.0))
        throw std::invalid_argument("rectangular_approx: ramp does not fit in a quarter period");
    return {Kind::RectangularApprox, n};
}

double pivot_position(const Waveform& w, double A, double t) {
    switch (w.kind) {
    case Kind::Triangular: {
        const double s = canonicalize(t, 0.0);
        const double pi = period / 2.0;
        if (s <= pi) return A - 2.0 * A * s / pi;
        return -3.0 * A + 2.0 * A * s / pi;
    }
    case Kind::RectangularApprox: {
        const double h = 1.0 / w.n;
        const double pi = period / 2.0;
        const double s = canonicalize(t, -h);
        if (s <= h) return A * w.n * s;             // rising ramp through t = 0
        if (s <= pi - h) return A;                  // upper flat
        if (s <= pi + h) return -A * w.n * (s - pi); // falling ramp through t = pi
        return -A;                                  // lower flat
    }
    case Kind::Cosine:
        return A * std::cos(t);
    }
    throw std::logic_error("pivot_position: unhandled waveform kind");
}

CoefficientModel coefficient_model(const Waveform& w, const StabilityParams& p) {
    const double pi = period / 2.0;
    CoefficientModel m;
    switch (w.kind) {
    case Kind::Triangular:
        // Corners of the pivot motion at t = 0 and t = pi; the acceleration
        // there is +/- (4A/pi) delta, i.e. -beta and +beta in scaled form.
        m.t_start = 0.0;
        m.impulses = {{0.0, -p.beta}, {pi, p.beta}};
        return m;
    case Kind::RectangularApprox: {
        const double h = 1.0 / w.n;
        const double g = w.n * p.beta;
        m.t_start = -h;
        m.impulses = {{-h, g}, {h, -g}, {pi - h, -g}, {pi + h, g}};
        return m;
    }
    case Kind::Cosine:
        m.t_start = 0.0;
        m.smooth = [beta = p.beta](double t) { return beta * std::cos(t); };
        return m;
    }
    throw std::logic_error("coefficient_model: unhandled waveform kind");
}

StabilityParams params_from_physical(const PhysicalParams& ph, const Waveform& w) {
    if (!(ph.l > 0.0))
        throw std::invalid_argument("params_from_physical: pendulum length must be positive");
    if (!(ph.g > 0.0))
        throw std::invalid_argument("params_from_physical: gravitational acceleration must be positive");
    if (!(ph.Omega > 0.0))
        throw std::invalid_argument("params_from_physical: drive frequency must be positive");
    if (ph.A < 0.0)
        throw std::invalid_argument("params_from_physical: pivot amplitude must be nonnegative");

    double alpha = ph.g / ph.l / (ph.Omega * ph.Omega);
    if (ph.orientation == Orientation::Inverted) alpha = -alpha;

    const double pi = period / 2.0;
    double beta = 0.0;
    switch (w.kind) {
    case Kind::Triangular:        beta = 4.0 * ph.A / (pi * ph.l); break;
    case Kind::RectangularApprox: beta = ph.A / ph.l; break;
    case Kind::Cosine:            beta = -ph.A / ph.l; break;
    }
    return {alpha, beta};
}

} // namespace strutt::waveforms
