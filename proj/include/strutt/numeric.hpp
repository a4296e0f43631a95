#pragma once

// Independent verification engine: a fixed-step integrator for the linear
// impulsive equation (steps aligned exactly to impulse times, velocity jump
// applied at each event), the numeric Floquet monodromy built from it, the
// mollified-impulse oracle, and the nonlinear pendulum simulator.

#include "strutt/monodromy.hpp"
#include "strutt/waveforms.hpp"

#include <optional>
#include <vector>

namespace strutt::numeric {

struct State {
    double theta = 0.0; // angular displacement
    double omega = 0.0; // d theta / dt (dimensionless time)
};

enum class Scheme { RungeKutta4 };

struct IntegratorConfig {
    int steps_per_period = 4096; // must be >= 16
    Scheme scheme = Scheme::RungeKutta4;
    // When set, every Dirac impulse is replaced by a centered rectangular
    // pulse of the same weight, height Gamma/epsilon and width epsilon.
    // Must satisfy epsilon < (smallest inter-impulse gap)/4.
    std::optional<double> mollify_epsilon;
};

struct TimeSpan {
    double t0 = 0.0;
    double t1 = 0.0;
};

struct TrajectorySample {
    double t;
    State y;
};

/// theta stays continuous across events; omega jumps by -Gamma * theta
/// (linear) or -Gamma * sin(theta) (nonlinear).  `events` records the
/// impulses actually applied, at their absolute times.
struct Trajectory {
    std::vector<TrajectorySample> samples;
    std::vector<waveforms::ImpulseEvent> events;
};

/// Integrate theta'' + (alpha + q(t)) theta = 0 over the span.  Step
/// endpoints land exactly on impulse times and on breakpoints of a
/// piecewise-smooth coefficient, so no step straddles a discontinuity.
Trajectory integrate_linear(const waveforms::CoefficientModel& model, double alpha,
                            State y0, TimeSpan span, const IntegratorConfig& cfg);

/// Smooth counterpart of an impulsive model: each Dirac impulse becomes a
/// centered rectangular pulse of height Gamma/epsilon and width epsilon,
/// with the pulse edges listed as breakpoints.  Rejects widths at which
/// pulses would overlap (epsilon must stay below a quarter of the smallest
/// inter-impulse gap).
waveforms::CoefficientModel mollify(const waveforms::CoefficientModel& model, double epsilon);

/// Numeric Floquet monodromy: columns are the integrator's images of (1,0)
/// and (0,1) over one period starting at the waveform's period anchor.
/// Works for all three waveforms; it is the primary method for the cosine.
monodromy::MonodromyResult monodromy_numeric(const waveforms::Waveform& w,
                                             const waveforms::StabilityParams& p,
                                             const IntegratorConfig& cfg);

/// Trace of the monodromy of the mollified system (Dirac -> rectangular
/// pulse of width epsilon).  Converges to the impulsive trace as epsilon -> 0
/// at first order, which is the check that the jump rule is the right limit.
double mollified_trace(const waveforms::Waveform& w, const waveforms::StabilityParams& p,
                       double epsilon, IntegratorConfig cfg);

/// Integrate the full nonlinear equation theta'' + (alpha + q(t)) sin(theta) = 0
/// for `duration` time units from the waveform's period anchor, applying the
/// impulse rule Delta omega = -Gamma sin(theta) at events.
Trajectory simulate_nonlinear(const waveforms::Waveform& w, const waveforms::StabilityParams& p,
                              State y0, double duration, const IntegratorConfig& cfg);

} // namespace strutt::numeric
