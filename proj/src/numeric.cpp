#include "strutt/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strutt::numeric {

using waveforms::CoefficientModel;
using waveforms::ImpulseEvent;
using waveforms::period;

namespace {

void validate(const IntegratorConfig& cfg) {
    if (cfg.steps_per_period < 16)
        throw std::invalid_argument("IntegratorConfig: steps_per_period must be >= 16");
    if (cfg.mollify_epsilon && !(*cfg.mollify_epsilon > 0.0))
        throw std::invalid_argument("IntegratorConfig: mollify_epsilon must be positive");
}

// A node is a time where the integrator must place a step endpoint: an
// impulse (weight != 0) or a breakpoint of the smooth coefficient.
struct Node {
    double t;
    double weight;
};

void instantiate_periodic(double anchor, double weight, double t0, double t1,
                          std::vector<Node>& out) {
    const double tol = 1e-12 * std::max({1.0, std::abs(t0), std::abs(t1)});
    double k = std::ceil((t0 - anchor) / period - 1e-9);
    for (;; k += 1.0) {
        const double t = anchor + k * period;
        if (t >= t1 - tol) break;
        if (t >= t0 - tol) out.push_back({std::max(t, t0), weight});
    }
}

// All nodes in [t0, t1), time-sorted.  An impulse exactly at t0 is applied
// before the first step (the period anchor convention of the waveforms).
std::vector<Node> schedule(const CoefficientModel& model, double t0, double t1) {
    std::vector<Node> nodes;
    for (const auto& ev : model.impulses)
        instantiate_periodic(ev.time, ev.weight, t0, t1, nodes);
    for (double b : model.breakpoints)
        instantiate_periodic(b, 0.0, t0, t1, nodes);
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& a, const Node& b) { return a.t < b.t; });
    return nodes;
}

// One classical RK4 sweep of theta' = omega, omega' = -(alpha + q(t)) g(theta)
// over [a, b] with steps no longer than hmax.  Stage times at the segment
// ends are nudged inside so a piecewise coefficient is always sampled on the
// branch belonging to this segment.
template <typename Q, typename G>
void sweep(Q&& q, G&& g, double alpha, State& y, double a, double b, double hmax,
           Trajectory* rec) {
    if (!(b > a)) return;
    const int nsteps = std::max(1, static_cast<int>(std::ceil((b - a) / hmax - 1e-12)));
    const double h = (b - a) / nsteps;
    const double lo = a + (b - a) * 1e-12;
    const double hi = b - (b - a) * 1e-12;
    auto coeff = [&](double t) { return alpha + q(std::clamp(t, lo, hi)); };

    for (int i = 0; i < nsteps; ++i) {
        const double t = a + i * h;
        const double tn = (i + 1 == nsteps) ? b : t + h;

        const double k1t = y.omega;
        const double k1w = -coeff(t) * g(y.theta);
        const double cm = coeff(t + 0.5 * h);
        const double k2t = y.omega + 0.5 * h * k1w;
        const double k2w = -cm * g(y.theta + 0.5 * h * k1t);
        const double k3t = y.omega + 0.5 * h * k2w;
        const double k3w = -cm * g(y.theta + 0.5 * h * k2t);
        const double ce = coeff(t + h);
        const double k4t = y.omega + h * k3w;
        const double k4w = -ce * g(y.theta + h * k3t);

        y.theta += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
        y.omega += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
        if (rec) rec->samples.push_back({tn, y});
    }
    if (!std::isfinite(y.theta) || !std::isfinite(y.omega))
        throw std::runtime_error("integrator state overflowed the representable range");
}

// Shared driver for the linear and nonlinear equations.  `g` is the
// restoring nonlinearity (identity or sin); the impulse rule follows it.
template <typename G>
State drive(const CoefficientModel& model, double alpha, G&& g, State y,
            TimeSpan span, const IntegratorConfig& cfg, Trajectory* rec) {
    if (!(span.t1 >= span.t0))
        throw std::invalid_argument("integration span must be ordered");
    const double hmax = period / cfg.steps_per_period;
    auto q = [&](double t) { return model.smooth ? model.smooth(t) : 0.0; };

    if (rec) rec->samples.push_back({span.t0, y});
    double t = span.t0;
    for (const Node& node : schedule(model, span.t0, span.t1)) {
        sweep(q, g, alpha, y, t, node.t, hmax, rec);
        t = std::max(t, node.t);
        if (node.weight != 0.0) {
            y.omega -= node.weight * g(y.theta);
            if (rec) {
                rec->events.push_back({node.t, node.weight});
                rec->samples.push_back({node.t, y});
            }
        }
    }
    sweep(q, g, alpha, y, t, span.t1, hmax, rec);
    return y;
}

} // namespace

CoefficientModel mollify(const CoefficientModel& model, double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("mollify: epsilon must be positive");
    const auto& ev = model.impulses;
    if (ev.empty())
        throw std::invalid_argument("mollify: model carries no impulses");

    double min_gap = period - (ev.back().time - ev.front().time);
    for (std::size_t i = 0; i + 1 < ev.size(); ++i)
        min_gap = std::min(min_gap, ev[i + 1].time - ev[i].time);
    if (!(epsilon < min_gap / 4.0))
        throw std::invalid_argument("mollify: pulses of this width would overlap");

    std::vector<double> times, weights;
    for (const auto& e : ev) {
        times.push_back(e.time);
        weights.push_back(e.weight);
    }

    CoefficientModel out;
    out.t_start = model.t_start;
    out.smooth = [times, weights, epsilon](double t) {
        double q = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i)
            if (std::abs(std::remainder(t - times[i], period)) <= epsilon / 2.0)
                q += weights[i] / epsilon;
        return q;
    };
    for (double tc : times) {
        for (double edge : {tc - epsilon / 2.0, tc + epsilon / 2.0}) {
            double s = std::fmod(edge - model.t_start, period);
            if (s < 0.0) s += period;
            out.breakpoints.push_back(model.t_start + s);
        }
    }
    std::sort(out.breakpoints.begin(), out.breakpoints.end());
    return out;
}

namespace {

CoefficientModel build_model(const waveforms::Waveform& w,
                             const waveforms::StabilityParams& p,
                             const IntegratorConfig& cfg) {
    auto model = waveforms::coefficient_model(w, p);
    if (cfg.mollify_epsilon) {
        if (!model.impulsive())
            throw std::invalid_argument("mollification applies to impulsive waveforms only");
        model = mollify(model, *cfg.mollify_epsilon);
    }
    return model;
}

double identity_g(double x) { return x; }

} // namespace

Trajectory integrate_linear(const CoefficientModel& model, double alpha, State y0,
                            TimeSpan span, const IntegratorConfig& cfg) {
    validate(cfg);
    Trajectory traj;
    drive(model, alpha, identity_g, y0, span, cfg, &traj);
    return traj;
}

monodromy::MonodromyResult monodromy_numeric(const waveforms::Waveform& w,
                                             const waveforms::StabilityParams& p,
                                             const IntegratorConfig& cfg) {
    validate(cfg);
    const auto model = build_model(w, p, cfg);
    const TimeSpan span{model.t_start, model.t_start + period};
    const State c1 = drive(model, p.alpha, identity_g, {1.0, 0.0}, span, cfg, nullptr);
    const State c2 = drive(model, p.alpha, identity_g, {0.0, 1.0}, span, cfg, nullptr);
    const linalg2::Mat2 E{c1.theta, c2.theta, c1.omega, c2.omega};
    return {E, E.trace(), monodromy::Method::Numeric};
}

double mollified_trace(const waveforms::Waveform& w, const waveforms::StabilityParams& p,
                       double epsilon, IntegratorConfig cfg) {
    cfg.mollify_epsilon = epsilon;
    return monodromy_numeric(w, p, cfg).trace;
}

Trajectory simulate_nonlinear(const waveforms::Waveform& w, const waveforms::StabilityParams& p,
                              State y0, double duration, const IntegratorConfig& cfg) {
    validate(cfg);
    if (!(duration >= 0.0))
        throw std::invalid_argument("simulate_nonlinear: duration must be nonnegative");
    const auto model = build_model(w, p, cfg);
    Trajectory traj;
    drive(model, p.alpha, [](double x) { return std::sin(x); }, y0,
          {model.t_start, model.t_start + duration}, cfg, &traj);
    return traj;
}

} // namespace strutt::numeric
