#include "strutt/monodromy.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace strutt::monodromy {

using linalg2::Mat2;
using linalg2::TrigPair;
using waveforms::StabilityParams;
using waveforms::Waveform;

MonodromyResult monodromy_product(const Waveform& w, const StabilityParams& p) {
    if (w.kind == waveforms::Kind::Cosine)
        throw std::invalid_argument(
            "monodromy_product: cosine wave has no impulse decomposition; "
            "use the numeric monodromy instead");

    const auto model = waveforms::coefficient_model(w, p);
    Mat2 E = Mat2::identity();
    double t = model.t_start;
    for (const auto& ev : model.impulses) {
        if (ev.time > t) {
            E = linalg2::free_transfer(p.alpha, ev.time - t) * E;
            t = ev.time;
        }
        E = linalg2::jump_transfer(ev.weight) * E;
    }
    E = linalg2::free_transfer(p.alpha, model.t_start + waveforms::period - t) * E;

    // Liouville: the system is traceless, so det E = 1 up to rounding that
    // scales with the squared magnitude of the entries.
    assert(std::abs(E.det() - 1.0) <=
           1e-9 * std::max(1.0, E.trace() * E.trace()));

    return {E, E.trace(), Method::Product};
}

double trace_triangular_closed(const StabilityParams& p) {
    const double pi = waveforms::period / 2.0;
    const TrigPair t = linalg2::trig_pair(p.alpha, pi);
    return 2.0 * t.c * t.c - (2.0 * p.alpha + p.beta * p.beta) * t.s * t.s;
}

double trace_rectangular_closed(const StabilityParams& p, int n) {
    if (n < 1)
        throw std::invalid_argument("trace_rectangular_closed: n must be >= 1");

    const double a = p.alpha;
    // The closed form divides by 8 a^2 and loses all significance as a -> 0;
    // the 8-factor product is exact there and cheap, so switch over.
    if (std::abs(a) < 1e-3)
        return monodromy_product(Waveform::rectangular_approx(n), p).trace;

    const double pi = waveforms::period / 2.0;
    const double x = p.beta * p.beta * double(n) * double(n);
    const double y = 4.0 * a + x;

    // Generalized trigonometric entries: sin^2(sqrt(a) u) -> a S(a,u)^2 and
    // cos(sqrt(a) u) -> C(a,u) extend the formula to a < 0 (hyperbolic).
    const TrigPair p1 = linalg2::trig_pair(a, pi - 2.0 / n);
    const double sin2_1 = a * p1.s * p1.s;
    const double c2 = linalg2::trig_pair(a, 2.0 * pi - 8.0 / n).c;
    const double c3 = linalg2::trig_pair(a, 4.0 / n).c;
    const double c4 = linalg2::trig_pair(a, 2.0 * pi).c;

    const double t1 = 4.0 * x * y * sin2_1;
    const double t2 = x * x * c2;
    const double t3 = -2.0 * x * y * c3;
    const double t4 = c4 * y * y;
    const double t5 = 16.0 * a * x * (c3 - 1.0);
    const double num = t1 + t2 + t3 + t4 + t5;

    // The five terms cancel heavily when |beta| n is large and |a| small; if
    // the sum loses more than ~4 digits to cancellation the product is the
    // more accurate evaluation, so use it instead.
    const double magnitude =
        std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4) + std::abs(t5);
    if (magnitude > 1e4 * std::max(8.0 * a * a, std::abs(num)))
        return monodromy_product(Waveform::rectangular_approx(n), p).trace;

    return num / (8.0 * a * a);
}

} // namespace strutt::monodromy
