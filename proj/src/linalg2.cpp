#include "strutt/linalg2.hpp"

#include <cmath>

namespace strutt::linalg2 {

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {
        a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
        a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22,
    };
}

TrigPair trig_pair(double alpha, double tau) {
    const double u = alpha * tau * tau;
    if (std::abs(u) < 1e-8) {
        // Both branches collapse to the same Taylor series in u = alpha tau^2;
        // direct evaluation would divide ~0 by ~0 near the axis.  Three terms
        // leave a remainder below 1e-27 at the switch threshold.
        const double c = 1.0 - u / 2.0 + u * u / 24.0;
        const double s = tau * (1.0 - u / 6.0 + u * u / 120.0);
        return {c, s, alpha, tau};
    }
    const double r = std::sqrt(std::abs(alpha));
    if (alpha > 0.0)
        return {std::cos(r * tau), std::sin(r * tau) / r, alpha, tau};
    return {std::cosh(r * tau), std::sinh(r * tau) / r, alpha, tau};
}

Mat2 free_transfer(double alpha, double tau) {
    const TrigPair p = trig_pair(alpha, tau);
    return {p.c, p.s, -alpha * p.s, p.c};
}

Mat2 jump_transfer(double gamma) {
    return {1.0, 0.0, -gamma, 1.0};
}

} // namespace strutt::linalg2
