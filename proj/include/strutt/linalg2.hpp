#pragma once

// 2x2 matrix algebra for transfer-matrix assembly, plus the analytically
// continued trigonometric pair (C, S) that parameterizes every fundamental
// matrix of the free regime.  Everything here is pure and reentrant.

namespace strutt::linalg2 {

struct Mat2 {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;

    static Mat2 identity() { return {}; }

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) { return a * b; }

/**
 * Generalized cosine/sine pair for the linear oscillator x'' + alpha x = 0:
 *
 *   c = C(alpha, tau),  s = S(alpha, tau)
 *
 * with C = cos(sqrt(alpha) tau), S = sin(sqrt(alpha) tau)/sqrt(alpha) for
 * alpha > 0, the hyperbolic continuation cosh/sinh for alpha < 0, and the
 * linear limit (1, tau) at alpha = 0.  Satisfies C^2 + alpha S^2 = 1 for
 * every alpha, which is the unimodularity of the free transfer matrix.
 */
struct TrigPair {
    double c;
    double s;
    double alpha;
    double tau;
};

TrigPair trig_pair(double alpha, double tau);

/// Fundamental matrix of x'' + alpha x = 0 over a span tau >= 0:
/// [[C, S], [-alpha S, C]].
Mat2 free_transfer(double alpha, double tau);

/// Transfer across a Dirac impulse of weight gamma in the coefficient:
/// position is continuous, velocity jumps by -gamma * theta.
Mat2 jump_transfer(double gamma);

} // namespace strutt::linalg2
