#pragma once

// Monodromy matrices of the linearized pendulum equation, assembled either
// as explicit transfer-matrix products over one period or from the
// closed-form trace expressions of the impulsive waveforms.

#include "strutt/linalg2.hpp"
#include "strutt/waveforms.hpp"

namespace strutt::monodromy {

enum class Method { Product, ClosedForm, Numeric };

struct MonodromyResult {
    linalg2::Mat2 matrix;
    double trace = 0.0;
    Method method = Method::Product;
};

/// Monodromy matrix over one period as the time-ordered product of free
/// and jump transfer matrices.  Only the impulsive waveforms decompose this
/// way; the cosine wave is rejected (use the numeric module).
MonodromyResult monodromy_product(const waveforms::Waveform& w,
                                  const waveforms::StabilityParams& p);

/// Closed-form trace for the triangular wave, valid for every alpha via the
/// analytically continued trigonometric pair:
///   Tr = 2 C(a,pi)^2 - (2 a + beta^2) S(a,pi)^2
/// which for a > 0 equals 2 cos(2 pi sqrt(a)) - (beta^2/a) sin^2(pi sqrt(a)).
double trace_triangular_closed(const waveforms::StabilityParams& p);

/// Closed-form trace for the rectangular-wave approximation with slope
/// parameter n.  Near alpha = 0 the formula has a removable singularity and
/// the transfer-matrix product is used instead.
double trace_rectangular_closed(const waveforms::StabilityParams& p, int n);

} // namespace strutt::monodromy
