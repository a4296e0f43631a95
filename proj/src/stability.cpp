#include "strutt/stability.hpp"

#include "strutt/linalg2.hpp"
#include "strutt/monodromy.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

namespace strutt::stability {

using waveforms::StabilityParams;
using waveforms::Waveform;

namespace {

constexpr double pi = waveforms::period / 2.0;

// beta >= 0 branch of the triangular Tr = -2 boundary, valid for alpha of
// either sign: beta = 2|C/S| of the half-period trig pair.  Substituting
// back shows Tr = -2(C^2 + alpha S^2) = -2 identically, so emitted points
// are exact to rounding.
double minus2_beta(double alpha) {
    const auto t = linalg2::trig_pair(alpha, pi);
    return 2.0 * std::abs(t.c / t.s);
}

} // namespace

StabilityClass classify(double trace, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("classify: tol must be positive");
    using L = StabilityClass::Label;
    const double mag = std::abs(trace);
    if (mag < 2.0 - tol) return {L::Stable, trace};
    if (mag > 2.0 + tol) return {L::Unstable, trace};
    return {L::Boundary, trace};
}

double default_tol(const Waveform& w) {
    return w.kind == waveforms::Kind::Cosine ? 1e-6 : 1e-9;
}

std::vector<BoundaryCurve> boundary_triangular(BoundaryKind kind, double alpha_min,
                                               double alpha_max, int samples,
                                               double beta_max) {
    if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max) || !(alpha_min < alpha_max))
        throw std::invalid_argument("boundary_triangular: alpha range must be finite and ordered");
    if (samples < 2)
        throw std::invalid_argument("boundary_triangular: samples must be >= 2");
    if (!(beta_max > 0.0))
        throw std::invalid_argument("boundary_triangular: beta_max must be positive");

    std::vector<BoundaryCurve> out;
    auto push_mirrored = [&](const std::vector<StabilityParams>& base) {
        if (base.size() < 2) return;
        out.push_back({kind, base, true});
        BoundaryCurve mirror{kind, base, true};
        for (auto& q : mirror.points) q.beta = -q.beta;
        out.push_back(std::move(mirror));
    };

    if (kind == BoundaryKind::TracePlus2) {
        // sin(pi sqrt(alpha)) = 0: exact vertical lines at the squares.
        for (int k = 1; double(k) * k <= alpha_max; ++k) {
            const double a = double(k) * k;
            if (a < alpha_min) continue;
            out.push_back({kind, {{a, -beta_max}, {a, beta_max}}, true});
        }
        // Lower edge of the inverted-pendulum stabilization window.
        const double hi = std::min(alpha_max, 0.0);
        if (alpha_min < hi) {
            std::vector<StabilityParams> base;
            for (int i = 0; i < samples; ++i) {
                const double a = alpha_min + (hi - alpha_min) * i / (samples - 1);
                const double b = 2.0 * std::sqrt(-a);
                if (b <= beta_max) base.push_back({a, b});
            }
            push_mirrored(base);
        }
        return out;
    }

    // Tr = -2.  Upper edge of the stabilization window for alpha < 0 ...
    const double hi = std::min(alpha_max, 0.0);
    if (alpha_min < hi) {
        std::vector<StabilityParams> base;
        for (int i = 0; i < samples; ++i) {
            const double a = alpha_min + (hi - alpha_min) * i / (samples - 1);
            const double b = minus2_beta(a);
            if (b <= beta_max) base.push_back({a, b});
        }
        push_mirrored(base);
    }
    // ... and the cotangent arcs between the poles at alpha = k^2 for alpha > 0.
    for (int k = 0; double(k) * k < alpha_max; ++k) {
        const double lo = std::max({alpha_min, 0.0, double(k) * k});
        const double up = std::min(alpha_max, double(k + 1) * (k + 1));
        if (!(lo < up)) continue;
        std::vector<StabilityParams> base;
        for (int i = 0; i < samples; ++i) {
            // midpoint sampling keeps the divergent pole endpoints out
            const double a = lo + (up - lo) * (i + 0.5) / samples;
            const double b = minus2_beta(a);
            if (b <= beta_max) base.push_back({a, b});
        }
        push_mirrored(base);
    }
    return out;
}

StabilityGap stability_gap_negative(double alpha) {
    if (!(alpha < 0.0))
        throw std::invalid_argument("stability_gap_negative: alpha must be negative");
    const auto t = linalg2::trig_pair(alpha, pi); // (cosh, sinh/rho)
    return {2.0 * std::sqrt(-alpha), 2.0 * t.c / t.s};
}

IdentityTerms identity_terms_A_B(double alpha, int n) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("identity_terms_A_B: alpha must be positive");
    if (n < 1)
        throw std::invalid_argument("identity_terms_A_B: n must be >= 1");
    const double r = std::sqrt(alpha);
    const double u = 4.0 * r / n;        // argument of the narrow-pulse terms
    const double w = 2.0 * pi * r;       // full-period phase
    // Factored form: manifestly nonnegative (1 - cos >= 0 in exact and in
    // floating-point arithmetic), unlike the defining bracket whose zeros
    // can round to either side of 0.
    const double A = 2.0 * (1.0 - std::cos(u)) * (1.0 - std::cos(w - u));
    const double B = -8.0 * std::sin(u) * std::cos(w) * std::sin(w / 2.0 - u / 2.0);
    return {A, B};
}

double DiagramGrid::alpha_center(int i_alpha) const {
    const double step = (window.alpha_max - window.alpha_min) / resolution.n_alpha;
    return window.alpha_min + (i_alpha + 0.5) * step;
}

double DiagramGrid::beta_center(int i_beta) const {
    const double step = (window.beta_max - window.beta_min) / resolution.n_beta;
    return window.beta_min + (i_beta + 0.5) * step;
}

const StabilityClass& DiagramGrid::cell(int i_alpha, int i_beta) const {
    return cells[std::size_t(i_beta) * resolution.n_alpha + i_alpha];
}

const StabilityClass& DiagramGrid::cell_at(double alpha, double beta) const {
    auto index = [](double v, double lo, double hi, int count) {
        const int i = static_cast<int>(std::floor((v - lo) / (hi - lo) * count));
        return std::clamp(i, 0, count - 1);
    };
    return cell(index(alpha, window.alpha_min, window.alpha_max, resolution.n_alpha),
                index(beta, window.beta_min, window.beta_max, resolution.n_beta));
}

DiagramGrid diagram(const Waveform& w, const Window& window, const Resolution& res,
                    double tol, const numeric::IntegratorConfig& cfg) {
    if (!(window.alpha_min < window.alpha_max) || !(window.beta_min < window.beta_max))
        throw std::invalid_argument("diagram: window bounds must be strictly ordered");
    if (res.n_alpha < 1 || res.n_beta < 1)
        throw std::invalid_argument("diagram: resolution must be at least 1 x 1");

    DiagramGrid g;
    g.window = window;
    g.resolution = res;
    g.cells.reserve(std::size_t(res.n_alpha) * res.n_beta);
    for (int jb = 0; jb < res.n_beta; ++jb) {
        const double beta = g.beta_center(jb);
        for (int ia = 0; ia < res.n_alpha; ++ia) {
            const StabilityParams p{g.alpha_center(ia), beta};
            double tr = 0.0;
            switch (w.kind) {
            case waveforms::Kind::Triangular:
                tr = monodromy::trace_triangular_closed(p);
                break;
            case waveforms::Kind::RectangularApprox:
                tr = monodromy::trace_rectangular_closed(p, w.n);
                break;
            case waveforms::Kind::Cosine:
                tr = numeric::monodromy_numeric(w, p, cfg).trace;
                break;
            }
            g.cells.push_back(classify(tr, tol));
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Marching squares for the rectangular-wave boundaries.

namespace {

struct EdgeKey {
    int i, j;
    bool vertical;
    bool operator<(const EdgeKey& o) const {
        return std::tie(i, j, vertical) < std::tie(o.i, o.j, o.vertical);
    }
};

// Cell-local edge ids used by the case table.
enum : int { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };

} // namespace

std::vector<BoundaryCurve> boundary_rectangular(int n, BoundaryKind kind, const Window& win,
                                                const Resolution& res, double refine_tol) {
    if (n < 1)
        throw std::invalid_argument("boundary_rectangular: n must be >= 1");
    if (!(win.alpha_min < win.alpha_max) || !(win.beta_min < win.beta_max))
        throw std::invalid_argument("boundary_rectangular: degenerate window");
    if (res.n_alpha < 2 || res.n_beta < 2)
        throw std::invalid_argument("boundary_rectangular: need at least a 2 x 2 node lattice");
    if (!(refine_tol > 0.0))
        throw std::invalid_argument("boundary_rectangular: refine_tol must be positive");

    const double target = (kind == BoundaryKind::TracePlus2) ? 2.0 : -2.0;
    auto f = [&](double a, double b) {
        return monodromy::trace_rectangular_closed({a, b}, n) - target;
    };

    const int na = res.n_alpha, nb = res.n_beta;
    const double da = (win.alpha_max - win.alpha_min) / (na - 1);
    const double db = (win.beta_max - win.beta_min) / (nb - 1);
    auto alpha_of = [&](int i) { return win.alpha_min + i * da; };
    auto beta_of = [&](int j) { return win.beta_min + j * db; };

    std::vector<double> val(std::size_t(na) * nb);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < na; ++i)
            val[std::size_t(j) * na + i] = f(alpha_of(i), beta_of(j));
    auto node = [&](int i, int j) { return val[std::size_t(j) * na + i]; };

    std::vector<StabilityParams> pts;
    std::map<EdgeKey, int> edge_point;

    // Refined crossing on a sign-changing lattice edge: bisect (at most 20
    // halvings, stopping early once within refine_tol), then place the point
    // by linear interpolation inside the final bracket.
    auto crossing = [&](int i, int j, bool vertical) {
        const EdgeKey key{i, j, vertical};
        if (auto it = edge_point.find(key); it != edge_point.end()) return it->second;

        double a0 = alpha_of(i), b0 = beta_of(j);
        double a1 = vertical ? a0 : alpha_of(i + 1);
        double b1 = vertical ? beta_of(j + 1) : b0;
        double f0 = node(i, j);
        double f1 = vertical ? node(i, j + 1) : node(i + 1, j);
        for (int iter = 0;
             iter < 20 && std::abs(f0) > refine_tol && std::abs(f1) > refine_tol; ++iter) {
            const double am = 0.5 * (a0 + a1), bm = 0.5 * (b0 + b1);
            const double fm = f(am, bm);
            if ((fm > 0.0) == (f0 > 0.0)) {
                a0 = am; b0 = bm; f0 = fm;
            } else {
                a1 = am; b1 = bm; f1 = fm;
            }
        }
        double t = (f0 == f1) ? 0.5 : f0 / (f0 - f1);
        t = std::clamp(t, 0.0, 1.0);
        pts.push_back({a0 + (a1 - a0) * t, b0 + (b1 - b0) * t});
        edge_point.emplace(key, int(pts.size()) - 1);
        return int(pts.size()) - 1;
    };

    std::vector<std::array<int, 2>> segs;
    auto emit = [&](int i, int j, int e0, int e1) {
        auto point_on = [&](int e) {
            switch (e) {
            case kBottom: return crossing(i, j, false);
            case kRight:  return crossing(i + 1, j, true);
            case kTop:    return crossing(i, j + 1, false);
            default:      return crossing(i, j, true);
            }
        };
        segs.push_back({point_on(e0), point_on(e1)});
    };

    for (int j = 0; j + 1 < nb; ++j) {
        for (int i = 0; i + 1 < na; ++i) {
            const bool bl = node(i, j) > 0.0;
            const bool br = node(i + 1, j) > 0.0;
            const bool tr = node(i + 1, j + 1) > 0.0;
            const bool tl = node(i, j + 1) > 0.0;
            const int config = (bl ? 1 : 0) | (br ? 2 : 0) | (tr ? 4 : 0) | (tl ? 8 : 0);
            switch (config) {
            case 0: case 15: break;
            case 1: case 14: emit(i, j, kLeft, kBottom); break;
            case 2: case 13: emit(i, j, kBottom, kRight); break;
            case 3: case 12: emit(i, j, kLeft, kRight); break;
            case 4: case 11: emit(i, j, kTop, kRight); break;
            case 6: case 9:  emit(i, j, kBottom, kTop); break;
            case 7: case 8:  emit(i, j, kTop, kLeft); break;
            case 5: case 10: {
                // Saddle: decide by the sign at the cell center.
                const double fc = f(0.5 * (alpha_of(i) + alpha_of(i + 1)),
                                    0.5 * (beta_of(j) + beta_of(j + 1)));
                const bool center = fc > 0.0;
                const bool diag_bl = (config == 5); // inside corners on the bl-tr diagonal
                if (diag_bl == center) {
                    emit(i, j, kBottom, kRight);
                    emit(i, j, kTop, kLeft);
                } else {
                    emit(i, j, kLeft, kBottom);
                    emit(i, j, kTop, kRight);
                }
                break;
            }
            default: break;
            }
        }
    }

    // Stitch segments that share crossing points into polylines.
    std::vector<std::vector<int>> incident(pts.size());
    for (int s = 0; s < int(segs.size()); ++s) {
        incident[segs[s][0]].push_back(s);
        incident[segs[s][1]].push_back(s);
    }
    std::vector<char> used(segs.size(), 0);
    std::vector<BoundaryCurve> out;

    auto next_seg = [&](int point) {
        for (int s : incident[point])
            if (!used[s]) return s;
        return -1;
    };

    for (int s0 = 0; s0 < int(segs.size()); ++s0) {
        if (used[s0]) continue;
        used[s0] = 1;
        std::deque<int> chain{segs[s0][0], segs[s0][1]};
        for (int end = 0; end < 2; ++end) {
            for (;;) {
                const int tip = end == 0 ? chain.back() : chain.front();
                const int s = next_seg(tip);
                if (s < 0) break;
                used[s] = 1;
                const int other = segs[s][0] == tip ? segs[s][1] : segs[s][0];
                if (end == 0)
                    chain.push_back(other);
                else
                    chain.push_front(other);
                if (other == (end == 0 ? chain.front() : chain.back())) break; // closed loop
            }
        }
        BoundaryCurve curve{kind, {}, false};
        curve.points.reserve(chain.size());
        for (int p : chain) curve.points.push_back(pts[p]);
        out.push_back(std::move(curve));
    }
    return out;
}

} // namespace strutt::stability
