#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strutt/linalg2.hpp"

#include <cmath>
#include <random>

using namespace strutt::linalg2;

TEST_CASE("trig pair reproduces elementary values") {
    const double pi = 3.14159265358979323846;

    auto t = trig_pair(1.0, pi);
    CHECK(t.c == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(t.s) < 1e-12);

    t = trig_pair(4.0, pi / 2.0); // cos(pi), sin(pi)/2
    CHECK(t.c == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(t.s) < 1e-12);

    t = trig_pair(-1.0, 1.0);
    CHECK(t.c == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(t.s == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));

    t = trig_pair(0.0, 2.5);
    CHECK(t.c == 1.0);
    CHECK(t.s == 2.5);
}

TEST_CASE("pythagorean identity C^2 + alpha S^2 = 1 across both regimes") {
    // In the hyperbolic regime the two terms are huge and cancel (cosh^2 -
    // sinh^2), so the identity can only hold relative to their magnitude.
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ua(-10.0, 10.0), ut(0.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double alpha = ua(rng), tau = ut(rng);
        const auto t = trig_pair(alpha, tau);
        const double scale =
            std::max(1.0, t.c * t.c + std::abs(alpha) * t.s * t.s);
        CHECK(std::abs(t.c * t.c + alpha * t.s * t.s - 1.0) < 1e-13 * scale);
    }
}

TEST_CASE("trig pair is continuous through alpha = 0") {
    // The series branch has to hand over seamlessly to the trig/hyperbolic
    // branches; compare against the alpha = 0 limit (1, tau).
    const double tau = 3.0;
    for (double alpha : {1e-14, -1e-14, 1e-10, -1e-10}) {
        const auto t = trig_pair(alpha, tau);
        CHECK(t.c == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(t.s == doctest::Approx(tau).epsilon(1e-9));
    }
    // And the series must agree with the closed branch where they meet.
    for (double alpha : {1e-9, -1e-9}) {
        const auto near = trig_pair(alpha, 1.0);
        CHECK(near.c == doctest::Approx(1.0 - alpha / 2.0).epsilon(1e-15));
        CHECK(near.s == doctest::Approx(1.0 - alpha / 6.0).epsilon(1e-15));
    }
}

TEST_CASE("free transfer is unimodular and satisfies the semigroup law") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ua(-6.0, 6.0), ut(0.0, 4.0);
    for (int i = 0; i < 500; ++i) {
        const double alpha = ua(rng);
        const double t1 = ut(rng), t2 = ut(rng);
        const Mat2 a = free_transfer(alpha, t1);
        const Mat2 b = free_transfer(alpha, t2);
        const Mat2 ab = b * a; // later span applied on the left
        const Mat2 whole = free_transfer(alpha, t1 + t2);
        const double scale = std::max({1.0, std::abs(whole.a11), std::abs(whole.a12),
                                       std::abs(whole.a21), std::abs(whole.a22)});
        CHECK(std::abs(ab.a11 - whole.a11) / scale < 1e-12);
        CHECK(std::abs(ab.a12 - whole.a12) / scale < 1e-12);
        CHECK(std::abs(ab.a21 - whole.a21) / scale < 1e-12);
        CHECK(std::abs(ab.a22 - whole.a22) / scale < 1e-12);
        // det is ad - bc with entries up to cosh: scale the rounding budget.
        CHECK(std::abs(a.det() - 1.0) < 1e-13 * std::max(1.0, scale * scale));
    }
}

TEST_CASE("free transfer acts as the oscillator flow") {
    // alpha = 1, quarter turn: (theta, omega) = (1, 0) -> (cos, -sin).
    const double pi = 3.14159265358979323846;
    const Mat2 f = free_transfer(1.0, pi / 3.0);
    CHECK(f.a11 == doctest::Approx(0.5).epsilon(1e-14));          // cos(pi/3)
    CHECK(f.a21 == doctest::Approx(-std::sin(pi / 3.0)).epsilon(1e-14));
}

TEST_CASE("jump transfer shears the velocity only") {
    const Mat2 j = jump_transfer(2.5);
    CHECK(j.a11 == 1.0);
    CHECK(j.a12 == 0.0);
    CHECK(j.a21 == -2.5);
    CHECK(j.a22 == 1.0);
    CHECK(j.det() == 1.0);

    // Consecutive impulses add their weights.
    const Mat2 jj = jump_transfer(1.0) * jump_transfer(-3.0);
    CHECK(jj.a21 == doctest::Approx(2.0));
}

TEST_CASE("long products stay unimodular") {
    // Rotation-conjugate factors (alpha > 0) keep entries O(1), so the
    // determinant drift over 1000 factors is pure rounding.
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ut(0.0, 1.0);
    Mat2 prod = Mat2::identity();
    for (int i = 0; i < 1000; ++i) prod = free_transfer(2.0, ut(rng)) * prod;
    CHECK(prod.det() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("identity matrix defaults and trace") {
    const Mat2 id = Mat2::identity();
    CHECK(id.trace() == 2.0);
    CHECK(id.det() == 1.0);
    CHECK(mat2_mul(id, id).trace() == 2.0);
}
