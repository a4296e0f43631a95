#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strutt/waveforms.hpp"

#include <cmath>

using namespace strutt::waveforms;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("triangular pivot motion: tent profile, 2pi-periodic") {
    const Waveform w = Waveform::triangular();
    const double A = 0.7;
    CHECK(pivot_position(w, A, 0.0) == doctest::Approx(A));
    CHECK(pivot_position(w, A, pi / 2.0) == doctest::Approx(0.0));
    CHECK(pivot_position(w, A, pi) == doctest::Approx(-A));
    CHECK(pivot_position(w, A, 1.5 * pi) == doctest::Approx(0.0));
    CHECK(pivot_position(w, A, 0.3) == doctest::Approx(A - 2.0 * A * 0.3 / pi));

    for (double t : {0.1, 1.0, 2.9, 4.4}) {
        CHECK(pivot_position(w, A, t + period) == doctest::Approx(pivot_position(w, A, t)));
        CHECK(pivot_position(w, A, t - 3.0 * period) ==
              doctest::Approx(pivot_position(w, A, t)));
    }
}

TEST_CASE("rectangular approximation: ramps of slope An between plateaus") {
    const int n = 5;
    const Waveform w = Waveform::rectangular_approx(n);
    const double A = 1.2;
    const double h = 1.0 / n;

    CHECK(pivot_position(w, A, 0.0) == doctest::Approx(0.0));
    CHECK(pivot_position(w, A, h) == doctest::Approx(A));
    CHECK(pivot_position(w, A, -h) == doctest::Approx(-A));
    CHECK(pivot_position(w, A, h / 2.0) == doctest::Approx(A / 2.0));
    CHECK(pivot_position(w, A, pi / 2.0) == doctest::Approx(A));     // upper plateau
    CHECK(pivot_position(w, A, pi) == doctest::Approx(0.0));         // mid down-ramp
    CHECK(pivot_position(w, A, pi + h) == doctest::Approx(-A));
    CHECK(pivot_position(w, A, 1.5 * pi) == doctest::Approx(-A));    // lower plateau
    CHECK(pivot_position(w, A, 0.25 + period) == doctest::Approx(pivot_position(w, A, 0.25)));
}

TEST_CASE("cosine pivot motion") {
    const Waveform w = Waveform::cosine();
    CHECK(pivot_position(w, 2.0, 0.0) == doctest::Approx(2.0));
    CHECK(pivot_position(w, 2.0, pi) == doctest::Approx(-2.0));
    CHECK(pivot_position(w, 2.0, 1.0) == doctest::Approx(2.0 * std::cos(1.0)));
}

TEST_CASE("triangular coefficient model: two impulses of opposite weight") {
    const auto m = coefficient_model(Waveform::triangular(), {0.3, 0.8});
    REQUIRE(m.impulsive());
    REQUIRE(m.impulses.size() == 2);
    CHECK(m.t_start == 0.0);
    CHECK(m.impulses[0].time == doctest::Approx(0.0));
    CHECK(m.impulses[0].weight == doctest::Approx(-0.8));
    CHECK(m.impulses[1].time == doctest::Approx(pi));
    CHECK(m.impulses[1].weight == doctest::Approx(0.8));
    CHECK(!m.smooth);
}

TEST_CASE("rectangular coefficient model: four impulses, zero net weight") {
    const int n = 10;
    const double beta = 0.4;
    const auto m = coefficient_model(Waveform::rectangular_approx(n), {1.0, beta});
    REQUIRE(m.impulses.size() == 4);
    CHECK(m.t_start == doctest::Approx(-1.0 / n));

    const double g = n * beta;
    const double times[] = {-1.0 / n, 1.0 / n, pi - 1.0 / n, pi + 1.0 / n};
    const double weights[] = {g, -g, -g, g};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        CHECK(m.impulses[i].time == doctest::Approx(times[i]));
        CHECK(m.impulses[i].weight == doctest::Approx(weights[i]));
        sum += m.impulses[i].weight;
    }
    CHECK(sum == doctest::Approx(0.0));
}

TEST_CASE("cosine coefficient model is smooth") {
    const auto m = coefficient_model(Waveform::cosine(), {1.0, 0.25});
    CHECK(!m.impulsive());
    REQUIRE(m.smooth);
    CHECK(m.smooth(0.0) == doctest::Approx(0.25));
    CHECK(m.smooth(pi) == doctest::Approx(-0.25));
    CHECK(m.smooth(pi / 2.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m.breakpoints.empty());
}

TEST_CASE("physical parameters map to the dimensionless plane") {
    // g/l = 1, Omega = 2  =>  alpha = 1/4.
    PhysicalParams ph{pi / 8.0, 1.0, 1.0, 2.0, Orientation::Pendent};

    auto p = params_from_physical(ph, Waveform::triangular());
    CHECK(p.alpha == doctest::Approx(0.25));
    CHECK(p.beta == doctest::Approx(0.5)); // 4A/(pi l)

    p = params_from_physical(ph, Waveform::rectangular_approx(4));
    CHECK(p.beta == doctest::Approx(pi / 8.0)); // A/l

    p = params_from_physical(ph, Waveform::cosine());
    CHECK(p.beta == doctest::Approx(-pi / 8.0)); // -A/l

    ph.orientation = Orientation::Inverted;
    p = params_from_physical(ph, Waveform::triangular());
    CHECK(p.alpha == doctest::Approx(-0.25));
    CHECK(p.beta == doctest::Approx(0.5));
}

TEST_CASE("invalid physical or waveform parameters are rejected") {
    const Waveform tri = Waveform::triangular();
    CHECK_THROWS_AS(params_from_physical({1.0, 0.0, 9.8, 2.0, {}}, tri),
                    std::invalid_argument); // l = 0
    CHECK_THROWS_AS(params_from_physical({1.0, 1.0, -9.8, 2.0, {}}, tri),
                    std::invalid_argument); // g < 0
    CHECK_THROWS_AS(params_from_physical({1.0, 1.0, 9.8, 0.0, {}}, tri),
                    std::invalid_argument); // Omega = 0
    CHECK_THROWS_AS(params_from_physical({-0.1, 1.0, 9.8, 2.0, {}}, tri),
                    std::invalid_argument); // A < 0

    CHECK_THROWS_AS(Waveform::rectangular_approx(0), std::invalid_argument);
    CHECK_THROWS_AS(Waveform::rectangular_approx(-3), std::invalid_argument);
    CHECK_NOTHROW(Waveform::rectangular_approx(1));
}
