#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "toppling/ode.hpp"

using namespace toppling;

TEST_CASE("event integration on linear systems") {
    SUBCASE("y' = 1 hits y = 1 at x = 1") {
        OdeSystem2D sys;
        sys.dy = [](double, double, double) { return 1.0; };
        sys.dz = [](double, double, double) { return 0.0; };
        const EventCrossing c =
            integrate_to_event(sys, 0.0, 0.0, 0.0, StopEvent{1, 0, 1}, 1e-10);
        CHECK(std::abs(c.x - 1.0) <= 1e-9);
    }
    SUBCASE("z' = 1 hits y + 2z = 1 at x = 0.5") {
        OdeSystem2D sys;
        sys.dy = [](double, double, double) { return 0.0; };
        sys.dz = [](double, double, double) { return 1.0; };
        const EventCrossing c =
            integrate_to_event(sys, 0.0, 0.0, 0.0, StopEvent{1, 2, 1}, 1e-10);
        CHECK(std::abs(c.x - 0.5) <= 1e-9);
    }
    SUBCASE("event already crossed is an error") {
        OdeSystem2D sys;
        sys.dy = [](double, double, double) { return 1.0; };
        sys.dz = [](double, double, double) { return 0.0; };
        CHECK_THROWS(integrate_to_event(sys, 0.0, 2.0, 0.0, StopEvent{1, 0, 1}, 1e-8));
    }
}

TEST_CASE("right-hand-side algebraic identities") {
    const OdeSystem2D tri = system_triangle_row();
    const OdeSystem2D sq = system_square_clipped();
    for (double z : {0.1, 0.3, 0.45}) {
        const double lhs = tri.dz(0.0, 0.2, z);
        const double rhs = (1.0 - 2.0 * z) / (z * (1.0 - z));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-12);
    }
    for (double y : {0.1, 0.2}) {
        for (double z : {0.1, 0.3}) {
            const double lhs = sq.dz(0.0, y, z);
            const double rhs = y / (2.0 * (1.0 - y - z) * (1.0 - z)) -
                               0.0;  // difference form
            const double direct = 1.0 / (2.0 * (1.0 - y - z)) - 1.0 / (2.0 * (1.0 - z));
            CHECK(std::abs(lhs - direct) <= 1e-14);
            CHECK(std::abs(direct - rhs) <= 1e-12);
        }
    }
}

TEST_CASE("self convergence of the first crossing") {
    const double tol = 1e-8;
    const BoundResult coarse = compute_constants(tol);
    const BoundResult fine = compute_constants(tol / 2);
    CHECK(std::abs(coarse.x_plus - fine.x_plus) <= 10 * tol);
    CHECK(std::abs(coarse.x_bar - fine.x_bar) <= 10 * tol);
    CHECK(std::abs(coarse.x_minus - fine.x_minus) <= 10 * tol);
}

TEST_CASE("constants ordering and windows") {
    const BoundResult res = compute_constants(1e-9);
    CHECK(res.x_bar < res.x_minus);
    CHECK(res.x_minus < res.x_plus);
    CHECK(res.lower_coeff == 2 * res.x_minus);
    CHECK(res.upper_coeff == 2 * res.x_plus);
    CHECK(std::abs(res.x_bar - 0.204309) <= 5e-6);
    CHECK(res.x_plus >= 0.31840);
    CHECK(res.x_plus <= 0.318576);
    CHECK(res.x_minus >= 0.298200);
    CHECK(res.x_minus <= 0.29840);
}

TEST_CASE("switch continuity between the square systems") {
    const double tol = 1e-9;
    const OdeSystem2D free_sys = system_square_free();
    const OdeSystem2D clipped = system_square_clipped();
    const EventCrossing sw = integrate_to_event(free_sys, 1e-12, 1e-12, 1e-6,
                                                StopEvent{1, 2, 1}, tol);
    // At y + 2z = 1 the clipped z-RHS 1/(2(1-y-z)) - 1/(2(1-z)) coincides
    // with the free one 1/(2z) - 1/(2(1-z)).
    const double before = free_sys.dz(sw.x, sw.y, sw.z);
    const double after = clipped.dz(sw.x, sw.y, sw.z);
    CHECK(std::abs(after - before) <= 10 * tol);
}

TEST_CASE("tolerance validation") {
    CHECK_THROWS(compute_constants(1e-13));
    CHECK_THROWS(compute_constants(1e-3));
}
