#pragma once

#include <functional>

namespace toppling {

// Planar autonomous-in-x system y' = f(x,y,z), z' = g(x,y,z).
struct OdeSystem2D {
    std::function<double(double, double, double)> dy;
    std::function<double(double, double, double)> dz;
    // Open validity domain; steps landing outside are rejected and halved.
    // Null means everywhere valid.
    std::function<bool(double, double, double)> in_domain;
};

// Stop when alpha*y + beta*z - gamma crosses zero from below.  The
// functional must be increasing along the trajectory so the crossing is
// unique.
struct StopEvent {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double eval(double y, double z) const { return alpha * y + beta * z - gamma; }
};

struct EventCrossing {
    double x = 0.0, y = 0.0, z = 0.0;
};

// Adaptive Dormand-Prince stepping with per-step error control at `tol`;
// the crossing is refined to |dx| <= tol by bisection on the final step.
// Throws on step-size underflow (floor 1e-14) or domain exit before the
// event.
EventCrossing integrate_to_event(const OdeSystem2D& sys, double x0, double y0, double z0,
                                 const StopEvent& ev, double tol);

struct BoundResult {
    double x_plus = 0.0;
    double x_bar = 0.0;
    double x_minus = 0.0;
    double lower_coeff = 0.0;  // 2 * x_minus
    double upper_coeff = 0.0;  // 2 * x_plus
    double tol = 0.0;
};

// The three right-hand sides of the strategy-evolution systems.
OdeSystem2D system_triangle_row();  // y' = 1/(1-z),  z' = 1/z - 1/(1-z)
OdeSystem2D system_square_free();   // y' = 1/(1-z),  z' = 1/(2z) - 1/(2(1-z))
OdeSystem2D system_square_clipped();// y' = 1/(1-z),  z' = 1/(2(1-y-z)) - 1/(2(1-z))

// x_plus from the first system (event y+z=1), x_bar from the second
// (event y+2z=1), x_minus by continuing the third from the switch state
// until y+z=1.  1e-12 <= tol <= 1e-4.
BoundResult compute_constants(double tol);

}  // namespace toppling
