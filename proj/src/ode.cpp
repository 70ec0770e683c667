#include "toppling/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toppling {

namespace {

constexpr double kStepFloor = 1e-14;
constexpr double kStepCeil = 1e-2;
constexpr long kMaxSteps = 50000000L;

struct State {
    double y, z;
};

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

struct StepResult {
    State next;
    double err = 0.0;  // scaled error ratio; <= 1 accepts
    bool valid = false;
};

State rhs(const OdeSystem2D& sys, double x, const State& s) {
    return {sys.dy(x, s.y, s.z), sys.dz(x, s.y, s.z)};
}

bool finite(const State& s) { return std::isfinite(s.y) && std::isfinite(s.z); }

bool in_domain(const OdeSystem2D& sys, double x, const State& s) {
    return !sys.in_domain || sys.in_domain(x, s.y, s.z);
}

StepResult dp_step(const OdeSystem2D& sys, double x, const State& s, double h, double tol) {
    StepResult r;
    auto stage = [&](double ky, double kz) -> State {
        return {s.y + h * ky, s.z + h * kz};
    };
    const State k1 = rhs(sys, x, s);
    if (!finite(k1)) return r;
    State p = stage(a21 * k1.y, a21 * k1.z);
    if (!finite(p) || !in_domain(sys, x + c2 * h, p)) return r;
    const State k2 = rhs(sys, x + c2 * h, p);
    if (!finite(k2)) return r;
    p = stage(a31 * k1.y + a32 * k2.y, a31 * k1.z + a32 * k2.z);
    if (!finite(p) || !in_domain(sys, x + c3 * h, p)) return r;
    const State k3 = rhs(sys, x + c3 * h, p);
    if (!finite(k3)) return r;
    p = stage(a41 * k1.y + a42 * k2.y + a43 * k3.y, a41 * k1.z + a42 * k2.z + a43 * k3.z);
    if (!finite(p) || !in_domain(sys, x + c4 * h, p)) return r;
    const State k4 = rhs(sys, x + c4 * h, p);
    if (!finite(k4)) return r;
    p = stage(a51 * k1.y + a52 * k2.y + a53 * k3.y + a54 * k4.y,
              a51 * k1.z + a52 * k2.z + a53 * k3.z + a54 * k4.z);
    if (!finite(p) || !in_domain(sys, x + c5 * h, p)) return r;
    const State k5 = rhs(sys, x + c5 * h, p);
    if (!finite(k5)) return r;
    p = stage(a61 * k1.y + a62 * k2.y + a63 * k3.y + a64 * k4.y + a65 * k5.y,
              a61 * k1.z + a62 * k2.z + a63 * k3.z + a64 * k4.z + a65 * k5.z);
    if (!finite(p) || !in_domain(sys, x + h, p)) return r;
    const State k6 = rhs(sys, x + h, p);
    if (!finite(k6)) return r;

    const State next{s.y + h * (b1 * k1.y + b3 * k3.y + b4 * k4.y + b5 * k5.y + b6 * k6.y),
                     s.z + h * (b1 * k1.z + b3 * k3.z + b4 * k4.z + b5 * k5.z + b6 * k6.z)};
    if (!finite(next) || !in_domain(sys, x + h, next)) return r;
    const State k7 = rhs(sys, x + h, next);
    if (!finite(k7)) return r;
    const State low{s.y + h * (e1 * k1.y + e3 * k3.y + e4 * k4.y + e5 * k5.y + e6 * k6.y +
                               e7 * k7.y),
                    s.z + h * (e1 * k1.z + e3 * k3.z + e4 * k4.z + e5 * k5.z + e6 * k6.z +
                               e7 * k7.z)};
    const double sc_y = tol + tol * std::max(std::abs(s.y), std::abs(next.y));
    const double sc_z = tol + tol * std::max(std::abs(s.z), std::abs(next.z));
    r.err = std::max(std::abs(next.y - low.y) / sc_y, std::abs(next.z - low.z) / sc_z);
    r.next = next;
    r.valid = true;
    return r;
}

}  // namespace

EventCrossing integrate_to_event(const OdeSystem2D& sys, double x0, double y0, double z0,
                                 const StopEvent& ev, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_to_event: bad tolerance");
    if (ev.eval(y0, z0) >= 0.0)
        throw std::invalid_argument("integrate_to_event: event functional not negative at start");
    if (!in_domain(sys, x0, {y0, z0}))
        throw std::invalid_argument("integrate_to_event: start outside domain");

    double x = x0;
    State s{y0, z0};
    double h = std::clamp(0.01 * std::max(std::abs(x0), 1e-9), 1e-13, kStepCeil);
    for (long step = 0; step < kMaxSteps; ++step) {
        // Stop once the estimated x-distance to the crossing, |F| / F',
        // drops below tol.  The slope-based form matters when the
        // trajectory meets the event tangentially to sqrt(x* - x): the
        // functional value itself then cannot reach -tol with steps above
        // the floor, but the remaining distance still contracts to 0.
        const double f = ev.eval(s.y, s.z);
        if (f >= 0.0) return {x, s.y, s.z};
        const State d = rhs(sys, x, s);
        const double fdot = ev.alpha * d.y + ev.beta * d.z;
        if (fdot > 0.0 && -f <= tol * fdot) return {x, s.y, s.z};

        const StepResult trial = dp_step(sys, x, s, h, tol);
        if (!trial.valid) {
            h *= 0.5;
            if (h < kStepFloor) throw std::runtime_error("integrate_to_event: step-size underflow");
            continue;
        }
        if (trial.err > 1.0) {
            h *= std::clamp(0.9 * std::pow(trial.err, -0.2), 0.2, 1.0);
            if (h < kStepFloor) throw std::runtime_error("integrate_to_event: step-size underflow");
            continue;
        }
        if (ev.eval(trial.next.y, trial.next.z) >= 0.0) {
            // Bracketed: bisection on the step.
            double lo = 0.0, hi = h;
            State at_hi = trial.next;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const StepResult probe = dp_step(sys, x, s, mid, tol);
                if (!probe.valid || ev.eval(probe.next.y, probe.next.z) >= 0.0) {
                    hi = mid;
                    if (probe.valid) at_hi = probe.next;
                } else {
                    lo = mid;
                }
            }
            return {x + hi, at_hi.y, at_hi.z};
        }
        x += h;
        s = trial.next;
        h = std::clamp(h * std::clamp(0.9 * std::pow(std::max(trial.err, 1e-10), -0.2), 0.2, 5.0),
                       kStepFloor, kStepCeil);
    }
    throw std::runtime_error("integrate_to_event: step budget exhausted");
}

OdeSystem2D system_triangle_row() {
    OdeSystem2D sys;
    sys.dy = [](double, double, double z) { return 1.0 / (1.0 - z); };
    sys.dz = [](double, double, double z) { return 1.0 / z - 1.0 / (1.0 - z); };
    sys.in_domain = [](double, double, double z) { return z > 0.0 && z < 1.0; };
    return sys;
}

OdeSystem2D system_square_free() {
    OdeSystem2D sys;
    sys.dy = [](double, double, double z) { return 1.0 / (1.0 - z); };
    sys.dz = [](double, double, double z) {
        return 1.0 / (2.0 * z) - 1.0 / (2.0 * (1.0 - z));
    };
    sys.in_domain = [](double, double, double z) { return z > 0.0 && z < 1.0; };
    return sys;
}

OdeSystem2D system_square_clipped() {
    OdeSystem2D sys;
    sys.dy = [](double, double, double z) { return 1.0 / (1.0 - z); };
    sys.dz = [](double, double y, double z) {
        return 1.0 / (2.0 * (1.0 - y - z)) - 1.0 / (2.0 * (1.0 - z));
    };
    sys.in_domain = [](double, double y, double z) {
        return z > 0.0 && z < 1.0 && y + z < 1.0;
    };
    return sys;
}

BoundResult compute_constants(double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-4))
        throw std::invalid_argument("compute_constants: tol outside [1e-12, 1e-4]");
    BoundResult res;
    res.tol = tol;
    // Series seeding past the integrable singularity at x = 0: leading
    // balance z z' ~ 1 gives z(e) = sqrt(2e) for the first system and
    // 2 z z' ~ 1 gives z(e) = sqrt(e) for the second, with y(e) = e.
    const double eps = std::max(tol * tol, 1e-12);

    const auto first = integrate_to_event(system_triangle_row(), eps, eps,
                                          std::sqrt(2.0 * eps), {1.0, 1.0, 1.0}, tol);
    res.x_plus = first.x;

    const auto bar = integrate_to_event(system_square_free(), eps, eps, std::sqrt(eps),
                                        {1.0, 2.0, 1.0}, tol);
    res.x_bar = bar.x;

    const auto second = integrate_to_event(system_square_clipped(), bar.x, bar.y, bar.z,
                                           {1.0, 1.0, 1.0}, tol);
    res.x_minus = second.x;

    res.lower_coeff = 2.0 * res.x_minus;
    res.upper_coeff = 2.0 * res.x_plus;
    return res;
}

}  // namespace toppling
