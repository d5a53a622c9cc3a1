#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace scatlen {

// Adaptive Simpson quadrature with Richardson acceptance. tol is relative
// to the running estimate of the whole integral.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int max_depth = 48);

// Bisection on a bracketing interval [lo, hi] with f(lo), f(hi) of opposite
// signs; returns the midpoint after the interval has shrunk to xtol.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol, int max_iter = 200);

// Derivative-free scalar minimization (golden section with parabolic
// steps, Brent style) on [lo, hi].
struct MinimizeResult {
    double x = 0.0;
    double fx = 0.0;
    int evaluations = 0;
};
MinimizeResult brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                              double xtol, int max_iter = 200);

// Monotone (Fritsch-Carlson) piecewise cubic interpolant. Knot abscissae
// must be strictly increasing; evaluation clamps to the end intervals.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, d_; // knots, values, endpoint slopes
};

} // namespace scatlen
