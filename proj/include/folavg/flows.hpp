#pragma once

#include <functional>
#include <string>

#include "folavg/actions.hpp"
#include "folavg/series.hpp"

namespace folavg {

/// Roof function of a suspension: bounded, positive, continuous except at the
/// base map's discontinuity set.
struct Roof {
    std::function<double(double)> f;
    double inf = 1;
    double sup = 1;
    std::string label = "roof";

    double operator()(double x) const { return f(x); }

    static Roof constant(double c);
    /// 1 + x/2 on [0,1).
    static Roof linear();
    /// Positive, piecewise-smooth, with jumps exactly at the given breakpoints
    /// (mimics a leaf-length function over an interval exchange).
    static Roof leafish(const std::vector<double>& breakpoints);
};

/// Suspension of an interval exchange under a roof.
struct SuspensionSpace {
    IntervalExchange base;
    Roof roof;
};

/// A point of the suspension in its fundamental domain {0 <= y < roof(x)}.
struct FlowPoint {
    double x = 0;
    double y = 0;
};

/// Observable on the suspension space.
struct FlowObservable {
    std::function<double(const FlowPoint&)> f;
    double sup = 1;
    std::string label = "psi";
    double operator()(const FlowPoint& z) const { return f(z); }

    static FlowObservable constant(double c);
    /// cos(2 pi x), independent of the fibre coordinate.
    static FlowObservable cos_x();
    /// +1 on x < 0.5, -1 otherwise (separates the two halves of a reducible base).
    static FlowObservable component_sign();
};

/// n-th hitting time of the roof: tau_{n+1} = tau_n + roof(T^n x), tau_0 = 0;
/// negative n through the inverse base map. Strictly monotone in n.
double hitting_time(const SuspensionSpace& s, double x, long long n);

/// Suspension flow f^t; the result lies in the fundamental domain.
FlowPoint flow(const SuspensionSpace& s, FlowPoint z, double t);

/// Symmetric time average (1/2T) Int_{-T}^{T} psi(f^t z) dt, integrated
/// exactly segment-by-segment between roof crossings with Gauss-Legendre
/// panels; quadrature error below 1e-6 * sup|psi|.
double time_average(const SuspensionSpace& s, const FlowObservable& psi, FlowPoint z, double T);

/// Time averages along a dyadic schedule T/2^j, ..., T/2, T (for oscillation
/// diagnostics); value = the average at T.
struct LeafAverage {
    double value = 0;
    AverageSeries series;
};
LeafAverage leaf_time_average(const SuspensionSpace& s, const FlowObservable& psi, FlowPoint z,
                              double T, int dyadic_levels = 11);

}  // namespace folavg
