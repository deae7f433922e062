#pragma once

#include "folavg/actions.hpp"
#include "folavg/observable.hpp"
#include "folavg/orbit.hpp"
#include "folavg/series.hpp"

namespace folavg {

/// How a ball average weights the orbit: over the multiset of reduced words
/// (each word counted once, the definition of beta_n) or over the orbit
/// classes G_n(y).
enum class BallAverageMode { Words, Classes };

/// beta_n phi(y) = |G_n|^-1 sum_{a in G_n} phi(f_a(y)), or the class variant.
double ball_average(const GroupAction& action, const Observable& phi, const Point& y, int n,
                    BallAverageMode mode = BallAverageMode::Words, double tol = 1e-9,
                    std::size_t cap = kDefaultEnumerationCap);

/// The full series beta_1..beta_N (same cost as the last term).
AverageSeries ball_average_series(const GroupAction& action, const Observable& phi, const Point& y,
                                  int N, BallAverageMode mode = BallAverageMode::Words,
                                  double tol = 1e-9, std::size_t cap = kDefaultEnumerationCap);

/// A value with an attached quadrature error bound.
struct Estimate {
    double value = 0;
    double error = 0;
};

/// Continuous ball average of an l-parameter torus rotation action:
/// |B_r|^-1 Int_{B_r} phi(f(t)(x)) dt over the Euclidean ball of radius r.
/// Composite Gauss-Legendre with one Richardson refinement supplying the
/// declared error bound. Supported for l = 1 and l = 2.
Estimate rotation_ball_average(const TorusRotation& rot, const Observable& phi, const Point& x,
                               double r);

}  // namespace folavg
