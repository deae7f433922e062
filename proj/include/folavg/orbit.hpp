#pragma once

#include <cstddef>
#include <vector>

#include "folavg/actions.hpp"
#include "folavg/series.hpp"
#include "folavg/words.hpp"

namespace folavg {

/// The orbit ball G_n(y) = { f_a(y) : a in G_n } with points identified up to
/// an absolute tolerance (exact rational identification when the action and
/// base point support it). Each class stores its shortest representative
/// word, ties broken lexicographically.
struct OrbitBall {
    Point base;
    int radius = 0;
    double tol = 0;
    bool exact = false;
    std::vector<Point> points;                  // one representative per class
    std::vector<Word> words;                    // shortest shortlex word per class
    std::vector<std::size_t> count_by_radius;   // |G_m(y)| for m = 1..radius

    std::size_t size() const { return points.size(); }
};

OrbitBall orbit_ball(const GroupAction& action, const Point& y, int n, double tol = 1e-9,
                     std::size_t cap = kDefaultEnumerationCap);

/// The sphere-to-ball ratios |G_n(y) \ G_{n-1}(y)| / |G_n(y)| for n = 2..N,
/// with a trailing-window limsup estimate. N >= 2.
AverageSeries lambda_series(const GroupAction& action, const Point& y, int N, double tol = 1e-9,
                            std::size_t cap = kDefaultEnumerationCap);

/// Folner defect |a G_n(y) symdiff G_n(y)| / |G_n(y)| with the same
/// tolerance identification. Invariant under free reduction of `a`; for a
/// free orbit it obeys the bound 2 |a| |G_{n+1}(y)\G_n(y)| / |G_n(y)|.
double folner_defect(const GroupAction& action, const Point& y, const Word& a, int n,
                     double tol = 1e-9, std::size_t cap = kDefaultEnumerationCap);

}  // namespace folavg
