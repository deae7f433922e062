#pragma once

#include <functional>
#include <string>

#include "folavg/averages.hpp"
#include "folavg/orbit.hpp"
#include "folavg/series.hpp"

namespace folavg {

/// Scalar geometry of a model leaf plug: boundary components pairwise at
/// distance R, sup distance D to the boundary, window V at distance [m0, m1]
/// from the boundary, total volume, and the boundary ball-volume profile
/// r -> inf over boundary points of |B_r^X(x)|.
struct PlugSpec {
    double R = 0;
    double D = 0;
    double m0 = 0;
    double m1 = 0;
    double volX = 0;
    std::function<double(double)> ball_profile;  // nondecreasing, <= volX
    std::string name = "plug";

    void validate() const;
};

/// Presets: a thin plug with K = 1/2, and a cylinder-like plug for the
/// small-boundary pipeline.
PlugSpec plug_thin_f2();
PlugSpec plug_cylinder();

/// The two thin-legs inequalities with their slack.
struct ThinLegsReport {
    bool ineq1 = false;  // m1 + (D - R) < 2 m0
    bool ineq2 = false;  // 2 m1 < R + m0
    double slack1 = 0;
    double slack2 = 0;
    bool thin() const { return ineq1 && ineq2; }
};

ThinLegsReport thin_check(const PlugSpec& p);

/// Radius pair (r_n, s_n) with the offsets R0, R1 fixed at the midpoints of
/// their admissible intervals: R0 in (m1 + (D-R), 2 m0), R1 in (2 m1, R + m0),
/// r_n = R0 + (n-1) R, s_n = R1 + (n-2) R. Requires thin legs.
struct RadiusPair {
    double r = 0;
    double s = 0;
    double R0 = 0;
    double R1 = 0;
};
RadiusPair radii(const PlugSpec& p, int n);

/// Leafwise-ball average bounds at radius r from the inclusion of plug copies
/// over G_{n-1}(y) inside the ball and the ball inside copies over G_{n+1}(y)
/// (n = floor(r/R)):
///   lower = sum_{G_{n-1}(y)} phi / (volX |G_{n+1}(y)|),
///   upper = sum_{G_{n+1}(y)} phi / (volX |G_{n-1}(y)|).
struct SandwichBounds {
    double lower = 0;
    double upper = 0;
    int n = 0;
};
SandwichBounds sandwich_bounds(const GroupAction& action, const Point& y, const Observable& phi,
                               const PlugSpec& p, double r, double tol = 1e-9,
                               std::size_t cap = kDefaultEnumerationCap);

/// Small-boundary limits: (1/volX) times the trailing-window limsup/liminf of
/// beta_n phi over n <= N. `hypothesis_warning` is set when the lambda ratio
/// over the window exceeds 0.05 (the vanishing-boundary hypothesis looks
/// violated, the identification with length averages is then unsupported).
struct SmallBoundaryLimits {
    double limsup_estimate = 0;
    double liminf_estimate = 0;
    double lambda_window = 0;
    bool hypothesis_warning = false;
    AverageSeries beta_series;
};
/// `mode` selects the word-multiset average (the definition of beta_n; word
/// count grows exponentially in n for k >= 2) or the orbit-class average.
SmallBoundaryLimits small_boundary_limits(const GroupAction& action, const Point& y,
                                          const Observable& phi, const PlugSpec& p, int N,
                                          BallAverageMode mode = BallAverageMode::Words,
                                          double tol = 1e-9,
                                          std::size_t cap = kDefaultEnumerationCap);

/// Non-convergence certificate for a thin plug over an action with positive
/// boundary ratio. For each n, the leafwise average at r_n is certified
/// <= 1 (the ball contains the G_n(y) plug copies, which carry the whole
/// integral), and at s_n it equals
///   1 / (1 - (1-K) |G_n(y)\G_{n-1}(y)| / |G_n(y)|)
/// from the volume bound with K = ball_profile(R1 - m0) / volX. The summary
/// bound is 1/(1 - (1-K) lambda) over the trailing window; gap = bound - 1.
struct OscillationCertificate {
    double K = 0;
    double R0 = 0, R1 = 0;
    struct Row {
        int n = 0;
        double r = 0;
        double avg_r_upper = 1.0;  // certified upper bound on the r_n average
        double s = 0;
        double avg_s = 0;          // certified lower bound attained at s_n
        double ratio = 0;          // |G_n(y)\G_{n-1}(y)| / |G_n(y)|
    };
    std::vector<Row> rows;
    int window = 0;
    double lambda_window = 0;
    double limsup_lower = 0;  // 1/(1-(1-K) lambda_window)
    double upper = 1.0;
    double gap = 0;
    std::string to_json() const;
};
OscillationCertificate large_boundary_certificate(const GroupAction& action, const Point& y,
                                                  const PlugSpec& p, int N, double tol = 1e-9,
                                                  std::size_t cap = kDefaultEnumerationCap);

/// Product-extension transfer: under the verified hypothesis that the annulus
/// B_{r_n} \ B_{r_n - R1} carries no mass of the observable, the extended
/// foliation's averages at the same radii coincide with the base averages and
/// the limsup/liminf transfer unchanged. Refuses when the hypothesis flag is
/// not set by the caller.
struct ProductExtensionReport {
    double R1 = 0;
    AverageSeries base;
    AverageSeries extended;  // bitwise copy, the extension changes nothing
    OscillationDiagnostic transfer;
    bool identical = false;
};
ProductExtensionReport product_extension_check(const AverageSeries& base, double R1,
                                               bool annulus_zero_verified);

}  // namespace folavg
