#include "folavg/averages.hpp"

#include <cmath>

namespace folavg {

namespace {

constexpr int kGL = 8;
// 8-point Gauss-Legendre nodes/weights on [-1,1]
const double kGLx[kGL] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                          -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                          0.7966664774136267,  0.9602898564975363};
const double kGLw[kGL] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                          0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                          0.2223810344533745, 0.1012285362903763};

double segment_orbit_average(const TorusRotation& rot, const Observable& phi, const Point& x,
                             double r, int panels) {
    // (1/2r) Int_{-r}^{r} phi(x + t alpha) dt
    double total = 0;
    const double h = 2.0 * r / panels;
    for (int p = 0; p < panels; ++p) {
        const double t0 = -r + p * h;
        for (int q = 0; q < kGL; ++q) {
            const double t = t0 + 0.5 * h * (1.0 + kGLx[q]);
            total += kGLw[q] * phi(rot.apply({t}, x));
        }
    }
    return total * (0.5 * h) / (2.0 * r);
}

double disk_orbit_average(const TorusRotation& rot, const Observable& phi, const Point& x,
                          double r, int panels) {
    // |B_r|^-1 Int phi(x + t alpha) dt over the Euclidean disk, polar tensor rule
    double total = 0;
    const int np_r = panels, np_th = 2 * panels;
    const double hr = r / np_r, hth = kTwoPi / np_th;
    for (int i = 0; i < np_r; ++i) {
        for (int q = 0; q < kGL; ++q) {
            const double rho = i * hr + 0.5 * hr * (1.0 + kGLx[q]);
            double ring = 0;
            for (int j = 0; j < np_th; ++j) {
                for (int s = 0; s < kGL; ++s) {
                    const double th = j * hth + 0.5 * hth * (1.0 + kGLx[s]);
                    ring += kGLw[s] * phi(rot.apply({rho * std::cos(th), rho * std::sin(th)}, x));
                }
            }
            total += kGLw[q] * rho * ring * (0.5 * hth);
        }
    }
    total *= 0.5 * hr;
    const double area = 0.5 * kTwoPi * r * r;
    return total / area;
}

}  // namespace

double ball_average(const GroupAction& action, const Observable& phi, const Point& y, int n,
                    BallAverageMode mode, double tol, std::size_t cap) {
    AverageSeries s = ball_average_series(action, phi, y, n, mode, tol, cap);
    return s.samples.back().value;
}

AverageSeries ball_average_series(const GroupAction& action, const Observable& phi, const Point& y,
                                  int N, BallAverageMode mode, double tol, std::size_t cap) {
    if (N < 1) throw std::invalid_argument("ball_average_series: N >= 1 required");
    AverageSeries series;

    if (mode == BallAverageMode::Classes) {
        OrbitBall ball = orbit_ball(action, y, N, tol, cap);
        double sum = 0;
        std::size_t done = 0;
        for (int m = 1; m <= N; ++m) {
            const std::size_t upto = ball.count_by_radius[static_cast<std::size_t>(m) - 1];
            for (; done < upto; ++done) sum += phi(ball.points[done]);
            series.push(m, sum / static_cast<double>(upto));
        }
        series.finalize();
        return series;
    }

    // Word multiset: walk every reduced word once, incrementally by prefix.
    struct Node {
        Point p;
        Letter first;
    };
    std::vector<Letter> gens;
    for (int i = 1; i <= action.generators(); ++i) {
        gens.push_back(static_cast<Letter>(i));
        gens.push_back(static_cast<Letter>(-i));
    }
    std::vector<Node> level;
    double sum = 0;
    std::uint64_t words = 0;
    for (Letter g : gens) {
        Point p = action.apply(g, y);
        sum += phi(p);
        ++words;
        level.push_back({p, g});
    }
    series.push(1, sum / static_cast<double>(words));
    for (int m = 2; m <= N; ++m) {
        std::vector<Node> next;
        next.reserve(level.size() * (gens.size() - 1));
        for (Letter g : gens) {
            const Letter bad = inverse(g);
            for (const Node& node : level) {
                if (node.first == bad) continue;
                Point p = action.apply(g, node.p);
                sum += phi(p);
                ++words;
                next.push_back({p, g});
                if (words > cap)
                    throw ResourceCapError("ball_average: word count exceeds cap " + std::to_string(cap));
            }
        }
        level = std::move(next);
        series.push(m, sum / static_cast<double>(words));
    }
    series.finalize();
    return series;
}

Estimate rotation_ball_average(const TorusRotation& rot, const Observable& phi, const Point& x,
                               double r) {
    if (!(r > 0)) throw std::invalid_argument("rotation_ball_average: r > 0 required");
    if (x.dim != rot.d()) throw std::invalid_argument("rotation_ball_average: dimension mismatch");
    if (rot.l() == 1) {
        double speed = 0;
        for (double a : rot.alpha[0]) speed = std::max(speed, std::fabs(a));
        const int panels = std::max(64, static_cast<int>(8.0 * r * std::max(1.0, speed)));
        const double coarse = segment_orbit_average(rot, phi, x, r, panels);
        const double fine = segment_orbit_average(rot, phi, x, r, 2 * panels);
        return {fine, std::fabs(fine - coarse)};
    }
    if (rot.l() == 2) {
        double speed = 0;
        for (const auto& v : rot.alpha)
            for (double a : v) speed = std::max(speed, std::fabs(a));
        const int panels = std::max(16, static_cast<int>(2.0 * r * std::max(1.0, speed)));
        const double coarse = disk_orbit_average(rot, phi, x, r, panels);
        const double fine = disk_orbit_average(rot, phi, x, r, panels * 3 / 2 + 1);
        return {fine, std::fabs(fine - coarse)};
    }
    throw std::invalid_argument("rotation_ball_average: only l = 1 or 2 parameter dimensions supported");
}

}  // namespace folavg
