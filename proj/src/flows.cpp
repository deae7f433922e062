#include "folavg/flows.hpp"

#include <cmath>

namespace folavg {

Roof Roof::constant(double c) {
    if (!(c > 0)) throw std::invalid_argument("Roof::constant: c > 0 required");
    return Roof{[c](double) { return c; }, c, c, "const " + std::to_string(c)};
}

Roof Roof::linear() {
    return Roof{[](double x) { return 1.0 + 0.5 * mod1(x); }, 1.0, 1.5, "1 + x/2"};
}

Roof Roof::leafish(const std::vector<double>& breakpoints) {
    // per-interval constant offset (jump at each breakpoint) plus a smooth wave
    std::vector<double> bps = breakpoints;
    return Roof{[bps](double x) {
                    x = mod1(x);
                    std::size_t idx = 0;
                    for (std::size_t i = 0; i < bps.size(); ++i)
                        if (x >= bps[i]) idx = i;
                    return 1.0 + 0.2 * static_cast<double>(idx % 3) +
                           0.3 * std::sin(kTwoPi * x) * std::sin(kTwoPi * x);
                },
                1.0, 1.7, "leafish"};
}

FlowObservable FlowObservable::constant(double c) {
    return {[c](const FlowPoint&) { return c; }, std::fabs(c), "const"};
}

FlowObservable FlowObservable::cos_x() {
    return {[](const FlowPoint& z) { return std::cos(kTwoPi * z.x); }, 1.0, "cos(2pi x)"};
}

FlowObservable FlowObservable::component_sign() {
    return {[](const FlowPoint& z) { return mod1(z.x) < 0.5 ? 1.0 : -1.0; }, 1.0, "component sign"};
}

double hitting_time(const SuspensionSpace& s, double x, long long n) {
    double tau = 0;
    if (n >= 0) {
        double cx = mod1(x);
        for (long long i = 0; i < n; ++i) {
            tau += s.roof(cx);
            cx = s.base.apply(cx);
        }
    } else {
        double cx = mod1(x);
        for (long long i = 0; i < -n; ++i) {
            cx = s.base.apply_inverse(cx);
            tau -= s.roof(cx);
        }
    }
    return tau;
}

FlowPoint flow(const SuspensionSpace& s, FlowPoint z, double t) {
    double x = mod1(z.x);
    double y = z.y + t;
    while (y >= s.roof(x)) {
        y -= s.roof(x);
        x = s.base.apply(x);
    }
    while (y < 0) {
        x = s.base.apply_inverse(x);
        y += s.roof(x);
    }
    return {x, y};
}

namespace {

constexpr int kGL = 5;
const double kGLx[kGL] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                          0.9061798459386640};
const double kGLw[kGL] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                          0.4786286704993665, 0.2369268850561891};

/// Int_a^b psi(x, y) dy along one fibre (0 <= a <= b <= roof(x)), with
/// subpanels keeping every Gauss-Legendre panel below length 1/2.
double fibre_integral(const FlowObservable& psi, double x, double a, double b) {
    const int nsub = std::max(1, static_cast<int>(std::ceil((b - a) / 0.5)));
    const double h = (b - a) / nsub;
    double sum = 0;
    for (int p = 0; p < nsub; ++p) {
        const double lo = a + p * h;
        for (int q = 0; q < kGL; ++q) {
            FlowPoint z{x, lo + 0.5 * h * (1.0 + kGLx[q])};
            sum += kGLw[q] * psi(z);
        }
    }
    return sum * 0.5 * h;
}

}  // namespace

double time_average(const SuspensionSpace& s, const FlowObservable& psi, FlowPoint z, double T) {
    if (!(T > 0)) throw std::invalid_argument("time_average: T > 0 required");
    // integrate along the orbit from f^{-T}(z) forward for time 2T; the
    // integrand is smooth between roof crossings
    FlowPoint w = flow(s, z, -T);
    double remaining = 2.0 * T;
    double total = 0;
    double x = w.x, y = w.y;
    while (remaining > 0) {
        const double avail = s.roof(x) - y;
        if (avail <= remaining) {
            if (avail > 0) total += fibre_integral(psi, x, y, y + avail);
            remaining -= avail;
            x = s.base.apply(x);
            y = 0;
        } else {
            total += fibre_integral(psi, x, y, y + remaining);
            remaining = 0;
        }
    }
    return total / (2.0 * T);
}

LeafAverage leaf_time_average(const SuspensionSpace& s, const FlowObservable& psi, FlowPoint z,
                              double T, int dyadic_levels) {
    LeafAverage out;
    for (int j = dyadic_levels; j >= 0; --j) {
        const double Tj = T / std::pow(2.0, j);
        out.series.push(Tj, time_average(s, psi, z, Tj));
    }
    out.series.finalize();
    out.value = out.series.samples.back().value;
    return out;
}

}  // namespace folavg
