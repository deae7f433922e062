#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "folavg/actions.hpp"
#include "folavg/common.hpp"

namespace folavg {

/// A bounded continuous observable on the action's phase space (S^1 or T^d).
/// Presets are trigonometric polynomials and bumps; a callback form covers
/// everything else. `sup` carries a bound on |phi| for error estimates.
class Observable {
public:
    using Fn = std::function<double(const Point&)>;

    Observable() : fn_([](const Point&) { return 0.0; }), sup_(0), label_("zero") {}
    Observable(Fn fn, double sup_bound, std::string label)
        : fn_(std::move(fn)), sup_(sup_bound), label_(std::move(label)) {}

    double operator()(const Point& p) const { return fn_(p); }
    double sup_bound() const { return sup_; }
    const std::string& label() const { return label_; }

    static Observable constant(double c) {
        return Observable([c](const Point&) { return c; }, std::fabs(c), "const " + std::to_string(c));
    }

    /// cos(2 pi <m, x>) with integer frequency vector m.
    static Observable cosine(std::vector<int> freq) {
        std::string label = "cos(2pi m.x)";
        return Observable(
            [freq](const Point& p) {
                double phase = 0;
                for (std::size_t i = 0; i < freq.size(); ++i)
                    phase += freq[i] * p.c[i];
                return std::cos(kTwoPi * phase);
            },
            1.0, label);
    }

    /// c0 + sum_j a_j cos(2 pi f_j x) + b_j sin(2 pi f_j x) on S^1.
    static Observable trig1d(double c0, std::vector<std::pair<int, double>> cos_terms,
                             std::vector<std::pair<int, double>> sin_terms = {}) {
        double sup = std::fabs(c0);
        for (auto& [f, a] : cos_terms) sup += std::fabs(a);
        for (auto& [f, b] : sin_terms) sup += std::fabs(b);
        return Observable(
            [c0, cos_terms, sin_terms](const Point& p) {
                double v = c0;
                for (auto& [f, a] : cos_terms) v += a * std::cos(kTwoPi * f * p.c[0]);
                for (auto& [f, b] : sin_terms) v += b * std::sin(kTwoPi * f * p.c[0]);
                return v;
            },
            sup, "trig1d");
    }

    /// Smooth bump supported on the arc (a,b) of S^1, peak value `height`.
    static Observable bump_arc(double a, double b, double height) {
        double len = b - a;
        return Observable(
            [a, len, height](const Point& p) {
                double t = mod1(p.c[0] - a) / len;
                return (t > 0 && t < 1) ? height * bump01(t) : 0.0;
            },
            std::fabs(height), "bump");
    }

private:
    Fn fn_;
    double sup_;
    std::string label_;
};

}  // namespace folavg
