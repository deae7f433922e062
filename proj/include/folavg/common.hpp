#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace folavg {

/// Enumeration or orbit growth exceeded the configured cap.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric input cannot satisfy the required constraints.
class LayoutError : public std::runtime_error {
public:
    explicit LayoutError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated hypothesis of the requested computation is not met.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Default cap on enumerated words / orbit points.
constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Fractional part in [0,1).
inline double mod1(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;  // guard against floor rounding at negative epsilons
    return f;
}

/// Distance on R/Z.
inline double circle_dist(double a, double b) {
    double d = std::fabs(mod1(a) - mod1(b));
    return d <= 0.5 ? d : 1.0 - d;
}

/// Quintic smoothstep: 0 at t<=0, 1 at t>=1, first and second derivatives
/// vanish at both ends.
inline double smoothstep5(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (t * (t * 6.0 - 15.0) + 10.0);
}

/// Smooth bump on [0,1], equal to 0 at the ends and 1 at the midpoint.
inline double bump01(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return smoothstep5(2.0 * t) * smoothstep5(2.0 - 2.0 * t);
}

/// Exact rational arithmetic for identity detection in rational presets.
/// Kept deliberately small: preset denominators stay tame, int64 suffices.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator-() const { return {-num, den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    /// Representative in [0,1).
    Rational mod1() const {
        std::int64_t m = num % den;
        if (m < 0) m += den;
        return {m, den};
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace folavg
