#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folavg/common.hpp"

namespace folavg {

/// A phase-space point: coordinates on S^1 or T^d (d <= 4), optionally with
/// exact rational coordinates when the acting maps preserve rationality.
struct Point {
    std::array<double, 4> c{};
    int dim = 1;
    bool exact = false;
    std::array<Rational, 4> r{};

    static Point circle(double x) {
        Point p;
        p.c[0] = mod1(x);
        return p;
    }
    static Point circle_exact(const Rational& x) {
        Point p;
        p.exact = true;
        p.r[0] = x.mod1();
        p.c[0] = p.r[0].to_double();
        return p;
    }
    static Point torus(const std::vector<double>& x) {
        Point p;
        p.dim = static_cast<int>(x.size());
        for (int i = 0; i < p.dim; ++i) p.c[static_cast<std::size_t>(i)] = mod1(x[static_cast<std::size_t>(i)]);
        return p;
    }

    double x() const { return c[0]; }
};

/// Max circular distance over coordinates.
double point_dist(const Point& a, const Point& b);

/// An orientation-preserving circle map with evaluators in both directions.
/// Forward/inverse agree to ~1e-12 or better.
class CircleMap {
public:
    virtual ~CircleMap() = default;
    virtual double forward(double x) const = 0;
    virtual double backward(double x) const = 0;
    virtual std::string describe() const = 0;
};

/// Rigid rotation x -> x + alpha (mod 1); exact inverse.
class Rotation final : public CircleMap {
public:
    explicit Rotation(double alpha) : alpha_(alpha) {}
    double forward(double x) const override { return mod1(x + alpha_); }
    double backward(double x) const override { return mod1(x - alpha_); }
    std::string describe() const override;
    double alpha() const { return alpha_; }

private:
    double alpha_;
};

/// Monotone degree-one circle diffeomorphism through control points,
/// C^1 via monotone cubic (Fritsch-Carlson) interpolation of the lift.
/// The inverse is evaluated by bisection + Newton to ~1e-14.
class MonotoneCircleMap final : public CircleMap {
public:
    /// Control points (x_i, y_i) of one period of the lift: x strictly
    /// increasing with x_last = x_0 + 1, y strictly increasing with
    /// y_last = y_0 + 1.
    MonotoneCircleMap(std::vector<double> xs, std::vector<double> ys, std::string label);
    double forward(double x) const override;
    double backward(double y) const override;
    std::string describe() const override { return label_; }

private:
    double lift(double x) const;        // on [x0, x0+1)
    double lift_deriv(double x) const;
    std::vector<double> xs_, ys_, slopes_;
    std::string label_;
};

/// An open arc (a,b) of S^1, of length b-a in (0,1); stored unwrapped.
struct Arc {
    double a = 0, b = 0;
    double length() const { return b - a; }
    bool contains(double x) const;           // x taken mod 1
    bool contains_arc(const Arc& other) const;
    double margin_inside(const Arc& outer) const;  // min clearance of this inside outer
};

/// Three circle diffeomorphisms f_A, f_B, f_C with pairwise disjoint arcs
/// I_A, I_B, I_C forming a ping-pong system, plus a reference arc J inside
/// I_A with f_A(J) inside I_A.
struct PingPongTriple {
    std::array<Arc, 3> intervals;                      // I_A, I_B, I_C
    std::array<std::shared_ptr<CircleMap>, 3> maps;    // f_A, f_B, f_C
    Arc J;
    double contraction = 0;  // realized Lipschitz bound on the contracted arcs
    std::string smoothness = "C1 monotone cubic blend";
};

/// Report of the six ping-pong inclusion conditions plus the J condition,
/// each with the realized clearance margin (negative = violated).
struct PingPongReport {
    struct Condition {
        std::string name;
        bool holds = false;
        double margin = 0;
    };
    std::vector<Condition> conditions;
    bool all_hold() const;
    double min_margin() const;
};

/// Build a ping-pong triple from three disjoint arcs and a contraction rate
/// kappa in (0,1). Throws LayoutError when the arcs cannot support the
/// inclusion constraints.
PingPongTriple make_ping_pong(const Arc& ia, const Arc& ib, const Arc& ic, double kappa);
PingPongTriple make_ping_pong_default();

/// Evaluate the inclusion conditions by mapping arc endpoints (plus interior
/// sample points, since the maps are monotone the endpoints suffice; the
/// samples guard the implementation).
PingPongReport check_ping_pong(const PingPongTriple& t);

/// Interval exchange transformation of [0,1): piecewise translation bijection.
class IntervalExchange {
public:
    /// lengths: positive, summing to 1; perm: permutation of {0..m-1} giving
    /// the bottom order (interval i is moved to slot perm[i]).
    IntervalExchange(std::vector<double> lengths, std::vector<int> perm);
    /// Exact-rational variant; enables exact orbit identification.
    IntervalExchange(std::vector<Rational> lengths, std::vector<int> perm);

    int intervals() const { return static_cast<int>(lengths_.size()); }
    bool exact() const { return exact_; }
    double apply(double x) const;
    double apply_inverse(double x) const;
    Rational apply(const Rational& x) const;
    Rational apply_inverse(const Rational& x) const;
    Point apply_point(const Point& p, bool inverse) const;

    /// n-fold application (negative n uses the inverse).
    double iterate(double x, long long n) const;
    Point iterate_point(const Point& p, long long n) const;

    /// Left endpoints of the subintervals (size m), and their translation
    /// offsets; image left endpoints for the inverse direction.
    const std::vector<double>& breakpoints() const { return left_; }
    const std::vector<double>& offsets() const { return offset_; }
    const std::vector<double>& lengths() const { return lengths_; }
    const std::vector<int>& permutation() const { return perm_; }

private:
    void build();
    std::vector<double> lengths_, left_, offset_, image_left_;
    std::vector<int> perm_, inv_perm_;
    bool exact_ = false;
    std::vector<Rational> rlengths_, rleft_, roffset_, rimage_left_;
};

/// Presets used across experiments.
IntervalExchange iet_rotation(double beta);               // 2-interval swap = rotation by 1-beta
IntervalExchange iet_rotation_exact(const Rational& beta);
IntervalExchange iet_keane4();                            // minimal-type 4-interval instance
IntervalExchange iet_reducible();                         // two invariant halves, each a rotation

/// l commuting translations on T^d: f(t)(x) = x + sum t_j alpha^(j) mod Z^d.
struct TorusRotation {
    std::vector<std::vector<double>> alpha;  // l vectors in R^d
    int l() const { return static_cast<int>(alpha.size()); }
    int d() const { return alpha.empty() ? 0 : static_cast<int>(alpha[0].size()); }
    Point apply(const std::vector<double>& t, const Point& x) const;
};

/// A finitely generated action: k generators, each an invertible map of the
/// phase space. Generator g in {+1..+k, -1..-k} (negative = inverse map).
/// Immutable and safe to share across threads.
class GroupAction {
public:
    virtual ~GroupAction() = default;
    virtual int generators() const = 0;
    virtual int dim() const = 0;
    virtual bool exact() const = 0;  // exact rational point arithmetic available
    virtual Point apply(int g, const Point& p) const = 0;
    virtual std::string describe() const = 0;

    /// f_w with f_{ab} = f_a o f_b: letters act right-to-left.
    Point apply_word(const std::vector<std::int8_t>& w, Point p) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it) p = apply(*it, p);
        return p;
    }
};

/// One-generator action by a circle rotation.
std::shared_ptr<GroupAction> rotation_action(double alpha);
std::shared_ptr<GroupAction> rotation_action_exact(const Rational& alpha);
/// Three-generator action by a ping-pong triple.
std::shared_ptr<GroupAction> ping_pong_action(PingPongTriple triple);
/// One-generator action by an interval exchange.
std::shared_ptr<GroupAction> iet_action(IntervalExchange iet);
/// l-generator action by unit translations along alpha^(j) on T^d.
std::shared_ptr<GroupAction> torus_action(TorusRotation rot);
/// Two-generator action on T^2 by the integer matrices [[1,2],[0,1]] and
/// [[1,0],[2,1]], which generate a free group of rank 2. At a base point
/// whose coordinates are rationally independent of 1 the orbit is free, so
/// orbit counts equal the abstract F_2 ball counts exactly.
std::shared_ptr<GroupAction> sanov_action();
/// A base point with coordinates independent over Q (fractional parts of
/// sqrt(2), sqrt(3)).
Point sanov_free_point();

}  // namespace folavg
