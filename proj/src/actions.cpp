#include "folavg/actions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace folavg {

double point_dist(const Point& a, const Point& b) {
    double d = 0;
    for (int i = 0; i < a.dim; ++i)
        d = std::max(d, circle_dist(a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(i)]));
    return d;
}

std::string Rotation::describe() const {
    std::ostringstream os;
    os << "rotation(alpha=" << alpha_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// MonotoneCircleMap

MonotoneCircleMap::MonotoneCircleMap(std::vector<double> xs, std::vector<double> ys, std::string label)
    : xs_(std::move(xs)), ys_(std::move(ys)), label_(std::move(label)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n) throw LayoutError("MonotoneCircleMap: need matching control points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]) || !(ys_[i] > ys_[i - 1]))
            throw LayoutError("MonotoneCircleMap: control points must be strictly increasing");
    if (std::fabs((xs_.back() - xs_.front()) - 1.0) > 1e-12 ||
        std::fabs((ys_.back() - ys_.front()) - 1.0) > 1e-12)
        throw LayoutError("MonotoneCircleMap: control points must span one period");

    // Fritsch-Carlson monotone slopes on the periodic extension.
    const std::size_t m = n - 1;
    std::vector<double> sec(m);
    for (std::size_t i = 0; i < m; ++i) sec[i] = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    slopes_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sl = (i == 0 || i == m) ? sec[m - 1] : sec[i - 1];  // wrap: segment m-1 precedes 0
        double sr = (i == m || i == 0) ? sec[0] : sec[i % m];
        if (i > 0 && i < m) { sl = sec[i - 1]; sr = sec[i]; }
        slopes_[i] = (sl * sr > 0) ? 2.0 * sl * sr / (sl + sr) : 0.0;  // harmonic mean keeps monotone
        if (slopes_[i] <= 0) slopes_[i] = std::min(sl, sr) * 0.5;      // keep strictly increasing
        if (slopes_[i] <= 0) slopes_[i] = 1e-6;
    }
}

double MonotoneCircleMap::lift(double x) const {
    // cubic Hermite on the containing segment
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    if (i == 0) i = 1;
    if (i >= xs_.size()) i = xs_.size() - 1;
    const double x0 = xs_[i - 1], x1 = xs_[i], h = x1 - x0;
    const double t = (x - x0) / h;
    const double y0 = ys_[i - 1], y1 = ys_[i], d0 = slopes_[i - 1] * h, d1 = slopes_[i] * h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * d0 +
           (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * d1;
}

double MonotoneCircleMap::lift_deriv(double x) const {
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    if (i == 0) i = 1;
    if (i >= xs_.size()) i = xs_.size() - 1;
    const double x0 = xs_[i - 1], x1 = xs_[i], h = x1 - x0;
    const double t = (x - x0) / h;
    const double y0 = ys_[i - 1], y1 = ys_[i], d0 = slopes_[i - 1] * h, d1 = slopes_[i] * h;
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * d0 +
            (-6 * t2 + 6 * t) * y1 + (3 * t2 - 2 * t) * d1) / h;
}

double MonotoneCircleMap::forward(double x) const {
    const double x0 = xs_.front();
    double u = x0 + mod1(x - x0);
    double shift = x - u;  // integer
    return mod1(lift(u) + shift);
}

double MonotoneCircleMap::backward(double y) const {
    // solve lift(u) = y' on one period, monotone bisection + Newton polish
    const double x0 = xs_.front(), y0 = ys_.front();
    double yt = y0 + mod1(y - y0);
    double lo = x0, hi = x0 + 1.0;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (lift(mid) < yt)
            lo = mid;
        else
            hi = mid;
    }
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        double f = lift(u) - yt, df = lift_deriv(u);
        if (df <= 0) break;
        double step = f / df;
        double nu = u - step;
        if (nu <= lo || nu >= hi) break;
        u = nu;
        if (std::fabs(step) < 1e-16) break;
    }
    return mod1(u);
}

// ---------------------------------------------------------------------------
// Arcs and ping-pong

bool Arc::contains(double x) const {
    double t = mod1(x - a);
    return t > 0 && t < length();
}

bool Arc::contains_arc(const Arc& other) const {
    double s = mod1(other.a - a);
    return s >= 0 && s + other.length() <= length();
}

double Arc::margin_inside(const Arc& outer) const {
    double s = mod1(a - outer.a);
    double left = s;
    double right = outer.length() - (s + length());
    return std::min(left, right);
}

bool PingPongReport::all_hold() const {
    for (const auto& c : conditions)
        if (!c.holds) return false;
    return !conditions.empty();
}

double PingPongReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& c : conditions) m = std::min(m, c.margin);
    return m;
}

namespace {

/// Image arc of (a,b) under a monotone circle map, as an unwrapped arc.
Arc image_arc(const CircleMap& f, const Arc& in) {
    double fa = f.forward(in.a), fb = f.forward(in.b);
    double len = mod1(fb - fa);
    if (len == 0) len = 1.0;  // degenerate: treat as full circle
    return Arc{fa, fa + len};
}

/// Build one ping-pong generator: a repelling/attracting fixed pair inside
/// `home`, a contraction span covering both foreign arcs that maps into a
/// small window above the attractor, and an expansion zone confined to the
/// trailing gap plus the start of `home`. Control points live on the lift
/// over one period [rep, rep+1].
std::shared_ptr<CircleMap> make_pp_generator(const Arc& home, const Arc& other1, const Arc& other2,
                                             double kappa, const std::string& label) {
    const double len = home.length();
    const double rep = home.a + 0.15 * len;
    const double att = home.a + 0.70 * len;

    // Foreign arcs in lift coordinates unwrapped from home.a.
    auto unwrap = [&](const Arc& a) {
        double s = home.a + mod1(a.a - home.a);
        return Arc{s, s + a.length()};
    };
    const Arc f1 = unwrap(other1), f2 = unwrap(other2);
    const double foreign_end = std::max(f1.b, f2.b);
    const double foreign_start = std::min(f1.a, f2.a);
    const double trailing_gap = (home.a + 1.0) - foreign_end;
    if (trailing_gap <= 0) throw LayoutError("make_ping_pong: no gap after the foreign arcs");

    // Contraction span [home.b, x_e] -> [winA, winB] inside the top of home.
    // The window is kept as wide as the home arc allows: orbit points of long
    // words separate at the realized contraction rate, and too strong a
    // contraction would push distinct orbit points under the identification
    // tolerance within a few letters.
    const double spanA = home.b;
    const double x_e = foreign_end + 0.25 * trailing_gap;
    double winA = att + 0.05 * len;
    double winB = home.a + 0.975 * len;
    if ((winB - winA) / (x_e - spanA) > kappa) winB = winA + kappa * (x_e - spanA);
    // Pin the image of home.a below the first foreign arc so that
    // f(home) = (f(home.a), winA + 1) still covers both foreign arcs.
    const double y_ha = winB + 0.4 * (foreign_start - winB);

    std::vector<double> xs = {rep, att, spanA, 0.5 * (spanA + x_e), x_e, home.a + 1.0, rep + 1.0};
    std::vector<double> ys = {rep, att, winA, 0.5 * (winA + winB), winB, y_ha, rep + 1.0};
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]) || !(ys[i] > ys[i - 1]))
            throw LayoutError("make_ping_pong: cannot realize inclusion constraints for " + label);
    return std::make_shared<MonotoneCircleMap>(std::move(xs), std::move(ys), label);
}

}  // namespace

PingPongTriple make_ping_pong(const Arc& ia, const Arc& ib, const Arc& ic, double kappa) {
    if (!(kappa > 0 && kappa < 1)) throw LayoutError("make_ping_pong: kappa must be in (0,1)");
    const Arc arcs[3] = {ia, ib, ic};
    double total = 0;
    for (const Arc& a : arcs) {
        if (!(a.length() > 0) || a.length() >= 1) throw LayoutError("make_ping_pong: bad arc length");
        total += a.length();
    }
    if (total >= 1.0) throw LayoutError("make_ping_pong: arcs cover the circle, no gaps left");
    // pairwise disjoint with positive gaps: walking from each arc's start, the
    // next arc must begin strictly after this arc ends
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const Arc& u = arcs[i];
            const Arc& v = arcs[j];
            double s = mod1(v.a - u.a);
            if (s <= u.length())
                throw LayoutError("make_ping_pong: arcs must be disjoint with positive gaps");
        }
    }

    PingPongTriple t;
    t.intervals = {ia, ib, ic};
    t.maps = {make_pp_generator(ia, ib, ic, kappa, "f_A"),
              make_pp_generator(ib, ic, ia, kappa, "f_B"),
              make_pp_generator(ic, ia, ib, kappa, "f_C")};
    t.J = Arc{ia.a + ia.length() / 3.0, ia.a + 2.0 * ia.length() / 3.0};

    // realized Lipschitz rate of each generator on the two arcs it contracts
    double rate = 0;
    for (int r = 0; r < 3; ++r) {
        const CircleMap& f = *t.maps[static_cast<std::size_t>(r)];
        for (int o = 1; o <= 2; ++o) {
            const Arc& src = arcs[(r + o) % 3];
            for (int i = 0; i <= 200; ++i) {
                double x = src.a + src.length() * i / 200.0;
                double d = circle_dist(f.forward(x + 1e-6), f.forward(x)) / 1e-6;
                rate = std::max(rate, d);
            }
        }
    }
    t.contraction = rate;
    if (rate > kappa)
        throw LayoutError("make_ping_pong: realized contraction rate " + std::to_string(rate) +
                          " exceeds kappa");

    PingPongReport rep = check_ping_pong(t);
    if (!rep.all_hold())
        throw LayoutError("make_ping_pong: constructed triple fails inclusion check (margin " +
                          std::to_string(rep.min_margin()) + ")");
    return t;
}

PingPongTriple make_ping_pong_default() {
    return make_ping_pong(Arc{0.0, 0.2}, Arc{0.35, 0.55}, Arc{0.7, 0.9}, 0.3);
}

PingPongReport check_ping_pong(const PingPongTriple& t) {
    PingPongReport rep;
    const char* names[3] = {"A", "B", "C"};
    for (int r = 0; r < 3; ++r) {
        const Arc& home = t.intervals[static_cast<std::size_t>(r)];
        const CircleMap& f = *t.maps[static_cast<std::size_t>(r)];
        const Arc& n1 = t.intervals[static_cast<std::size_t>((r + 1) % 3)];
        const Arc& n2 = t.intervals[static_cast<std::size_t>((r + 2) % 3)];

        Arc img_home = image_arc(f, home);
        {
            PingPongReport::Condition c;
            c.name = std::string("I_") + names[(r + 1) % 3] + " u I_" + names[(r + 2) % 3] +
                     " in f_" + names[r] + "(I_" + names[r] + ")";
            double m1 = n1.margin_inside(img_home), m2 = n2.margin_inside(img_home);
            c.margin = std::min(m1, m2);
            c.holds = img_home.contains_arc(n1) && img_home.contains_arc(n2);
            rep.conditions.push_back(c);
        }
        {
            PingPongReport::Condition c;
            c.name = std::string("f_") + names[r] + "(I_" + names[(r + 1) % 3] + ") u f_" + names[r] +
                     "(I_" + names[(r + 2) % 3] + ") in I_" + names[r];
            Arc i1 = image_arc(f, n1), i2 = image_arc(f, n2);
            double m1 = i1.margin_inside(home), m2 = i2.margin_inside(home);
            c.margin = std::min(m1, m2);
            c.holds = home.contains_arc(i1) && home.contains_arc(i2);
            rep.conditions.push_back(c);
        }
    }
    {
        PingPongReport::Condition c;
        c.name = "f_A(J) in I_A";
        Arc imgJ = image_arc(*t.maps[0], t.J);
        c.margin = imgJ.margin_inside(t.intervals[0]);
        c.holds = t.intervals[0].contains_arc(imgJ);
        rep.conditions.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Interval exchange

IntervalExchange::IntervalExchange(std::vector<double> lengths, std::vector<int> perm)
    : lengths_(std::move(lengths)), perm_(std::move(perm)) {
    build();
}

IntervalExchange::IntervalExchange(std::vector<Rational> lengths, std::vector<int> perm)
    : perm_(std::move(perm)), exact_(true), rlengths_(std::move(lengths)) {
    lengths_.reserve(rlengths_.size());
    for (const auto& r : rlengths_) lengths_.push_back(r.to_double());
    build();
}

void IntervalExchange::build() {
    const int m = static_cast<int>(lengths_.size());
    if (m < 1) throw std::invalid_argument("IntervalExchange: need at least one interval");
    if (static_cast<int>(perm_.size()) != m) throw std::invalid_argument("IntervalExchange: perm size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int p : perm_) {
        if (p < 0 || p >= m || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("IntervalExchange: invalid permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    double sum = 0;
    for (double l : lengths_) {
        if (!(l > 0)) throw std::invalid_argument("IntervalExchange: lengths must be positive");
        sum += l;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("IntervalExchange: lengths must sum to 1");

    inv_perm_.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) inv_perm_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = i;

    left_.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 1; i < m; ++i)
        left_[static_cast<std::size_t>(i)] = left_[static_cast<std::size_t>(i - 1)] + lengths_[static_cast<std::size_t>(i - 1)];
    image_left_.assign(static_cast<std::size_t>(m), 0.0);
    // bottom slot s holds interval inv_perm_[s]
    double acc = 0;
    for (int s = 0; s < m; ++s) {
        int i = inv_perm_[static_cast<std::size_t>(s)];
        image_left_[static_cast<std::size_t>(i)] = acc;
        acc += lengths_[static_cast<std::size_t>(i)];
    }
    offset_.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i)
        offset_[static_cast<std::size_t>(i)] = image_left_[static_cast<std::size_t>(i)] - left_[static_cast<std::size_t>(i)];

    if (exact_) {
        const auto rm = static_cast<std::size_t>(m);
        rleft_.assign(rm, Rational(0));
        for (std::size_t i = 1; i < rm; ++i) rleft_[i] = rleft_[i - 1] + rlengths_[i - 1];
        rimage_left_.assign(rm, Rational(0));
        Rational racc(0);
        for (int s = 0; s < m; ++s) {
            int i = inv_perm_[static_cast<std::size_t>(s)];
            rimage_left_[static_cast<std::size_t>(i)] = racc;
            racc = racc + rlengths_[static_cast<std::size_t>(i)];
        }
        roffset_.assign(rm, Rational(0));
        for (std::size_t i = 0; i < rm; ++i) roffset_[i] = rimage_left_[i] - rleft_[i];
    }
}

double IntervalExchange::apply(double x) const {
    x = mod1(x);
    auto it = std::upper_bound(left_.begin(), left_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - left_.begin()) - 1;
    return mod1(x + offset_[i]);
}

double IntervalExchange::apply_inverse(double x) const {
    x = mod1(x);
    // find bottom slot containing x
    for (std::size_t i = 0; i < image_left_.size(); ++i) {
        double lo = image_left_[i], hi = lo + lengths_[i];
        if (x >= lo && x < hi) return mod1(x - offset_[i]);
    }
    // x == 1.0 edge; wrap
    return mod1(x - offset_[0]);
}

Rational IntervalExchange::apply(const Rational& x) const {
    if (!exact_) throw PreconditionError("IntervalExchange: exact mode unavailable");
    Rational xm = x.mod1();
    std::size_t i = rleft_.size() - 1;
    for (std::size_t j = 1; j < rleft_.size(); ++j)
        if (xm < rleft_[j]) { i = j - 1; break; }
    return (xm + roffset_[i]).mod1();
}

Rational IntervalExchange::apply_inverse(const Rational& x) const {
    if (!exact_) throw PreconditionError("IntervalExchange: exact mode unavailable");
    Rational xm = x.mod1();
    for (std::size_t i = 0; i < rimage_left_.size(); ++i) {
        Rational lo = rimage_left_[i];
        Rational hi = lo + rlengths_[i];
        if (!(xm < lo) && xm < hi) return (xm - roffset_[i]).mod1();
    }
    return (xm - roffset_[0]).mod1();
}

Point IntervalExchange::apply_point(const Point& p, bool inverse) const {
    Point q = p;
    if (exact_ && p.exact) {
        q.r[0] = inverse ? apply_inverse(p.r[0]) : apply(p.r[0]);
        q.c[0] = q.r[0].to_double();
    } else {
        q.exact = false;
        q.c[0] = inverse ? apply_inverse(p.c[0]) : apply(p.c[0]);
    }
    return q;
}

double IntervalExchange::iterate(double x, long long n) const {
    if (n >= 0)
        for (long long i = 0; i < n; ++i) x = apply(x);
    else
        for (long long i = 0; i < -n; ++i) x = apply_inverse(x);
    return x;
}

Point IntervalExchange::iterate_point(const Point& p, long long n) const {
    Point q = p;
    if (n >= 0)
        for (long long i = 0; i < n; ++i) q = apply_point(q, false);
    else
        for (long long i = 0; i < -n; ++i) q = apply_point(q, true);
    return q;
}

IntervalExchange iet_rotation(double beta) {
    return IntervalExchange(std::vector<double>{beta, 1.0 - beta}, std::vector<int>{1, 0});
}

IntervalExchange iet_rotation_exact(const Rational& beta) {
    Rational one(1);
    return IntervalExchange(std::vector<Rational>{beta, one - beta}, std::vector<int>{1, 0});
}

IntervalExchange iet_keane4() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    std::vector<double> len = {s2 / 4.0, 0.5 - s2 / 4.0, s3 / 6.0, 0.5 - s3 / 6.0};
    return IntervalExchange(len, std::vector<int>{3, 2, 1, 0});
}

IntervalExchange iet_reducible() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    // [0,1/2) and [1/2,1) invariant, carrying rotations by 1/2 - sqrt2/4 and
    // 1/2 - sqrt3/6 respectively
    std::vector<double> len = {s2 / 4.0, 0.5 - s2 / 4.0, s3 / 6.0, 0.5 - s3 / 6.0};
    return IntervalExchange(len, std::vector<int>{1, 0, 3, 2});
}

// ---------------------------------------------------------------------------
// Torus rotations

Point TorusRotation::apply(const std::vector<double>& t, const Point& x) const {
    if (static_cast<int>(t.size()) != l()) throw std::invalid_argument("TorusRotation: parameter dim mismatch");
    if (x.dim != d()) throw std::invalid_argument("TorusRotation: point dim mismatch");
    Point y = x;
    y.exact = false;
    for (int j = 0; j < l(); ++j)
        for (int i = 0; i < d(); ++i)
            y.c[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(j)] * alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (int i = 0; i < d(); ++i) y.c[static_cast<std::size_t>(i)] = mod1(y.c[static_cast<std::size_t>(i)]);
    return y;
}

// ---------------------------------------------------------------------------
// GroupAction wrappers

namespace {

class RotationAction final : public GroupAction {
public:
    explicit RotationAction(double alpha) : alpha_(alpha) {}
    RotationAction(const Rational& alpha, bool) : alpha_(alpha.to_double()), ralpha_(alpha), exact_(true) {}
    int generators() const override { return 1; }
    int dim() const override { return 1; }
    bool exact() const override { return exact_; }
    Point apply(int g, const Point& p) const override {
        Point q = p;
        double sgn = g > 0 ? 1.0 : -1.0;
        if (exact_ && p.exact) {
            q.r[0] = (g > 0 ? (p.r[0] + ralpha_) : (p.r[0] - ralpha_)).mod1();
            q.c[0] = q.r[0].to_double();
        } else {
            q.exact = false;
            q.c[0] = mod1(p.c[0] + sgn * alpha_);
        }
        return q;
    }
    std::string describe() const override {
        return "rotation action alpha=" + std::to_string(alpha_);
    }

private:
    double alpha_;
    Rational ralpha_{0};
    bool exact_ = false;
};

class PingPongAction final : public GroupAction {
public:
    explicit PingPongAction(PingPongTriple t) : t_(std::move(t)) {}
    int generators() const override { return 3; }
    int dim() const override { return 1; }
    bool exact() const override { return false; }
    Point apply(int g, const Point& p) const override {
        int i = g > 0 ? g : -g;
        if (i < 1 || i > 3) throw std::invalid_argument("PingPongAction: bad generator");
        const CircleMap& f = *t_.maps[static_cast<std::size_t>(i - 1)];
        Point q = p;
        q.exact = false;
        q.c[0] = g > 0 ? f.forward(p.c[0]) : f.backward(p.c[0]);
        return q;
    }
    std::string describe() const override { return "ping-pong action (f_A,f_B,f_C)"; }
    const PingPongTriple& triple() const { return t_; }

private:
    PingPongTriple t_;
};

class IetGroupAction final : public GroupAction {
public:
    explicit IetGroupAction(IntervalExchange iet) : iet_(std::move(iet)) {}
    int generators() const override { return 1; }
    int dim() const override { return 1; }
    bool exact() const override { return iet_.exact(); }
    Point apply(int g, const Point& p) const override { return iet_.apply_point(p, g < 0); }
    std::string describe() const override {
        return "interval exchange action (" + std::to_string(iet_.intervals()) + " intervals)";
    }

private:
    IntervalExchange iet_;
};

class SanovAction final : public GroupAction {
public:
    int generators() const override { return 2; }
    int dim() const override { return 2; }
    bool exact() const override { return false; }
    Point apply(int g, const Point& p) const override {
        double x = p.c[0], y = p.c[1];
        Point q = p;
        q.exact = false;
        switch (g) {
            case 1: q.c[0] = mod1(x + 2.0 * y); q.c[1] = y; break;           // [[1,2],[0,1]]
            case -1: q.c[0] = mod1(x - 2.0 * y); q.c[1] = y; break;
            case 2: q.c[0] = x; q.c[1] = mod1(y + 2.0 * x); break;           // [[1,0],[2,1]]
            case -2: q.c[0] = x; q.c[1] = mod1(y - 2.0 * x); break;
            default: throw std::invalid_argument("SanovAction: bad generator");
        }
        return q;
    }
    std::string describe() const override { return "Sanov free F_2 action on T^2"; }
};

class TorusGroupAction final : public GroupAction {
public:
    explicit TorusGroupAction(TorusRotation rot) : rot_(std::move(rot)) {}
    int generators() const override { return rot_.l(); }
    int dim() const override { return rot_.d(); }
    bool exact() const override { return false; }
    Point apply(int g, const Point& p) const override {
        int j = g > 0 ? g : -g;
        if (j < 1 || j > rot_.l()) throw std::invalid_argument("TorusGroupAction: bad generator");
        std::vector<double> t(static_cast<std::size_t>(rot_.l()), 0.0);
        t[static_cast<std::size_t>(j - 1)] = g > 0 ? 1.0 : -1.0;
        return rot_.apply(t, p);
    }
    std::string describe() const override {
        return "torus translation action (l=" + std::to_string(rot_.l()) + ", d=" + std::to_string(rot_.d()) + ")";
    }

private:
    TorusRotation rot_;
};

}  // namespace

std::shared_ptr<GroupAction> rotation_action(double alpha) {
    return std::make_shared<RotationAction>(alpha);
}
std::shared_ptr<GroupAction> rotation_action_exact(const Rational& alpha) {
    return std::make_shared<RotationAction>(alpha, true);
}
std::shared_ptr<GroupAction> ping_pong_action(PingPongTriple triple) {
    return std::make_shared<PingPongAction>(std::move(triple));
}
std::shared_ptr<GroupAction> iet_action(IntervalExchange iet) {
    return std::make_shared<IetGroupAction>(std::move(iet));
}
std::shared_ptr<GroupAction> torus_action(TorusRotation rot) {
    return std::make_shared<TorusGroupAction>(std::move(rot));
}
std::shared_ptr<GroupAction> sanov_action() { return std::make_shared<SanovAction>(); }
Point sanov_free_point() { return Point::torus({std::sqrt(2.0) - 1.0, std::sqrt(3.0) - 1.0}); }

}  // namespace folavg
