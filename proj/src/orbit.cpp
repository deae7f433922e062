#include "folavg/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace folavg {

namespace {

/// Tolerance-identified point set over S^1 or T^d. Points are bucketed on a
/// circular grid of cell width >= tol; equality scans the 3^d neighbouring
/// buckets. In exact mode, rational coordinates are compared exactly.
class PointRegistry {
public:
    PointRegistry(int dim, double tol, bool exact) : dim_(dim), tol_(tol), exact_(exact) {
        double cell = std::max(tol, 1e-12);
        ncell_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(1.0 / cell)));
    }

    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }

    /// Index of an equivalent stored point, or -1.
    long long find(const Point& p) const {
        if (exact_) {
            auto it = exact_index_.find(exact_key(p));
            if (it == exact_index_.end()) return -1;
            for (std::size_t i : it->second)
                if (exact_equal(pts_[i], p)) return static_cast<long long>(i);
            return -1;
        }
        std::array<std::int64_t, 4> base{};
        for (int i = 0; i < dim_; ++i) base[static_cast<std::size_t>(i)] = cell_of(p.c[static_cast<std::size_t>(i)]);
        std::array<int, 4> off{};
        while (true) {
            std::uint64_t key = 1469598103934665603ull;
            for (int i = 0; i < dim_; ++i) {
                std::int64_t c = base[static_cast<std::size_t>(i)] + off[static_cast<std::size_t>(i)] - 1;
                c %= ncell_;
                if (c < 0) c += ncell_;
                key = (key ^ static_cast<std::uint64_t>(c)) * 1099511628211ull;
            }
            auto it = buckets_.find(key);
            if (it != buckets_.end()) {
                for (std::size_t i : it->second)
                    if (within_tol(pts_[i], p)) return static_cast<long long>(i);
            }
            int d = 0;
            while (d < dim_ && ++off[static_cast<std::size_t>(d)] == 3) {
                off[static_cast<std::size_t>(d)] = 0;
                ++d;
            }
            if (d == dim_) break;
        }
        return -1;
    }

    /// Insert as a new class; caller must have checked find() first.
    std::size_t insert(const Point& p) {
        std::size_t idx = pts_.size();
        pts_.push_back(p);
        if (exact_)
            exact_index_[exact_key(p)].push_back(idx);
        else
            buckets_[home_key(p)].push_back(idx);
        return idx;
    }

private:
    std::int64_t cell_of(double c) const {
        auto k = static_cast<std::int64_t>(std::floor(mod1(c) * static_cast<double>(ncell_)));
        return std::min(k, ncell_ - 1);
    }

    std::uint64_t home_key(const Point& p) const {
        std::uint64_t key = 1469598103934665603ull;
        for (int i = 0; i < dim_; ++i)
            key = (key ^ static_cast<std::uint64_t>(cell_of(p.c[static_cast<std::size_t>(i)]))) * 1099511628211ull;
        return key;
    }

    std::uint64_t exact_key(const Point& p) const {
        std::uint64_t key = 1469598103934665603ull;
        for (int i = 0; i < dim_; ++i) {
            key = (key ^ static_cast<std::uint64_t>(p.r[static_cast<std::size_t>(i)].num)) * 1099511628211ull;
            key = (key ^ static_cast<std::uint64_t>(p.r[static_cast<std::size_t>(i)].den)) * 1099511628211ull;
        }
        return key;
    }

    bool exact_equal(const Point& a, const Point& b) const {
        for (int i = 0; i < dim_; ++i)
            if (!(a.r[static_cast<std::size_t>(i)] == b.r[static_cast<std::size_t>(i)])) return false;
        return true;
    }

    bool within_tol(const Point& a, const Point& b) const {
        for (int i = 0; i < dim_; ++i)
            if (circle_dist(a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(i)]) > tol_) return false;
        return true;
    }

    int dim_;
    double tol_;
    bool exact_;
    std::int64_t ncell_;
    std::vector<Point> pts_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> exact_index_;
};

std::vector<Letter> signed_generators(int k) {
    std::vector<Letter> gens;
    for (int i = 1; i <= k; ++i) {
        gens.push_back(static_cast<Letter>(i));
        gens.push_back(static_cast<Letter>(-i));
    }
    return gens;
}

}  // namespace

// Orbit classes can be rediscovered through longer words whose first letter
// differs (relations detected by ~_y make this matter: for the rotation by
// 1/3, the base point only enters G_n(y) at n = 3 through a^3). We therefore
// run a non-backtracking breadth-first search over *states* (class, first
// letter): a candidate word g*w is reduced iff g differs from the inverse of
// w's first letter, and prepending a generator acts incrementally on the end
// point. Candidates are visited in shortlex order (generator rank outer,
// states in discovery order), so the first word reaching a class is its
// shortest shortlex-least representative.
OrbitBall orbit_ball(const GroupAction& action, const Point& y, int n, double tol, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("orbit_ball: n >= 1 required");
    if (tol < 0) throw std::invalid_argument("orbit_ball: tol >= 0 required");
    if (y.dim != action.dim()) throw std::domain_error("orbit_ball: base point outside the action's space");

    OrbitBall ball;
    ball.base = y;
    ball.radius = n;
    ball.tol = tol;
    ball.exact = action.exact() && y.exact;

    PointRegistry reg(action.dim(), tol, ball.exact);
    const auto gens = signed_generators(action.generators());
    const int k2 = static_cast<int>(gens.size());

    struct State {
        std::size_t cls;
        Letter letter;       // first letter of the reaching word
        std::int64_t parent;  // previous state, -1 at level 1
    };
    std::vector<State> states;
    std::unordered_set<std::uint64_t> state_seen;  // key = cls * 2k + rank(letter)
    auto state_key = [&](std::size_t cls, Letter g) {
        return static_cast<std::uint64_t>(cls) * static_cast<std::uint64_t>(k2) +
               static_cast<std::uint64_t>(letter_rank(g));
    };

    std::vector<std::int64_t> class_state;  // discovering state per class
    std::vector<std::size_t> frontier;      // state indices at the current level

    for (Letter g : gens) {
        Point p = action.apply(g, y);
        long long found = reg.find(p);
        std::size_t cls;
        if (found < 0) {
            cls = reg.insert(p);
            class_state.push_back(static_cast<std::int64_t>(states.size()));
        } else {
            cls = static_cast<std::size_t>(found);
        }
        if (state_seen.insert(state_key(cls, g)).second) {
            states.push_back({cls, g, -1});
            frontier.push_back(states.size() - 1);
        }
    }
    ball.count_by_radius.push_back(reg.size());

    for (int m = 2; m <= n; ++m) {
        std::vector<std::size_t> next;
        for (Letter g : gens) {
            const Letter bad = inverse(g);
            for (std::size_t si : frontier) {
                if (states[si].letter == bad) continue;  // g * w not reduced
                Point p = action.apply(g, reg.points()[states[si].cls]);
                long long found = reg.find(p);
                std::size_t cls;
                if (found < 0) {
                    if (reg.size() >= cap)
                        throw ResourceCapError("orbit_ball: orbit exceeds cap " + std::to_string(cap));
                    cls = reg.insert(p);
                    class_state.push_back(static_cast<std::int64_t>(states.size()));
                } else {
                    cls = static_cast<std::size_t>(found);
                }
                if (state_seen.insert(state_key(cls, g)).second) {
                    states.push_back({cls, g, static_cast<std::int64_t>(si)});
                    next.push_back(states.size() - 1);
                }
            }
        }
        frontier = std::move(next);
        ball.count_by_radius.push_back(reg.size());
        if (frontier.empty()) {
            // orbit saturated: later counts stay constant
            for (int mm = m + 1; mm <= n; ++mm) ball.count_by_radius.push_back(reg.size());
            break;
        }
    }

    ball.points = reg.points();
    ball.words.resize(reg.size());
    for (std::size_t c = 0; c < reg.size(); ++c) {
        Word w;
        for (std::int64_t s = class_state[c]; s >= 0; s = states[static_cast<std::size_t>(s)].parent)
            w.push_back(states[static_cast<std::size_t>(s)].letter);
        ball.words[c] = std::move(w);
    }
    return ball;
}

AverageSeries lambda_series(const GroupAction& action, const Point& y, int N, double tol,
                            std::size_t cap) {
    if (N < 2) throw std::invalid_argument("lambda_series: N >= 2 required");
    OrbitBall ball = orbit_ball(action, y, N, tol, cap);
    AverageSeries s;
    for (int m = 2; m <= N; ++m) {
        const double cn = static_cast<double>(ball.count_by_radius[static_cast<std::size_t>(m) - 1]);
        const double cp = static_cast<double>(ball.count_by_radius[static_cast<std::size_t>(m) - 2]);
        s.push(m, (cn - cp) / cn);
    }
    s.finalize();
    return s;
}

double folner_defect(const GroupAction& action, const Point& y, const Word& a, int n, double tol,
                     std::size_t cap) {
    Word ar = reduce(a);
    OrbitBall ball = orbit_ball(action, y, n, tol, cap);
    const bool exact = ball.exact;

    PointRegistry base(action.dim(), tol, exact);
    for (const Point& p : ball.points)
        if (base.find(p) < 0) base.insert(p);

    PointRegistry shifted(action.dim(), tol, exact);
    for (const Point& p : ball.points) {
        Point q = action.apply_word(ar, p);
        if (shifted.find(q) < 0) shifted.insert(q);
    }

    std::size_t only_shifted = 0, only_base = 0;
    for (const Point& q : shifted.points())
        if (base.find(q) < 0) ++only_shifted;
    for (const Point& p : base.points())
        if (shifted.find(p) < 0) ++only_base;

    return static_cast<double>(only_shifted + only_base) / static_cast<double>(base.size());
}

}  // namespace folavg
