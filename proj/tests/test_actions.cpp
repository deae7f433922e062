#include <doctest.h>

#include <cmath>
#include <random>

#include "folavg/actions.hpp"

using namespace folavg;

TEST_CASE("rotation maps") {
    SUBCASE("alpha=0 is the identity") {
        Rotation r(0.0);
        for (double x : {0.0, 0.25, 0.9}) CHECK(r.forward(x) == doctest::Approx(x).epsilon(1e-15));
    }
    SUBCASE("rational rotation has exact period") {
        auto act = rotation_action_exact(Rational(1, 3));
        Point p = Point::circle_exact(Rational(1, 7));
        Point q = p;
        for (int i = 0; i < 3; ++i) q = act->apply(1, q);
        CHECK(q.r[0] == p.r[0]);
    }
    SUBCASE("irrational rotation arithmetic") {
        const double a = std::sqrt(2.0) - 1.0;
        auto act = rotation_action(a);
        Point p = Point::circle(0.0);
        for (int i = 0; i < 100; ++i) p = act->apply(1, p);
        CHECK(p.x() == doctest::Approx(mod1(100.0 * a)).epsilon(1e-12));
    }
}

TEST_CASE("ping-pong triple") {
    PingPongTriple t = make_ping_pong_default();

    SUBCASE("all inclusion conditions hold with margin") {
        PingPongReport rep = check_ping_pong(t);
        REQUIRE(rep.conditions.size() == 7);
        for (const auto& c : rep.conditions) {
            CAPTURE(c.name);
            CHECK(c.holds);
        }
        CHECK(rep.min_margin() >= 1e-6);
    }

    SUBCASE("J maps into I_A, endpoint check") {
        const CircleMap& fa = *t.maps[0];
        CHECK(t.intervals[0].contains(fa.forward(t.J.a)));
        CHECK(t.intervals[0].contains(fa.forward(t.J.b)));
        CHECK(t.intervals[0].contains(fa.backward(t.J.a)));
    }

    SUBCASE("forward/backward inverse to 1e-12 on a grid") {
        for (const auto& f : t.maps) {
            double worst = 0;
            for (int i = 0; i < 10000; ++i) {
                double x = i / 10000.0;
                worst = std::max(worst, circle_dist(f->forward(f->backward(x)), x));
                worst = std::max(worst, circle_dist(f->backward(f->forward(x)), x));
            }
            CHECK(worst <= 1e-12);
        }
    }

    SUBCASE("orientation preserved: increments positive, total winding one") {
        const CircleMap& f = *t.maps[1];
        double prev = f.forward(0.0);
        double wind = 0;
        for (int i = 1; i <= 2000; ++i) {
            double cur = f.forward(i / 2000.0);
            double inc = mod1(cur - prev);
            if (inc > 0.5) inc -= 1.0;
            CHECK(inc > 0.0);
            wind += inc;
            prev = cur;
        }
        wind += [&] {
            double inc = mod1(f.forward(0.0) - prev);
            return inc > 0.5 ? inc - 1.0 : inc;
        }();
        CHECK(wind == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("realized contraction rate stays below kappa") { CHECK(t.contraction <= 0.3); }

    SUBCASE("degenerate layout rejected") {
        CHECK_THROWS_AS(make_ping_pong(Arc{0.0, 0.4}, Arc{0.4, 0.7}, Arc{0.75, 0.95}, 0.3),
                        LayoutError);
        CHECK_THROWS_AS(make_ping_pong(Arc{0.0, 0.5}, Arc{0.2, 0.6}, Arc{0.7, 0.9}, 0.3),
                        LayoutError);
    }

    SUBCASE("identity maps would fail the inclusions") {
        PingPongTriple id = t;
        id.maps = {std::make_shared<Rotation>(0.0), std::make_shared<Rotation>(0.0),
                   std::make_shared<Rotation>(0.0)};
        CHECK(!check_ping_pong(id).all_hold());
    }
}

TEST_CASE("interval exchange") {
    SUBCASE("2-interval swap is a rotation") {
        const double beta = 0.3;
        IntervalExchange T = iet_rotation(beta);
        CHECK(T.apply(0.0) == doctest::Approx(1.0 - beta));
        CHECK(T.apply(0.2) == doctest::Approx(0.9));
        CHECK(T.apply(0.5) == doctest::Approx(0.2));
    }

    SUBCASE("bijectivity: n then -n returns the point") {
        IntervalExchange T = iet_keane4();
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 50; ++trial) {
            double x = u(rng);
            double y = T.iterate(T.iterate(x, 37), -37);
            CHECK(circle_dist(x, y) <= 1e-12);
        }
    }

    SUBCASE("exact rational mode round trips exactly") {
        IntervalExchange T = iet_rotation_exact(Rational(2, 7));
        Point p = Point::circle_exact(Rational(1, 5));
        Point q = T.iterate_point(T.iterate_point(p, 11), -11);
        CHECK(q.r[0] == p.r[0]);
    }

    SUBCASE("long orbits stay in [0,1)") {
        IntervalExchange T = iet_keane4();
        double x = 0.1234;
        for (int i = 0; i < 100000; ++i) {
            x = T.apply(x);
            REQUIRE(x >= 0.0);
            REQUIRE(x < 1.0);
        }
    }

    SUBCASE("Lebesgue measure preserved: image intervals tile [0,1)") {
        IntervalExchange T = iet_keane4();
        const auto& len = T.lengths();
        const int m = T.intervals();
        // image left endpoints sorted must tile with the same lengths
        std::vector<std::pair<double, double>> img;
        for (int i = 0; i < m; ++i) {
            double l = T.apply(T.breakpoints()[static_cast<std::size_t>(i)] + 1e-15);
            img.emplace_back(T.offsets()[static_cast<std::size_t>(i)] + T.breakpoints()[static_cast<std::size_t>(i)],
                             len[static_cast<std::size_t>(i)]);
            (void)l;
        }
        std::sort(img.begin(), img.end());
        double cursor = 0;
        double total = 0;
        for (auto& [a, l] : img) {
            CHECK(a == doctest::Approx(cursor).epsilon(1e-12));
            cursor += l;
            total += l;
        }
        CHECK(total == doctest::Approx(1.0));
    }
}

TEST_CASE("torus rotations") {
    TorusRotation rot;
    rot.alpha = {{std::sqrt(2.0), std::sqrt(3.0)}};

    SUBCASE("t=0 fixes the point") {
        Point x = Point::torus({0.3, 0.4});
        Point y = rot.apply({0.0}, x);
        CHECK(point_dist(x, y) == 0.0);
    }

    SUBCASE("unit translation") {
        Point x = Point::torus({0.0, 0.0});
        Point y = rot.apply({1.0}, x);
        CHECK(y.c[0] == doctest::Approx(mod1(std::sqrt(2.0))).epsilon(1e-14));
        CHECK(y.c[1] == doctest::Approx(mod1(std::sqrt(3.0))).epsilon(1e-14));
    }

    SUBCASE("additivity f(s) o f(t) = f(s+t)") {
        Point x = Point::torus({0.1, 0.9});
        Point a = rot.apply({0.7}, rot.apply({0.4}, x));
        Point b = rot.apply({1.1}, x);
        CHECK(point_dist(a, b) <= 1e-12);
    }

    SUBCASE("dimension mismatch is rejected") {
        Point bad = Point::circle(0.1);
        CHECK_THROWS_AS(rot.apply({1.0}, bad), std::invalid_argument);
        Point x = Point::torus({0.1, 0.2});
        CHECK_THROWS_AS(rot.apply({1.0, 2.0}, x), std::invalid_argument);
    }
}
