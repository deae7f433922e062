#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "folavg/orbit.hpp"

using namespace folavg;

TEST_CASE("orbit ball of the free ping-pong orbit matches the abstract ball") {
    // The orbit is genuinely free; numerically the contracted orbit points of
    // long words approach each other at the realized contraction rate, so the
    // identification tolerance must sit below the length-8 separation scale.
    auto act = ping_pong_action(make_ping_pong_default());
    PingPongTriple t = make_ping_pong_default();
    Point y = Point::circle(0.5 * (t.J.a + t.J.b));
    OrbitBall ball = orbit_ball(*act, y, 8, 1e-13);
    for (int m = 1; m <= 8; ++m)
        CHECK(ball.count_by_radius[static_cast<std::size_t>(m) - 1] == free_ball_size(3, m));
    // every stored word reproduces its class point
    for (std::size_t c = 0; c < ball.size(); c += 97) {
        Point p = act->apply_word(ball.words[c], y);
        CHECK(point_dist(p, ball.points[c]) <= 1e-12);
    }
}

TEST_CASE("Sanov action: free F_2 orbit on the torus") {
    auto act = sanov_action();
    Point y = sanov_free_point();
    OrbitBall ball = orbit_ball(*act, y, 9);
    for (int m = 1; m <= 9; ++m)
        CHECK(ball.count_by_radius[static_cast<std::size_t>(m) - 1] == free_ball_size(2, m));
    for (std::size_t c = 0; c < ball.size(); c += 997) {
        Point p = act->apply_word(ball.words[c], y);
        CHECK(point_dist(p, ball.points[c]) <= 1e-9);
    }
}

TEST_CASE("orbit ball of rational rotation collapses to q points") {
    auto act = rotation_action_exact(Rational(1, 3));
    Point y = Point::circle_exact(Rational(1, 10));
    OrbitBall b5 = orbit_ball(*act, y, 5);
    CHECK(b5.size() == 3);
    // the base point enters at radius 3 through a^3
    CHECK(b5.count_by_radius == std::vector<std::size_t>{2, 2, 3, 3, 3});
    // shortest representative of the class of y itself
    bool found = false;
    for (std::size_t c = 0; c < b5.size(); ++c) {
        if (b5.points[c].r[0] == y.r[0]) {
            CHECK(word_to_string(b5.words[c]) == "a1a1a1");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("orbit ball of irrational rotation is free: 2n points") {
    auto act = rotation_action(std::sqrt(2.0) - 1.0);
    Point y = Point::circle(0.0);
    OrbitBall b = orbit_ball(*act, y, 5);
    CHECK(b.size() == 10);
}

TEST_CASE("orbit balls are nested and monotone") {
    auto act = rotation_action_exact(Rational(2, 7));
    Point y = Point::circle_exact(Rational(0));
    OrbitBall big = orbit_ball(*act, y, 9);
    for (std::size_t m = 1; m < big.count_by_radius.size(); ++m)
        CHECK(big.count_by_radius[m] >= big.count_by_radius[m - 1]);
    // point sets nest: radius-m ball equals the first count[m] discovered classes
    OrbitBall small = orbit_ball(*act, y, 4);
    REQUIRE(small.size() == big.count_by_radius[3]);
    for (std::size_t c = 0; c < small.size(); ++c)
        CHECK(point_dist(small.points[c], big.points[c]) == 0.0);
}

TEST_CASE("lambda series") {
    SUBCASE("free F2 orbit: exact sphere/ball ratio at n=10, monotone to 2/3") {
        auto act = sanov_action();
        Point y = sanov_free_point();
        AverageSeries s = lambda_series(*act, y, 10);
        CHECK(s.samples.back().value == doctest::Approx(78732.0 / 118096.0).epsilon(1e-12));
        // decreasing towards (2k-2)/(2k-1) = 2/3 from above
        for (std::size_t i = 1; i < s.samples.size(); ++i)
            CHECK(s.samples[i].value < s.samples[i - 1].value);
        CHECK(s.samples.back().value > 2.0 / 3.0);
    }

    SUBCASE("free ping-pong orbit (k=3): exact ratio at n=8") {
        auto act = ping_pong_action(make_ping_pong_default());
        Point y = Point::circle(0.1);  // inside J = (0.0667, 0.1333)
        AverageSeries s = lambda_series(*act, y, 8, 1e-13);
        // |S_n|/|G_n| for k=3: 6*5^(n-1) / (1.5*(5^n-1))
        const double expect8 = 6.0 * std::pow(5.0, 7.0) / (1.5 * (std::pow(5.0, 8.0) - 1.0));
        CHECK(s.samples.back().value == doctest::Approx(expect8).epsilon(1e-12));
    }

    SUBCASE("Z free orbit: ratio 1/n, monotone to 0") {
        auto act = rotation_action(std::sqrt(2.0) - 1.0);
        Point y = Point::circle(0.0);
        AverageSeries s = lambda_series(*act, y, 100);
        CHECK(s.samples.back().value == 1.0 / 100.0);
        for (std::size_t i = 1; i < s.samples.size(); ++i)
            CHECK(s.samples[i].value < s.samples[i - 1].value);
        CHECK(s.limsup_estimate == 1.0 / 76.0);  // max over trailing quarter
    }

    SUBCASE("commuting torus translations: lattice ball plus the commutator origin") {
        // Reduced words of the free group map onto lattice translations; the
        // shell at radius n contributes 4n new points, and the commutator
        // a b a^-1 b^-1 (reduced, length 4) reaches the base point itself, so
        // |G_n(y)| = 2n(n+1) for n < 4 and 2n(n+1) + 1 afterwards.
        TorusRotation rot;
        rot.alpha = {{std::sqrt(2.0), 0.0}, {0.0, std::sqrt(3.0)}};
        auto act = torus_action(rot);
        Point y = Point::torus({0.0, 0.0});
        OrbitBall b = orbit_ball(*act, y, 20);
        for (int m = 1; m <= 20; ++m) {
            std::size_t expect = 2ull * static_cast<std::size_t>(m) * (static_cast<std::size_t>(m) + 1) +
                                 (m >= 4 ? 1u : 0u);
            CHECK(b.count_by_radius[static_cast<std::size_t>(m) - 1] == expect);
        }
        AverageSeries s = lambda_series(*act, y, 20);
        CHECK(s.samples.back().value == doctest::Approx(80.0 / 841.0).epsilon(1e-12));
    }
}

TEST_CASE("folner defect") {
    SUBCASE("identity-acting word gives zero") {
        auto act = rotation_action_exact(Rational(1, 3));
        Point y = Point::circle_exact(Rational(1, 10));
        Word a = parse_word("a1a1a1");  // full period
        CHECK(folner_defect(*act, y, a, 6) == 0.0);
    }

    SUBCASE("Z free orbit, one generator: defect 2/n") {
        // aG_n(y) and G_n(y) are integer intervals with the origin removed;
        // shifting moves two points out on each side of the symmetric
        // difference: |{-n, 1}| + |{0, n+1}| = 4 over |G_n| = 2n.
        auto act = rotation_action(std::sqrt(2.0) - 1.0);
        Point y = Point::circle(0.0);
        for (int n : {5, 9, 20})
            CHECK(folner_defect(*act, y, parse_word("a1"), n) ==
                  doctest::Approx(2.0 / n).epsilon(1e-12));
    }

    SUBCASE("free orbit obeys the 2|a| sphere bound") {
        auto act = ping_pong_action(make_ping_pong_default());
        Point y = Point::circle(0.1);
        OrbitBall b = orbit_ball(*act, y, 7, 1e-13);
        for (const char* ws : {"a1", "a2A3", "a1a1a2"}) {
            Word a = parse_word(ws);
            double defect = folner_defect(*act, y, a, 6, 1e-13);
            double bound = 2.0 * static_cast<double>(a.size()) *
                           static_cast<double>(b.count_by_radius[6] - b.count_by_radius[5]) /
                           static_cast<double>(b.count_by_radius[5]);
            CHECK(defect <= bound + 1e-12);
        }
    }

    SUBCASE("invariant under free reduction of the word") {
        auto act = ping_pong_action(make_ping_pong_default());
        Point y = Point::circle(0.1);
        Word raw = parse_word("a1a2A2a3");
        Word red = reduce(raw);
        CHECK(folner_defect(*act, y, raw, 5) == folner_defect(*act, y, red, 5));
    }
}
