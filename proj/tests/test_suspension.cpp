#include <doctest.h>

#include <cmath>

#include "folavg/suspension.hpp"

using namespace folavg;

TEST_CASE("thin legs check") {
    SUBCASE("thin preset") {
        ThinLegsReport rep = thin_check(plug_thin_f2());
        CHECK(rep.thin());
        CHECK(rep.slack1 == doctest::Approx(8.0 - 5.0));   // 2*4 - (4.5 + 0.5)
        CHECK(rep.slack2 == doctest::Approx(14.0 - 9.0));  // (10 + 4) - 9
    }

    SUBCASE("cylinder-like plug fails the first inequality") {
        PlugSpec p;
        p.R = 1;
        p.D = 3;
        p.m0 = 1;
        p.m1 = 1;
        p.volX = 1;
        p.ball_profile = [](double) { return 0.5; };
        ThinLegsReport rep = thin_check(p);
        CHECK(!rep.ineq1);  // 1 + 2 < 2 is false
        CHECK(!rep.thin());
    }

    SUBCASE("marginal case reports its slack") {
        const double eps = 0.125;
        PlugSpec p;
        p.R = 2;
        p.D = 2.5;
        p.m0 = 1;
        p.m1 = 1;
        p.volX = 1;
        p.ball_profile = [](double) { return 0.5; };
        // slack1 = 2 - (1 + 0.5) = 0.5; shrink R to make it eps
        p.R = 2.5 - (2.0 - 1.0 - eps);  // D - R = 1 - eps
        ThinLegsReport rep = thin_check(p);
        CHECK(rep.slack1 == doctest::Approx(eps));
        CHECK(rep.thin());
    }
}

TEST_CASE("radius schedule") {
    PlugSpec p = plug_thin_f2();

    SUBCASE("midpoint offsets and the arithmetic progression") {
        RadiusPair rp2 = radii(p, 2);
        CHECK(rp2.R0 == doctest::Approx(6.5));   // midpoint of (5, 8)
        CHECK(rp2.R1 == doctest::Approx(11.5));  // midpoint of (9, 14)
        CHECK(rp2.r == doctest::Approx(16.5));
        CHECK(rp2.s == doctest::Approx(11.5));
        CHECK(radii(p, 1).r == doctest::Approx(6.5));
    }

    SUBCASE("the four strict inequalities hold for n = 1..12") {
        for (int n = 1; n <= 12; ++n) {
            RadiusPair rp = radii(p, n);
            CHECK(p.m1 + (n - 2) * p.R + p.D < rp.r);
            CHECK(rp.r < p.m0 + (n - 1) * p.R + p.m0);
            CHECK(p.m1 + (n - 2) * p.R + p.m1 < rp.s);
            CHECK(rp.s < (n - 1) * p.R + p.m0);
        }
    }

    SUBCASE("not-thin plug is rejected") {
        PlugSpec bad = p;
        bad.m1 = bad.D;  // destroys both inequalities
        CHECK_THROWS_AS(radii(bad, 3), PreconditionError);
    }
}

TEST_CASE("sandwich bounds") {
    SUBCASE("constant observable brackets 1 with the count ratio") {
        auto act = rotation_action(std::sqrt(2.0) - 1.0);
        Point y = Point::circle(0.0);
        PlugSpec p = plug_cylinder();
        Observable phi = Observable::constant(p.volX);
        SandwichBounds sb = sandwich_bounds(*act, y, phi, p, 50.0);
        // |G_{n-1}| = 2(n-1), |G_{n+1}| = 2(n+1)
        CHECK(sb.n == 50);
        CHECK(sb.lower == doctest::Approx(98.0 / 102.0).epsilon(1e-12));
        CHECK(sb.upper == doctest::Approx(102.0 / 98.0).epsilon(1e-12));
        CHECK(sb.lower <= 1.0);
        CHECK(1.0 <= sb.upper);
    }

    SUBCASE("rotation with trig observable: both bounds near 1 at n = 1000") {
        auto act = rotation_action(std::sqrt(2.0) - 1.0);
        Point y = Point::circle(0.0);
        PlugSpec p = plug_cylinder();
        // volX (1 + cos) has orbit mean -> volX by unique ergodicity
        Observable phi = Observable::trig1d(p.volX, {{1, p.volX}});
        SandwichBounds sb = sandwich_bounds(*act, y, phi, p, 1000.0);
        CHECK(std::fabs(sb.lower - 1.0) <= 2e-2);
        CHECK(std::fabs(sb.upper - 1.0) <= 2e-2);
        CHECK(sb.lower <= sb.upper);
    }

    SUBCASE("free F2 orbit, constant observable: lower -> |G_{n-1}|/|G_{n+1}| ~ 1/9") {
        auto act = sanov_action();
        Point y = sanov_free_point();
        PlugSpec p = plug_cylinder();
        SandwichBounds sb = sandwich_bounds(*act, y, Observable::constant(1.0), p, 9.0);
        const double lo = static_cast<double>(free_ball_size(2, 8)),
                     hi = static_cast<double>(free_ball_size(2, 10));
        CHECK(sb.lower == doctest::Approx(lo / hi).epsilon(1e-12));
        CHECK(sb.lower == doctest::Approx(1.0 / 9.0).epsilon(2e-4));
    }

    SUBCASE("radius too small for the bracketing balls") {
        auto act = rotation_action(0.3);
        CHECK_THROWS_AS(
            sandwich_bounds(*act, Point::circle(0.0), Observable::constant(1.0), plug_cylinder(), 1.5),
            std::domain_error);
    }
}

TEST_CASE("small boundary limits") {
    PlugSpec p = plug_cylinder();

    SUBCASE("rotation with cos observable: both limits near 0") {
        auto act = rotation_action(std::sqrt(2.0) - 1.0);
        SmallBoundaryLimits out =
            small_boundary_limits(*act, Point::circle(0.0), Observable::cosine({1}), p, 1000);
        CHECK(std::fabs(out.limsup_estimate) <= 2e-2);
        CHECK(std::fabs(out.liminf_estimate) <= 2e-2);
        CHECK(out.limsup_estimate >= out.liminf_estimate);
        CHECK(!out.hypothesis_warning);
    }

    SUBCASE("constant volX observable: both limits exactly 1") {
        auto act = rotation_action(std::sqrt(2.0) - 1.0);
        SmallBoundaryLimits out =
            small_boundary_limits(*act, Point::circle(0.0), Observable::constant(p.volX), p, 64);
        CHECK(out.limsup_estimate == 1.0);
        CHECK(out.liminf_estimate == 1.0);
    }

    SUBCASE("two commuting torus translations: limits near the Lebesgue mean") {
        TorusRotation rot;
        rot.alpha = {{std::sqrt(2.0), 0.0}, {0.0, std::sqrt(3.0)}};
        auto act = torus_action(rot);
        // 0.3 + cos(2 pi x1) has mean 0.3
        Observable phi = Observable(
            [](const Point& q) { return 0.3 + std::cos(kTwoPi * q.c[0]); }, 1.3, "0.3+cos");
        // class mode: the word multiset is exponential, the orbit is quadratic
        SmallBoundaryLimits out = small_boundary_limits(*act, Point::torus({0.0, 0.0}), phi, p, 60,
                                                        BallAverageMode::Classes);
        CHECK(std::fabs(out.limsup_estimate - 0.3) <= 2e-2);
        CHECK(std::fabs(out.liminf_estimate - 0.3) <= 2e-2);
        CHECK(!out.hypothesis_warning);
    }

    SUBCASE("free orbit triggers the hypothesis warning") {
        auto act = sanov_action();
        SmallBoundaryLimits out = small_boundary_limits(*act, sanov_free_point(),
                                                        Observable::constant(1.0), p, 10,
                                                        BallAverageMode::Classes);
        CHECK(out.hypothesis_warning);  // lambda ~ 2/3
    }
}

TEST_CASE("large boundary certificate") {
    SUBCASE("free F2 orbit with the K = 1/2 thin preset") {
        auto act = sanov_action();
        OscillationCertificate cert =
            large_boundary_certificate(*act, sanov_free_point(), plug_thin_f2(), 12);
        CHECK(cert.K == 0.5);
        // exact integer counts: at n = 10 the lower bound equals
        // |G_10| / (|G_10| - 0.5 |S_10|) = 118096 / (118096 - 39366)
        const OscillationCertificate::Row& r10 = cert.rows[8];
        CHECK(r10.n == 10);
        CHECK(r10.ratio == doctest::Approx(78732.0 / 118096.0).epsilon(1e-14));
        CHECK(r10.avg_s == doctest::Approx(118096.0 / 78730.0).epsilon(1e-14));
        CHECK(r10.avg_s >= 1.49);
        for (const auto& row : cert.rows) {
            CHECK(row.avg_r_upper <= 1.0);
            CHECK(row.avg_s >= 1.0);
        }
        CHECK(cert.gap >= 0.49);
        // radii keep the arithmetic progression with step R
        for (std::size_t i = 1; i < cert.rows.size(); ++i) {
            CHECK(cert.rows[i].r - cert.rows[i - 1].r == doctest::Approx(10.0));
            CHECK(cert.rows[i].s - cert.rows[i - 1].s == doctest::Approx(10.0));
        }
    }

    SUBCASE("Z control degenerates: gap -> 0") {
        auto act = rotation_action(std::sqrt(2.0) - 1.0);
        OscillationCertificate cert =
            large_boundary_certificate(*act, Point::circle(0.0), plug_thin_f2(), 100);
        CHECK(cert.lambda_window == doctest::Approx(1.0 / 76.0).epsilon(1e-12));
        CHECK(cert.gap <= 0.05);
        for (const auto& row : cert.rows) CHECK(row.avg_s >= 1.0);
    }

    SUBCASE("K = 1 collapses the bound to 1") {
        auto act = sanov_action();
        PlugSpec p = plug_thin_f2();
        p.ball_profile = [](double) { return 1.0; };
        OscillationCertificate cert = large_boundary_certificate(*act, sanov_free_point(), p, 8);
        CHECK(cert.K == 1.0);
        for (const auto& row : cert.rows) CHECK(row.avg_s == 1.0);
        CHECK(cert.gap == 0.0);
    }

    SUBCASE("monotone in K: larger K lowers the bound (finite differences)") {
        const double lam = 0.6667;
        auto bound = [&](double K) { return 1.0 / (1.0 - (1.0 - K) * lam); };
        for (double K : {0.1, 0.3, 0.5, 0.7, 0.9})
            CHECK(bound(K + 1e-4) < bound(K));
    }

    SUBCASE("not-thin plug refused") {
        auto act = sanov_action();
        PlugSpec p = plug_thin_f2();
        p.m1 = p.D;
        CHECK_THROWS_AS(large_boundary_certificate(*act, sanov_free_point(), p, 6), PreconditionError);
    }

    SUBCASE("json serialization carries the headline fields") {
        auto act = sanov_action();
        OscillationCertificate cert =
            large_boundary_certificate(*act, sanov_free_point(), plug_thin_f2(), 6);
        std::string js = cert.to_json();
        CHECK(js.find("\"K\": 0.5") != std::string::npos);
        CHECK(js.find("limsupLower") != std::string::npos);
        CHECK(js.find("\"gap\"") != std::string::npos);
    }
}

TEST_CASE("product extension check") {
    SUBCASE("constant base series transfers unchanged") {
        AverageSeries base;
        for (int i = 1; i <= 4; ++i) base.push(i, 0.42);
        ProductExtensionReport rep = product_extension_check(base, 1.0, true);
        CHECK(rep.identical);
        CHECK(rep.transfer.gap == 0.0);
        for (std::size_t i = 0; i < base.samples.size(); ++i)
            CHECK(rep.extended.samples[i].value == base.samples[i].value);
    }

    SUBCASE("unverified hypothesis is refused") {
        AverageSeries base;
        base.push(1, 1.0);
        CHECK_THROWS_AS(product_extension_check(base, 1.0, false), PreconditionError);
    }
}
