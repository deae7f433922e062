#include "folavg/suspension.hpp"

#include <cmath>
#include <sstream>

namespace folavg {

void PlugSpec::validate() const {
    if (!(R > 0)) throw std::invalid_argument("PlugSpec: R > 0 required");
    if (!(volX > 0)) throw std::invalid_argument("PlugSpec: volX > 0 required");
    if (!(0 < m0 && m0 <= m1 && m1 <= D)) throw std::invalid_argument("PlugSpec: need 0 < m0 <= m1 <= D");
    if (!ball_profile) throw std::invalid_argument("PlugSpec: missing ball profile");
}

PlugSpec plug_thin_f2() {
    PlugSpec p;
    p.R = 10;
    p.D = 10.5;
    p.m0 = 4;
    p.m1 = 4.5;
    p.volX = 1;
    p.ball_profile = [](double) { return 0.5; };  // K = 1/2
    p.name = "f2-thin";
    return p;
}

PlugSpec plug_cylinder() {
    PlugSpec p;
    p.R = 1;
    p.D = 1.1;
    p.m0 = 0.45;
    p.m1 = 0.55;
    p.volX = 1;
    p.ball_profile = [](double r) { return std::min(1.0, std::max(0.0, r)); };
    p.name = "cylinder";
    return p;
}

ThinLegsReport thin_check(const PlugSpec& p) {
    p.validate();
    ThinLegsReport rep;
    rep.slack1 = 2 * p.m0 - (p.m1 + (p.D - p.R));
    rep.slack2 = (p.R + p.m0) - 2 * p.m1;
    rep.ineq1 = rep.slack1 > 0;
    rep.ineq2 = rep.slack2 > 0;
    return rep;
}

RadiusPair radii(const PlugSpec& p, int n) {
    ThinLegsReport rep = thin_check(p);
    if (!rep.thin())
        throw PreconditionError("radii: plug is not thin (slacks " + std::to_string(rep.slack1) +
                                ", " + std::to_string(rep.slack2) + ")");
    RadiusPair out;
    out.R0 = 0.5 * ((p.m1 + (p.D - p.R)) + 2 * p.m0);
    out.R1 = 0.5 * (2 * p.m1 + (p.R + p.m0));
    out.r = out.R0 + (n - 1) * p.R;
    out.s = out.R1 + (n - 2) * p.R;
    return out;
}

SandwichBounds sandwich_bounds(const GroupAction& action, const Point& y, const Observable& phi,
                               const PlugSpec& p, double r, double tol, std::size_t cap) {
    p.validate();
    if (!(r >= 2 * p.R))
        throw std::domain_error("sandwich_bounds: need floor(r/R) >= 2 so both bracketing orbit balls are non-empty");
    SandwichBounds out;
    out.n = static_cast<int>(std::floor(r / p.R));

    OrbitBall ball = orbit_ball(action, y, out.n + 1, tol, cap);
    const std::size_t c_lo = ball.count_by_radius[static_cast<std::size_t>(out.n) - 2];  // |G_{n-1}(y)|
    const std::size_t c_hi = ball.count_by_radius[static_cast<std::size_t>(out.n)];      // |G_{n+1}(y)|
    double sum_lo = 0, sum_hi = 0;
    for (std::size_t i = 0; i < c_hi; ++i) {
        const double v = phi(ball.points[i]);
        sum_hi += v;
        if (i < c_lo) sum_lo += v;
    }
    out.lower = sum_lo / (p.volX * static_cast<double>(c_hi));
    out.upper = sum_hi / (p.volX * static_cast<double>(c_lo));
    return out;
}

SmallBoundaryLimits small_boundary_limits(const GroupAction& action, const Point& y,
                                          const Observable& phi, const PlugSpec& p, int N,
                                          BallAverageMode mode, double tol, std::size_t cap) {
    p.validate();
    if (N < 2) throw std::invalid_argument("small_boundary_limits: N >= 2 required");
    SmallBoundaryLimits out;
    out.beta_series = ball_average_series(action, phi, y, N, mode, tol, cap);

    AverageSeries lam = lambda_series(action, y, N, tol, cap);
    out.lambda_window = lam.limsup_estimate;
    out.hypothesis_warning = out.lambda_window > 0.05;

    out.limsup_estimate = out.beta_series.limsup_estimate / p.volX;
    out.liminf_estimate = out.beta_series.liminf_estimate / p.volX;
    return out;
}

OscillationCertificate large_boundary_certificate(const GroupAction& action, const Point& y,
                                                  const PlugSpec& p, int N, double tol,
                                                  std::size_t cap) {
    ThinLegsReport rep = thin_check(p);
    if (!rep.thin()) throw PreconditionError("large_boundary_certificate: plug is not thin");
    if (N < 2) throw std::invalid_argument("large_boundary_certificate: N >= 2 required");

    OscillationCertificate cert;
    RadiusPair rp = radii(p, 1);
    cert.R0 = rp.R0;
    cert.R1 = rp.R1;
    cert.K = p.ball_profile(rp.R1 - p.m0) / p.volX;
    if (!(cert.K > 0 && cert.K <= 1))
        throw PreconditionError("large_boundary_certificate: ball profile gives K outside (0,1]");

    OrbitBall ball = orbit_ball(action, y, N, tol, cap);
    for (int n = 2; n <= N; ++n) {
        const double cn = static_cast<double>(ball.count_by_radius[static_cast<std::size_t>(n) - 1]);
        const double cp = static_cast<double>(ball.count_by_radius[static_cast<std::size_t>(n) - 2]);
        OscillationCertificate::Row row;
        row.n = n;
        RadiusPair rr = radii(p, n);
        row.r = rr.r;
        row.s = rr.s;
        row.ratio = (cn - cp) / cn;
        row.avg_r_upper = 1.0;
        row.avg_s = 1.0 / (1.0 - (1.0 - cert.K) * row.ratio);
        cert.rows.push_back(row);
    }

    cert.window = static_cast<int>((cert.rows.size() + 3) / 4);
    cert.lambda_window = 0;
    for (std::size_t i = cert.rows.size() - static_cast<std::size_t>(cert.window); i < cert.rows.size(); ++i)
        cert.lambda_window = std::max(cert.lambda_window, cert.rows[i].ratio);
    cert.limsup_lower = 1.0 / (1.0 - (1.0 - cert.K) * cert.lambda_window);
    cert.upper = 1.0;
    cert.gap = std::max(0.0, cert.limsup_lower - cert.upper);
    return cert;
}

std::string OscillationCertificate::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\n  \"K\": " << K << ",\n  \"R0\": " << R0 << ",\n  \"R1\": " << R1
       << ",\n  \"window\": " << window << ",\n  \"samples\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& w = rows[i];
        os << "    {\"n\": " << w.n << ", \"r\": " << w.r << ", \"avg_r\": " << w.avg_r_upper
           << ", \"s\": " << w.s << ", \"avg_s\": " << w.avg_s << ", \"ratio\": " << w.ratio << "}"
           << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"limsupLower\": " << limsup_lower << ",\n  \"upper\": " << upper
       << ",\n  \"gap\": " << gap << "\n}\n";
    return os.str();
}

ProductExtensionReport product_extension_check(const AverageSeries& base, double R1,
                                               bool annulus_zero_verified) {
    if (!annulus_zero_verified)
        throw PreconditionError(
            "product_extension_check: the annulus support condition was not verified by the caller");
    if (!(R1 > 0)) throw std::invalid_argument("product_extension_check: R1 > 0 required");
    if (base.samples.empty()) throw std::invalid_argument("product_extension_check: empty series");
    ProductExtensionReport rep;
    rep.R1 = R1;
    rep.base = base;
    rep.extended = base;  // the sandwich collapses: integrals and volumes agree at each r_n
    // limsup/liminf along the *given* radius sequence transfer unchanged
    rep.transfer.window = static_cast<int>(rep.extended.samples.size());
    rep.transfer.limsup_estimate = rep.extended.samples.front().value;
    rep.transfer.liminf_estimate = rep.extended.samples.front().value;
    for (const Sample& s : rep.extended.samples) {
        rep.transfer.limsup_estimate = std::max(rep.transfer.limsup_estimate, s.value);
        rep.transfer.liminf_estimate = std::min(rep.transfer.liminf_estimate, s.value);
    }
    rep.transfer.gap = rep.transfer.limsup_estimate - rep.transfer.liminf_estimate;
    rep.transfer.nonconvergent = rep.transfer.gap > 1e-3;
    rep.identical = true;
    for (std::size_t i = 0; i < base.samples.size(); ++i)
        if (base.samples[i].value != rep.extended.samples[i].value) rep.identical = false;
    return rep;
}

}  // namespace folavg
