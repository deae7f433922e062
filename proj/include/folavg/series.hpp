#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace folavg {

/// A sampled average: (index or radius, value, attached error bound).
struct Sample {
    double index = 0;
    double value = 0;
    double error = 0;
};

/// A series of averages with trailing-window limsup/liminf estimates.
/// Any finite estimate of a limsup must declare its window; we use the
/// trailing quarter of the samples (at least one).
struct AverageSeries {
    std::vector<Sample> samples;
    int window = 0;
    double limsup_estimate = 0;
    double liminf_estimate = 0;

    void push(double index, double value, double error = 0.0) {
        if (!samples.empty() && !(index > samples.back().index))
            throw std::invalid_argument("AverageSeries: indices must be strictly increasing");
        samples.push_back({index, value, error});
    }

    /// Recompute the trailing-window estimates (max/min over the last
    /// ceil(N/4) samples).
    void finalize() {
        const std::size_t n = samples.size();
        if (n == 0) return;
        window = static_cast<int>((n + 3) / 4);
        limsup_estimate = samples[n - static_cast<std::size_t>(window)].value;
        liminf_estimate = limsup_estimate;
        for (std::size_t i = n - static_cast<std::size_t>(window); i < n; ++i) {
            limsup_estimate = std::max(limsup_estimate, samples[i].value);
            liminf_estimate = std::min(liminf_estimate, samples[i].value);
        }
    }
};

/// Trailing-window oscillation diagnostic.
struct OscillationDiagnostic {
    double limsup_estimate = 0;
    double liminf_estimate = 0;
    double gap = 0;
    int window = 0;
    bool nonconvergent = false;  // gap above the declared tolerance
};

/// Requires at least 8 samples (shorter series say nothing about a limsup).
inline OscillationDiagnostic oscillation_diagnostic(const AverageSeries& s, double gap_tolerance = 1e-3) {
    if (s.samples.size() < 8)
        throw std::invalid_argument("oscillation_diagnostic: need at least 8 samples");
    AverageSeries t = s;
    t.finalize();
    OscillationDiagnostic d;
    d.limsup_estimate = t.limsup_estimate;
    d.liminf_estimate = t.liminf_estimate;
    d.gap = t.limsup_estimate - t.liminf_estimate;
    d.window = t.window;
    d.nonconvergent = d.gap > gap_tolerance;
    return d;
}

}  // namespace folavg
