#pragma once

#include <vector>

#include "funclass/grid.hpp"

namespace funclass {

// A distance d that is an exact multiple of the grid step: d = width * step.
struct PeriodSpec {
    double distance = 0.0;
    std::size_t width = 0;

    // Rejects d that is not within tolerance of a positive multiple of
    // f.step() (the message names the nearest valid d) or exceeds the grid length.
    static PeriodSpec from_distance(double d, const GridFunction& f, const Tolerance& tol = {});
};

// Oscillation of f over the windows [x_i, x_i + d] ∩ I.
struct HeightProfile {
    std::vector<double> window_heights;  // one per grid index; right-edge windows are truncated
    double global_d = 0.0;               // max of window_heights
    double global = 0.0;                 // max - min over the whole grid
};

struct PeriodicCheck {
    bool holds = true;
    // One per failing i: indices {i, t} with v[i] > v[t], t the suffix argmin from i + w.
    std::vector<Witness> witnesses;
};

struct Envelopes {
    GridFunction lower;  // suffix minima: largest non-decreasing minorant
    GridFunction upper;  // prefix maxima: smallest non-decreasing majorant
    GridFunction hat;    // (lower + upper) / 2
};

struct HatBound {
    double bound = 0.0;    // global_d / 2
    double sup_err = 0.0;  // max |f - hat|
    bool holds = true;
};

struct PerturbationReport {
    double min_window_height = 0.0;  // min over full windows of the height of g
    double perturbation_height = 0.0;
    bool hypothesis_holds = false;
    bool plus_holds = false;   // g + k is d-periodically increasing
    bool minus_holds = false;  // g - k is d-periodically increasing
    // Expected outcome: hypothesis false, or both sums pass.
    bool consistent() const { return !hypothesis_holds || (plus_holds && minus_holds); }
};

struct PeriodicDecomposition {
    GridFunction increasing;  // g: suffix minima of f continued by the increment
    GridFunction periodic;    // h = f - g
    double increment = 0.0;   // l = f(x + d) - f(x), averaged over the grid
    double periodicity_error = 0.0;  // max |h[i + w] - h[i]|
};

/// f(x) <= f(y) whenever y - x >= d, decided in O(N) through suffix minima.
PeriodicCheck is_periodically_increasing(const GridFunction& f, const PeriodSpec& p, const Tolerance& tol = {});

/// Window heights by monotonic-deque sliding max/min, O(N).
HeightProfile heights(const GridFunction& f, const PeriodSpec& p);

/// min(f(x), inf_{t >= x + d} f(t)): the greatest d-periodically increasing minorant.
GridFunction greatest_periodic_minorant(const GridFunction& f, const PeriodSpec& p);

Envelopes envelopes(const GridFunction& f);

/// Bounds sup |f - hat| by H_d(f) / 2. Throws HypothesisError unless f is
/// d-periodically increasing.
HatBound check_hat_bound(const GridFunction& f, const PeriodSpec& p, const Tolerance& tol = {});

/// For increasing g and bounded k with min window height of g >= H(k), g + k
/// and g - k must both be d-periodically increasing.
PerturbationReport perturbation_check(const GridFunction& g, const GridFunction& k, const PeriodSpec& p,
                                      const Tolerance& tol = {});

/// Splits a d-periodically increasing f with constant increment
/// f(x + d) - f(x) = l into increasing g and d-periodic h.
/// Throws std::invalid_argument when N h <= 2 d, and HypothesisError when f
/// is not d-periodically increasing or the increment is not constant (the
/// witness names the two indices that disagree most).
PeriodicDecomposition decompose(const GridFunction& f, const PeriodSpec& p, const Tolerance& tol = {});

}  // namespace funclass
