#pragma once

// Random generators shared by the unit and acceptance suites. Seeds are
// fixed by the callers so every run sees the same cases.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "funclass/expr.hpp"
#include "funclass/grid.hpp"
#include "funclass/subadd.hpp"

namespace funclass::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline GridFunction from_zero(std::vector<double> v, double step) { return GridFunction(0.0, step, std::move(v)); }

inline GridFunction sample_expr(const char* text, double origin, double step, std::size_t count) {
    return expr::sample(expr::parse(text), origin, step, count);
}

// Non-negative values with a random mix of magnitudes.
inline GridFunction random_nonneg_grid(Rng& rng, std::size_t intervals) {
    std::vector<double> v(intervals + 1);
    for (auto& x : v) x = uniform(rng, 0.0, 1.0);
    return from_zero(std::move(v), 1.0 / static_cast<double>(intervals));
}

// Values k / 256 with k in [0, 1024]: sums of up to 14 of them are exact.
inline GridFunction random_dyadic_grid(Rng& rng, std::size_t intervals) {
    std::vector<double> v(intervals + 1);
    for (auto& x : v) x = static_cast<double>(pick(rng, 0, 1024)) / 256.0;
    return from_zero(std::move(v), 0.25);
}

// A non-negative function built from families that are subadditive of some
// order: sums of a x^p, concave functions through a non-negative value at 0,
// and pointwise maxima of those. Unfiltered; callers test the order.
inline GridFunction random_structured_grid(Rng& rng, std::size_t intervals, double max_power) {
    const double h = 1.0 / static_cast<double>(intervals);
    auto member = [&](double x, int kind, double a, double p, double c) {
        switch (kind) {
            case 0: return a * std::pow(x, p);
            case 1: return a * std::sqrt(x + c);
            case 2: return a * std::min(x, c);
            case 3: return a * std::log1p(p * x);
            default: return a * std::pow(x, p) + c;
        }
    };
    struct Term {
        int kind;
        double a, p, c;
    };
    const std::size_t terms = pick(rng, 1, 3);
    std::vector<Term> ts;
    for (std::size_t t = 0; t < terms; ++t) {
        ts.push_back({static_cast<int>(pick(rng, 0, 4)), uniform(rng, 0.1, 3.0), uniform(rng, 0.1, max_power),
                      uniform(rng, 0.0, 1.0)});
    }
    const bool use_max = pick(rng, 0, 3) == 0;
    std::vector<double> v(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = static_cast<double>(i) * h;
        double acc = use_max ? 0.0 : 0.0;
        for (const auto& t : ts) {
            const double y = member(x, t.kind, t.a, t.p, t.c);
            acc = use_max ? std::max(acc, y) : acc + y;
        }
        v[i] = acc;
    }
    return from_zero(std::move(v), h);
}

// A grid together with the smallest order n <= n_cap at which it passes
// check_order under a strict (relative-only) tolerance.
struct OrderedGrid {
    GridFunction grid;
    int order;
};

inline OrderedGrid random_order_passing_grid(Rng& rng, int n_cap, std::size_t max_intervals) {
    const Tolerance strict{0.0, 1e-12};
    while (true) {
        std::optional<GridFunction> g;
        if (pick(rng, 0, 4) == 0) {
            g = random_nonneg_grid(rng, pick(rng, 1, 4));
        } else {
            g = random_structured_grid(rng, pick(rng, 2, max_intervals), static_cast<double>(n_cap));
        }
        for (int n = 1; n <= n_cap; ++n) {
            if (check_order(*g, n, strict).holds) return {*g, n};
        }
    }
}

// Non-decreasing values from non-negative increments, some of them zero.
inline std::vector<double> random_increasing(Rng& rng, std::size_t size, double scale) {
    std::vector<double> v(size);
    double acc = uniform(rng, -1.0, 1.0);
    for (auto& x : v) {
        if (pick(rng, 0, 5) != 0) acc += uniform(rng, 0.0, scale);
        x = acc;
    }
    return v;
}

// Trend plus noise; depending on the ratio of slope to amp the result is or
// is not periodically increasing for a given width.
inline GridFunction random_wiggly(Rng& rng, std::size_t intervals, double step) {
    const double slope = uniform(rng, -0.2, 1.0);
    const double amp = std::pow(10.0, uniform(rng, -3.0, 1.0));
    std::vector<double> v(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        v[i] = slope * static_cast<double>(i) * step + amp * uniform(rng, -1.0, 1.0);
    }
    return GridFunction(0.0, step, std::move(v));
}

// Sampled functions used for the star-convexity checks.
struct CatalogEntry {
    const char* text;
    double origin;
    double step;
    std::size_t count;
};

inline constexpr CatalogEntry kCatalog[] = {
    {"x^2", -1.0, 0.25, 9},
    {"x^3", -1.0, 0.25, 9},
    {"x^3", -1.0, 0.125, 17},
    {"sin(x)", 0.0, std::numbers::pi / 16, 33},
    {"cos(x)", 0.0, std::numbers::pi / 16, 33},
    {"abs(x)", -1.0, 0.25, 9},
    {"exp(x)", -1.0, 0.25, 9},
    {"-x^2", -1.0, 0.25, 9},
    {"x^3 - x", -1.5, 0.25, 13},
    {"sqrt(x)", 0.0, 0.0625, 17},
    {"x^4 - x^2", -1.0, 0.125, 17},
    {"sin(3*x)", 0.0, std::numbers::pi / 16, 33},
};

inline GridFunction entry_grid(const CatalogEntry& e) { return sample_expr(e.text, e.origin, e.step, e.count); }

}  // namespace funclass::testing
