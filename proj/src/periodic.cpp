#include "funclass/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "funclass/io.hpp"

namespace funclass {

namespace {

void require_period(const GridFunction& f, const PeriodSpec& p, const char* op) {
    if (p.width == 0 || p.width > f.intervals()) {
        throw std::invalid_argument(std::string(op) + ": period width " + std::to_string(p.width) +
                                    " does not fit a grid of " + std::to_string(f.intervals()) + " intervals");
    }
}

struct SuffixMin {
    std::vector<double> value;
    std::vector<std::size_t> at;
};

SuffixMin suffix_min(const GridFunction& f) {
    const std::size_t size = f.size();
    SuffixMin s{std::vector<double>(size), std::vector<std::size_t>(size)};
    s.value[size - 1] = f[size - 1];
    s.at[size - 1] = size - 1;
    for (std::size_t k = size - 1; k-- > 0;) {
        if (f[k] <= s.value[k + 1]) {
            s.value[k] = f[k];
            s.at[k] = k;
        } else {
            s.value[k] = s.value[k + 1];
            s.at[k] = s.at[k + 1];
        }
    }
    return s;
}

double oscillation(const GridFunction& f) { return f.max_value() - f.min_value(); }

}  // namespace

PeriodSpec PeriodSpec::from_distance(double d, const GridFunction& f, const Tolerance& tol) {
    if (!std::isfinite(d) || d <= 0.0) {
        throw std::invalid_argument("period: d must be finite and > 0");
    }
    const double ratio = d / f.step();
    const double nearest = std::max(1.0, std::round(ratio));
    const auto width = static_cast<std::size_t>(nearest);
    if (!tol.eq(nearest * f.step(), d)) {
        throw std::invalid_argument("period: d = " + format_real(d) + " is not a multiple of the step " +
                                    format_real(f.step()) + "; nearest valid d is " +
                                    format_real(nearest * f.step()));
    }
    if (width > f.intervals()) {
        throw std::invalid_argument("period: d = " + format_real(d) + " exceeds the grid length " +
                                    format_real(f.length()));
    }
    return PeriodSpec{d, width};
}

PeriodicCheck is_periodically_increasing(const GridFunction& f, const PeriodSpec& p, const Tolerance& tol) {
    require_period(f, p, "is_periodically_increasing");
    const auto suffix = suffix_min(f);
    PeriodicCheck check;
    for (std::size_t i = 0; i + p.width < f.size(); ++i) {
        const std::size_t k = i + p.width;
        if (!tol.leq(f[i], suffix.value[k])) {
            check.witnesses.push_back(Witness::make({i, suffix.at[k]}, f[i], suffix.value[k]));
        }
    }
    check.holds = check.witnesses.empty();
    return check;
}

HeightProfile heights(const GridFunction& f, const PeriodSpec& p) {
    require_period(f, p, "heights");
    const std::size_t size = f.size();
    HeightProfile profile;
    profile.window_heights.resize(size);

    std::deque<std::size_t> maxq;
    std::deque<std::size_t> minq;
    std::size_t next = 0;
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t right = std::min(i + p.width, size - 1);
        for (; next <= right; ++next) {
            while (!maxq.empty() && f[maxq.back()] <= f[next]) maxq.pop_back();
            maxq.push_back(next);
            while (!minq.empty() && f[minq.back()] >= f[next]) minq.pop_back();
            minq.push_back(next);
        }
        while (maxq.front() < i) maxq.pop_front();
        while (minq.front() < i) minq.pop_front();
        profile.window_heights[i] = f[maxq.front()] - f[minq.front()];
    }
    profile.global_d = *std::max_element(profile.window_heights.begin(), profile.window_heights.end());
    profile.global = oscillation(f);
    return profile;
}

GridFunction greatest_periodic_minorant(const GridFunction& f, const PeriodSpec& p) {
    require_period(f, p, "greatest_periodic_minorant");
    const auto suffix = suffix_min(f);
    std::vector<double> v(f.values().begin(), f.values().end());
    for (std::size_t i = 0; i + p.width < f.size(); ++i) {
        v[i] = std::min(v[i], suffix.value[i + p.width]);
    }
    return f.with_values(std::move(v));
}

Envelopes envelopes(const GridFunction& f) {
    const std::size_t size = f.size();
    std::vector<double> lower(suffix_min(f).value);
    std::vector<double> upper(size);
    upper[0] = f[0];
    for (std::size_t i = 1; i < size; ++i) upper[i] = std::max(upper[i - 1], f[i]);
    std::vector<double> hat(size);
    for (std::size_t i = 0; i < size; ++i) hat[i] = 0.5 * (lower[i] + upper[i]);
    return Envelopes{f.with_values(std::move(lower)), f.with_values(std::move(upper)),
                     f.with_values(std::move(hat))};
}

HatBound check_hat_bound(const GridFunction& f, const PeriodSpec& p, const Tolerance& tol) {
    auto check = is_periodically_increasing(f, p, tol);
    if (!check.holds) {
        throw HypothesisError("hat bound: f is not d-periodically increasing", std::move(check.witnesses));
    }
    const auto env = envelopes(f);
    HatBound result;
    result.bound = heights(f, p).global_d / 2.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        result.sup_err = std::max(result.sup_err, std::fabs(f[i] - env.hat[i]));
    }
    result.holds = tol.leq(result.sup_err, result.bound);
    return result;
}

PerturbationReport perturbation_check(const GridFunction& g, const GridFunction& k, const PeriodSpec& p,
                                      const Tolerance& tol) {
    if (!g.same_grid(k)) {
        throw std::invalid_argument("perturbation_check: g and k are sampled on different grids");
    }
    if (!is_non_decreasing(g, tol)) {
        throw std::invalid_argument("perturbation_check: g must be non-decreasing");
    }
    const auto profile = heights(g, p);
    PerturbationReport report;
    report.min_window_height = profile.window_heights[0];
    for (std::size_t i = 0; i + p.width < g.size(); ++i) {
        report.min_window_height = std::min(report.min_window_height, profile.window_heights[i]);
    }
    report.perturbation_height = oscillation(k);
    report.hypothesis_holds = tol.leq(report.perturbation_height, report.min_window_height);
    report.plus_holds = is_periodically_increasing(g + k, p, tol).holds;
    report.minus_holds = is_periodically_increasing(g - k, p, tol).holds;
    return report;
}

PeriodicDecomposition decompose(const GridFunction& f, const PeriodSpec& p, const Tolerance& tol) {
    require_period(f, p, "decompose");
    if (f.intervals() <= 2 * p.width) {
        throw std::invalid_argument("decompose: the grid length must exceed 2 d");
    }
    auto check = is_periodically_increasing(f, p, tol);
    if (!check.holds) {
        throw HypothesisError("decompose: f is not d-periodically increasing", std::move(check.witnesses));
    }

    const std::size_t w = p.width;
    std::size_t lo = 0;
    std::size_t hi = 0;
    double sum = 0.0;
    const std::size_t count = f.size() - w;
    for (std::size_t i = 0; i < count; ++i) {
        const double inc = f[i + w] - f[i];
        sum += inc;
        if (inc < f[lo + w] - f[lo]) lo = i;
        if (inc > f[hi + w] - f[hi]) hi = i;
    }
    const double inc_lo = f[lo + w] - f[lo];
    const double inc_hi = f[hi + w] - f[hi];
    if (inc_hi - inc_lo > 10.0 * tol.abs) {
        throw HypothesisError("decompose: f(x + d) - f(x) is not constant (indices " + std::to_string(hi) +
                                  " and " + std::to_string(lo) + " differ by " + format_real(inc_hi - inc_lo) +
                                  ")",
                              {Witness::make({hi, lo}, inc_hi, inc_lo)});
    }

    // Suffix minima of f continued past the right end by f(t) = f(t - d) + l.
    // On a bounded grid the plain suffix minima lose periodicity in the last
    // two periods whenever the minimum of a trailing window sits beyond b - d.
    const double l = sum / static_cast<double>(count);
    const std::size_t size = f.size();
    std::vector<double> ext(size + w);
    for (std::size_t t = 0; t < ext.size(); ++t) ext[t] = t < size ? f[t] : f[t - w] + l;
    std::vector<double> gv(size);
    double run = ext.back();
    for (std::size_t t = ext.size(); t-- > 0;) {
        run = std::min(run, ext[t]);
        if (t < size) gv[t] = run;
    }
    auto g = f.with_values(std::move(gv));
    auto h = f - g;
    double err = 0.0;
    for (std::size_t i = 0; i < count; ++i) err = std::max(err, std::fabs(h[i + w] - h[i]));
    return PeriodicDecomposition{std::move(g), std::move(h), l, err};
}

}  // namespace funclass
