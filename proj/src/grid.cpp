#include "funclass/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>

namespace funclass {

void Tolerance::validate() const {
    if (!std::isfinite(abs) || abs < 0.0) {
        throw std::invalid_argument("tolerance: abs must be finite and >= 0");
    }
    // rel <= 1 keeps acceptance monotone in the right-hand side.
    if (!std::isfinite(rel) || rel < 0.0 || rel > 1.0) {
        throw std::invalid_argument("tolerance: rel must lie in [0, 1]");
    }
}

GridFunction::GridFunction(double origin, double step, std::vector<double> values)
    : origin_(origin), step_(step), values_(std::move(values)) {
    if (!std::isfinite(origin_)) {
        throw std::invalid_argument("grid: origin must be finite");
    }
    if (!std::isfinite(step_) || step_ <= 0.0) {
        throw std::invalid_argument("grid: step must be finite and > 0");
    }
    if (values_.size() < 2) {
        throw std::invalid_argument("grid: at least two samples are required");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw std::invalid_argument("grid: value at index " + std::to_string(i) +
                                        " is not finite");
        }
    }
}

double GridFunction::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

double GridFunction::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

bool GridFunction::same_grid(const GridFunction& other) const noexcept {
    return origin_ == other.origin_ && step_ == other.step_ && values_.size() == other.values_.size();
}

GridFunction GridFunction::with_values(std::vector<double> values) const {
    if (values.size() != values_.size()) {
        throw std::invalid_argument("grid: replacement values have the wrong length");
    }
    return GridFunction(origin_, step_, std::move(values));
}

GridFunction sample(const std::function<double(double)>& fn, double origin, double step,
                    std::size_t count) {
    if (count < 2) {
        throw std::invalid_argument("sample: count must be at least 2");
    }
    if (!std::isfinite(step) || step <= 0.0) {
        throw std::invalid_argument("sample: step must be finite and > 0");
    }
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = origin + static_cast<double>(i) * step;
        char where[64];
        std::snprintf(where, sizeof where, "%.17g", x);
        double y;
        try {
            y = fn(x);
        } catch (const std::exception& e) {
            throw SampleError(std::string("sample: evaluation failed at x = ") + where + ": " + e.what(), x);
        }
        if (!std::isfinite(y)) {
            throw SampleError(std::string("sample: non-finite value at x = ") + where, x);
        }
        values[i] = y;
    }
    return GridFunction(origin, step, std::move(values));
}

namespace {

void require_same_grid(const GridFunction& a, const GridFunction& b) {
    if (!a.same_grid(b)) {
        throw std::invalid_argument("grid: operands are sampled on different grids");
    }
}

}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return a.with_values(std::move(v));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return a.with_values(std::move(v));
}

GridFunction operator-(const GridFunction& a) {
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a[i];
    return a.with_values(std::move(v));
}

GridFunction operator*(double c, const GridFunction& a) {
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a[i];
    return a.with_values(std::move(v));
}

bool is_non_decreasing(const GridFunction& f, const Tolerance& tol) {
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (!tol.leq(f[i - 1], f[i])) return false;
    }
    return true;
}

}  // namespace funclass
