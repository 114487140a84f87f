#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace funclass {

// Comparison policy shared by every inequality check in the library.
// "X <= Y" is accepted iff X <= Y + abs + rel * max(|X|, |Y|).
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-12;

    // Throws std::invalid_argument unless 0 <= abs, 0 <= rel <= 1, both finite.
    void validate() const;

    double margin(double lhs, double rhs) const {
        return abs + rel * std::max(std::fabs(lhs), std::fabs(rhs));
    }
    bool leq(double lhs, double rhs) const { return lhs <= rhs + margin(lhs, rhs); }
    bool geq(double lhs, double rhs) const { return leq(rhs, lhs); }
    bool eq(double a, double b) const { return leq(a, b) && leq(b, a); }
};

// A failing instance of some inequality: the grid indices involved and both sides.
struct Witness {
    std::vector<std::size_t> indices;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs

    static Witness make(std::vector<std::size_t> indices, double lhs, double rhs) {
        return Witness{std::move(indices), lhs, rhs, lhs - rhs};
    }
};

// A required hypothesis does not hold for the given data. Carries the
// instances that break it so callers can report them.
class HypothesisError : public std::domain_error {
public:
    HypothesisError(const std::string& what, std::vector<Witness> witnesses = {})
        : std::domain_error(what), witnesses_(std::move(witnesses)) {}

    const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }

private:
    std::vector<Witness> witnesses_;
};

// Real function sampled on the uniform grid origin + i * step, i = 0..N.
// Immutable after construction.
class GridFunction {
public:
    // Requires step > 0 and finite, at least two values, all values finite.
    GridFunction(double origin, double step, std::vector<double> values);

    double origin() const noexcept { return origin_; }
    double step() const noexcept { return step_; }
    // N: number of grid intervals (values().size() - 1).
    std::size_t intervals() const noexcept { return values_.size() - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    double length() const noexcept { return static_cast<double>(intervals()) * step_; }

    // Abscissa of index i; recomputed, never accumulated.
    double x(std::size_t i) const noexcept { return origin_ + static_cast<double>(i) * step_; }

    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    double min_value() const;
    double max_value() const;
    double max_abs() const;

    // Same origin, step and size.
    bool same_grid(const GridFunction& other) const noexcept;
    GridFunction with_values(std::vector<double> values) const;

    friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
    double origin_;
    double step_;
    std::vector<double> values_;
};

// Raised when a sampled function is not finite at some abscissa.
class SampleError : public std::invalid_argument {
public:
    SampleError(const std::string& what, double abscissa)
        : std::invalid_argument(what), abscissa_(abscissa) {}
    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

// values[i] = fn(origin + i * step), i < count. Exceptions thrown by fn are
// rethrown as SampleError naming the abscissa.
GridFunction sample(const std::function<double(double)>& fn, double origin, double step,
                    std::size_t count);

// Pointwise arithmetic on functions over identical grids.
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a);
GridFunction operator*(double c, const GridFunction& a);

bool is_non_decreasing(const GridFunction& f, const Tolerance& tol = {});

}  // namespace funclass
