#pragma once

#include <optional>
#include <vector>

#include "funclass/grid.hpp"

namespace funclass {

/// Highest order accepted by the order-n operations. Binomial coefficients
/// C(60, i) are still exactly representable in a double.
inline constexpr int kMaxOrder = 60;

struct SubadditivityReport {
    int order_tested = 1;
    bool holds = true;
    std::vector<Witness> violations;  // sorted by (i, j); empty iff holds
    std::optional<int> minimal_order;
};

struct MinorantResult {
    GridFunction sigma;     // largest subadditive minorant on the grid
    GridFunction residual;  // input - sigma
    double defect = 0.0;    // max residual: smallest additive slack over all partitions
    bool bounded_variation = false;
};

struct PowerFit {
    double coefficient = 0.0;
    double max_residual = 0.0;
    // Every pair satisfies the functional equation under the tolerance rule.
    bool equation_holds = true;
};

/// ((x+y)^n - x^n) / y^n, evaluated as sum_{i<n} C(n,i) u^i with u = x/y by
/// Horner's rule. Requires y > 0 and 1 <= n <= 60.
double ratio_coefficient(double x, double y, int n);

/// Order-n subadditivity over all index pairs i >= 0, j >= 1, i + j <= N:
///   v[i+j] <= v[i] + ratio_coefficient(x_i, x_j, n) * v[j].
/// The grid must start at 0 and hold non-negative values.
SubadditivityReport check_order(const GridFunction& f, int n, const Tolerance& tol = {});

/// Smallest n <= n_max for which check_order holds. Binary search over the
/// order (the property is monotone in n), then confirmed by direct checks.
SubadditivityReport minimal_order(const GridFunction& f, int n_max, const Tolerance& tol = {});

/// Pointwise n-th root of a non-negative grid function.
GridFunction nth_root_transform(const GridFunction& f, int n);

/// g(x) = f(x) / x^n on the positive grid points. The result starts at
/// origin = step, so its index k stands for the grid multiple k + 1.
GridFunction ratio_transform(const GridFunction& f, int n);

/// Ordinary subadditivity of a function sampled at step, 2 step, ..., N step
/// (origin == step, e.g. the output of ratio_transform). Witness indices are
/// grid multiples, not storage offsets.
SubadditivityReport check_subadditive_positive(const GridFunction& g, const Tolerance& tol = {});

/// v[i+j] <= max(v[i] + (2^n - 1) v[j], (2^n - 1) v[i] + v[j]) for i, j >= 1.
SubadditivityReport check_weak_bound(const GridFunction& f, int n, const Tolerance& tol = {});

/// |LHS - RHS| of
///   f(x) + c(x, y) f(y) = f(y) + c(y, x) f(x)
/// at x = x_i, y = x_j, with c the ratio coefficient. Needs i, j >= 1.
double functional_equation_residual(const GridFunction& f, int n, std::size_t i, std::size_t j);

/// Least-squares fit of f against c x^n over x > 0, together with the
/// largest functional equation residual over all admissible pairs.
PowerFit fit_power(const GridFunction& f, int n, const Tolerance& tol = {});

/// Largest subadditive minorant via the min-plus recurrence
///   S[0] = v[0],  S[k] = min(v[k], min_{1<=j<k} S[j] + v[k-j]).
MinorantResult subadditive_minorant(const GridFunction& f, const Tolerance& tol = {});

}  // namespace funclass
