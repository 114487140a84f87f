#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "funclass/grid.hpp"

namespace funclass {

// Shape of f on the two sides [x_0, x_p] and [x_p, x_N] of a split point.
enum class ShapeClass : std::uint8_t {
    ConvexConvex,    // (i)
    ConcaveConcave,  // (ii)
    ConvexConcave,   // (iii)
    ConcaveConvex,   // (iv)
    Mixed,
};

std::string_view to_string(ShapeClass c);
// Swaps convex and concave: the class of -f.
ShapeClass negated(ShapeClass c);

// Every class whose side conditions hold at p. Linear sides are both convex
// and concave, so several classes can apply at once.
class ShapeSet {
public:
    void insert(ShapeClass c) { bits_ |= bit(c); }
    bool contains(ShapeClass c) const { return (bits_ & bit(c)) != 0; }
    bool empty() const { return bits_ == 0; }
    // First member in the order (i), (ii), (iii), (iv); Mixed when empty.
    ShapeClass first() const;
    ShapeSet negated() const;
    friend bool operator==(ShapeSet, ShapeSet) = default;

private:
    static std::uint8_t bit(ShapeClass c) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)); }
    std::uint8_t bits_ = 0;
};

struct StarReport {
    std::vector<std::size_t> centers;  // ascending
    std::map<std::size_t, ShapeClass> classes;
    bool is_star_convex = false;
};

enum class RegionKind : std::uint8_t {
    Epi,
    Hypo,
    SplitEpiHypo,  // epi left of the split column, hypo right of it
    SplitHypoEpi,  // hypo left of the split column, epi right of it
};

std::string_view to_string(RegionKind k);
std::optional<RegionKind> parse_region_kind(std::string_view name);

struct RegionSpec {
    RegionKind kind = RegionKind::Epi;
    std::optional<std::size_t> split_index;
    double vertical_extent = 1.0;  // padding below min f and above max f
    int vertical_samples = 64;
};

// A sampled region point (column, level) whose segment to the center leaves
// the region at grid column crossed.
struct RegionWitness {
    std::size_t column = 0;
    double level = 0.0;
    std::size_t crossed = 0;
    double ordinate = 0.0;
    double value = 0.0;
};

struct RegionCheck {
    bool ok = true;
    std::optional<RegionWitness> witness;
};

inline constexpr std::size_t kDefaultCentralSetLimit = 512;

/// Chord from (x_p, f_p) to every (x_q, f_q) lies wholly on or above the
/// samples, or wholly on or below them, at every grid abscissa in between.
bool is_center(const GridFunction& f, std::size_t p, const Tolerance& tol = {});

/// All centers by an O(N^3) scan. Grids with more than max_intervals
/// intervals are rejected.
StarReport central_set(const GridFunction& f, const Tolerance& tol = {},
                       std::size_t max_intervals = kDefaultCentralSetLimit);

ShapeSet admissible_shapes(const GridFunction& f, std::size_t p, const Tolerance& tol = {});
/// Sign pattern of second differences on each side of p, tie-broken (i)..(iv).
ShapeClass classify_shape(const GridFunction& f, std::size_t p, const Tolerance& tol = {});

/// Samples points of the region on a vertical lattice and checks that each
/// segment to (x_p, f_p) stays inside at every grid abscissa it crosses.
RegionCheck region_star_check(const GridFunction& f, const RegionSpec& region, std::size_t center_p,
                              const Tolerance& tol = {});

}  // namespace funclass
