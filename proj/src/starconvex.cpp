#include "funclass/starconvex.hpp"

#include <stdexcept>
#include <string>

namespace funclass {

namespace {

double margin_for(const GridFunction& f, const Tolerance& tol) { return tol.abs + tol.rel * f.max_abs(); }

void require_index(const GridFunction& f, std::size_t p, const char* op) {
    if (p >= f.size()) {
        throw std::invalid_argument(std::string(op) + ": index " + std::to_string(p) + " is outside [0, " +
                                    std::to_string(f.intervals()) + "]");
    }
}

struct SideShape {
    bool convex = true;
    bool concave = true;
};

// Second differences centered at first..last inclusive.
SideShape side_shape(const GridFunction& f, std::size_t first, std::size_t last, double margin) {
    SideShape s;
    for (std::size_t i = first; i <= last; ++i) {
        const double d2 = f[i + 1] - 2.0 * f[i] + f[i - 1];
        if (d2 < -margin) s.convex = false;
        if (d2 > margin) s.concave = false;
    }
    return s;
}

// Region membership of (column, y); the split column belongs to both sides.
bool in_region(const GridFunction& f, const RegionSpec& region, std::size_t column, double y, double margin) {
    const bool above = y >= f[column] - margin;
    const bool below = y <= f[column] + margin;
    switch (region.kind) {
        case RegionKind::Epi: return above;
        case RegionKind::Hypo: return below;
        case RegionKind::SplitEpiHypo: {
            const std::size_t s = *region.split_index;
            if (column == s) return above || below;
            return column < s ? above : below;
        }
        case RegionKind::SplitHypoEpi: {
            const std::size_t s = *region.split_index;
            if (column == s) return above || below;
            return column < s ? below : above;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(ShapeClass c) {
    switch (c) {
        case ShapeClass::ConvexConvex: return "conv-conv";
        case ShapeClass::ConcaveConcave: return "conc-conc";
        case ShapeClass::ConvexConcave: return "conv-conc";
        case ShapeClass::ConcaveConvex: return "conc-conv";
        case ShapeClass::Mixed: return "mixed";
    }
    return "mixed";
}

ShapeClass negated(ShapeClass c) {
    switch (c) {
        case ShapeClass::ConvexConvex: return ShapeClass::ConcaveConcave;
        case ShapeClass::ConcaveConcave: return ShapeClass::ConvexConvex;
        case ShapeClass::ConvexConcave: return ShapeClass::ConcaveConvex;
        case ShapeClass::ConcaveConvex: return ShapeClass::ConvexConcave;
        case ShapeClass::Mixed: return ShapeClass::Mixed;
    }
    return ShapeClass::Mixed;
}

ShapeClass ShapeSet::first() const {
    for (auto c : {ShapeClass::ConvexConvex, ShapeClass::ConcaveConcave, ShapeClass::ConvexConcave,
                   ShapeClass::ConcaveConvex}) {
        if (contains(c)) return c;
    }
    return ShapeClass::Mixed;
}

ShapeSet ShapeSet::negated() const {
    ShapeSet out;
    for (auto c : {ShapeClass::ConvexConvex, ShapeClass::ConcaveConcave, ShapeClass::ConvexConcave,
                   ShapeClass::ConcaveConvex}) {
        if (contains(c)) out.insert(funclass::negated(c));
    }
    return out;
}

std::string_view to_string(RegionKind k) {
    switch (k) {
        case RegionKind::Epi: return "epi";
        case RegionKind::Hypo: return "hypo";
        case RegionKind::SplitEpiHypo: return "split-epi-hypo";
        case RegionKind::SplitHypoEpi: return "split-hypo-epi";
    }
    return "epi";
}

std::optional<RegionKind> parse_region_kind(std::string_view name) {
    for (auto k : {RegionKind::Epi, RegionKind::Hypo, RegionKind::SplitEpiHypo, RegionKind::SplitHypoEpi}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

bool is_center(const GridFunction& f, std::size_t p, const Tolerance& tol) {
    require_index(f, p, "is_center");
    const double margin = margin_for(f, tol);
    const auto size = static_cast<std::ptrdiff_t>(f.size());
    const auto pc = static_cast<std::ptrdiff_t>(p);
    for (std::ptrdiff_t q = 0; q < size; ++q) {
        const std::ptrdiff_t span = q - pc;
        if (span == 1 || span == -1 || span == 0) continue;
        const std::ptrdiff_t dir = span > 0 ? 1 : -1;
        bool in_epi = true;
        bool in_hypo = true;
        for (std::ptrdiff_t m = pc + dir; m != q && (in_epi || in_hypo); m += dir) {
            const double t = static_cast<double>(m - pc) / static_cast<double>(span);
            const double chord = f[p] + t * (f[q] - f[p]);
            if (chord < f[m] - margin) in_epi = false;
            if (chord > f[m] + margin) in_hypo = false;
        }
        if (!in_epi && !in_hypo) return false;
    }
    return true;
}

ShapeSet admissible_shapes(const GridFunction& f, std::size_t p, const Tolerance& tol) {
    require_index(f, p, "classify_shape");
    const double margin = margin_for(f, tol);
    const SideShape left = p >= 2 ? side_shape(f, 1, p - 1, margin) : SideShape{};
    const SideShape right = p + 2 < f.size() ? side_shape(f, p + 1, f.size() - 2, margin) : SideShape{};
    ShapeSet set;
    if (left.convex && right.convex) set.insert(ShapeClass::ConvexConvex);
    if (left.concave && right.concave) set.insert(ShapeClass::ConcaveConcave);
    if (left.convex && right.concave) set.insert(ShapeClass::ConvexConcave);
    if (left.concave && right.convex) set.insert(ShapeClass::ConcaveConvex);
    return set;
}

ShapeClass classify_shape(const GridFunction& f, std::size_t p, const Tolerance& tol) {
    return admissible_shapes(f, p, tol).first();
}

StarReport central_set(const GridFunction& f, const Tolerance& tol, std::size_t max_intervals) {
    if (f.intervals() > max_intervals) {
        throw std::invalid_argument("central_set: " + std::to_string(f.intervals()) +
                                    " intervals exceed the limit of " + std::to_string(max_intervals));
    }
    StarReport report;
    for (std::size_t p = 0; p < f.size(); ++p) {
        if (is_center(f, p, tol)) {
            report.centers.push_back(p);
            report.classes.emplace(p, classify_shape(f, p, tol));
        }
    }
    report.is_star_convex = !report.centers.empty();
    return report;
}

RegionCheck region_star_check(const GridFunction& f, const RegionSpec& region, std::size_t center_p,
                              const Tolerance& tol) {
    require_index(f, center_p, "region_star_check");
    const bool split = region.kind == RegionKind::SplitEpiHypo || region.kind == RegionKind::SplitHypoEpi;
    if (split) {
        if (!region.split_index) {
            throw std::invalid_argument("region_star_check: split regions need a split index");
        }
        if (*region.split_index != center_p) {
            throw std::invalid_argument("region_star_check: the split index must equal the center");
        }
    }
    if (!std::isfinite(region.vertical_extent) || region.vertical_extent <= 0.0) {
        throw std::invalid_argument("region_star_check: vertical extent must be > 0");
    }
    if (region.vertical_samples < 2) {
        throw std::invalid_argument("region_star_check: at least two vertical samples are required");
    }

    const double margin = margin_for(f, tol);
    const double bottom = f.min_value() - region.vertical_extent;
    const double top = f.max_value() + region.vertical_extent;
    const int levels = region.vertical_samples;
    const auto pc = static_cast<std::ptrdiff_t>(center_p);
    const double yp = f[center_p];

    for (std::size_t q = 0; q < f.size(); ++q) {
        const std::ptrdiff_t span = static_cast<std::ptrdiff_t>(q) - pc;
        if (span == 0) continue;
        const std::ptrdiff_t dir = span > 0 ? 1 : -1;
        for (int s = 0; s <= levels; ++s) {
            // The last level is the graph point itself, which every region contains.
            const double level =
                s < levels ? bottom + (top - bottom) * static_cast<double>(s) / static_cast<double>(levels - 1)
                           : f[q];
            if (!in_region(f, region, q, level, 0.0)) continue;
            for (std::ptrdiff_t m = pc + dir; m != static_cast<std::ptrdiff_t>(q); m += dir) {
                const double t = static_cast<double>(m - pc) / static_cast<double>(span);
                const double y = yp + t * (level - yp);
                const auto col = static_cast<std::size_t>(m);
                if (!in_region(f, region, col, y, margin)) {
                    return RegionCheck{false, RegionWitness{q, level, col, y, f[col]}};
                }
            }
        }
    }
    return RegionCheck{true, std::nullopt};
}

}  // namespace funclass
