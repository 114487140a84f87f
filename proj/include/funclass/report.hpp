#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "funclass/periodic.hpp"
#include "funclass/starconvex.hpp"
#include "funclass/subadd.hpp"

namespace funclass {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultWitnessLimit = 20;

// {<names[0]>: indices[0], <names[1]>: indices[1], lhs, rhs, slack}
Json to_json(const Witness& w, std::array<std::string_view, 2> names = {"i", "j"});
// At most `limit` witnesses; the full count goes in a separate field.
Json witnesses_to_json(const std::vector<Witness>& ws, std::size_t limit,
                       std::array<std::string_view, 2> names = {"i", "j"});

// {order, holds, minimal_order, violation_count, violations}
Json to_json(const SubadditivityReport& r, std::size_t limit = kDefaultWitnessLimit);
// {defect, bounded_variation, sigma, residual}
Json to_json(const MinorantResult& r);
Json to_json(const PowerFit& fit);

Json to_json(const HeightProfile& h, bool with_windows = false);
Json to_json(const HatBound& b);
// {l, h_periodicity_error, g, h}
Json to_json(const PeriodicDecomposition& d);

// {centers, classes, is_star_convex}
Json to_json(const StarReport& r);
// {kind, p, ok, witness}
Json to_json(const RegionCheck& c, RegionKind kind, std::size_t p);

Json values_to_json(const GridFunction& f);

}  // namespace funclass
