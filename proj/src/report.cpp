#include "funclass/report.hpp"

#include <string>

namespace funclass {

Json to_json(const Witness& w, std::array<std::string_view, 2> names) {
    Json j;
    for (std::size_t k = 0; k < w.indices.size() && k < names.size(); ++k) {
        j[std::string(names[k])] = w.indices[k];
    }
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    j["slack"] = w.slack;
    return j;
}

Json witnesses_to_json(const std::vector<Witness>& ws, std::size_t limit, std::array<std::string_view, 2> names) {
    Json arr = Json::array();
    for (std::size_t k = 0; k < ws.size() && k < limit; ++k) arr.push_back(to_json(ws[k], names));
    return arr;
}

Json values_to_json(const GridFunction& f) { return Json(std::vector<double>(f.values().begin(), f.values().end())); }

Json to_json(const SubadditivityReport& r, std::size_t limit) {
    Json j;
    j["order"] = r.order_tested;
    j["holds"] = r.holds;
    j["minimal_order"] = r.minimal_order ? Json(*r.minimal_order) : Json(nullptr);
    j["violation_count"] = r.violations.size();
    j["violations"] = witnesses_to_json(r.violations, limit);
    return j;
}

Json to_json(const MinorantResult& r) {
    Json j;
    j["defect"] = r.defect;
    j["bounded_variation"] = r.bounded_variation;
    j["sigma"] = values_to_json(r.sigma);
    j["residual"] = values_to_json(r.residual);
    return j;
}

Json to_json(const PowerFit& fit) {
    Json j;
    j["coefficient"] = fit.coefficient;
    j["max_residual"] = fit.max_residual;
    j["equation_holds"] = fit.equation_holds;
    return j;
}

Json to_json(const HeightProfile& h, bool with_windows) {
    Json j;
    j["global"] = h.global;
    j["global_d"] = h.global_d;
    if (with_windows) j["window"] = h.window_heights;
    return j;
}

Json to_json(const HatBound& b) {
    Json j;
    j["bound"] = b.bound;
    j["sup_err"] = b.sup_err;
    j["holds"] = b.holds;
    return j;
}

Json to_json(const PeriodicDecomposition& d) {
    Json j;
    j["l"] = d.increment;
    j["h_periodicity_error"] = d.periodicity_error;
    j["g"] = values_to_json(d.increasing);
    j["h"] = values_to_json(d.periodic);
    return j;
}

Json to_json(const StarReport& r) {
    Json j;
    j["centers"] = r.centers;
    Json classes = Json::object();
    for (const auto& [p, c] : r.classes) classes[std::to_string(p)] = std::string(to_string(c));
    j["classes"] = std::move(classes);
    j["is_star_convex"] = r.is_star_convex;
    return j;
}

Json to_json(const RegionCheck& c, RegionKind kind, std::size_t p) {
    Json j;
    j["kind"] = std::string(to_string(kind));
    j["p"] = p;
    j["ok"] = c.ok;
    if (c.witness) {
        Json w;
        w["column"] = c.witness->column;
        w["level"] = c.witness->level;
        w["crossed"] = c.witness->crossed;
        w["ordinate"] = c.witness->ordinate;
        w["value"] = c.witness->value;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace funclass
