#include "funclass/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "CLI11.hpp"

#include "funclass/expr.hpp"
#include "funclass/io.hpp"
#include "funclass/periodic.hpp"
#include "funclass/report.hpp"
#include "funclass/starconvex.hpp"
#include "funclass/subadd.hpp"

namespace funclass::cli {

namespace {

struct RunConfig {
    std::string expr;
    std::string csv;
    std::string json;
    std::string from;
    std::string to;
    std::size_t samples = 0;
    std::string origin;
    std::string step;
    std::size_t count = 0;
    std::optional<double> tol_abs;
    std::optional<double> tol_rel;
    std::string plot_csv;
    std::size_t max_witnesses = kDefaultWitnessLimit;

    int n = 1;
    int n_max = 8;
    std::string d;
    std::size_t p = 0;
    std::string kind;
    std::string extent = "1";
    int vertical_samples = 64;
    std::size_t max_points = kDefaultCentralSetLimit;
};

struct Outcome {
    Json report;
    int code = kHolds;
};

// Reals on the command line may be constant expressions such as 2*pi.
double constant_value(const std::string& text, const char* flag) {
    const auto e = expr::parse(text);
    std::function<bool(const expr::Node&)> uses_x = [&](const expr::Node& n) {
        if (n.kind == expr::Node::Kind::Variable) return true;
        return std::any_of(n.children.begin(), n.children.end(),
                           [&](const expr::Expr& c) { return uses_x(c.node()); });
    };
    if (uses_x(e.node())) {
        throw std::invalid_argument(std::string(flag) + " must be a constant, got '" + text + "'");
    }
    return e.eval(0.0);
}

std::optional<double> env_real(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0') {
        throw std::invalid_argument(std::string(name) + " is not a real number: '" + raw + "'");
    }
    return v;
}

Tolerance resolve_tolerance(const RunConfig& cfg) {
    Tolerance tol;
    if (auto v = env_real("FUNCLASS_TOL_ABS")) tol.abs = *v;
    if (auto v = env_real("FUNCLASS_TOL_REL")) tol.rel = *v;
    if (cfg.tol_abs) tol.abs = *cfg.tol_abs;
    if (cfg.tol_rel) tol.rel = *cfg.tol_rel;
    tol.validate();
    return tol;
}

GridFunction load_source(const RunConfig& cfg, const Tolerance& tol) {
    const int sources = !cfg.expr.empty() + !cfg.csv.empty() + !cfg.json.empty();
    if (sources != 1) {
        throw std::invalid_argument("exactly one of --expr, --csv, --json is required");
    }
    if (!cfg.csv.empty()) return read_csv(std::filesystem::path(cfg.csv), tol);
    if (!cfg.json.empty()) return read_json(std::filesystem::path(cfg.json));

    const auto e = expr::parse(cfg.expr);
    const bool range = !cfg.from.empty() || !cfg.to.empty() || cfg.samples != 0;
    const bool explicit_grid = !cfg.origin.empty() || !cfg.step.empty() || cfg.count != 0;
    if (range == explicit_grid) {
        throw std::invalid_argument("--expr needs either --from/--to/--samples or --origin/--step/--count");
    }
    if (range) {
        if (cfg.from.empty() || cfg.to.empty() || cfg.samples < 2) {
            throw std::invalid_argument("--from, --to and --samples (>= 2) are all required");
        }
        const double a = constant_value(cfg.from, "--from");
        const double b = constant_value(cfg.to, "--to");
        if (!(b > a)) throw std::invalid_argument("--to must exceed --from");
        return expr::sample(e, a, (b - a) / static_cast<double>(cfg.samples - 1), cfg.samples);
    }
    if (cfg.origin.empty() || cfg.step.empty() || cfg.count < 2) {
        throw std::invalid_argument("--origin, --step and --count (>= 2) are all required");
    }
    return expr::sample(e, constant_value(cfg.origin, "--origin"), constant_value(cfg.step, "--step"), cfg.count);
}

void write_plot(const std::string& path, const GridFunction& f,
                const std::vector<std::pair<std::string, std::vector<double>>>& columns) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write plot file " + path);
    out << 'x';
    for (const auto& [name, _] : columns) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << format_real(f.x(i));
        for (const auto& [_, col] : columns) out << ',' << format_real(col[i]);
        out << '\n';
    }
}

std::vector<double> to_vector(const GridFunction& f) { return {f.values().begin(), f.values().end()}; }

Json hypothesis_failure(const HypothesisError& e, std::size_t limit, std::array<std::string_view, 2> names) {
    Json j;
    j["holds"] = false;
    j["reason"] = e.what();
    j["witness_count"] = e.witnesses().size();
    j["witnesses"] = witnesses_to_json(e.witnesses(), limit, names);
    return j;
}

// ---- subadditivity ------------------------------------------------------

Outcome cmd_check_order(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto r = check_order(f, cfg.n, tol);
    return {to_json(r, cfg.max_witnesses), r.holds ? kHolds : kFails};
}

Outcome cmd_min_order(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto r = minimal_order(f, cfg.n_max, tol);
    Json j;
    j["n_max"] = cfg.n_max;
    j.update(to_json(r, cfg.max_witnesses));
    return {std::move(j), r.minimal_order ? kHolds : kFails};
}

Outcome transformed_check(const RunConfig& cfg, const GridFunction& f, const GridFunction& g,
                          const SubadditivityReport& r, const Tolerance& tol) {
    Json j;
    j["n"] = cfg.n;
    j["source_order_holds"] = check_order(f, cfg.n, tol).holds;
    j.update(to_json(r, cfg.max_witnesses));
    j["transformed"] = grid_to_json(g);
    return {std::move(j), r.holds ? kHolds : kFails};
}

Outcome cmd_root(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto g = nth_root_transform(f, cfg.n);
    const auto r = check_order(g, 1, tol);
    write_plot(cfg.plot_csv, f, {{"f", to_vector(f)}, {"root", to_vector(g)}});
    return transformed_check(cfg, f, g, r, tol);
}

Outcome cmd_ratio(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto g = ratio_transform(f, cfg.n);
    const auto r = check_subadditive_positive(g, tol);
    if (!cfg.plot_csv.empty()) {
        // The ratio is undefined at x = 0; leave that cell empty.
        std::ofstream out(cfg.plot_csv);
        if (!out) throw std::invalid_argument("cannot write plot file " + cfg.plot_csv);
        out << "x,f,ratio\n";
        for (std::size_t i = 0; i < f.size(); ++i) {
            out << format_real(f.x(i)) << ',' << format_real(f[i]) << ',';
            if (i > 0) out << format_real(g[i - 1]);
            out << '\n';
        }
    }
    return transformed_check(cfg, f, g, r, tol);
}

Outcome cmd_weak_bound(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto r = check_weak_bound(f, cfg.n, tol);
    return {to_json(r, cfg.max_witnesses), r.holds ? kHolds : kFails};
}

Outcome cmd_power_fit(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto fit = fit_power(f, cfg.n, tol);
    Json j;
    j["n"] = cfg.n;
    j["holds"] = fit.equation_holds;
    j.update(to_json(fit));
    return {std::move(j), fit.equation_holds ? kHolds : kFails};
}

Outcome cmd_minorant(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto m = subadditive_minorant(f, tol);
    Json j;
    j["holds"] = true;
    j["sigma_subadditive"] = check_order(m.sigma, 1, tol).holds;
    j.update(to_json(m));
    write_plot(cfg.plot_csv, f, {{"f", to_vector(f)}, {"sigma", to_vector(m.sigma)}, {"residual", to_vector(m.residual)}});
    return {std::move(j), kHolds};
}

// ---- periodic monotonicity ----------------------------------------------

PeriodSpec period_of(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    return PeriodSpec::from_distance(constant_value(cfg.d, "--d"), f, tol);
}

Json period_header(const PeriodSpec& p) {
    Json j;
    j["d"] = p.distance;
    j["w"] = p.width;
    return j;
}

void write_periodic_plot(const RunConfig& cfg, const GridFunction& f, const PeriodSpec& p, const Tolerance& tol) {
    if (cfg.plot_csv.empty()) return;
    const auto env = envelopes(f);
    const auto tilde = greatest_periodic_minorant(f, p);
    // g and h from the decomposition when its hypotheses hold.
    GridFunction g = env.lower;
    try {
        g = decompose(f, p, tol).increasing;
    } catch (const std::exception&) {
    }
    const auto h = f - g;
    write_plot(cfg.plot_csv, f,
               {{"f", to_vector(f)},
                {"f_lower", to_vector(env.lower)},
                {"f_upper", to_vector(env.upper)},
                {"f_hat", to_vector(env.hat)},
                {"f_tilde", to_vector(tilde)},
                {"g", to_vector(g)},
                {"h", to_vector(h)}});
}

constexpr std::array<std::string_view, 2> kPairNames{"i", "t"};

Outcome cmd_periodic_check(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto p = period_of(cfg, f, tol);
    const auto c = is_periodically_increasing(f, p, tol);
    Json j = period_header(p);
    j["holds"] = c.holds;
    j["periodic_increasing"] = c.holds;
    j["witness_count"] = c.witnesses.size();
    j["witnesses"] = witnesses_to_json(c.witnesses, cfg.max_witnesses, kPairNames);
    write_periodic_plot(cfg, f, p, tol);
    return {std::move(j), c.holds ? kHolds : kFails};
}

Outcome cmd_heights(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto p = period_of(cfg, f, tol);
    Json j = period_header(p);
    j["holds"] = true;
    j["heights"] = to_json(heights(f, p), true);
    write_periodic_plot(cfg, f, p, tol);
    return {std::move(j), kHolds};
}

Outcome cmd_periodic_minorant(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto p = period_of(cfg, f, tol);
    const auto tilde = greatest_periodic_minorant(f, p);
    Json j = period_header(p);
    j["holds"] = true;
    j["f_tilde"] = values_to_json(tilde);
    write_periodic_plot(cfg, f, p, tol);
    return {std::move(j), kHolds};
}

Outcome cmd_envelope(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto p = period_of(cfg, f, tol);
    const auto env = envelopes(f);
    const auto check = is_periodically_increasing(f, p, tol);
    Json j = period_header(p);
    j["periodic_increasing"] = check.holds;
    j["heights"] = to_json(heights(f, p));
    int code = kFails;
    if (check.holds) {
        const auto bound = check_hat_bound(f, p, tol);
        j["holds"] = bound.holds;
        j["hat_bound"] = to_json(bound);
        code = bound.holds ? kHolds : kFails;
    } else {
        j["holds"] = false;
        j["hat_bound"] = nullptr;
        j["witness_count"] = check.witnesses.size();
        j["witnesses"] = witnesses_to_json(check.witnesses, cfg.max_witnesses, kPairNames);
    }
    j["f_lower"] = values_to_json(env.lower);
    j["f_upper"] = values_to_json(env.upper);
    j["f_hat"] = values_to_json(env.hat);
    write_periodic_plot(cfg, f, p, tol);
    return {std::move(j), code};
}

Outcome cmd_decompose(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto p = period_of(cfg, f, tol);
    Json j = period_header(p);
    write_periodic_plot(cfg, f, p, tol);
    try {
        const auto dec = decompose(f, p, tol);
        j["holds"] = true;
        j["decomposition"] = to_json(dec);
        return {std::move(j), kHolds};
    } catch (const HypothesisError& e) {
        j.update(hypothesis_failure(e, cfg.max_witnesses, kPairNames));
        return {std::move(j), kFails};
    }
}

// ---- star convexity -----------------------------------------------------

void write_center_plot(const RunConfig& cfg, const GridFunction& f, const std::vector<std::size_t>& centers) {
    std::vector<double> flag(f.size(), 0.0);
    for (auto c : centers) flag[c] = 1.0;
    write_plot(cfg.plot_csv, f, {{"f", to_vector(f)}, {"center", flag}});
}

Outcome cmd_star_centers(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto r = central_set(f, tol, cfg.max_points);
    Json j;
    j["holds"] = r.is_star_convex;
    j.update(to_json(r));
    write_center_plot(cfg, f, r.centers);
    return {std::move(j), r.is_star_convex ? kHolds : kFails};
}

Outcome cmd_star_classify(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto shapes = admissible_shapes(f, cfg.p, tol);
    const auto cls = shapes.first();
    const bool center = is_center(f, cfg.p, tol);
    Json j;
    j["p"] = cfg.p;
    j["holds"] = cls != ShapeClass::Mixed;
    j["class"] = std::string(to_string(cls));
    Json admissible = Json::array();
    for (auto c : {ShapeClass::ConvexConvex, ShapeClass::ConcaveConcave, ShapeClass::ConvexConcave,
                   ShapeClass::ConcaveConvex}) {
        if (shapes.contains(c)) admissible.push_back(std::string(to_string(c)));
    }
    j["admissible"] = std::move(admissible);
    j["is_center"] = center;
    write_center_plot(cfg, f, center ? std::vector<std::size_t>{cfg.p} : std::vector<std::size_t>{});
    return {std::move(j), cls != ShapeClass::Mixed ? kHolds : kFails};
}

Outcome cmd_star_region(const RunConfig& cfg, const GridFunction& f, const Tolerance& tol) {
    const auto kind = parse_region_kind(cfg.kind);
    if (!kind) {
        throw std::invalid_argument("--kind must be one of epi, hypo, split-epi-hypo, split-hypo-epi");
    }
    RegionSpec region;
    region.kind = *kind;
    if (*kind == RegionKind::SplitEpiHypo || *kind == RegionKind::SplitHypoEpi) region.split_index = cfg.p;
    region.vertical_extent = constant_value(cfg.extent, "--extent");
    region.vertical_samples = cfg.vertical_samples;
    const auto check = region_star_check(f, region, cfg.p, tol);
    Json j;
    j["holds"] = check.ok;
    j["region_checks"] = Json::array({to_json(check, *kind, cfg.p)});
    write_center_plot(cfg, f, {cfg.p});
    return {std::move(j), check.ok ? kHolds : kFails};
}

using Handler = Outcome (*)(const RunConfig&, const GridFunction&, const Tolerance&);

void add_source_options(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--expr", cfg.expr, "function of x, e.g. \"x^2.5\" (^ is right-associative)");
    sub.add_option("--csv", cfg.csv, "CSV file with rows x,y on a uniform grid");
    sub.add_option("--json", cfg.json, "JSON file {origin, step, values}");
    sub.add_option("--from", cfg.from, "left endpoint for --expr sampling");
    sub.add_option("--to", cfg.to, "right endpoint for --expr sampling");
    sub.add_option("--samples", cfg.samples, "number of grid points in [from, to]");
    sub.add_option("--origin", cfg.origin, "grid origin for --expr sampling");
    sub.add_option("--step", cfg.step, "grid step for --expr sampling");
    sub.add_option("--count", cfg.count, "number of grid points from --origin");
    sub.add_option("--tol-abs", cfg.tol_abs, "absolute tolerance (default 1e-9, env FUNCLASS_TOL_ABS)");
    sub.add_option("--tol-rel", cfg.tol_rel, "relative tolerance (default 1e-12, env FUNCLASS_TOL_REL)");
    sub.add_option("--plot-csv", cfg.plot_csv, "also write plot columns to this CSV file");
    sub.add_option("--max-witnesses", cfg.max_witnesses, "witnesses listed in the report")
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Analyze sampled functions: higher-order subadditivity, periodic monotonicity, star convexity",
                 "funclass"};
    app.require_subcommand(1);

    std::map<CLI::App*, Handler> handlers;
    auto command = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_source_options(*sub, cfg);
        handlers.emplace(sub, h);
        return sub;
    };

    command("check-order", "order-n subadditivity check", cmd_check_order)
        ->add_option("--n", cfg.n, "order")->required();
    command("min-order", "smallest order n <= n-max that holds", cmd_min_order)
        ->add_option("--n-max", cfg.n_max, "largest order tried")->required();
    command("root", "order-1 check of the n-th root", cmd_root)->add_option("--n", cfg.n, "order")->required();
    command("ratio", "order-1 check of f(x)/x^n on x > 0", cmd_ratio)
        ->add_option("--n", cfg.n, "order")->required();
    command("weak-bound", "binomial-free weak bound of order n", cmd_weak_bound)
        ->add_option("--n", cfg.n, "order")->required();
    command("power-fit", "fit c x^n and evaluate the functional equation", cmd_power_fit)
        ->add_option("--n", cfg.n, "order (>= 2)")->required();
    command("minorant", "largest subadditive minorant, residual and defect", cmd_minorant);
    for (auto [name, help, h] : {std::tuple{"periodic-check", "d-periodic monotonicity", cmd_periodic_check},
                                 std::tuple{"heights", "window and global heights", cmd_heights},
                                 std::tuple{"periodic-minorant", "greatest d-periodically increasing minorant",
                                            cmd_periodic_minorant},
                                 std::tuple{"envelope", "monotone envelopes and the hat bound", cmd_envelope},
                                 std::tuple{"decompose", "increasing plus d-periodic decomposition", cmd_decompose}}) {
        command(name, help, h)->add_option("--d", cfg.d, "distance d, a multiple of the grid step")->required();
    }
    command("star-centers", "central set and per-center shape classes", cmd_star_centers)
        ->add_option("--max-points", cfg.max_points, "largest grid (intervals) scanned")
        ->capture_default_str();
    command("star-classify", "shape class of the two sides of index p", cmd_star_classify)
        ->add_option("--p", cfg.p, "grid index")->required();
    CLI::App* region = command("star-region", "star-convexity of an epi/hypo-derived region", cmd_star_region);
    region->add_option("--kind", cfg.kind, "epi | hypo | split-epi-hypo | split-hypo-epi")->required();
    region->add_option("--p", cfg.p, "center grid index")->required();
    region->add_option("--extent", cfg.extent, "vertical padding above and below the samples")
        ->capture_default_str();
    region->add_option("--vertical-samples", cfg.vertical_samples, "vertical sample levels")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kHolds : kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    try {
        const Tolerance tol = resolve_tolerance(cfg);
        const GridFunction f = load_source(cfg, tol);
        Outcome outcome = handlers.at(chosen)(cfg, f, tol);
        Json report;
        report["command"] = chosen->get_name();
        report.update(outcome.report);
        out << report.dump(2) << '\n';
        return outcome.code;
    } catch (const std::exception& e) {
        err << "funclass " << chosen->get_name() << ": " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace funclass::cli
