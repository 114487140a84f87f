#include "funclass/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <system_error>

namespace funclass {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

struct GridPin {
    double origin;
    double step;
};

// Parses "# grid origin=<a> step=<h>".
std::optional<GridPin> parse_grid_comment(std::string_view line) {
    line = trim(line.substr(1));
    if (line.substr(0, 4) != "grid") return std::nullopt;
    const auto o = line.find("origin=");
    const auto s = line.find("step=");
    if (o == std::string_view::npos || s == std::string_view::npos) return std::nullopt;
    auto field = [&](std::size_t at, std::size_t skip) {
        auto rest = line.substr(at + skip);
        return parse_real(rest.substr(0, rest.find(' ')));
    };
    const auto origin = field(o, 7);
    const auto step = field(s, 5);
    if (!origin || !step) return std::nullopt;
    return GridPin{*origin, *step};
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

GridFunction read_csv(std::istream& in, const Tolerance& tol) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<std::size_t> rows;
    std::optional<GridPin> pin;
    std::string line;
    std::size_t row = 0;
    bool seen_content = false;

    while (std::getline(in, line)) {
        ++row;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            if (auto p = parse_grid_comment(text)) pin = p;
            continue;
        }
        const auto comma = text.find(',');
        std::optional<double> x;
        std::optional<double> y;
        if (comma != std::string_view::npos) {
            x = parse_real(text.substr(0, comma));
            y = parse_real(text.substr(comma + 1));
        }
        if (!x || !y) {
            if (!seen_content) {  // header
                seen_content = true;
                continue;
            }
            throw CsvFormatError("csv: row " + std::to_string(row) + " is not a pair of finite reals", row);
        }
        seen_content = true;
        xs.push_back(*x);
        ys.push_back(*y);
        rows.push_back(row);
    }

    if (xs.size() < 2) {
        throw CsvFormatError("csv: at least two data rows are required", row);
    }
    const double first_step = xs[1] - xs[0];
    if (!(first_step > 0.0)) {
        throw CsvFormatError("csv: x must be strictly increasing (row " + std::to_string(rows[1]) + ")",
                             rows[1]);
    }
    for (std::size_t r = 2; r < xs.size(); ++r) {
        const double gap = xs[r] - xs[r - 1];
        if (!(gap > 0.0) || !tol.eq(gap, first_step)) {
            throw CsvFormatError("csv: non-uniform spacing at row " + std::to_string(rows[r]) +
                                     " (step " + format_real(gap) + " vs " + format_real(first_step) + ")",
                                 rows[r]);
        }
    }

    const std::size_t n = xs.size() - 1;
    double origin = xs.front();
    double step = (xs.back() - xs.front()) / static_cast<double>(n);
    if (pin) {
        for (std::size_t r = 0; r < xs.size(); ++r) {
            if (!tol.eq(xs[r], pin->origin + static_cast<double>(r) * pin->step)) {
                throw CsvFormatError("csv: row " + std::to_string(rows[r]) + " disagrees with the grid comment",
                                     rows[r]);
            }
        }
        origin = pin->origin;
        step = pin->step;
    }
    return GridFunction(origin, step, std::move(ys));
}

GridFunction read_csv(const std::filesystem::path& path, const Tolerance& tol) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("csv: cannot open " + path.string());
    }
    return read_csv(in, tol);
}

void write_csv(const GridFunction& f, std::ostream& out) {
    out << "# grid origin=" << format_real(f.origin()) << " step=" << format_real(f.step()) << '\n';
    out << "x,y\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << format_real(f.x(i)) << ',' << format_real(f[i]) << '\n';
    }
}

void write_csv(const GridFunction& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("csv: cannot write " + path.string());
    }
    write_csv(f, out);
}

nlohmann::ordered_json grid_to_json(const GridFunction& f) {
    nlohmann::ordered_json j;
    j["origin"] = f.origin();
    j["step"] = f.step();
    j["values"] = std::vector<double>(f.values().begin(), f.values().end());
    return j;
}

GridFunction grid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("origin") || !j.contains("step") || !j.contains("values")) {
        throw std::invalid_argument("json: expected an object with origin, step and values");
    }
    try {
        return GridFunction(j.at("origin").get<double>(), j.at("step").get<double>(),
                            j.at("values").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
}

GridFunction read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("json: cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
    return grid_from_json(j);
}

}  // namespace funclass
