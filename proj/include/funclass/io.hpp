#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "funclass/grid.hpp"

namespace funclass {

// Malformed or non-uniform CSV input. row() is the 1-based line number in the file.
class CsvFormatError : public std::invalid_argument {
public:
    CsvFormatError(const std::string& what, std::size_t row)
        : std::invalid_argument(what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

// Rows "x,y". An optional non-numeric header line and '#' comment lines are
// skipped. Spacing must be uniform within tol. A "# grid origin=<a> step=<h>"
// comment, as written by write_csv, pins origin and step exactly; otherwise
// step is estimated as (x_N - x_0) / N.
GridFunction read_csv(std::istream& in, const Tolerance& tol = {});
GridFunction read_csv(const std::filesystem::path& path, const Tolerance& tol = {});

void write_csv(const GridFunction& f, std::ostream& out);
void write_csv(const GridFunction& f, const std::filesystem::path& path);

// {"origin": a, "step": h, "values": [...]}
nlohmann::ordered_json grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const nlohmann::json& j);
GridFunction read_json(const std::filesystem::path& path);

// Shortest decimal form that parses back to the same double.
std::string format_real(double v);

}  // namespace funclass
